use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use primediv::arith::{euler_phi, is_prime_u64};
use primediv::certify::{predict_failures, suggest_k, SuggestOptions};
use primediv::constants::{f2_bound_and_a0p0, h_k, newton_polygon};
use primediv::factor::cyclotomic_poly;
use primediv::ff::{berlekamp, count_roots_mod_p, factor_mod_p, is_irreducible, roots_mod_p, ModPoly};
use primediv::verify::{prime_outcomes, scan_with};
use primediv::{
    classify_roots, factor_over_q, ConstantsReport, IntPolynomial, RootKind, ScanMethod, ScanOptions,
};

const SMALL_PRIMES: [u64; 10] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29];

fn ip(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(c)
}

fn monic(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-bound..=bound, 1..=max_deg).prop_map(|mut c| {
        c.push(1);
        ip(&c)
    })
}

fn monic_mod_p(max_deg: usize) -> impl Strategy<Value = ModPoly> {
    (prop::sample::select(SMALL_PRIMES.to_vec()), 1..=max_deg).prop_flat_map(|(p, d)| {
        prop::collection::vec(0..p, d).prop_map(move |mut c| {
            c.push(1);
            ModPoly::new(p, c)
        })
    })
}

/// Totient by trial division.
fn phi_naive(mut n: u64) -> u64 {
    let mut out = n;
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            out -= out / q;
            while n % q == 0 {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_divides_back(a in monic(4, 20), b in monic(4, 20)) {
        let prod = &a * &b;
        prop_assert_eq!(prod.div_exact(&b), Some(a.clone()));
        prop_assert_eq!(prod.degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
        let lhs = prod.derivative();
        let rhs = &a.derivative() * &b + &a * &b.derivative();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn compose_power_evaluates(a in monic(4, 10), k in 1usize..5, x in -6i64..6) {
        let x = BigInt::from(x);
        prop_assert_eq!(a.compose_power(k).evaluate(&x), a.evaluate(&x.pow(k as u32)));
    }

    #[test]
    fn factor_mod_p_round_trip(f in monic_mod_p(8)) {
        let mut prod = ModPoly::one(f.modulus());
        for (g, e) in factor_mod_p(&f) {
            prop_assert!(is_irreducible(&g));
            for _ in 0..e {
                prod = prod.mul(&g);
            }
        }
        prop_assert_eq!(prod, f);
    }

    #[test]
    fn berlekamp_matches_cantor_zassenhaus(a in monic_mod_p(4), extra in prop::collection::vec(0u64..29, 1..4)) {
        let p = a.modulus();
        let mut c: Vec<u64> = extra.iter().map(|x| x % p).collect();
        c.push(1);
        let f = a.mul(&ModPoly::new(p, c));
        prop_assume!(f.gcd(&f.derivative()).degree() == Some(0));
        let mut bk = berlekamp(&f);
        bk.sort();
        let cz: Vec<ModPoly> = factor_mod_p(&f).into_iter().map(|(g, _)| g).collect();
        prop_assert_eq!(bk, cz);
    }

    #[test]
    fn roots_are_roots(f in monic_mod_p(6)) {
        let p = f.modulus();
        let roots = roots_mod_p(&f);
        prop_assert_eq!(roots.len(), count_roots_mod_p(&f));
        for r in roots {
            prop_assert_eq!(f.eval(r), 0);
        }
        let brute = (0..p).filter(|&x| f.eval(x) == 0).count();
        prop_assert_eq!(brute, count_roots_mod_p(&f));
    }

    #[test]
    fn factor_over_q_round_trip(a in monic(3, 9), b in monic(3, 9), n in 3u64..13) {
        let prod = &(&a * &b) * &cyclotomic_poly(n);
        if let Ok(fact) = factor_over_q(&prod) {
            prop_assert_eq!(fact.product(), prod);
            prop_assert!(fact.factors().contains(&cyclotomic_poly(n)));
        }
    }

    #[test]
    fn classify_recovers_cyclotomic_orders(ns in prop::collection::btree_set(2u64..20, 1..3), a in 2i64..9) {
        let mut poly = ip(&[-a, 1]);
        for &n in &ns {
            poly = &poly * &cyclotomic_poly(n);
        }
        let r = classify_roots(&poly).unwrap();
        let mut orders = r.orders();
        orders.sort_unstable();
        prop_assert_eq!(orders, ns.iter().copied().collect::<Vec<_>>());
        prop_assert_eq!(r.r1 as u64, ns.iter().map(|&n| phi_naive(n)).sum::<u64>());
        prop_assert_eq!((r.r2, r.r3), (0, 1));
        prop_assert!(r.classes_of(RootKind::NonUnit).all(|c| c.minimal_polynomial == ip(&[-a, 1])));
    }

    #[test]
    fn totient_scales_by_shared_prime_part(n in 2u64..1_000_000, k in 1u64..10_000) {
        let h = h_k(n, k);
        prop_assert_eq!(phi_naive(h * n), h * phi_naive(n));
        prop_assert_eq!(euler_phi(h * n), phi_naive(h * n));
    }

    #[test]
    fn newton_polygon_is_convex(
        c0 in prop::sample::select(vec![-12i64, -8, -3, 1, 2, 9, 16, 25]),
        mut c in prop::collection::vec(-40i64..40, 0..5),
        p in prop::sample::select(vec![2u64, 3, 5]),
    ) {
        c.insert(0, c0 * p as i64);
        c.push(1);
        let m = ip(&c);
        let segs = newton_polygon(&m, p).unwrap();
        prop_assert_eq!(segs.iter().map(|s| s.length).sum::<usize>(), c.len() - 1);
        for w in segs.windows(2) {
            prop_assert!(w[0].slope() > w[1].slope());
        }
        prop_assert!(segs[0].h > 0);
    }

    #[test]
    fn scan_counts_are_consistent(poly in monic(3, 6), k in 1u64..7, block in 50u64..3000) {
        prop_assume!(primediv::check_preconditions(&poly).is_ok());
        let a = scan_with(&poly, k, 3000, ScanOptions { block_size: block, ..Default::default() }).unwrap();
        let b = scan_with(&poly, k, 3000, ScanOptions { method: ScanMethod::RootPower, ..Default::default() }).unwrap();
        prop_assert_eq!(a.d_count, a.pd_p - a.pd_pk);
        prop_assert_eq!((a.pd_p, a.pd_pk), (b.pd_p, b.pd_pk));
    }
}

#[test]
fn divisibility_monotone_per_prime() {
    for poly in [ip(&[-1, -1, 0, 0, 1]), ip(&[1, -3, 1]), ip(&[1, 1]) * ip(&[-2, 1])] {
        let two = prime_outcomes(&poly, 2, 2, 20_000, ScanMethod::Direct);
        let four = prime_outcomes(&poly, 4, 2, 20_000, ScanMethod::Direct);
        for (a, b) in two.iter().zip(&four) {
            assert_eq!(a.p, b.p);
            assert!(!b.divides_pk || a.divides_pk, "{poly} at p = {}", a.p);
        }
    }
}

#[test]
fn certified_exponents_avoid_predicted_failures() {
    for poly in [
        ip(&[1, 1]) * ip(&[1, 1, 1]),
        ip(&[1, 1]) * ip(&[-2, 1]),
        ip(&[1, 0, -1, 0, 1]),
        ip(&[1, 1]) * ip(&[-3, 1]),
    ] {
        let failures = predict_failures(&poly).unwrap();
        for c in suggest_k(&poly, &SuggestOptions::default()).unwrap() {
            assert!(!c.is_certified() || !failures.fails_for(c.k), "{poly}: k = {}", c.k);
        }
    }
}

/// `ℚ(ζ_3, ∛2)` has Galois group `{σ_{a,b}: ζ ↦ ζ^a, ∛2 ↦ ζ^b ∛2}`; `σ_{a,b}`
/// fixes `ζ^l ∛2` iff `l(a - 1) + b ≡ 0 (mod 3)`.
#[test]
fn f2_bound_dominates_s3_enumeration() {
    let p = ip(&[1, 1]) * ip(&[-2, 1]);
    let report = classify_roots(&p).unwrap();
    let c = ConstantsReport::compute(&p, &report).unwrap().c.unwrap();
    let bound = f2_bound_and_a0p0(&report, 3, c).unwrap();
    let group: Vec<(u64, u64)> = [1, 2].iter().flat_map(|&a| (0..3).map(move |b| (a, b))).collect();
    let fixing = group
        .iter()
        .filter(|&&(a, b)| (0..3).any(|l| (l * (a + 2) + b) % 3 == 0))
        .count();
    // both roots of P are rational, so the denominator is the whole group
    let f2 = BigRational::new(BigInt::from(fixing), BigInt::from(group.len()));
    assert_eq!(f2, BigRational::new(2.into(), 3.into()));
    assert!(f2 <= bound.f2_ub);
}

#[test]
fn witness_primes_are_prime() {
    let p = ip(&[-1, -1, 0, 0, 1]);
    let opts = SuggestOptions {
        count: 2,
        witness_limit: 50_000,
        ..Default::default()
    };
    for c in suggest_k(&p, &opts).unwrap() {
        for w in &c.power_witnesses {
            assert!(is_prime_u64(w.p) && w.replay(&p));
        }
    }
}
