//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
//!
//! Run with `cargo test -p primediv-core --test acceptance`.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use primediv::certify::{certify_exponent, certify_non_kth_power, predict_failures, suggest_k, Route, SuggestOptions};
use primediv::constants::{f2_bound_and_a0p0, h_k, ConstantsReport};
use primediv::ff::{count_roots_mod_p, factor_mod_p, is_irreducible, ModPoly};
use primediv::verify::{exact_cyclotomic_density, exact_density_for, scan_with, sieve_primes, DensityReport};
use primediv::{classify_roots, factor_over_q, scan, IntPolynomial, ScanMethod, ScanOptions};

/// Absolute tolerance for empirical densities at N = 10^5.
const DENSITY_TOL: f64 = 0.02;
/// Margin below 1 required of f_hat for certified exponents.
const F_HAT_MARGIN: f64 = 0.05;
const N_TEST: u64 = 100_000;
const N_SMALL: u64 = 10_000;
const N_PERF: u64 = 10_000_000;

type Check = Result<String, String>;

fn ip(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(c)
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn to_f64(r: &BigRational) -> f64 {
    r.numer().to_string().parse::<f64>().unwrap() / r.denom().to_string().parse::<f64>().unwrap()
}

fn scan_d(poly: &IntPolynomial, k: u64, n: u64) -> DensityReport {
    scan_with(
        poly,
        k,
        n,
        ScanOptions {
            record_d: true,
            ..Default::default()
        },
    )
    .unwrap()
}

/// Totients up to `n` by a sieve, independent of the library.
fn totient_table(n: usize) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=n as u64).collect();
    for i in 2..=n {
        if phi[i] == i as u64 {
            let mut j = i;
            while j <= n {
                phi[j] -= phi[j] / i as u64;
                j += i;
            }
        }
    }
    phi
}

fn criterion_1() -> Check {
    let phi = totient_table(10_000 * 100);
    let mut checked = 0u64;
    for n in 2..=10_000u64 {
        for k in 1..=100u64 {
            let h = h_k(n, k);
            ensure(k % h == 0, format!("h_{k}({n}) = {h} does not divide k"))?;
            let lhs = phi[(h * n) as usize];
            let rhs = h * phi[n as usize];
            ensure(lhs == rhs, format!("n = {n}, k = {k}: {lhs} != {rhs}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} pairs exact"))
}

fn criterion_2() -> Check {
    let p = ip(&[1, 1]);
    let certs = suggest_k(&p, &SuggestOptions { count: 1, ..Default::default() }).map_err(|e| e.to_string())?;
    let c = certs.first().ok_or("no certificate")?;
    ensure(
        c.k == 2 && c.route == Route::Theorem1 && c.constants_used.a0 == Some(1) && c.is_certified(),
        format!("got k = {}, route {:?}, A0 {:?}", c.k, c.route, c.constants_used.a0),
    )?;
    let r = scan_d(&p, 2, N_TEST);
    ensure(
        (0.48..=0.52).contains(&r.density_d),
        format!("density(D) = {:.4}", r.density_d),
    )?;
    let expected: Vec<u64> = sieve_primes(N_TEST).into_iter().filter(|p| p % 4 == 3).collect();
    ensure(r.d_primes.as_deref() == Some(&expected[..]), "D differs from {p = 3 mod 4}")?;
    let r3 = scan(&p, 3, N_TEST).unwrap();
    ensure(r3.d_count == 0, format!("k = 3 gave D_count = {}", r3.d_count))?;
    Ok(format!("density(D) = {:.4}, |D| = {} exact, k=3 D empty", r.density_d, r.d_count))
}

fn compare_density(p: &IntPolynomial, k: u64, exact: (BigRational, BigRational, BigRational)) -> Result<DensityReport, String> {
    let r = scan(p, k, N_TEST).unwrap();
    let pairs = [
        ("P", r.density_p, &exact.0),
        ("P(T^k)", r.density_pk, &exact.1),
        ("D", r.density_d, &exact.2),
    ];
    for (name, emp, ex) in pairs {
        ensure(
            (emp - to_f64(ex)).abs() <= DENSITY_TOL,
            format!("{p}, k = {k}: density {name} {emp:.4} vs {ex}"),
        )?;
    }
    Ok(r)
}

fn criterion_3() -> Check {
    let phi3 = ip(&[1, 1, 1]);
    let t = exact_cyclotomic_density(&[3], 3).unwrap();
    ensure(
        (&t.dens_p, &t.dens_pk, &t.dens_d) == (&rat(1, 2), &rat(1, 6), &rat(1, 3)),
        format!("Φ3 exact ({}, {}, {})", t.dens_p, t.dens_pk, t.dens_d),
    )?;
    compare_density(&phi3, 3, (t.dens_p, t.dens_pk, t.dens_d))?;

    let phi12 = ip(&[1, 0, -1, 0, 1]);
    let certs = suggest_k(&phi12, &SuggestOptions::default()).map_err(|e| e.to_string())?;
    let c = certs
        .iter()
        .find(|c| c.constants_used.primes == [2, 3])
        .ok_or("no certificate with primes {2, 3}")?;
    ensure(
        c.k == 7776 && c.constants_used.a0 == Some(5) && c.is_certified(),
        format!("Φ12 certificate k = {}, A0 = {:?}", c.k, c.constants_used.a0),
    )?;
    let t = exact_density_for(&phi12, c.k).unwrap();
    let r = compare_density(&phi12, c.k, (t.dens_p, t.dens_pk, t.dens_d))?;
    let f_hat = r.f_hat.unwrap();
    ensure(f_hat < 1.0 - F_HAT_MARGIN, format!("Φ12 f_hat = {f_hat:.4}"))?;
    Ok(format!("Φ3 within {DENSITY_TOL}; Φ12 k = 7776, f_hat = {f_hat:.4}"))
}

fn criterion_4() -> Check {
    let p = ip(&[1, -3, 1]);
    let report = classify_roots(&p).unwrap();
    let consts = ConstantsReport::compute(&p, &report).unwrap();
    ensure(
        consts.k0 == 6 && consts.c == Some(6),
        format!("k0 = {}, c = {:?}", consts.k0, consts.c),
    )?;
    let w = certify_non_kth_power(&report.classes[0], 7, &p, 100)
        .unwrap()
        .ok_or("no witness")?;
    ensure(w.p == 29 && w.f == 1, format!("witness p = {}, f = {}", w.p, w.f))?;
    // the image is a root of T^2 - 3T + 1 mod 29 and not a 7th power: x^((29-1)/7) != 1
    let x = w.image[0];
    ensure((x * x + 29 * 3 - 3 * x + 1) % 29 == 0, format!("{x} is not a root mod 29"))?;
    let x4 = (1..=4).fold(1u64, |acc, _| acc * x % 29);
    ensure(x4 != 1, format!("{x}^4 = 1 mod 29"))?;
    ensure(w.replay(&p), "witness does not replay")?;
    let r = scan(&p, 7, N_TEST).unwrap();
    let f_hat = r.f_hat.unwrap();
    ensure(
        r.d_count > 0 && f_hat <= 1.0 - F_HAT_MARGIN,
        format!("D_count = {}, f_hat = {f_hat:.4}", r.d_count),
    )?;
    Ok(format!("witness p = 29 (image {x}, {x}^4 = {x4}), D_count = {}, f_hat = {f_hat:.4}", r.d_count))
}

fn criterion_5() -> Check {
    let p = ip(&[1, 1]) * ip(&[-2, 1]);
    let certs = suggest_k(&p, &SuggestOptions { count: 1, ..Default::default() }).map_err(|e| e.to_string())?;
    let c = certs.first().ok_or("no certificate")?;
    ensure(
        c.k == 4 && c.route == Route::Theorem3 && c.constants_used.p0 == Some(2) && c.constants_used.a0_p0 == Some(2),
        format!("k = {}, p0 = {:?}, A0(p0) = {:?}", c.k, c.constants_used.p0, c.constants_used.a0_p0),
    )?;
    let r = scan(&p, 4, N_TEST).unwrap();
    ensure(r.density_d > 0.1, format!("density(D) = {:.4}", r.density_d))?;
    let failures = predict_failures(&p).unwrap();
    for k in [3, 5, 7] {
        ensure(failures.fails_for(k), format!("k = {k} not predicted to fail"))?;
        let d = scan(&p, k, N_SMALL).unwrap().d_count;
        ensure(d == 0, format!("k = {k}: D_count = {d}"))?;
    }
    Ok(format!("k = 4, density(D) = {:.4}; k = 3, 5, 7 give D empty", r.density_d))
}

/// Polynomials exercised across the suite.
fn corpus() -> Vec<IntPolynomial> {
    vec![
        ip(&[1, 1]),
        ip(&[-2, 1]),
        ip(&[-4, 1]),
        ip(&[1, 1, 1]),
        ip(&[1, 0, 1]),
        ip(&[1, 0, -1, 0, 1]),
        ip(&[1, -3, 1]),
        ip(&[1, 1]) * ip(&[-2, 1]),
        ip(&[1, 1]) * ip(&[1, 1, 1]),
        ip(&[-2, 0, 1]),
        ip(&[-1, -1, 0, 0, 1]),
        ip(&[-2, 1]) * ip(&[1, 1, 1]),
    ]
}

fn criterion_6() -> Check {
    let p = ip(&[-4, 1]);
    let c = certify_exponent(&p, 2, &SuggestOptions::default()).unwrap();
    ensure(
        !c.is_certified() && c.power_witnesses.is_empty(),
        format!("T - 4, k = 2: caveats {:?}", c.caveats),
    )?;
    let d = scan(&p, 2, N_SMALL).unwrap().d_count;
    ensure(d == 0, format!("T - 4, k = 2: D_count = {d}"))?;

    let opts = SuggestOptions {
        witness_limit: 100_000,
        ..Default::default()
    };
    let mut certified = 0;
    for poly in corpus() {
        let certs = suggest_k(&poly, &opts).map_err(|e| format!("{poly}: {e}"))?;
        for c in certs.iter().filter(|c| c.is_certified()) {
            let d = scan(&poly, c.k, N_TEST).unwrap().d_count;
            ensure(d > 0, format!("{poly}: certified k = {} has D empty", c.k))?;
            for w in &c.power_witnesses {
                ensure(w.replay(&poly), format!("{poly}: witness at p = {} fails replay", w.p))?;
            }
            certified += 1;
        }
    }
    Ok(format!("T-4 caveated; {certified} corpus certificates all have D nonempty"))
}

fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let primes: Vec<u64> = sieve_primes(499);
    for _ in 0..200 {
        let deg = rng.gen_range(1..=6);
        let mut c: Vec<i64> = (0..deg).map(|_| rng.gen_range(-50..=50)).collect();
        c.push(1);
        let poly = ip(&c);
        for &p in &primes {
            let f = ModPoly::from_int(&poly, p);
            let brute = (0..p)
                .filter(|&x| c.iter().rev().fold(0i128, |acc, &a| (acc * x as i128 + a as i128).rem_euclid(p as i128)) == 0)
                .count();
            ensure(count_roots_mod_p(&f) == brute, format!("{poly} mod {p}"))?;
        }
    }

    let mut rounds = 0;
    while rounds < 100 {
        let pieces: Vec<IntPolynomial> = (0..rng.gen_range(2..=3))
            .map(|_| {
                let deg = rng.gen_range(1..=3);
                let mut c: Vec<i64> = (0..deg).map(|_| rng.gen_range(-9..=9)).collect();
                c.push(1);
                ip(&c)
            })
            .collect();
        let product: IntPolynomial = pieces.iter().cloned().product();
        let Ok(fact) = factor_over_q(&product) else {
            continue; // repeated roots
        };
        ensure(fact.product() == product, format!("factor_over_q({product}) does not multiply back"))?;
        ensure(fact.factors().len() >= pieces.len(), format!("{product}: too few factors"))?;
        ensure(fact.factors().iter().all(IntPolynomial::is_monic), format!("{product}: non-monic factor"))?;
        rounds += 1;
    }

    for _ in 0..200 {
        let p = primes[rng.gen_range(0..25)];
        let deg = rng.gen_range(1..=8);
        let mut c: Vec<u64> = (0..deg).map(|_| rng.gen_range(0..p)).collect();
        c.push(1);
        let f = ModPoly::new(p, c);
        let factors = factor_mod_p(&f);
        let mut prod = ModPoly::one(p);
        for (g, e) in &factors {
            ensure(is_irreducible(g), format!("reducible factor of {f:?} mod {p}"))?;
            for _ in 0..*e {
                prod = prod.mul(g);
            }
        }
        ensure(prod == f, format!("factor_mod_p round trip mod {p}"))?;
    }
    Ok("roots 200 x 95 primes, 100 Q-factorizations, 200 F_p factorizations".into())
}

/// An element of `ℚ(i, √2)` as integer coordinates on `1, i, √2, i√2`.
type Quartic = [i64; 4];

/// The automorphism `i ↦ a·i`, `√2 ↦ b·√2`.
fn act(a: i64, b: i64, x: Quartic) -> Quartic {
    [x[0], a * x[1], b * x[2], a * b * x[3]]
}

fn criterion_8() -> Check {
    let p = ip(&[1, 1]) * ip(&[-2, 1]);
    let report = classify_roots(&p).unwrap();
    let c = ConstantsReport::compute(&p, &report).unwrap().c.unwrap();
    let bound = f2_bound_and_a0p0(&report, 2, c).unwrap();
    ensure(bound.f2_ub == rat(1, 2), format!("f2_ub = {}", bound.f2_ub))?;

    // L_2 = ℚ(i, √2); roots t = -1, 2 are rational so every σ fixes some t_j.
    let group: Vec<(i64, i64)> = [(1, 1), (1, -1), (-1, 1), (-1, -1)].into();
    let roots: [Quartic; 2] = [[-1, 0, 0, 0], [2, 0, 0, 0]];
    let denominator = group
        .iter()
        .filter(|&&(a, b)| roots.iter().any(|&t| act(a, b, t) == t))
        .count();
    // square roots of the non-torsion root 2: ±√2
    let sqrt2: [Quartic; 2] = [[0, 0, 1, 0], [0, 0, -1, 0]];
    let numerator = group
        .iter()
        .filter(|&&(a, b)| sqrt2.iter().any(|&y| act(a, b, y) == y))
        .count();
    let f2 = rat(numerator as i64, denominator as i64);
    ensure(f2 <= bound.f2_ub, format!("f2(2) = {f2} exceeds {}", bound.f2_ub))?;
    Ok(format!("f2(2) = {f2} <= f2_ub = {}", bound.f2_ub))
}

fn criterion_9() -> Check {
    let p = ip(&[-1, -1, 0, 0, 1]);
    let mut reports = Vec::new();
    let mut times = Vec::new();
    for block_size in [1 << 16, 1_000_003] {
        let start = Instant::now();
        let r = scan_with(
            &p,
            8,
            N_PERF,
            ScanOptions {
                block_size,
                method: ScanMethod::Auto,
                record_d: false,
            },
        )
        .unwrap();
        times.push(start.elapsed());
        reports.push(r);
    }
    ensure(reports[0] == reports[1], "report depends on the block size")?;
    let worst = times.iter().max().unwrap();
    ensure(*worst < Duration::from_secs(60), format!("slowest scan {worst:.1?}"))?;
    let r = &reports[0];
    Ok(format!(
        "{} primes, D_count = {}, {:.1?} / {:.1?} on {} threads",
        r.primes_tested,
        r.d_count,
        times[0],
        times[1],
        rayon::current_num_threads()
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Check, Duration); 9] = [
        ("1 phi(h_k(n) n) = h_k(n) phi(n)", criterion_1, Duration::from_secs(10)),
        ("2 T+1 pipeline", criterion_2, Duration::from_secs(30)),
        ("3 cyclotomic oracle", criterion_3, Duration::from_secs(120)),
        ("4 T^2-3T+1, k = 7", criterion_4, Duration::from_secs(120)),
        ("5 (T+1)(T-2), k = 4", criterion_5, Duration::from_secs(60)),
        ("6 anti-certification", criterion_6, Duration::from_secs(600)),
        ("7 kernel oracles", criterion_7, Duration::from_secs(60)),
        ("8 f2 bound", criterion_8, Duration::from_secs(1)),
        ("9 scan to 10^7, k = 8", criterion_9, Duration::from_secs(120)),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > budget => Err(format!("{msg}; over budget {budget:?}")),
            o => o,
        };
        match outcome {
            Ok(msg) => println!("PASS  {name}: {msg} [{elapsed:.2?}]"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  {name}: {msg} [{elapsed:.2?}]");
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
