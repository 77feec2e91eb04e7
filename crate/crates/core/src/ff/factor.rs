//! Factorization over 𝔽_p: square-free decomposition, distinct-degree and
//! equal-degree (Cantor–Zassenhaus) splitting, and Berlekamp's deterministic
//! algorithm, which handles p = 2.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ModPoly;
use crate::arith::{inv_mod, mul_mod, sub_mod};
use crate::DEFAULT_SEED;

/// Square-free decomposition of a monic polynomial: pairs `(g, e)` with the
/// `g` square-free, pairwise coprime, and `f = ∏ g^e`.
pub fn squarefree_decomposition(f: &ModPoly) -> Vec<(ModPoly, u32)> {
    let p = f.modulus();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let f = f.monic();
    let fp = f.derivative();
    if fp.is_zero() {
        for (g, e) in squarefree_decomposition(&f.pth_root()) {
            out.push((g, e * p as u32));
        }
        return out;
    }
    let mut c = f.gcd(&fp);
    let mut w = f.div_rem(&c).0;
    let mut i = 1u32;
    while w.degree() > Some(0) {
        let y = w.gcd(&c);
        let z = w.div_rem(&y).0;
        if z.degree() > Some(0) {
            out.push((z.monic(), i));
        }
        i += 1;
        w = y;
        c = c.div_rem(&w).0;
    }
    if c.degree() > Some(0) {
        for (g, e) in squarefree_decomposition(&c.pth_root()) {
            out.push((g, e * p as u32));
        }
    }
    out
}

/// Distinct-degree factorization of a monic square-free polynomial: pairs
/// `(h, d)` where `h` is the product of all irreducible factors of degree `d`.
pub fn distinct_degree_factorization(f: &ModPoly) -> Vec<(ModPoly, usize)> {
    let p = f.modulus();
    let mut out = Vec::new();
    let mut rest = f.monic();
    let x = ModPoly::x(p);
    let mut h = x.rem(&rest);
    let mut d = 0usize;
    while let Some(deg) = rest.degree() {
        if deg < 2 * (d + 1) {
            if deg > 0 {
                out.push((rest.clone(), deg));
            }
            break;
        }
        d += 1;
        h = h.pow_mod(p, &rest);
        let g = h.sub(&x).gcd(&rest);
        if g.degree() > Some(0) {
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    out
}

/// Splits a monic square-free product of irreducibles of degree `d` (odd `p`).
pub fn equal_degree_factorization<R: Rng>(f: &ModPoly, d: usize, rng: &mut R) -> Vec<ModPoly> {
    let p = f.modulus();
    assert!(p != 2, "equal-degree splitting needs odd characteristic");
    let n = f.degree().expect("zero polynomial");
    if n == d {
        return vec![f.monic()];
    }
    let exponent = (BigUint::from(p).pow(d as u32) - 1u32) >> 1;
    loop {
        let a = ModPoly::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree() < Some(1) {
            continue;
        }
        let g = a.gcd(f);
        if g.degree() > Some(0) && g.degree() < Some(n) {
            return split_both(f, &g, d, rng);
        }
        let b = a.pow_mod_big(&exponent, f).sub(&ModPoly::one(p));
        let g = b.gcd(f);
        if g.degree() > Some(0) && g.degree() < Some(n) {
            return split_both(f, &g, d, rng);
        }
    }
}

fn split_both<R: Rng>(f: &ModPoly, g: &ModPoly, d: usize, rng: &mut R) -> Vec<ModPoly> {
    let mut out = equal_degree_factorization(g, d, rng);
    out.extend(equal_degree_factorization(&f.div_rem(g).0, d, rng));
    out
}

/// Berlekamp factorization of a monic square-free polynomial. Deterministic;
/// the splitting step costs O(p) gcds, so this is meant for small `p`.
pub fn berlekamp(f: &ModPoly) -> Vec<ModPoly> {
    let p = f.modulus();
    let f = f.monic();
    let n = match f.degree() {
        None | Some(0) => return Vec::new(),
        Some(1) => return vec![f],
        Some(n) => n,
    };
    // Row i holds T^(ip) mod f; kernel of (Q - I)^T gives the Berlekamp subalgebra.
    let xp = ModPoly::x(p).pow_mod(p, &f);
    let mut rows = Vec::with_capacity(n);
    let mut cur = ModPoly::one(p);
    for _ in 0..n {
        rows.push((0..n).map(|j| cur.coeff(j)).collect::<Vec<u64>>());
        cur = cur.mul_mod(&xp, &f);
    }
    let mut m = vec![vec![0u64; n]; n];
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            m[j][i] = v;
        }
        m[i][i] = sub_mod(m[i][i], 1, p);
    }
    let basis = nullspace(m, p);
    let r = basis.len();
    let mut factors = vec![f];
    for v in basis {
        if factors.len() == r {
            break;
        }
        let v = ModPoly::new(p, v);
        if v.degree() < Some(1) {
            continue;
        }
        let mut next = Vec::new();
        for h in factors {
            if h.degree() == Some(1) {
                next.push(h);
                continue;
            }
            let mut pieces = Vec::new();
            for s in 0..p {
                let g = v.sub(&ModPoly::constant(p, s)).gcd(&h);
                if g.degree() > Some(0) {
                    pieces.push(g);
                }
            }
            next.extend(pieces);
        }
        factors = next;
    }
    factors
}

/// Basis of `{v : m v = 0}` over 𝔽_p.
fn nullspace(mut m: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = inv_mod(m[r][c], p).unwrap();
        for v in m[r].iter_mut() {
            *v = mul_mod(*v, inv, p);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let factor = m[i][c];
                for j in 0..cols {
                    let t = mul_mod(factor, m[r][j], p);
                    m[i][j] = sub_mod(m[i][j], t, p);
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; cols];
            v[fc] = 1;
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = sub_mod(0, m[row][fc], p);
            }
            v
        })
        .collect()
}

/// Ben-Or irreducibility test: no factor of degree `i <= n/2`.
pub fn is_irreducible(f: &ModPoly) -> bool {
    let p = f.modulus();
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let f = f.monic();
    let x = ModPoly::x(p);
    let mut h = x.clone();
    for _ in 1..=n / 2 {
        h = h.pow_mod(p, &f);
        if !h.sub(&x).gcd(&f).is_one() {
            return false;
        }
    }
    true
}

/// Factors a nonzero polynomial into monic irreducibles with multiplicity,
/// sorted. The leading coefficient is dropped.
pub fn factor_mod_p(f: &ModPoly) -> Vec<(ModPoly, u32)> {
    factor_mod_p_seeded(f, DEFAULT_SEED)
}

pub fn factor_mod_p_seeded(f: &ModPoly, seed: u64) -> Vec<(ModPoly, u32)> {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let p = f.modulus();
    let mut rng = rng_for(seed, p, 0);
    let mut out = Vec::new();
    for (g, e) in squarefree_decomposition(f) {
        if p == 2 {
            out.extend(berlekamp(&g).into_iter().map(|h| (h, e)));
            continue;
        }
        for (h, d) in distinct_degree_factorization(&g) {
            out.extend(
                equal_degree_factorization(&h, d, &mut rng)
                    .into_iter()
                    .map(|h| (h, e)),
            );
        }
    }
    out.sort();
    out
}

/// Number of distinct roots in 𝔽_p: `deg gcd(T^p - T, f)`.
pub fn count_roots_mod_p(f: &ModPoly) -> usize {
    roots_factor(f).degree().unwrap_or(0)
}

pub fn has_root_mod_p(f: &ModPoly) -> bool {
    count_roots_mod_p(f) > 0
}

fn roots_factor(f: &ModPoly) -> ModPoly {
    let p = f.modulus();
    assert!(!f.is_zero(), "root count of the zero polynomial");
    if f.degree() == Some(0) {
        return ModPoly::one(p);
    }
    let f = f.monic();
    let x = ModPoly::x(p);
    x.pow_mod(p, &f).sub(&x).gcd(&f)
}

/// The distinct roots in 𝔽_p, ascending.
pub fn roots_mod_p(f: &ModPoly) -> Vec<u64> {
    let p = f.modulus();
    let g = roots_factor(f);
    let mut roots: Vec<u64> = if g.degree() == Some(0) {
        Vec::new()
    } else if p < 64 {
        (0..p).filter(|&x| g.eval(x) == 0).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED ^ p);
        equal_degree_factorization(&g, 1, &mut rng)
            .into_iter()
            .map(|l| sub_mod(0, l.coeff(0), p))
            .collect()
    };
    roots.sort_unstable();
    roots
}

/// Lcm of the degrees of the irreducible factors of a square-free `f`; the
/// residue degree of the splitting field when `f` is P mod an unramified p.
pub(crate) fn splitting_degree(f: &ModPoly) -> usize {
    distinct_degree_factorization(f)
        .into_iter()
        .fold(1usize, |acc, (_, d)| num_integer::lcm(acc, d))
}

/// Seeded generator used by the randomized steps.
pub(crate) fn rng_for(seed: u64, p: u64, salt: u64) -> ChaCha8Rng {
    let mixed = seed
        ^ p.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ salt.wrapping_mul(0xC2B2_AE3D_27D4_EB4F).rotate_left(17);
    ChaCha8Rng::seed_from_u64(mixed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPolynomial;

    fn mp(p: u64, c: &[i64]) -> ModPoly {
        ModPoly::from_int(&IntPolynomial::from_i64(c), p)
    }

    fn product(p: u64, fs: &[(ModPoly, u32)]) -> ModPoly {
        fs.iter().fold(ModPoly::one(p), |acc, (g, e)| {
            (0..*e).fold(acc, |a, _| a.mul(g))
        })
    }

    #[test]
    fn root_count_examples() {
        assert_eq!(count_roots_mod_p(&mp(5, &[1, 0, 1])), 2);
        assert_eq!(count_roots_mod_p(&mp(7, &[1, 0, 1])), 0);
        assert_eq!(count_roots_mod_p(&mp(2, &[1, 0, 1])), 1);
        assert_eq!(roots_mod_p(&mp(7, &[-2, 0, 1])), vec![3, 4]);
        assert_eq!(roots_mod_p(&mp(101, &[-2, 0, 1])), Vec::<u64>::new());
        // 2 is a square mod 103 (103 = 7 mod 8)
        let r = roots_mod_p(&mp(103, &[-2, 0, 1]));
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|&x| x * x % 103 == 2));
    }

    #[test]
    fn factor_examples() {
        let f = factor_mod_p(&mp(19, &[1, 1, 1, 1, 1]));
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|(g, e)| g.degree() == Some(2) && *e == 1));
        assert_eq!(
            factor_mod_p(&mp(5, &[-1, 0, 1])),
            vec![(mp(5, &[1, 1]), 1), (mp(5, &[4, 1]), 1)]
        );
        assert_eq!(factor_mod_p(&mp(2, &[1, 1, 1])), vec![(mp(2, &[1, 1, 1]), 1)]);
    }

    #[test]
    fn repeated_factors() {
        // (T+1)^2 (T^2+1)^3 mod 3 and T^4 + 1 = (T+1)^4 mod 2
        let p = 3;
        let f = mp(p, &[1, 1]).mul(&mp(p, &[1, 1])).mul(&mp(p, &[1, 0, 1]).mul(&mp(p, &[1, 0, 1])).mul(&mp(p, &[1, 0, 1])));
        let fs = factor_mod_p(&f);
        assert_eq!(fs, vec![(mp(p, &[1, 0, 1]), 3), (mp(p, &[1, 1]), 2)]);
        assert_eq!(factor_mod_p(&mp(2, &[1, 0, 0, 0, 1])), vec![(mp(2, &[1, 1]), 4)]);
        let g = mp(3, &[2, 0, 0, 1, 0, 0, 0, 0, 0, 1]);
        assert_eq!(product(3, &factor_mod_p(&g)), g.monic());
    }

    #[test]
    fn berlekamp_agrees_with_cantor_zassenhaus() {
        let p = 7;
        let f = mp(p, &[3, 1, 4, 1, 5, 9, 2, 6, 1]);
        for (g, _) in squarefree_decomposition(&f) {
            let mut a = berlekamp(&g);
            a.sort();
            let mut rng = ChaCha8Rng::seed_from_u64(1);
            let mut b: Vec<ModPoly> = distinct_degree_factorization(&g)
                .into_iter()
                .flat_map(|(h, d)| equal_degree_factorization(&h, d, &mut rng))
                .collect();
            b.sort();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&mp(2, &[1, 1, 1])));
        assert!(!is_irreducible(&mp(5, &[-1, 0, 1])));
        assert!(is_irreducible(&mp(7, &[1, 0, 1])));
        assert!(!is_irreducible(&mp(3, &[1, 0, 2, 0, 1])));
    }
}
