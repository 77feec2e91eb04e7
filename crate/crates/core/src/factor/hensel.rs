use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::ff::ModPoly;
use crate::poly::IntPolynomial;

/// Lifts a factorization `f ≡ ∏ factors (mod p)` of a monic `f` into pairwise
/// coprime monic factors to monic factors modulo `p^e`, in the same order,
/// with coefficients in `[0, p^e)`.
pub fn hensel_lift(f: &IntPolynomial, factors: &[ModPoly], e: u32) -> Result<Vec<IntPolynomial>> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if factors.is_empty() {
        return Err(Error::InvalidArgument("nothing to lift".into()));
    }
    if e == 0 {
        return Err(Error::InvalidArgument("target exponent must be positive".into()));
    }
    let p = factors[0].modulus();
    let modulus = num_traits::pow(BigInt::from(p), e as usize);
    let product = factors
        .iter()
        .fold(ModPoly::one(p), |acc, g| acc.mul(g));
    if product != ModPoly::from_int(f, p) {
        return Err(Error::InvalidArgument(
            "factors do not multiply to f modulo p".into(),
        ));
    }
    let mut out = Vec::with_capacity(factors.len());
    lift_tree(f, factors, p, &modulus, &mut out)?;
    Ok(out)
}

fn lift_tree(
    f: &IntPolynomial,
    factors: &[ModPoly],
    p: u64,
    modulus: &BigInt,
    out: &mut Vec<IntPolynomial>,
) -> Result<()> {
    if factors.len() == 1 {
        out.push(f.reduce_mod(modulus));
        return Ok(());
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let g = left.iter().fold(ModPoly::one(p), |acc, x| acc.mul(x));
    let h = right.iter().fold(ModPoly::one(p), |acc, x| acc.mul(x));
    let (g, h) = lift_pair(f, &g, &h, p, modulus)?;
    lift_tree(&g, left, p, modulus, out)?;
    lift_tree(&h, right, p, modulus, out)
}

/// Quadratic lifting of `f ≡ g h (mod p)` with monic `g`, `h`, carrying the
/// Bézout cofactors along.
fn lift_pair(
    f: &IntPolynomial,
    g: &ModPoly,
    h: &ModPoly,
    p: u64,
    target: &BigInt,
) -> Result<(IntPolynomial, IntPolynomial)> {
    let (d, s, t) = g.ext_gcd(h);
    if !d.is_one() {
        return Err(Error::NotCoprime(p));
    }
    let (mut g, mut h) = (g.to_int(), h.to_int());
    let (mut s, mut t) = (s.to_int(), t.to_int());
    let mut m = BigInt::from(p);
    let one = IntPolynomial::one();
    while &m < target {
        let m2 = (&m * &m).min(target.clone());
        let e = (f - &g * &h).reduce_mod(&m2);
        let (q, r) = (&s * &e).reduce_mod(&m2).div_rem_monic(&h);
        let g2 = (&g + &t * &e + &q * &g).reduce_mod(&m2);
        let h2 = (&h + &r).reduce_mod(&m2);
        let b = (&s * &g2 + &t * &h2 - &one).reduce_mod(&m2);
        let (c, d) = (&s * &b).reduce_mod(&m2).div_rem_monic(&h2);
        s = (&s - &d).reduce_mod(&m2);
        t = (&t - &t * &b - &c * &g2).reduce_mod(&m2);
        g = g2;
        h = h2;
        m = m2;
    }
    debug_assert!(g.leading_coeff().is_some_and(One::is_one));
    Ok((g, h))
}
