//! Resultants, discriminants and gcds by the subresultant polynomial
//! remainder sequence. All arithmetic stays in ℤ; the scalar divisions in
//! the sequence are exact.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPolynomial;

fn big_pow(b: &BigInt, e: usize) -> BigInt {
    num_traits::pow(b.clone(), e)
}

/// Resultant of `a` and `b` (zero if either is zero).
pub fn resultant(a: &IntPolynomial, b: &IntPolynomial) -> BigInt {
    let (Some(mut da), Some(mut db)) = (a.degree(), b.degree()) else {
        return BigInt::zero();
    };
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut sign = BigInt::one();
    if da < db {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut da, &mut db);
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
    }
    if db == 0 {
        return sign * big_pow(b.leading_coeff().unwrap(), da);
    }

    let ca = a.content();
    let cb = b.content();
    let scale = big_pow(&ca, db) * big_pow(&cb, da);
    let mut a = a.div_scalar(&ca);
    let mut b = b.div_scalar(&cb);
    let mut g = BigInt::one();
    let mut h = BigInt::one();

    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return BigInt::zero();
        }
        a = b;
        b = r.div_scalar(&(&g * big_pow(&h, delta)));
        g = a.leading_coeff().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => big_pow(&g, delta) / big_pow(&h, delta - 1),
        };
        let db = b.degree().unwrap();
        if db == 0 {
            let da = a.degree().unwrap();
            let lb = b.leading_coeff().unwrap();
            let last = if da == 0 {
                BigInt::one()
            } else {
                big_pow(lb, da) / big_pow(&h, da - 1)
            };
            return sign * scale * last;
        }
    }
}

/// Discriminant `(-1)^(d(d-1)/2) res(p, p') / lc(p)`.
pub fn discriminant(p: &IntPolynomial) -> BigInt {
    let d = p.degree().expect("discriminant of the zero polynomial");
    if d == 0 {
        return BigInt::zero();
    }
    if d == 1 {
        return BigInt::one();
    }
    let r = resultant(p, &p.derivative()) / p.leading_coeff().unwrap();
    if (d * (d - 1) / 2) % 2 == 1 {
        -r
    } else {
        r
    }
}

/// Primitive integer polynomial generating `gcd(a, b)` in ℚ[T], with positive
/// leading coefficient.
pub fn rational_gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    assert!(!(a.is_zero() && b.is_zero()), "gcd(0, 0) is undefined");
    if a.is_zero() {
        return b.primitive_part();
    }
    if b.is_zero() {
        return a.primitive_part();
    }
    let (mut a, mut b) = if a.degree() >= b.degree() {
        (a.primitive_part(), b.primitive_part())
    } else {
        (b.primitive_part(), a.primitive_part())
    };
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        if b.is_constant() {
            return IntPolynomial::one();
        }
        let delta = a.degree().unwrap() - b.degree().unwrap();
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return b.primitive_part();
        }
        a = b;
        b = r.div_scalar(&(&g * big_pow(&h, delta)));
        g = a.leading_coeff().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => big_pow(&g, delta) / big_pow(&h, delta - 1),
        };
    }
}
