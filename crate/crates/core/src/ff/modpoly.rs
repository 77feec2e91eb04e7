use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::arith::{add_mod, bigint_mod_u64, inv_mod, mul_mod, sub_mod};
use crate::poly::IntPolynomial;

/// A polynomial over 𝔽_p with residues in `[0, p)`, ascending order, no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl fmt::Debug for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModPoly({:?} mod {})", self.coeffs, self.p)
    }
}

impl ModPoly {
    /// Builds a polynomial from arbitrary residues (reduced mod `p`).
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        assert!(p >= 2, "modulus must be at least 2");
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    fn from_trimmed(p: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    /// Coefficientwise reduction of an integer polynomial.
    pub fn from_int(f: &IntPolynomial, p: u64) -> Self {
        Self::from_trimmed(p, f.coeffs().iter().map(|c| bigint_mod_u64(c, p)).collect())
    }

    pub fn zero(p: u64) -> Self {
        ModPoly { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Self::constant(p, 1)
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::new(p, vec![c])
    }

    /// The indeterminate.
    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Lift to ℤ with coefficients in `[0, p)`.
    pub fn to_int(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| add_mod(mul_mod(acc, x, p), c, p))
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_trimmed(
            p,
            (0..n)
                .map(|i| add_mod(self.coeff(i), other.coeff(i), p))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_trimmed(
            p,
            (0..n)
                .map(|i| sub_mod(self.coeff(i), other.coeff(i), p))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::zero(self.p).sub(self)
    }

    pub fn scale(&self, s: u64) -> Self {
        let p = self.p;
        Self::from_trimmed(p, self.coeffs.iter().map(|&c| mul_mod(c, s, p)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p;
        let mut acc = vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        let pp = p as u128;
        // Sums of up to 2^64 products of residues would overflow; reduce
        // eagerly when the modulus is large.
        let lazy = (p as u128) * (p as u128) <= (u128::MAX >> 8) / (acc.len() as u128 + 1);
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let t = acc[i + j] + a as u128 * b as u128;
                acc[i + j] = if lazy { t } else { t % pp };
            }
        }
        Self::from_trimmed(p, acc.into_iter().map(|c| (c % pp) as u64).collect())
    }

    /// Multiplies by `T^n`.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; n];
        coeffs.extend_from_slice(&self.coeffs);
        ModPoly { p: self.p, coeffs }
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let p = self.p;
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = inv_mod(d.leading_coeff(), p).expect("leading coefficient not invertible");
        let Some(ds) = self.degree() else {
            return (Self::zero(p), Self::zero(p));
        };
        if ds < dd {
            return (Self::zero(p), self.clone());
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![0u64; ds - dd + 1];
        for top in (dd..=ds).rev() {
            let c = mul_mod(r[top], inv, p);
            r[top] = 0;
            if c == 0 {
                continue;
            }
            q[top - dd] = c;
            for j in 0..dd {
                r[top - dd + j] = sub_mod(r[top - dd + j], mul_mod(c, d.coeffs[j], p), p);
            }
        }
        r.truncate(dd);
        (Self::from_trimmed(p, q), Self::from_trimmed(p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.leading_coeff(), self.p).expect("leading coefficient not invertible");
        self.scale(inv)
    }

    /// Monic gcd (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = inv_mod(r0.leading_coeff(), p).unwrap();
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn mul_mod(&self, other: &Self, m: &Self) -> Self {
        self.mul(other).rem(m)
    }

    /// `self^e mod m` for a machine-word exponent.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(&base, m);
            }
        }
        acc
    }

    /// `self^e mod m` for a big exponent.
    pub fn pow_mod_big(&self, e: &BigUint, m: &Self) -> Self {
        let base = self.rem(m);
        let mut acc = Self::one(self.p).rem(m);
        if e.is_zero() {
            return acc;
        }
        for i in (0..e.bits()).rev() {
            acc = acc.mul_mod(&acc, m);
            if e.bit(i) {
                acc = acc.mul_mod(&base, m);
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        Self::from_trimmed(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
                .collect(),
        )
    }

    /// Coefficients `c_{ip}` of a polynomial whose derivative vanishes; this is
    /// its p-th root because Frobenius fixes 𝔽_p.
    pub(crate) fn pth_root(&self) -> Self {
        let p = self.p as usize;
        Self::from_trimmed(self.p, self.coeffs.iter().step_by(p).copied().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_examples() {
        let f = IntPolynomial::from_i64(&[1, -3, 1]);
        assert_eq!(ModPoly::from_int(&f, 5).coeffs(), &[1, 2, 1]);
        assert_eq!(ModPoly::from_int(&IntPolynomial::from_i64(&[1, 1]), 2).coeffs(), &[1, 1]);
        assert_eq!(ModPoly::from_int(&IntPolynomial::from_i64(&[-12, 0, 1]), 2).coeffs(), &[0, 0, 1]);
    }

    #[test]
    fn division_identity() {
        let p = 13;
        let a = ModPoly::new(p, vec![3, 1, 4, 1, 5, 9, 2, 6]);
        let b = ModPoly::new(p, vec![5, 3, 5, 8]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn big_modulus_products() {
        let p = 18_446_744_073_709_551_557;
        let a = ModPoly::new(p, vec![p - 1; 40]);
        let sq = a.mul(&a);
        // (-1 - T - ... - T^39)^2 has coefficient min(i, 78 - i) + 1 at T^i
        assert_eq!(sq.coeff(0), 1);
        assert_eq!(sq.coeff(39), 40);
        assert_eq!(sq.coeff(78), 1);
    }
}
