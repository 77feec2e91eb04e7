//! Dense univariate polynomials over ℤ and ℚ.
//!
//! Coefficients are stored in ascending degree order; `coeffs[i]` is the
//! coefficient of `T^i`. The zero polynomial is the empty vector and the
//! last stored coefficient is never zero.

mod rational;
mod resultant;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

pub use rational::RationalPolynomial;
pub use resultant::{discriminant, rational_gcd, resultant};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `T`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `T - a`.
    pub fn linear(a: i64) -> Self {
        Self::from_i64(&[-a, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `T^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `P(T^k)`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1, "compose_power needs k >= 1");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::new(coeffs)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and normalizes the leading coefficient to be
    /// positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading_coeff().unwrap().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Exact division of every coefficient by `s`.
    pub fn div_scalar(&self, s: &BigInt) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|c| {
                    debug_assert!((c % s).is_zero(), "inexact scalar division");
                    c / s
                })
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo-division by zero");
        let Some(ds) = self.degree() else {
            return Self::zero();
        };
        if ds < dd {
            return self.clone();
        }
        let lc = d.leading_coeff().unwrap().clone();
        let mut r = self.coeffs.clone();
        let mut steps = ds - dd + 1;
        for top in (dd..=ds).rev() {
            let q = r[top].clone();
            for c in r.iter_mut().take(top + 1) {
                *c *= &lc;
            }
            if !q.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    r[top - dd + j] -= &q * dj;
                }
            }
            steps -= 1;
            debug_assert!(r[top].is_zero());
        }
        debug_assert_eq!(steps, 0);
        r.truncate(dd);
        Self::new(r)
    }

    /// Division by a monic polynomial; quotient and remainder have integer
    /// coefficients.
    pub fn div_rem_monic(&self, d: &Self) -> (Self, Self) {
        assert!(d.is_monic(), "div_rem_monic needs a monic divisor");
        let dd = d.degree().unwrap();
        let Some(ds) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if ds < dd {
            return (Self::zero(), self.clone());
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); ds - dd + 1];
        for top in (dd..=ds).rev() {
            let c = std::mem::take(&mut r[top]);
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate().take(dd) {
                r[top - dd + j] -= &c * dj;
            }
            q[top - dd] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Exact quotient over ℤ, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let Some(ds) = self.degree() else {
            return Some(Self::zero());
        };
        if ds < dd {
            return None;
        }
        let lc = d.leading_coeff().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); ds - dd + 1];
        for top in (dd..=ds).rev() {
            let c = std::mem::take(&mut r[top]);
            if c.is_zero() {
                continue;
            }
            let (qc, rem) = c.div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, dj) in d.coeffs.iter().enumerate().take(dd) {
                r[top - dd + j] -= &qc * dj;
            }
            q[top - dd] = qc;
        }
        if r.iter().take(dd).all(Zero::is_zero) {
            Some(Self::new(q))
        } else {
            None
        }
    }

    /// Sum of squared coefficients.
    pub fn norm_sq(&self) -> BigInt {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    /// Coefficientwise reduction into `[0, m)`.
    pub fn reduce_mod(&self, m: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.mod_floor(m)).collect())
    }

    /// Coefficientwise reduction into the symmetric range `(-m/2, m/2]`.
    pub fn reduce_symmetric(&self, m: &BigInt) -> Self {
        let half = m >> 1usize;
        Self::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let r = c.mod_floor(m);
                    if r > half {
                        r - m
                    } else {
                        r
                    }
                })
                .collect(),
        )
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        let zero = BigInt::zero();
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| {
                    f(
                        self.coeffs.get(i).unwrap_or(&zero),
                        other.coeffs.get(i).unwrap_or(&zero),
                    )
                })
                .collect(),
        )
    }
}

impl Add<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $f(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $f(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$f(rhs)
            }
        }
        impl $tr<IntPolynomial> for &IntPolynomial {
            type Output = IntPolynomial;
            fn $f(self, rhs: IntPolynomial) -> IntPolynomial {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl std::iter::Product for IntPolynomial {
    fn product<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::one(), |acc, p| &acc * &p)
    }
}

/// Writes e.g. `T^3 - 2*T + 1`; the zero polynomial prints as `0`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "T")?;
                    } else {
                        write!(f, "T^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}
