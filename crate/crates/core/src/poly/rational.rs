use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntPolynomial;

/// A polynomial over ℚ stored as an integer numerator over a common positive
/// denominator, kept in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolynomial {
    numer: IntPolynomial,
    denom: BigInt,
}

impl RationalPolynomial {
    pub fn new(numer: IntPolynomial, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        let mut r = RationalPolynomial { numer, denom };
        r.normalize();
        r
    }

    pub fn zero() -> Self {
        Self::from_int(IntPolynomial::zero())
    }

    pub fn from_int(p: IntPolynomial) -> Self {
        RationalPolynomial {
            numer: p,
            denom: BigInt::one(),
        }
    }

    fn normalize(&mut self) {
        if self.denom.is_negative() {
            self.denom = -&self.denom;
            self.numer = -&self.numer;
        }
        if self.numer.is_zero() {
            self.denom = BigInt::one();
            return;
        }
        let g = self.numer.content().gcd(&self.denom);
        if !g.is_one() {
            self.numer = self.numer.div_scalar(&g);
            self.denom /= g;
        }
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numer
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn degree(&self) -> Option<usize> {
        self.numer.degree()
    }

    pub fn add(&self, other: &Self) -> Self {
        let numer = self.numer.scale(&other.denom) + other.numer.scale(&self.denom);
        Self::new(numer, &self.denom * &other.denom)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let numer = self.numer.scale(&other.denom) - other.numer.scale(&self.denom);
        Self::new(numer, &self.denom * &other.denom)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.numer * &other.numer, &self.denom * &other.denom)
    }

    /// Euclidean division over ℚ.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc_num = d.numer.leading_coeff().unwrap().clone();
        let mut q = Self::zero();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            // leading term of r divided by leading term of d
            let num = r.numer.leading_coeff().unwrap() * &d.denom;
            let den = &r.denom * &lc_num;
            let term = Self::new(IntPolynomial::monomial(num, rd - dd), den);
            q = q.add(&term);
            r = r.sub(&term.mul(d));
        }
        (q, r)
    }

    /// Monic gcd over ℚ by the plain Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        match self.numer.leading_coeff() {
            None => self.clone(),
            Some(lc) => Self::new(self.numer.clone(), lc.clone()),
        }
    }

    /// The primitive integer polynomial with positive leading coefficient that
    /// is a ℚ-multiple of `self`.
    pub fn to_primitive(&self) -> IntPolynomial {
        self.numer.primitive_part()
    }
}
