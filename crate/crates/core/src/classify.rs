//! Sorting the roots of P into roots of unity, other units, and non-units,
//! one irreducible factor at a time.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::arith::prime_factors;
use crate::error::Result;
use crate::factor::{check_preconditions, cyclotomic_poly, factor_over_q, inverse_totient};
use crate::poly::IntPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RootKind {
    RootOfUnity,
    UnitNotRootOfUnity,
    NonUnit,
}

/// The roots of one irreducible factor of P; they share kind and order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootClass {
    pub minimal_polynomial: IntPolynomial,
    pub kind: RootKind,
    /// Multiplicative order, for roots of unity only.
    pub order: Option<u64>,
    /// Number of roots, i.e. the degree of the factor.
    pub count: usize,
}

impl RootClass {
    /// The primes dividing the order (empty unless a root of unity).
    pub fn order_primes(&self) -> Vec<u64> {
        self.order.map(prime_factors).unwrap_or_default()
    }

    /// `|m(0)|`.
    pub fn norm(&self) -> BigInt {
        self.minimal_polynomial.constant_term().abs()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub classes: Vec<RootClass>,
    pub r1: usize,
    pub r2: usize,
    pub r3: usize,
    /// Union of the prime sets of the root-of-unity orders, ascending.
    pub s_union: Vec<u64>,
    pub p_min: Option<u64>,
    pub min_factor_degree: usize,
}

impl ClassificationReport {
    pub fn degree(&self) -> usize {
        self.r1 + self.r2 + self.r3
    }

    pub fn classes_of(&self, kind: RootKind) -> impl Iterator<Item = &RootClass> {
        self.classes.iter().filter(move |c| c.kind == kind)
    }

    /// Orders of the root-of-unity classes, in class order.
    pub fn orders(&self) -> Vec<u64> {
        self.classes.iter().filter_map(|c| c.order).collect()
    }
}

/// The `n` with `m = Φ_n`, if any.
pub fn match_cyclotomic(m: &IntPolynomial) -> Option<u64> {
    let d = m.degree()?;
    if d == 0 || !m.is_monic() || !m.constant_term().abs().is_one() {
        return None;
    }
    inverse_totient(d as u64)
        .into_iter()
        .find(|&n| &cyclotomic_poly(n) == m)
}

/// Classifies the roots of P by factoring it over ℚ: a factor with
/// `|m(0)| ≥ 2` has non-unit roots, a cyclotomic factor has roots of unity,
/// and any other factor has units of infinite order.
pub fn classify_roots(poly: &IntPolynomial) -> Result<ClassificationReport> {
    check_preconditions(poly)?;
    let factors = factor_over_q(poly)?.into_factors();
    Ok(classify_factors(factors))
}

pub(crate) fn classify_factors(factors: Vec<IntPolynomial>) -> ClassificationReport {
    let mut classes = Vec::with_capacity(factors.len());
    for m in factors {
        let count = m.degree().unwrap();
        let (kind, order) = if !m.constant_term().abs().is_one() {
            (RootKind::NonUnit, None)
        } else if let Some(n) = match_cyclotomic(&m) {
            (RootKind::RootOfUnity, Some(n))
        } else {
            (RootKind::UnitNotRootOfUnity, None)
        };
        classes.push(RootClass {
            minimal_polynomial: m,
            kind,
            order,
            count,
        });
    }
    classes.sort_by(|a, b| {
        a.kind
            .cmp(&b.kind)
            .then(a.count.cmp(&b.count))
            .then_with(|| a.minimal_polynomial.cmp(&b.minimal_polynomial))
    });
    let sum = |k: RootKind| classes.iter().filter(|c| c.kind == k).map(|c| c.count).sum();
    let (r1, r2, r3) = (
        sum(RootKind::RootOfUnity),
        sum(RootKind::UnitNotRootOfUnity),
        sum(RootKind::NonUnit),
    );
    let mut s_union: Vec<u64> = classes.iter().flat_map(RootClass::order_primes).collect();
    s_union.sort_unstable();
    s_union.dedup();
    let min_factor_degree = classes.iter().map(|c| c.count).min().unwrap_or(1);
    ClassificationReport {
        p_min: s_union.first().copied(),
        classes,
        r1,
        r2,
        r3,
        s_union,
        min_factor_degree,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn cyclotomic_matching() {
        assert_eq!(match_cyclotomic(&ip(&[1, -1, 1])), Some(6));
        assert_eq!(match_cyclotomic(&ip(&[1, -3, 1])), None);
        assert_eq!(match_cyclotomic(&ip(&[1, 1])), Some(2));
        assert_eq!(match_cyclotomic(&ip(&[1, 0, -1, 0, 1])), Some(12));
    }

    #[test]
    fn classification_examples() {
        let r = classify_roots(&ip(&[-2, -1, 1])).unwrap();
        assert_eq!((r.r1, r.r2, r.r3), (1, 0, 1));
        assert_eq!(r.orders(), vec![2]);
        let r = classify_roots(&ip(&[1, -3, 1])).unwrap();
        assert_eq!((r.r1, r.r2, r.r3), (0, 2, 0));
        assert_eq!(r.p_min, None);
        let r = classify_roots(&ip(&[1, 0, -1, 0, 1])).unwrap();
        assert_eq!((r.r1, r.r2, r.r3), (4, 0, 0));
        assert_eq!(r.orders(), vec![12]);
        assert_eq!(r.s_union, vec![2, 3]);
        assert_eq!(r.p_min, Some(2));
        assert_eq!(r.min_factor_degree, 4);
    }
}
