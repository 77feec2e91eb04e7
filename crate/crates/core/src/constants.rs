//! The explicit constants attached to P: `k0`, `A0`, the valuation bound `V`,
//! the threshold `c`, and the Theorem-3 exponent `A0(p0)`.
//!
//! Three quantities need Galois or unit-group data and are replaced by
//! computable bounds that only make the resulting hypotheses stronger:
//! the density `d1` by `1 / min_factor_degree`, the valuation lcm `v0` by a
//! Newton-polygon bound `V`, and the unit exponent `a0` by per-candidate
//! power-residue certificates (see [`crate::certify`]).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{factor_bigint, factor_u64, is_prime_u64, valuation};
use crate::classify::{ClassificationReport, RootKind};
use crate::error::{Error, Result};
use crate::poly::{discriminant, IntPolynomial};
use crate::ser;

pub use crate::arith::euler_phi;

/// `h_k(n) = ∏ p^{v_p(k)}` over primes `p` dividing both `k` and `n`.
pub fn h_k(n: u64, k: u64) -> u64 {
    assert!(n >= 2, "h_k needs n >= 2");
    factor_u64(k)
        .into_iter()
        .filter(|&(p, _)| n % p == 0)
        .map(|(p, e)| p.pow(e))
        .product()
}

/// `max(2, 1 + largest prime factor of |disc P|)`: every prime from `k0` on
/// is unramified in the splitting field.
pub fn compute_k0(poly: &IntPolynomial) -> Result<u64> {
    k0_from_disc(&discriminant(poly))
}

fn k0_from_disc(disc: &BigInt) -> Result<u64> {
    if disc.is_zero() {
        return Err(Error::NotSeparable);
    }
    let largest = factor_bigint(disc)
        .into_iter()
        .map(|(p, _)| p)
        .max()
        .unwrap_or_default();
    (largest + 1u32)
        .to_u64()
        .map(|k| k.max(2))
        .ok_or_else(|| Error::LimitExceeded("discriminant prime factor exceeds 64 bits".into()))
}

/// Smallest `A` with `p_min^A > r1 / d1_lb = r1 · min_factor_degree`.
pub fn compute_a0(report: &ClassificationReport) -> Result<u32> {
    let p_min = report.p_min.ok_or(Error::NoRootsOfUnity)?;
    let threshold = BigRational::from_integer(BigInt::from(report.r1 * report.min_factor_degree));
    Ok(smallest_power_above(p_min, &threshold))
}

/// Smallest `A ≥ 1` with `base^A > x`, decided exactly.
fn smallest_power_above(base: u64, x: &BigRational) -> u32 {
    let base = BigInt::from(base);
    let mut pow = base.clone();
    let mut a = 1;
    while BigRational::from_integer(pow.clone()) <= *x {
        pow *= &base;
        a += 1;
    }
    a
}

/// One edge of the lower convex hull of `{(i, v_p(a_i))}`. The roots on it
/// have `p`-adic valuation `h / e`; `h = 0` marks the unit-valuation edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewtonPolygonSegment {
    pub prime: u64,
    pub h: u64,
    pub e: u64,
    pub length: usize,
}

impl NewtonPolygonSegment {
    pub fn slope(&self) -> BigRational {
        BigRational::new(BigInt::from(self.h), BigInt::from(self.e))
    }
}

/// Newton polygon of a monic `m` at a prime dividing `m(0)`, from steepest
/// (largest root valuation) to flattest; lengths sum to `deg m`.
pub fn newton_polygon(m: &IntPolynomial, p: u64) -> Result<Vec<NewtonPolygonSegment>> {
    if !m.is_monic() {
        return Err(Error::NotMonic);
    }
    let c0 = m.constant_term();
    if c0.is_zero() {
        return Err(Error::ZeroAtZero);
    }
    if !is_prime_u64(p) || !(&c0 % p).is_zero() {
        return Err(Error::BadPrime(p));
    }
    let points: Vec<(i64, i64)> = m
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i as i64, valuation(c, p) as i64))
        .collect();
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &pt in &points {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            // drop b unless it lies strictly below the chord from a to pt
            let cross = (b.0 - a.0) * (pt.1 - a.1) - (b.1 - a.1) * (pt.0 - a.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    Ok(hull
        .windows(2)
        .map(|w| {
            let len = (w[1].0 - w[0].0) as u64;
            let drop = (w[0].1 - w[1].1) as u64;
            let g = drop.gcd(&len);
            NewtonPolygonSegment {
                prime: p,
                h: drop / g,
                e: len / g,
                length: len as usize,
            }
        })
        .collect())
}

/// `∏ (deg m_i)!`, a bound for the degree of the splitting field.
pub fn splitting_degree_bound(report: &ClassificationReport) -> BigUint {
    report
        .classes
        .iter()
        .map(|c| (1..=c.count as u64).map(BigUint::from).product::<BigUint>())
        .product()
}

/// Bound `V` such that each non-unit root has a prime above which its
/// valuation is positive and at most `V`.
pub fn v_upper_bound(report: &ClassificationReport) -> Result<u64> {
    let d_ub = BigInt::from(splitting_degree_bound(report));
    let mut v = None;
    for class in report.classes_of(RootKind::NonUnit) {
        let m = &class.minimal_polynomial;
        let p = factor_bigint(&m.constant_term())
            .into_iter()
            .map(|(p, _)| p)
            .min()
            .expect("non-unit constant term has a prime factor")
            .to_u64()
            .ok_or_else(|| Error::LimitExceeded("prime factor of m(0) exceeds 64 bits".into()))?;
        let slope = newton_polygon(m, p)?
            .into_iter()
            .filter(|s| s.h > 0)
            .map(|s| s.slope())
            .min()
            .expect("p | m(0) gives a positive slope");
        let bound = (slope * BigRational::from_integer(d_ub.clone())).ceil().to_integer();
        let bound = bound
            .to_u64()
            .ok_or_else(|| Error::LimitExceeded("valuation bound exceeds 64 bits".into()))?;
        v = Some(v.map_or(bound, |x: u64| x.max(bound)));
    }
    v.ok_or(Error::NoNonUnits)
}

/// The threshold `c` with `v0` replaced by `V` and the `a0` term dropped.
pub fn compute_c(report: &ClassificationReport, k0: u64, v: Option<u64>) -> Result<u64> {
    let (r2, r3) = (report.r2 as u64, report.r3 as u64);
    match (r2 > 0, r3 > 0) {
        (false, false) => Err(Error::OnlyRootsOfUnity),
        (true, false) => Ok((r2 + 1).max(k0)),
        (r2_pos, true) => {
            let v = v.ok_or(Error::NoNonUnits)?;
            if r2_pos {
                Ok((r2 + r3 + 1).max(k0).max(v + 1))
            } else {
                Ok((r3 + 1).max(v + 1))
            }
        }
    }
}

/// Theorem-3 data for a prime `p0`: the bound `f2_ub` on `f2(p0)` and the
/// exponent `A0(p0)` derived from it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct F2Bound {
    pub p0: u64,
    #[serde(serialize_with = "ser::display")]
    pub f2_ub: BigRational,
    pub a0_p0: u32,
}

/// `f2_ub = 1 - (1 - (r2+r3)/p0) / (D_ub (p0 - 1))` and the smallest `A` with
/// `p_min^A > r1 · min_factor_degree / (1 - f2_ub)`.
///
/// Certification of `T^{p0} - t` for the non-torsion roots is the caller's
/// responsibility; see [`crate::certify::suggest_k`].
pub fn f2_bound_and_a0p0(report: &ClassificationReport, p0: u64, c: u64) -> Result<F2Bound> {
    let p_min = report.p_min.ok_or(Error::NoRootsOfUnity)?;
    let others = (report.r2 + report.r3) as u64;
    if others == 0 {
        return Err(Error::OnlyRootsOfUnity);
    }
    if !is_prime_u64(p0) || p0 < c {
        return Err(Error::InvalidArgument(format!("p0 = {p0} must be a prime >= c = {c}")));
    }
    let d_ub = BigInt::from(splitting_degree_bound(report));
    let big = |x: u64| BigInt::from(x);
    let one = BigRational::one();
    let g2 = BigRational::new(big(others), big(p0));
    let f2_ub = &one - (&one - g2) / BigRational::from_integer(d_ub * big(p0 - 1));
    let threshold = BigRational::from_integer(big((report.r1 * report.min_factor_degree) as u64))
        / (&one - &f2_ub);
    Ok(F2Bound {
        p0,
        a0_p0: smallest_power_above(p_min, &threshold),
        f2_ub,
    })
}

/// All constants for a classified polynomial. Fields are present exactly when
/// the class counts make them meaningful.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstantsReport {
    pub k0: u64,
    pub p_min: Option<u64>,
    #[serde(rename = "A0")]
    pub a0: Option<u32>,
    #[serde(serialize_with = "ser::display")]
    pub d1_lower_bound: BigRational,
    #[serde(serialize_with = "ser::display")]
    pub l1_degree_upper_bound: BigUint,
    #[serde(rename = "V")]
    pub v_upper_bound: Option<u64>,
    pub c: Option<u64>,
    pub notes: Vec<String>,
}

impl ConstantsReport {
    pub fn compute(poly: &IntPolynomial, report: &ClassificationReport) -> Result<Self> {
        let k0 = compute_k0(poly)?;
        let a0 = if report.r1 > 0 { Some(compute_a0(report)?) } else { None };
        let v = if report.r3 > 0 { Some(v_upper_bound(report)?) } else { None };
        let c = if report.r2 + report.r3 > 0 {
            Some(compute_c(report, k0, v)?)
        } else {
            None
        };
        let mut notes = vec![format!(
            "d1 replaced by the lower bound 1/{} (smallest factor degree)",
            report.min_factor_degree
        )];
        if v.is_some() {
            notes.push(
                "v0 replaced by a Newton-polygon valuation bound times the splitting-degree bound"
                    .into(),
            );
        }
        if report.r2 > 0 {
            notes.push(
                "a0 not computed; unit roots are certified per exponent by power-residue witnesses"
                    .into(),
            );
        }
        Ok(ConstantsReport {
            k0,
            p_min: report.p_min,
            a0,
            d1_lower_bound: BigRational::new(BigInt::one(), BigInt::from(report.min_factor_degree)),
            l1_degree_upper_bound: splitting_degree_bound(report),
            v_upper_bound: v,
            c,
            notes,
        })
    }
}
