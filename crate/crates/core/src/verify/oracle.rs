//! Exact densities when every root of P is a root of unity.
//!
//! For `p` not dividing `nk`, `Φ_n` has a root mod `p` iff `p ≡ 1 (mod n)`,
//! and `Φ_n(T^k)` has one iff `𝔽_p^×` contains an element `x` with `x^k` of
//! exact order `n`, i.e. iff `p ≡ 1 (mod d)` for some `d` in
//! `O_n(k) = {d | nk : d / gcd(d, k) = n}`. Densities of unions of such
//! congruence conditions follow from inclusion–exclusion, since
//! `p ≡ 1 (mod a)` and `p ≡ 1 (mod b)` together mean `p ≡ 1 (mod lcm(a, b))`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{checked_lcm, divisors, euler_phi, gcd};
use crate::classify::{classify_roots, RootKind};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::ser;

/// Densities of the prime divisors of `P`, of `P(T^k)`, and of their
/// difference D.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityTriple {
    #[serde(serialize_with = "ser::display")]
    pub dens_p: BigRational,
    #[serde(serialize_with = "ser::display")]
    pub dens_pk: BigRational,
    #[serde(serialize_with = "ser::display")]
    pub dens_d: BigRational,
}

/// `O_n(k)`: the orders `d` of elements `x` for which `x^k` has order `n`.
pub fn orders_for_power(n: u64, k: u64) -> Vec<u64> {
    divisors(n * k)
        .into_iter()
        .filter(|&d| d / gcd(d, k) == n)
        .collect()
}

/// Exact densities for a polynomial whose roots have the given orders.
pub fn exact_cyclotomic_density(orders: &[u64], k: u64) -> Result<DensityTriple> {
    if orders.is_empty() || orders.contains(&0) || k == 0 {
        return Err(Error::InvalidArgument("orders and k must be positive".into()));
    }
    let dens_p = union_density(orders)?;
    let pk_moduli: Vec<u64> = orders
        .iter()
        .flat_map(|&n| orders_for_power(n, k))
        .collect();
    let dens_pk = union_density(&pk_moduli)?;
    Ok(DensityTriple {
        dens_d: &dens_p - &dens_pk,
        dens_p,
        dens_pk,
    })
}

/// [`exact_cyclotomic_density`] for the orders of the roots of P.
pub fn exact_density_for(poly: &IntPolynomial, k: u64) -> Result<DensityTriple> {
    let report = classify_roots(poly)?;
    if report.classes.iter().any(|c| c.kind != RootKind::RootOfUnity) {
        return Err(Error::NotCyclotomicCase);
    }
    exact_cyclotomic_density(&report.orders(), k)
}

/// Density of primes with `p ≡ 1 (mod m)` for at least one `m`.
fn union_density(moduli: &[u64]) -> Result<BigRational> {
    let mut ms: Vec<u64> = moduli.to_vec();
    ms.sort_unstable();
    ms.dedup();
    // a condition implied by a weaker one adds nothing
    let minimal: Vec<u64> = ms
        .iter()
        .copied()
        .filter(|&m| !ms.iter().any(|&d| d != m && m % d == 0))
        .collect();
    if minimal.len() > 24 {
        return Err(Error::LimitExceeded(format!(
            "{} independent congruence conditions",
            minimal.len()
        )));
    }
    let mut total = BigRational::zero();
    for mask in 1u32..(1 << minimal.len()) {
        let mut l = 1u64;
        for (i, &m) in minimal.iter().enumerate() {
            if mask >> i & 1 == 1 {
                l = checked_lcm(l, m)
                    .ok_or_else(|| Error::LimitExceeded("modulus overflow".into()))?;
            }
        }
        let term = BigRational::new(BigInt::one(), BigInt::from(euler_phi(l)));
        if mask.count_ones() % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}
