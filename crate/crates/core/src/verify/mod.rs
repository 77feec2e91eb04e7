//! Empirical side: sieve the primes up to `N`, test each against `P(T)` and
//! `P(T^k)`, and count the primes dividing the first but not the second.

mod kernel;
mod oracle;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::check_preconditions;
use crate::poly::IntPolynomial;

pub use kernel::{Kernel, PrimeOutcome, ScanMethod, AUTO_DIRECT_MAX_DEGREE};
pub use oracle::{exact_cyclotomic_density, exact_density_for, orders_for_power, DensityTriple};

/// Default sieve segment length (numbers per block).
pub const DEFAULT_BLOCK_SIZE: u64 = 1 << 16;

/// All primes `≤ n`, ascending, by a segmented sieve.
pub fn sieve_primes(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let base = base_primes(n);
    let mut out = Vec::new();
    let mut lo = 2;
    while lo <= n {
        let hi = n.saturating_add(1).min(lo + DEFAULT_BLOCK_SIZE);
        out.extend(segment(&base, lo, hi));
        lo = hi;
    }
    out
}

/// Primes up to `⌊√n⌋` by a plain sieve.
fn base_primes(n: u64) -> Vec<u64> {
    let r = n.isqrt() as usize;
    let mut composite = vec![false; r + 1];
    let mut primes = Vec::new();
    for i in 2..=r {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= r {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Primes in `[lo, hi)`, given every prime up to `√(hi - 1)`.
fn segment(base: &[u64], lo: u64, hi: u64) -> Vec<u64> {
    let lo = lo.max(2);
    if lo >= hi {
        return Vec::new();
    }
    let mut composite = vec![false; (hi - lo) as usize];
    for &q in base {
        if q * q >= hi {
            break;
        }
        let start = (q * q).max(lo.div_ceil(q) * q);
        let mut j = start;
        while j < hi {
            composite[(j - lo) as usize] = true;
            j += q;
        }
    }
    composite
        .iter()
        .enumerate()
        .filter(|(_, &c)| !c)
        .map(|(i, _)| lo + i as u64)
        .collect()
}

/// Tuning and output switches for [`scan_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanOptions {
    pub block_size: u64,
    pub method: ScanMethod,
    /// Keep the list of primes in D.
    pub record_d: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            block_size: DEFAULT_BLOCK_SIZE,
            method: ScanMethod::Auto,
            record_d: false,
        }
    }
}

/// Counts over the primes `p ≤ N`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityReport {
    #[serde(rename = "N")]
    pub n: u64,
    pub k: u64,
    pub method: ScanMethod,
    pub primes_tested: u64,
    pub skipped: u64,
    #[serde(rename = "pd_P")]
    pub pd_p: u64,
    #[serde(rename = "pd_Pk")]
    pub pd_pk: u64,
    #[serde(rename = "D_count")]
    pub d_count: u64,
    pub density_p: f64,
    pub density_pk: f64,
    pub density_d: f64,
    /// `pd_Pk / pd_P`, absent when P has no prime divisor up to N.
    pub f_hat: Option<f64>,
    pub largest_d_prime: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_primes: Option<Vec<u64>>,
}

/// Partial counts from one block; merging is associative and commutative
/// up to the order of `d_primes`, which is restored by sorting.
#[derive(Clone, Debug, Default)]
struct Tally {
    primes: u64,
    pd_p: u64,
    pd_pk: u64,
    d_count: u64,
    largest_d: Option<u64>,
    d_primes: Vec<u64>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.primes += other.primes;
        self.pd_p += other.pd_p;
        self.pd_pk += other.pd_pk;
        self.d_count += other.d_count;
        self.largest_d = self.largest_d.max(other.largest_d);
        self.d_primes.extend(other.d_primes);
        self
    }
}

/// [`scan_with`] under default options.
pub fn scan(poly: &IntPolynomial, k: u64, n: u64) -> Result<DensityReport> {
    scan_with(poly, k, n, ScanOptions::default())
}

/// Tests every prime `p ≤ n` for a root of `P mod p` and of `P(T^k) mod p`.
/// Blocks of `block_size` integers are sieved and tested in parallel; the
/// report does not depend on the block size.
pub fn scan_with(poly: &IntPolynomial, k: u64, n: u64, opts: ScanOptions) -> Result<DensityReport> {
    check_preconditions(poly)?;
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    if n < 2 {
        return Err(Error::InvalidArgument("N must be at least 2".into()));
    }
    if opts.block_size == 0 {
        return Err(Error::InvalidArgument("block size must be positive".into()));
    }
    let kernel = Kernel::new(poly, k, opts.method);
    let base = base_primes(n);
    let blocks: Vec<(u64, u64)> = (0..)
        .map(|i| 2 + i * opts.block_size)
        .take_while(|&lo| lo <= n)
        .map(|lo| (lo, n.saturating_add(1).min(lo + opts.block_size)))
        .collect();
    let mut tally = blocks
        .par_iter()
        .map(|&(lo, hi)| {
            let mut t = Tally::default();
            for p in segment(&base, lo, hi) {
                let out = kernel.test(p);
                assert!(
                    out.divides_p || !out.divides_pk,
                    "prime {p} divides P(T^{k}) but not P(T)"
                );
                t.primes += 1;
                t.pd_p += out.divides_p as u64;
                t.pd_pk += out.divides_pk as u64;
                if out.in_d() {
                    t.d_count += 1;
                    t.largest_d = Some(p);
                    if opts.record_d {
                        t.d_primes.push(p);
                    }
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge);
    tally.d_primes.sort_unstable();
    let ratio = |a: u64, b: u64| if b == 0 { 0.0 } else { a as f64 / b as f64 };
    Ok(DensityReport {
        n,
        k,
        method: kernel.method(),
        primes_tested: tally.primes,
        skipped: 0,
        pd_p: tally.pd_p,
        pd_pk: tally.pd_pk,
        d_count: tally.d_count,
        density_p: ratio(tally.pd_p, tally.primes),
        density_pk: ratio(tally.pd_pk, tally.primes),
        density_d: ratio(tally.d_count, tally.primes),
        f_hat: (tally.pd_p > 0).then(|| ratio(tally.pd_pk, tally.pd_p)),
        largest_d_prime: tally.largest_d,
        d_primes: opts.record_d.then_some(tally.d_primes),
    })
}

/// The outcome at each prime in `[lo, hi]`, ascending.
pub fn prime_outcomes(poly: &IntPolynomial, k: u64, lo: u64, hi: u64, method: ScanMethod) -> Vec<PrimeOutcome> {
    let kernel = Kernel::new(poly, k, method);
    sieve_primes(hi)
        .into_iter()
        .filter(|&p| p >= lo)
        .map(|p| kernel.test(p))
        .collect()
}

/// `σ = √(ρ(1-ρ)/π(N))`, the binomial standard error of a density estimate.
pub fn density_sigma(rho: f64, primes: u64) -> f64 {
    if primes == 0 {
        return 0.0;
    }
    (rho * (1.0 - rho) / primes as f64).sqrt()
}
