//! Prime divisors of `P(T)` that do not divide `P(T^k)`.
//!
//! For a monic separable `P ∈ ℤ[T]` with `P(0) ≠ 0` and `P(1) ≠ 0`, this crate
//! finds exponents `k` for which infinitely many primes divide `P(T)` but not
//! `P(T^k)`, backs each one with checkable evidence, and measures the set of
//! such primes empirically with a parallel sieve.

pub mod arith;
pub mod certify;
pub mod classify;
pub mod constants;
pub mod error;
pub mod factor;
pub mod ff;
pub mod poly;
mod ser;
pub mod verify;

pub use certify::{
    certify_exponent, certify_non_kth_power, predict_failures, suggest_k, FailurePrediction,
    KCertificate, PowerWitness, Route, SuggestOptions,
};
pub use classify::{classify_roots, ClassificationReport, RootClass, RootKind};
pub use constants::{ConstantsReport, NewtonPolygonSegment};
pub use error::{Error, Result};
pub use factor::{check_preconditions, factor_over_q, FactorizationQ};
pub use ff::{ExtField, ExtFieldElement, ModPoly};
pub use poly::{IntPolynomial, RationalPolynomial};
pub use verify::{scan, scan_with, DensityReport, ScanMethod, ScanOptions};

/// Seed for every randomized step unless the caller supplies one.
pub const DEFAULT_SEED: u64 = 0x5052_494d_4544_4956;
