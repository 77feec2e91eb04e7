//! Arithmetic over 𝔽_p and 𝔽_{p^f}.

mod ext;
mod factor;
mod modpoly;

pub use ext::{
    embed_in_residue_field, embed_with_cache, kth_power_residue, roots_in_field, ExtField,
    ExtFieldElement, FieldCache,
};
pub use factor::{
    berlekamp, count_roots_mod_p, distinct_degree_factorization, equal_degree_factorization,
    factor_mod_p, factor_mod_p_seeded, has_root_mod_p, is_irreducible, roots_mod_p,
    squarefree_decomposition,
};
pub use modpoly::ModPoly;

pub(crate) use factor::splitting_degree;

use crate::arith::bigint_mod_u64;
use crate::error::{Error, Result};
use crate::poly::{discriminant, IntPolynomial};

/// Coefficientwise reduction of `f` modulo `p`.
pub fn reduce_mod_p(f: &IntPolynomial, p: u64) -> ModPoly {
    ModPoly::from_int(f, p)
}

/// Degree of the residue field of the splitting field of `P` at `p`: the lcm
/// of the degrees of the irreducible factors of `P mod p`.
pub fn residue_field_degree(poly: &IntPolynomial, p: u64) -> Result<usize> {
    residue_field_degree_with_disc(poly, p, &discriminant(poly))
}

/// As [`residue_field_degree`] with a precomputed discriminant.
pub fn residue_field_degree_with_disc(
    poly: &IntPolynomial,
    p: u64,
    disc: &num_bigint::BigInt,
) -> Result<usize> {
    if !crate::arith::is_prime_u64(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if bigint_mod_u64(disc, p) == 0 {
        return Err(Error::BadPrime(p));
    }
    Ok(splitting_degree(&reduce_mod_p(poly, p)))
}
