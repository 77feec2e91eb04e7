//! Factorization over ℚ and cyclotomic polynomials.

mod cyclotomic;
mod hensel;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{bigint_mod_u64, ceil_sqrt, next_prime};
use crate::error::{Error, Result};
use crate::ff::{factor_mod_p, ModPoly};
use crate::poly::{discriminant, rational_gcd, IntPolynomial};

pub use cyclotomic::{cyclotomic_poly, inverse_totient};
pub use hensel::hensel_lift;

/// Checks the standing hypotheses on P: monic, non-constant, `P(0) ≠ 0`,
/// `P(1) ≠ 0`, separable. The first violation found is reported.
pub fn check_preconditions(p: &IntPolynomial) -> Result<()> {
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    if p.degree() == Some(0) {
        return Err(Error::OnlyTrivial);
    }
    if p.constant_term().is_zero() {
        return Err(Error::ZeroAtZero);
    }
    if p.evaluate(&BigInt::one()).is_zero() {
        return Err(Error::ZeroAtOne);
    }
    if rational_gcd(p, &p.derivative()).degree() != Some(0) {
        return Err(Error::NotSeparable);
    }
    Ok(())
}

/// The monic irreducible factors of a monic separable polynomial over ℚ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationQ {
    factors: Vec<IntPolynomial>,
}

impl FactorizationQ {
    /// Factors sorted by degree, then coefficients.
    pub fn factors(&self) -> &[IntPolynomial] {
        &self.factors
    }

    pub fn into_factors(self) -> Vec<IntPolynomial> {
        self.factors
    }

    pub fn product(&self) -> IntPolynomial {
        self.factors.iter().cloned().product()
    }
}

/// Zassenhaus factorization: factor modulo the smallest good prime `p ≥ 3`,
/// lift past twice the Landau–Mignotte bound, then recombine.
pub fn factor_over_q(poly: &IntPolynomial) -> Result<FactorizationQ> {
    factor_over_q_with_prime(poly, None)
}

/// As [`factor_over_q`], optionally forcing the factoring prime (which must
/// not divide the discriminant).
pub fn factor_over_q_with_prime(poly: &IntPolynomial, prime: Option<u64>) -> Result<FactorizationQ> {
    if !poly.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = poly.degree().unwrap();
    if n == 0 {
        return Err(Error::OnlyTrivial);
    }
    let disc = discriminant(poly);
    if disc.is_zero() {
        return Err(Error::NotSeparable);
    }
    if n == 1 {
        return Ok(FactorizationQ {
            factors: vec![poly.clone()],
        });
    }
    let p = match prime {
        Some(p) if bigint_mod_u64(&disc, p) == 0 => return Err(Error::BadPrime(p)),
        Some(p) => p,
        None => {
            let mut p = 3;
            while bigint_mod_u64(&disc, p) == 0 {
                p = next_prime(p + 1);
            }
            p
        }
    };
    let modular: Vec<ModPoly> = factor_mod_p(&ModPoly::from_int(poly, p))
        .into_iter()
        .map(|(g, e)| {
            debug_assert_eq!(e, 1);
            g
        })
        .collect();
    if modular.len() == 1 {
        return Ok(FactorizationQ {
            factors: vec![poly.clone()],
        });
    }

    let norm = ceil_sqrt(&poly.norm_sq().to_biguint().unwrap());
    let bound = (BigUint::one() << n) * norm;
    let two_bound = BigInt::from_biguint(Sign::Plus, bound << 1u32);
    let pb = BigInt::from(p);
    let (mut e, mut modulus) = (1u32, pb.clone());
    while modulus <= two_bound {
        modulus *= &pb;
        e += 1;
    }
    let lifted = hensel_lift(poly, &modular, e)?;
    let mut factors = recombine(poly.clone(), lifted, &modulus);
    factors.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    Ok(FactorizationQ { factors })
}

/// Subset search over lifted factors, smallest subsets first.
fn recombine(mut f: IntPolynomial, mut pool: Vec<IntPolynomial>, modulus: &BigInt) -> Vec<IntPolynomial> {
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= pool.len() {
        let mut hit = None;
        for subset in Subsets::new(pool.len(), size) {
            let g: IntPolynomial = subset
                .iter()
                .map(|&i| pool[i].clone())
                .product::<IntPolynomial>()
                .reduce_symmetric(modulus);
            if let Some(q) = f.div_exact(&g) {
                hit = Some((subset, g, q));
                break;
            }
        }
        match hit {
            Some((subset, g, q)) => {
                found.push(g);
                f = q;
                for &i in subset.iter().rev() {
                    pool.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if f.degree() > Some(0) {
        found.push(f);
    }
    found
}

/// Ascending index subsets of a fixed size in lexicographic order.
struct Subsets {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Subsets {
    fn new(n: usize, k: usize) -> Self {
        Subsets {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}
