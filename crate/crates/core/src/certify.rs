//! Exponents `k` with evidence that infinitely many primes divide `P(T)` but
//! not `P(T^k)`, and the exponents for which that provably fails.
//!
//! Roots that are units of infinite order need `T^k - t` irreducible; that is
//! certified by a power witness: a prime `p` and a root image in the residue
//! field `𝔽_{p^f}` that is not a k-th power there. If `t` were `x^k` in the
//! splitting field, every reduction of it would be a k-th power.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::Serialize;

use crate::arith::{bigint_mod_u64, checked_lcm, gcd, is_prime_u64, next_prime, pow_mod, prime_factors};
use crate::classify::{classify_roots, ClassificationReport, RootClass, RootKind};
use crate::constants::{f2_bound_and_a0p0, ConstantsReport};
use crate::error::{Error, Result};
use crate::factor::check_preconditions;
use crate::ff::{
    embed_with_cache, kth_power_residue, residue_field_degree_with_disc, splitting_degree,
    ExtField, FieldCache, ModPoly,
};
use crate::poly::{discriminant, IntPolynomial};
use crate::ser;
use crate::verify::sieve_primes;
use crate::DEFAULT_SEED;

/// Which argument backs a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Route {
    /// Every root is a root of unity.
    Theorem1,
    /// No root is a root of unity.
    Theorem2,
    /// Both kinds of roots occur.
    Theorem3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    NonResidue,
}

/// A prime `p` and a root of the class polynomial in `𝔽_{p^f}` (the residue
/// field of the splitting field at `p`) that is not a k-th power.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerWitness {
    pub class_polynomial: IntPolynomial,
    pub k: u64,
    pub p: u64,
    pub f: usize,
    /// Defining polynomial of `𝔽_{p^f}` over `𝔽_p`, ascending.
    pub field_modulus: Vec<u64>,
    /// The root image as a polynomial in the generator, ascending.
    pub image: Vec<u64>,
    pub verdict: Verdict,
}

impl PowerWitness {
    /// Recomputes every fact the witness rests on.
    pub fn replay(&self, poly: &IntPolynomial) -> bool {
        self.try_replay(poly).unwrap_or(false)
    }

    fn try_replay(&self, poly: &IntPolynomial) -> Result<bool> {
        let (p, k) = (self.p, self.k);
        if !is_prime_u64(p) || !is_prime_u64(k) || p == k {
            return Ok(false);
        }
        if poly.div_exact(&self.class_polynomial).is_none() {
            return Ok(false);
        }
        if residue_field_degree_with_disc(poly, p, &discriminant(poly))? != self.f {
            return Ok(false);
        }
        if pow_mod(p % k, self.f as u64, k) != 1 {
            return Ok(false);
        }
        let field = ExtField::new(ModPoly::new(p, self.field_modulus.clone()))?;
        if field.degree() != self.f {
            return Ok(false);
        }
        let x = field.element(ModPoly::new(p, self.image.clone()));
        if x.is_zero() || !x.eval_int(&self.class_polynomial).is_zero() {
            return Ok(false);
        }
        Ok(!kth_power_residue(&x, k)?)
    }
}

/// Witness search over the primes up to a limit for one polynomial P.
/// Residue degrees and extension fields are computed once and reused
/// across classes and exponents.
pub struct WitnessSearch<'a> {
    poly: &'a IntPolynomial,
    disc: BigInt,
    primes: Vec<u64>,
    /// Residue degree per prime, filled on demand; 0 marks `p | disc`.
    degrees: Vec<usize>,
    cache: FieldCache,
}

impl<'a> WitnessSearch<'a> {
    pub fn new(poly: &'a IntPolynomial, limit: u64, seed: u64) -> Self {
        WitnessSearch {
            poly,
            disc: discriminant(poly),
            primes: sieve_primes(limit),
            degrees: Vec::new(),
            cache: FieldCache::new(seed),
        }
    }

    fn degree(&mut self, i: usize) -> usize {
        while self.degrees.len() <= i {
            let p = self.primes[self.degrees.len()];
            let f = if bigint_mod_u64(&self.disc, p) == 0 {
                0
            } else {
                splitting_degree(&ModPoly::from_int(self.poly, p))
            };
            self.degrees.push(f);
        }
        self.degrees[i]
    }

    /// The first witness for `class_poly` and the prime `k`, taking the
    /// candidate primes `p ∤ k·disc(P)` in order of the residue field size
    /// `p^f`, so small fields are tried first.
    pub fn find(&mut self, class_poly: &IntPolynomial, k: u64) -> Option<PowerWitness> {
        let mut heap: BinaryHeap<Reverse<(BigUint, u64, usize)>> = BinaryHeap::new();
        for i in 0..self.primes.len() {
            let p = self.primes[i];
            while let Some(Reverse((q, _, _))) = heap.peek() {
                if *q > BigUint::from(p) {
                    break;
                }
                let Reverse((_, wp, wf)) = heap.pop().unwrap();
                if let Some(w) = self.test(class_poly, k, wp, wf) {
                    return Some(w);
                }
            }
            if p == k {
                continue;
            }
            let f = self.degree(i);
            if f == 0 || pow_mod(p % k, f as u64, k) != 1 {
                continue;
            }
            heap.push(Reverse((BigUint::from(p).pow(f as u32), p, f)));
        }
        while let Some(Reverse((_, p, f))) = heap.pop() {
            if let Some(w) = self.test(class_poly, k, p, f) {
                return Some(w);
            }
        }
        None
    }

    fn test(&self, class_poly: &IntPolynomial, k: u64, p: u64, f: usize) -> Option<PowerWitness> {
        let roots = embed_with_cache(class_poly, p, f, &self.cache).ok()?;
        let x = roots
            .into_iter()
            .find(|x| !x.is_zero() && kth_power_residue(x, k) == Ok(false))?;
        Some(PowerWitness {
            class_polynomial: class_poly.clone(),
            k,
            p,
            f,
            field_modulus: x.field().modulus().coeffs().to_vec(),
            image: x.value().coeffs().to_vec(),
            verdict: Verdict::NonResidue,
        })
    }
}

/// Looks for a prime `p ≤ search_limit` at which some root of the class is
/// not a k-th power in the residue field. `None` is inconclusive.
pub fn certify_non_kth_power(
    class: &RootClass,
    k: u64,
    poly: &IntPolynomial,
    search_limit: u64,
) -> Result<Option<PowerWitness>> {
    if !is_prime_u64(k) {
        return Err(Error::InvalidArgument(format!("k = {k} is not prime")));
    }
    if class.kind == RootKind::RootOfUnity {
        return Err(Error::InvalidArgument(
            "roots of unity are k-th powers of roots of unity".into(),
        ));
    }
    if poly.div_exact(&class.minimal_polynomial).is_none() {
        return Err(Error::InvalidArgument("class polynomial does not divide P".into()));
    }
    Ok(WitnessSearch::new(poly, search_limit, DEFAULT_SEED).find(&class.minimal_polynomial, k))
}

/// The constants a certificate relies on.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CertificateConstants {
    pub k0: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<u64>,
    #[serde(rename = "A0", skip_serializing_if = "Option::is_none")]
    pub a0: Option<u32>,
    #[serde(rename = "V", skip_serializing_if = "Option::is_none")]
    pub v: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p0: Option<u64>,
    #[serde(rename = "A0_p0", skip_serializing_if = "Option::is_none")]
    pub a0_p0: Option<u32>,
    #[serde(serialize_with = "ser::display_opt", skip_serializing_if = "Option::is_none")]
    pub f2_ub: Option<BigRational>,
    /// The primes `p_j` chosen from the root-of-unity orders.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub primes: Vec<u64>,
}

/// A candidate `k` and its evidence. It certifies condition (*/k) exactly
/// when `caveats` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KCertificate {
    pub k: u64,
    pub route: Route,
    /// The certified divisor of `k` when `k` itself is a proper multiple;
    /// primes missing `P(T^base_k)` also miss `P(T^k)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_k: Option<u64>,
    pub constants_used: CertificateConstants,
    pub power_witnesses: Vec<PowerWitness>,
    pub caveats: Vec<String>,
}

impl KCertificate {
    pub fn is_certified(&self) -> bool {
        self.caveats.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuggestOptions {
    /// Number of certified exponents wanted.
    pub count: usize,
    /// Largest prime tried as a power witness.
    pub witness_limit: u64,
    /// Largest number of prime candidates (k or p0) examined.
    pub max_candidates: usize,
    pub seed: u64,
}

impl Default for SuggestOptions {
    fn default() -> Self {
        SuggestOptions {
            count: 3,
            witness_limit: 1_000_000,
            max_candidates: 32,
            seed: DEFAULT_SEED,
        }
    }
}

struct Analysis<'a> {
    poly: &'a IntPolynomial,
    report: ClassificationReport,
    constants: ConstantsReport,
}

impl<'a> Analysis<'a> {
    fn new(poly: &'a IntPolynomial) -> Result<Self> {
        check_preconditions(poly)?;
        let report = classify_roots(poly)?;
        let constants = ConstantsReport::compute(poly, &report)?;
        Ok(Analysis {
            poly,
            report,
            constants,
        })
    }

    fn base_constants(&self) -> CertificateConstants {
        CertificateConstants {
            k0: self.constants.k0,
            c: self.constants.c,
            a0: self.constants.a0,
            v: self.constants.v_upper_bound,
            ..Default::default()
        }
    }

    fn c(&self) -> u64 {
        self.constants.c.expect("c exists when some root is not a root of unity")
    }

    /// Sets of primes meeting the prime set of every root order: choosing one
    /// prime per root gives exactly these (a class of order `n` has `φ(n)`
    /// roots, at least as many as the primes dividing `n`).
    fn prime_tuples(&self) -> Result<Vec<Vec<u64>>> {
        let s = &self.report.s_union;
        if s.len() > 16 {
            return Err(Error::LimitExceeded(format!("{} primes in the root orders", s.len())));
        }
        let class_primes: Vec<Vec<u64>> = self
            .report
            .classes_of(RootKind::RootOfUnity)
            .map(RootClass::order_primes)
            .collect();
        Ok((1u32..1 << s.len())
            .map(|mask| {
                s.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &q)| q)
                    .collect::<Vec<u64>>()
            })
            .filter(|set| class_primes.iter().all(|ps| ps.iter().any(|q| set.contains(q))))
            .collect())
    }

    fn non_torsion(&self, kind: RootKind) -> Vec<&RootClass> {
        self.report.classes_of(kind).collect()
    }

    /// Witnesses for each unit class at the prime `k`, with a caveat per
    /// class left uncovered. Below `c`, non-unit classes need witnesses too.
    fn witnesses(&self, search: &mut WitnessSearch, k: u64, limit: u64) -> (Vec<PowerWitness>, Vec<String>) {
        let mut classes = self.non_torsion(RootKind::UnitNotRootOfUnity);
        let mut caveats = Vec::new();
        if k < self.c() {
            caveats.push(format!("k = {k} is below c = {}", self.c()));
            classes.extend(self.non_torsion(RootKind::NonUnit));
        }
        let mut found = Vec::new();
        for class in classes {
            match search.find(&class.minimal_polynomial, k) {
                Some(w) => found.push(w),
                None => caveats.push(format!(
                    "no power witness p <= {limit} for {} with k = {k}",
                    class.minimal_polynomial
                )),
            }
        }
        (found, caveats)
    }
}

fn prime_power_product(primes: &[u64], exponent: u32) -> Option<u64> {
    primes.iter().try_fold(1u64, |acc, &q| {
        q.checked_pow(exponent).and_then(|x| checked_lcm(acc, x))
    })
}

fn overflow() -> Error {
    Error::LimitExceeded("exponent exceeds 64 bits".into())
}

/// Candidate exponents with certificates, smallest first.
pub fn suggest_k(poly: &IntPolynomial, opts: &SuggestOptions) -> Result<Vec<KCertificate>> {
    let an = Analysis::new(poly)?;
    let r = &an.report;
    let mut out = match (r.r1 > 0, r.r2 + r.r3 > 0) {
        (true, false) => torsion_route(&an)?,
        (false, true) => free_route(&an, opts),
        (true, true) => mixed_route(&an, opts)?,
        (false, false) => return Err(Error::OnlyTrivial),
    };
    out.sort_by_key(|c| (!c.is_certified(), c.k));
    let mut certified = 0;
    out.retain(|c| {
        if c.is_certified() {
            certified += 1;
            certified <= opts.count
        } else {
            true
        }
    });
    out.sort_by_key(|c| c.k);
    Ok(out)
}

fn torsion_route(an: &Analysis) -> Result<Vec<KCertificate>> {
    let a0 = an.constants.a0.expect("A0 exists when roots of unity occur");
    an.prime_tuples()?
        .into_iter()
        .map(|primes| {
            let k = prime_power_product(&primes, a0).ok_or_else(overflow)?;
            Ok(KCertificate {
                k,
                route: Route::Theorem1,
                base_k: None,
                constants_used: CertificateConstants {
                    primes,
                    ..an.base_constants()
                },
                power_witnesses: Vec::new(),
                caveats: Vec::new(),
            })
        })
        .collect()
}

fn free_candidate(an: &Analysis, search: &mut WitnessSearch, k: u64, limit: u64) -> KCertificate {
    let (power_witnesses, caveats) = an.witnesses(search, k, limit);
    KCertificate {
        k,
        route: Route::Theorem2,
        base_k: None,
        constants_used: an.base_constants(),
        power_witnesses,
        caveats,
    }
}

fn free_route(an: &Analysis, opts: &SuggestOptions) -> Vec<KCertificate> {
    let mut search = WitnessSearch::new(an.poly, opts.witness_limit, opts.seed);
    let mut out = Vec::new();
    let mut k = next_prime(an.c() - 1);
    let mut certified = 0;
    for _ in 0..opts.max_candidates {
        let cert = free_candidate(an, &mut search, k, opts.witness_limit);
        certified += cert.is_certified() as usize;
        out.push(cert);
        if certified >= opts.count {
            break;
        }
        k = next_prime(k + 1);
    }
    out
}

/// Certificates for one `p0`, one per prime tuple, or the caveats when the
/// unit classes are not all certified at `p0`.
fn mixed_for_p0(
    an: &Analysis,
    search: &mut WitnessSearch,
    p0: u64,
    limit: u64,
) -> Result<std::result::Result<Vec<KCertificate>, Vec<String>>> {
    let (witnesses, caveats) = an.witnesses(search, p0, limit);
    if !caveats.is_empty() {
        return Ok(Err(caveats));
    }
    let bound = f2_bound_and_a0p0(&an.report, p0, an.c())?;
    an.prime_tuples()?
        .into_iter()
        .map(|primes| {
            let k = prime_power_product(&primes, bound.a0_p0)
                .and_then(|x| checked_lcm(x, p0))
                .ok_or_else(overflow)?;
            Ok(KCertificate {
                k,
                route: Route::Theorem3,
                base_k: None,
                constants_used: CertificateConstants {
                    p0: Some(p0),
                    a0_p0: Some(bound.a0_p0),
                    f2_ub: Some(bound.f2_ub.clone()),
                    primes,
                    ..an.base_constants()
                },
                power_witnesses: witnesses.clone(),
                caveats: Vec::new(),
            })
        })
        .collect::<Result<Vec<_>>>()
        .map(Ok)
}

fn mixed_route(an: &Analysis, opts: &SuggestOptions) -> Result<Vec<KCertificate>> {
    let mut search = WitnessSearch::new(an.poly, opts.witness_limit, opts.seed);
    let first = next_prime(an.c() - 1);
    let mut p0 = first;
    let mut out = Vec::new();
    for _ in 0..opts.max_candidates {
        if let Ok(certs) = mixed_for_p0(an, &mut search, p0, opts.witness_limit)? {
            out.extend(certs);
            if out.len() >= opts.count {
                return Ok(out);
            }
        }
        p0 = next_prime(p0 + 1);
    }
    if out.is_empty() {
        return Err(Error::CertificateMissing { p0: first });
    }
    Ok(out)
}

/// Evidence for a given `k`. When `k` is not itself of a theorem's form but
/// has a certified divisor `b`, the certificate records `base_k = b`: a
/// prime missing `P(T^b)` also misses `P(T^k)`, because a root `x` of
/// `P(T^k)` gives the root `x^{k/b}` of `P(T^b)`.
pub fn certify_exponent(poly: &IntPolynomial, k: u64, opts: &SuggestOptions) -> Result<KCertificate> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let an = Analysis::new(poly)?;
    let failures = predict_failures(poly)?;
    let r = &an.report;
    let mut cert = match (r.r1 > 0, r.r2 + r.r3 > 0) {
        (true, false) => exponent_torsion(&an, k)?,
        (false, true) => exponent_free(&an, k, opts),
        _ => exponent_mixed(&an, k, opts)?,
    };
    for rule in &failures.rules {
        if gcd(k, rule.modulus) == 1 {
            cert.caveats.push(format!(
                "k is coprime to {}: {}; the condition fails",
                rule.modulus, rule.reason
            ));
        }
    }
    Ok(cert)
}

fn exponent_torsion(an: &Analysis, k: u64) -> Result<KCertificate> {
    let a0 = an.constants.a0.unwrap();
    let best = an
        .prime_tuples()?
        .into_iter()
        .filter_map(|ps| prime_power_product(&ps, a0).map(|b| (b, ps)))
        .filter(|(b, _)| k % b == 0)
        .min();
    let mut cert = KCertificate {
        k,
        route: Route::Theorem1,
        base_k: None,
        constants_used: an.base_constants(),
        power_witnesses: Vec::new(),
        caveats: Vec::new(),
    };
    match best {
        Some((b, primes)) => {
            cert.base_k = (b != k).then_some(b);
            cert.constants_used.primes = primes;
        }
        None => cert.caveats.push(format!(
            "k is not divisible by p^{a0} for a prime p of every root order"
        )),
    }
    Ok(cert)
}

fn exponent_free(an: &Analysis, k: u64, opts: &SuggestOptions) -> KCertificate {
    let mut search = WitnessSearch::new(an.poly, opts.witness_limit, opts.seed);
    let mut first = None;
    for ell in prime_factors(k) {
        let mut cert = free_candidate(an, &mut search, ell, opts.witness_limit);
        if cert.is_certified() {
            cert.base_k = (ell != k).then_some(ell);
            cert.k = k;
            return cert;
        }
        first.get_or_insert(cert);
    }
    match first {
        Some(mut cert) => {
            if cert.k != k {
                cert.base_k = Some(cert.k);
                cert.k = k;
            }
            cert
        }
        None => KCertificate {
            k,
            route: Route::Theorem2,
            base_k: None,
            constants_used: an.base_constants(),
            power_witnesses: Vec::new(),
            caveats: vec!["k = 1 never separates P(T) from P(T^k)".into()],
        },
    }
}

fn exponent_mixed(an: &Analysis, k: u64, opts: &SuggestOptions) -> Result<KCertificate> {
    let mut search = WitnessSearch::new(an.poly, opts.witness_limit, opts.seed);
    let mut caveats = Vec::new();
    for p0 in prime_factors(k).into_iter().filter(|&p| p >= an.c()) {
        match mixed_for_p0(an, &mut search, p0, opts.witness_limit)? {
            Ok(certs) => {
                if let Some(mut cert) = certs.into_iter().filter(|c| k % c.k == 0).min_by_key(|c| c.k) {
                    cert.base_k = (cert.k != k).then_some(cert.k);
                    cert.k = k;
                    return Ok(cert);
                }
                caveats.push(format!(
                    "p0 = {p0} is certified but k is not a multiple of any lcm(p0, p_j^A0(p0))"
                ));
            }
            Err(c) => caveats.extend(c),
        }
    }
    if caveats.is_empty() {
        caveats.push(format!("k has no prime factor p0 >= c = {}", an.c()));
    }
    Ok(KCertificate {
        k,
        route: Route::Theorem3,
        base_k: None,
        constants_used: an.base_constants(),
        power_witnesses: Vec::new(),
        caveats,
    })
}

/// The condition provably fails for every `k` coprime to `modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailureRule {
    pub modulus: u64,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FailurePrediction {
    pub rules: Vec<FailureRule>,
}

impl FailurePrediction {
    pub fn fails_for(&self, k: u64) -> bool {
        self.rules.iter().any(|r| gcd(k, r.modulus) == 1)
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }
}

/// The two situations in which the failure set is known without Galois
/// data: all roots are roots of unity (fails for `k` coprime to the lcm of
/// the orders), or P has the rational root `-1` (fails for odd `k`, since
/// `-1 = (-1)^k` is then a root of `P(T^k)` modulo every prime).
pub fn predict_failures(poly: &IntPolynomial) -> Result<FailurePrediction> {
    check_preconditions(poly)?;
    let report = classify_roots(poly)?;
    let mut rules = Vec::new();
    if report.r2 + report.r3 == 0 {
        let m = report
            .orders()
            .into_iter()
            .try_fold(1u64, checked_lcm)
            .ok_or_else(overflow)?;
        rules.push(FailureRule {
            modulus: m,
            reason: "every root is a root of unity".into(),
        });
    }
    for class in report.classes_of(RootKind::RootOfUnity) {
        if class.count == 1 {
            let n = class.order.unwrap();
            if !rules.iter().any(|r| r.modulus == n) {
                rules.push(FailureRule {
                    modulus: n,
                    reason: format!("P has the rational root of unity of order {n}"),
                });
            }
        }
    }
    Ok(FailurePrediction { rules })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    fn class_of(poly: &IntPolynomial, m: &IntPolynomial) -> RootClass {
        classify_roots(poly)
            .unwrap()
            .classes
            .into_iter()
            .find(|c| &c.minimal_polynomial == m)
            .unwrap()
    }

    #[test]
    fn witness_examples() {
        let p = ip(&[1, -3, 1]);
        let w = certify_non_kth_power(&class_of(&p, &p), 7, &p, 100).unwrap().unwrap();
        assert_eq!((w.p, w.f), (29, 1));
        assert_eq!(w.image, vec![7]);
        assert!(w.replay(&p));

        let p = ip(&[-2, -1, 1]);
        let w = certify_non_kth_power(&class_of(&p, &ip(&[-2, 1])), 2, &p, 20).unwrap().unwrap();
        assert_eq!(w.p, 5);
        assert!(w.replay(&p));

        let p = ip(&[-4, 1]);
        assert_eq!(certify_non_kth_power(&class_of(&p, &p), 2, &p, 2000).unwrap(), None);
    }

    #[test]
    fn tampered_witness_fails_replay() {
        let p = ip(&[1, -3, 1]);
        let mut w = certify_non_kth_power(&class_of(&p, &p), 7, &p, 100).unwrap().unwrap();
        w.image = vec![8];
        assert!(!w.replay(&p));
    }

    #[test]
    fn suggest_examples() {
        let opts = SuggestOptions {
            count: 1,
            ..Default::default()
        };
        let c = suggest_k(&ip(&[1, 1]), &opts).unwrap();
        assert_eq!((c[0].k, c[0].route, c[0].constants_used.a0), (2, Route::Theorem1, Some(1)));
        let c = suggest_k(&ip(&[-2, 1]), &opts).unwrap();
        assert_eq!((c[0].k, c[0].route), (2, Route::Theorem2));
        let c = suggest_k(&ip(&[-2, -1, 1]), &opts).unwrap();
        assert_eq!((c[0].k, c[0].route), (4, Route::Theorem3));
        assert_eq!(c[0].constants_used.p0, Some(2));
        assert_eq!(c[0].constants_used.a0_p0, Some(2));
    }

    #[test]
    fn cyclotomic_tuples() {
        let ks: Vec<u64> = suggest_k(&ip(&[1, 0, -1, 0, 1]), &SuggestOptions::default())
            .unwrap()
            .iter()
            .map(|c| c.k)
            .collect();
        assert_eq!(ks, vec![32, 243, 7776]);
    }

    #[test]
    fn square_is_not_certified() {
        let c = certify_exponent(&ip(&[-4, 1]), 2, &SuggestOptions::default()).unwrap();
        assert!(!c.is_certified());
        assert!(c.power_witnesses.is_empty());
    }

    #[test]
    fn failure_predictions() {
        let f = predict_failures(&(ip(&[1, 1]) * ip(&[1, 1, 1]))).unwrap();
        assert!(f.fails_for(3) && f.fails_for(5) && !f.fails_for(2) && !f.fails_for(6));
        assert_eq!(f.rules[0].modulus, 6);
        let f = predict_failures(&ip(&[-2, -1, 1])).unwrap();
        assert!(f.fails_for(3) && !f.fails_for(4));
        assert!(predict_failures(&ip(&[-2, 1])).unwrap().is_empty());
    }
}
