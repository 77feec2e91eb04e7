//! Per-prime tests: does `P mod p`, and does `P(T^k) mod p`, have a root?

use crate::arith::{gcd, pow_mod};
use crate::ff::{roots_mod_p, ModPoly};
use crate::poly::IntPolynomial;

/// How `P(T^k)` is tested at each prime.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, serde::Serialize)]
pub enum ScanMethod {
    /// `gcd(T^p - T, P(T^k) mod p)`, exponentiating modulo `P(T^k)`.
    Direct,
    /// Roots `a` of `P mod p`, then whether some `a` is a k-th power.
    RootPower,
    /// `Direct` while `k · deg P` is small, `RootPower` beyond.
    #[default]
    Auto,
}

/// Largest `k · deg P` for which `Auto` picks `Direct`.
pub const AUTO_DIRECT_MAX_DEGREE: usize = 64;

impl ScanMethod {
    pub fn resolve(self, degree: usize, k: u64) -> ScanMethod {
        match self {
            ScanMethod::Auto if (k as u128) * (degree as u128) <= AUTO_DIRECT_MAX_DEGREE as u128 => {
                ScanMethod::Direct
            }
            ScanMethod::Auto => ScanMethod::RootPower,
            m => m,
        }
    }
}

/// Outcome at one prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeOutcome {
    pub p: u64,
    pub divides_p: bool,
    pub divides_pk: bool,
}

impl PrimeOutcome {
    /// `p` divides `P(T)` but not `P(T^k)`.
    pub fn in_d(&self) -> bool {
        self.divides_p && !self.divides_pk
    }
}

/// Precomputed data for testing many primes against one `(P, k)`.
#[derive(Clone, Debug)]
pub struct Kernel {
    poly: IntPolynomial,
    k: u64,
    method: ScanMethod,
}

impl Kernel {
    pub fn new(poly: &IntPolynomial, k: u64, method: ScanMethod) -> Self {
        assert!(k >= 1, "k must be positive");
        let degree = poly.degree().expect("zero polynomial");
        Kernel {
            poly: poly.clone(),
            k,
            method: method.resolve(degree, k),
        }
    }

    pub fn method(&self) -> ScanMethod {
        self.method
    }

    pub fn test(&self, p: u64) -> PrimeOutcome {
        let base = reduce(&self.poly, p);
        let divides_p = has_root_sparse(&base, 1, p);
        let divides_pk = match self.method {
            ScanMethod::Direct => has_root_sparse(&base, self.k, p),
            _ => has_root_via_roots(&base, self.k, p),
        };
        PrimeOutcome {
            p,
            divides_p,
            divides_pk,
        }
    }
}

fn reduce(poly: &IntPolynomial, p: u64) -> Vec<u64> {
    ModPoly::from_int(poly, p).coeffs().to_vec()
}

/// Whether `Q(T) = base(T^k)` has a root mod `p`; `base` is monic mod `p`.
pub(crate) fn has_root_sparse(base: &[u64], k: u64, p: u64) -> bool {
    let d = base.len() - 1;
    if d == 0 {
        return false;
    }
    if base[0] == 0 {
        return true;
    }
    let k = k as usize;
    let big_d = d * k;
    if big_d == 1 {
        return true;
    }
    if p <= 3 {
        return (0..p).any(|x| eval_sparse(base, k, x, p) == 0);
    }
    let xp = x_pow_p(base, k, p);
    // gcd(T^p - T, Q)
    let mut h = xp;
    if h.len() < 2 {
        h.resize(2, 0);
    }
    h[1] = (h[1] + p - 1) % p;
    let h = ModPoly::new(p, h);
    let q = ModPoly::new(p, expand(base, k));
    h.gcd(&q).degree() > Some(0)
}

fn eval_sparse(base: &[u64], k: usize, x: u64, p: u64) -> u64 {
    let xk = pow_mod(x, k as u64, p);
    base.iter()
        .rev()
        .fold(0u64, |acc, &c| ((acc as u128 * xk as u128 + c as u128) % p as u128) as u64)
}

fn expand(base: &[u64], k: usize) -> Vec<u64> {
    let mut out = vec![0u64; (base.len() - 1) * k + 1];
    for (i, &c) in base.iter().enumerate() {
        out[i * k] = c;
    }
    out
}

/// `T^p mod base(T^k)` as a dense residue vector of length `d·k`.
fn x_pow_p(base: &[u64], k: usize, p: u64) -> Vec<u64> {
    let d = base.len() - 1;
    let big_d = d * k;
    // negated low coefficients of the monic modulus, at their exponents
    let taps: Vec<(usize, u64)> = base[..d]
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i * k, p - c))
        .collect();
    let lazy = lazy_ok(big_d, taps.len(), p);
    // start from T, which accounts for the leading bit of p
    let mut r = vec![0u64; big_d];
    r[1] = 1;
    let mut scratch = vec![0u64; 2 * big_d];
    for bit in (0..64 - p.leading_zeros()).rev().skip(1) {
        square_reduce(&mut r, &mut scratch, &taps, p, lazy);
        if (p >> bit) & 1 == 1 {
            shift_reduce(&mut r, &taps, p);
        }
    }
    r
}

/// Every intermediate sum in the lazy path is below `(2D + D·t) p²`.
fn lazy_ok(big_d: usize, taps: usize, p: u64) -> bool {
    let pp = (p as u128) * (p as u128);
    let terms = (2 * big_d + big_d * taps) as u128;
    pp.checked_mul(terms).is_some_and(|x| x < u64::MAX as u128)
}

fn square_reduce(r: &mut [u64], scratch: &mut [u64], taps: &[(usize, u64)], p: u64, lazy: bool) {
    let n = r.len();
    let acc = &mut scratch[..2 * n - 1];
    acc.fill(0);
    if lazy {
        for i in 0..n {
            let a = r[i];
            if a == 0 {
                continue;
            }
            for j in 0..n {
                acc[i + j] += a * r[j];
            }
        }
        for top in (n..2 * n - 1).rev() {
            let c = acc[top] % p;
            acc[top] = 0;
            if c == 0 {
                continue;
            }
            for &(e, t) in taps {
                acc[top - n + e] += c * t;
            }
        }
        for i in 0..n {
            r[i] = acc[i] % p;
        }
    } else {
        let pp = p as u128;
        for i in 0..n {
            for j in 0..n {
                acc[i + j] = ((acc[i + j] as u128 + r[i] as u128 * r[j] as u128) % pp) as u64;
            }
        }
        for top in (n..2 * n - 1).rev() {
            let c = acc[top];
            acc[top] = 0;
            for &(e, t) in taps {
                let x = &mut acc[top - n + e];
                *x = ((*x as u128 + c as u128 * t as u128) % pp) as u64;
            }
        }
        r.copy_from_slice(&acc[..n]);
    }
}

fn shift_reduce(r: &mut [u64], taps: &[(usize, u64)], p: u64) {
    let n = r.len();
    let c = r[n - 1];
    r.copy_within(0..n - 1, 1);
    r[0] = 0;
    if c != 0 {
        for &(e, t) in taps {
            r[e] = ((r[e] as u128 + c as u128 * t as u128) % p as u128) as u64;
        }
    }
}

/// `base(T^k)` has a root mod `p` iff some root `a` of `base` is a k-th power.
pub(crate) fn has_root_via_roots(base: &[u64], k: u64, p: u64) -> bool {
    if base.len() < 2 {
        return false;
    }
    if base[0] == 0 {
        return true;
    }
    let e = (p - 1) / gcd(k, p - 1);
    roots_mod_p(&ModPoly::new(p, base.to_vec()))
        .into_iter()
        .any(|a| pow_mod(a, e, p) == 1)
}
