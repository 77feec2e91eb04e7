//! Extension fields 𝔽_{p^f} = 𝔽_p[x]/(g) and polynomials over them.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;
use num_traits::Zero;
use rand::Rng;

use super::factor::{distinct_degree_factorization, is_irreducible, rng_for};
use super::ModPoly;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// The field 𝔽_p[x]/(g) for a monic irreducible `g` of degree `f`.
#[derive(Debug, PartialEq, Eq)]
pub struct ExtField {
    modulus: ModPoly,
    order: BigUint,
}

impl ExtField {
    /// Wraps a defining polynomial, checking that it is irreducible.
    pub fn new(modulus: ModPoly) -> Result<Arc<Self>> {
        if !is_irreducible(&modulus) {
            return Err(Error::InvalidArgument(format!(
                "defining polynomial {modulus:?} is not irreducible"
            )));
        }
        let modulus = modulus.monic();
        let order = BigUint::from(modulus.modulus()).pow(modulus.degree().unwrap() as u32);
        Ok(Arc::new(ExtField { modulus, order }))
    }

    /// Builds 𝔽_{p^f} from the first irreducible among random monic
    /// polynomials of degree `f`.
    pub fn random<R: Rng>(p: u64, f: usize, rng: &mut R) -> Arc<Self> {
        assert!(f >= 1, "extension degree must be positive");
        if f == 1 {
            return Self::new(ModPoly::x(p)).unwrap();
        }
        loop {
            let mut c: Vec<u64> = (0..f).map(|_| rng.gen_range(0..p)).collect();
            c.push(1);
            let g = ModPoly::new(p, c);
            if is_irreducible(&g) {
                return Self::new(g).unwrap();
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.modulus.modulus()
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    /// The field size q = p^f.
    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn modulus(&self) -> &ModPoly {
        &self.modulus
    }

    pub fn element(self: &Arc<Self>, value: ModPoly) -> ExtFieldElement {
        assert_eq!(value.modulus(), self.characteristic(), "characteristic mismatch");
        ExtFieldElement {
            value: value.rem(&self.modulus),
            field: Arc::clone(self),
        }
    }

    pub fn from_base(self: &Arc<Self>, c: u64) -> ExtFieldElement {
        self.element(ModPoly::constant(self.characteristic(), c))
    }

    fn zero(&self) -> ModPoly {
        ModPoly::zero(self.characteristic())
    }

    fn one(&self) -> ModPoly {
        ModPoly::one(self.characteristic())
    }

    fn mul(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        a.mul_mod(b, &self.modulus)
    }

    fn inv(&self, a: &ModPoly) -> ModPoly {
        let (g, s, _) = a.ext_gcd(&self.modulus);
        assert!(g.is_one(), "inverse of zero in extension field");
        s.rem(&self.modulus)
    }

    fn pow(&self, a: &ModPoly, e: &BigUint) -> ModPoly {
        a.pow_mod_big(e, &self.modulus)
    }

    fn random_element<R: Rng>(&self, rng: &mut R) -> ModPoly {
        let p = self.characteristic();
        ModPoly::new(p, (0..self.degree()).map(|_| rng.gen_range(0..p)).collect())
    }
}

/// An element of an [`ExtField`], stored as a polynomial of degree < f.
#[derive(Clone)]
pub struct ExtFieldElement {
    field: Arc<ExtField>,
    value: ModPoly,
}

impl fmt::Debug for ExtFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?} in F_{}^{}",
            self.value.coeffs(),
            self.field.characteristic(),
            self.field.degree()
        )
    }
}

impl PartialEq for ExtFieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.modulus == other.field.modulus && self.value == other.value
    }
}

impl Eq for ExtFieldElement {}

impl ExtFieldElement {
    pub fn field(&self) -> &Arc<ExtField> {
        &self.field
    }

    pub fn value(&self) -> &ModPoly {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    pub fn mul(&self, other: &Self) -> Self {
        ExtFieldElement {
            value: self.field.mul(&self.value, &other.value),
            field: Arc::clone(&self.field),
        }
    }

    pub fn pow(&self, e: &BigUint) -> Self {
        ExtFieldElement {
            value: self.field.pow(&self.value, e),
            field: Arc::clone(&self.field),
        }
    }

    /// Evaluates an integer polynomial at this element.
    pub fn eval_int(&self, m: &IntPolynomial) -> Self {
        let f = &self.field;
        let coeffs = ModPoly::from_int(m, f.characteristic());
        let value = coeffs.coeffs().iter().rev().fold(f.zero(), |acc, &c| {
            f.mul(&acc, &self.value)
                .add(&ModPoly::constant(f.characteristic(), c))
        });
        ExtFieldElement {
            value,
            field: Arc::clone(f),
        }
    }
}

/// Polynomials over an extension field, ascending coefficients, trimmed.
type ExtPoly = Vec<ModPoly>;

struct PolyRing<'a> {
    field: &'a ExtField,
}

impl PolyRing<'_> {
    fn trim(&self, mut a: ExtPoly) -> ExtPoly {
        while a.last().is_some_and(ModPoly::is_zero) {
            a.pop();
        }
        a
    }

    fn sub(&self, a: &ExtPoly, b: &ExtPoly) -> ExtPoly {
        let n = a.len().max(b.len());
        let z = self.field.zero();
        self.trim(
            (0..n)
                .map(|i| a.get(i).unwrap_or(&z).sub(b.get(i).unwrap_or(&z)))
                .collect(),
        )
    }

    fn add(&self, a: &ExtPoly, b: &ExtPoly) -> ExtPoly {
        let n = a.len().max(b.len());
        let z = self.field.zero();
        self.trim(
            (0..n)
                .map(|i| a.get(i).unwrap_or(&z).add(b.get(i).unwrap_or(&z)))
                .collect(),
        )
    }

    fn mul(&self, a: &ExtPoly, b: &ExtPoly) -> ExtPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        // Multiply in 𝔽_p[x] first and reduce mod g once per output coefficient.
        let mut out = vec![self.field.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
        let g = &self.field.modulus;
        self.trim(out.into_iter().map(|c| c.rem(g)).collect())
    }

    fn monic(&self, a: &ExtPoly) -> ExtPoly {
        let Some(lc) = a.last() else {
            return Vec::new();
        };
        let inv = self.field.inv(lc);
        a.iter().map(|c| self.field.mul(c, &inv)).collect()
    }

    fn rem(&self, a: &ExtPoly, d: &ExtPoly) -> ExtPoly {
        assert!(!d.is_empty(), "division by zero polynomial");
        let dd = d.len() - 1;
        let inv = self.field.inv(d.last().unwrap());
        let mut r = a.clone();
        while r.len() > dd {
            let top = r.len() - 1;
            let c = self.field.mul(r.last().unwrap(), &inv);
            for j in 0..dd {
                let t = self.field.mul(&c, &d[j]);
                r[top - dd + j] = r[top - dd + j].sub(&t);
            }
            r.pop();
            r = self.trim(r);
        }
        r
    }

    fn div(&self, a: &ExtPoly, d: &ExtPoly) -> ExtPoly {
        let dd = d.len() - 1;
        let inv = self.field.inv(d.last().unwrap());
        let mut r = a.clone();
        if r.len() <= dd {
            return Vec::new();
        }
        let mut q = vec![self.field.zero(); r.len() - dd];
        while r.len() > dd {
            let top = r.len() - 1;
            let c = self.field.mul(r.last().unwrap(), &inv);
            for j in 0..dd {
                let t = self.field.mul(&c, &d[j]);
                r[top - dd + j] = r[top - dd + j].sub(&t);
            }
            q[top - dd] = c;
            r.pop();
        }
        self.trim(q)
    }

    fn gcd(&self, a: &ExtPoly, b: &ExtPoly) -> ExtPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    fn pow_mod(&self, base: &ExtPoly, e: &BigUint, m: &ExtPoly) -> ExtPoly {
        let base = self.rem(base, m);
        let mut acc = self.rem(&vec![self.field.one()], m);
        for i in (0..e.bits()).rev() {
            acc = self.rem(&self.mul(&acc, &acc), m);
            if e.bit(i) {
                acc = self.rem(&self.mul(&acc, &base), m);
            }
        }
        acc
    }

    fn x(&self) -> ExtPoly {
        vec![self.field.zero(), self.field.one()]
    }

    /// Appends the roots of a monic square-free `g` that splits into
    /// linear factors.
    fn split_linear<R: Rng>(&self, g: &ExtPoly, rng: &mut R, out: &mut Vec<ModPoly>) {
        let deg = g.len() - 1;
        if deg == 0 {
            return;
        }
        if deg == 1 {
            out.push(self.field.zero().sub(&g[0]));
            return;
        }
        let q = self.field.order();
        let p = self.field.characteristic();
        loop {
            let a = self.field.random_element(rng);
            let w = if p == 2 {
                // absolute trace of a*X, a 0/1-valued map on the roots
                let u = self.rem(&vec![self.field.zero(), a], g);
                let mut acc = u.clone();
                let mut cur = u;
                for _ in 1..self.field.degree() {
                    cur = self.rem(&self.mul(&cur, &cur), g);
                    acc = self.add(&acc, &cur);
                }
                acc
            } else {
                let e = (q - 1u32) >> 1;
                let lin = vec![a, self.field.one()];
                self.sub(&self.pow_mod(&lin, &e, g), &vec![self.field.one()])
            };
            let d = self.gcd(&w, g);
            let dd = d.len().saturating_sub(1);
            if dd > 0 && dd < deg {
                self.split_linear(&d, rng, out);
                self.split_linear(&self.div(g, &d), rng, out);
                return;
            }
        }
    }
}

/// All distinct roots in `field` of a polynomial with coefficients in 𝔽_p,
/// in ascending order of their coefficient vectors.
pub fn roots_in_field<R: Rng>(field: &Arc<ExtField>, m: &ModPoly, rng: &mut R) -> Vec<ExtFieldElement> {
    let ring = PolyRing { field };
    let h: ExtPoly = m.coeffs().iter().map(|&c| ModPoly::constant(m.modulus(), c)).collect();
    let h = ring.monic(&ring.trim(h));
    if h.len() < 2 {
        return Vec::new();
    }
    let xq = ring.pow_mod(&ring.x(), field.order(), &h);
    let g = ring.gcd(&ring.sub(&xq, &ring.x()), &h);
    let mut roots = Vec::new();
    ring.split_linear(&g, rng, &mut roots);
    roots.sort();
    roots.into_iter().map(|v| field.element(v)).collect()
}

/// Roots of `m` in 𝔽_{p^f}, sorted. Fails with `NoEmbedding` when some
/// irreducible factor of `m mod p` has degree not dividing `f`.
pub fn embed_in_residue_field(m: &IntPolynomial, p: u64, f: usize) -> Result<Vec<ExtFieldElement>> {
    embed_with_cache(m, p, f, &FieldCache::default())
}

pub fn embed_with_cache(
    m: &IntPolynomial,
    p: u64,
    f: usize,
    cache: &FieldCache,
) -> Result<Vec<ExtFieldElement>> {
    if f == 0 {
        return Err(Error::InvalidArgument("extension degree must be positive".into()));
    }
    let mp = ModPoly::from_int(m, p);
    if mp.degree().unwrap_or(0) == 0 {
        return Err(Error::InvalidArgument("polynomial is constant mod p".into()));
    }
    if !mp.gcd(&mp.derivative()).is_one() {
        return Err(Error::BadPrime(p));
    }
    for (_, d) in distinct_degree_factorization(&mp) {
        if f % d != 0 {
            return Err(Error::NoEmbedding {
                p,
                degree: f,
                factor_degree: d,
            });
        }
    }
    let field = cache.get(p, f);
    let mut rng = rng_for(cache.seed(), p, 0x5eed ^ f as u64);
    Ok(roots_in_field(&field, &mp, &mut rng))
}

/// Whether `x` is a k-th power in its field: `x^((q-1)/k) = 1`.
pub fn kth_power_residue(x: &ExtFieldElement, k: u64) -> Result<bool> {
    if x.is_zero() {
        return Err(Error::InvalidArgument("power residue test of zero".into()));
    }
    let q1 = x.field.order() - 1u32;
    let kb = BigUint::from(k);
    if k == 0 || !(&q1 % &kb).is_zero() {
        return Err(Error::BadOrder {
            k,
            p: x.field.characteristic(),
            degree: x.field.degree(),
        });
    }
    Ok(x.pow(&(q1 / kb)).is_one())
}

/// Extension fields keyed by `(p, f)`. The defining polynomial depends only
/// on the seed and the key, so a cache hit and a rebuild agree.
#[derive(Debug)]
pub struct FieldCache {
    seed: u64,
    fields: Mutex<HashMap<(u64, usize), Arc<ExtField>>>,
}

impl Default for FieldCache {
    fn default() -> Self {
        Self::new(crate::DEFAULT_SEED)
    }
}

impl FieldCache {
    pub fn new(seed: u64) -> Self {
        FieldCache {
            seed,
            fields: Mutex::new(HashMap::new()),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn get(&self, p: u64, f: usize) -> Arc<ExtField> {
        if let Some(field) = self.fields.lock().unwrap().get(&(p, f)) {
            return Arc::clone(field);
        }
        let field = ExtField::random(p, f, &mut rng_for(self.seed, p, f as u64));
        self.fields
            .lock()
            .unwrap()
            .entry((p, f))
            .or_insert(field)
            .clone()
    }
}
