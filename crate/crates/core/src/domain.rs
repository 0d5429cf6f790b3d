//! Coefficient domains with a skew derivation `(σ, δ)`.
//!
//! Three concrete Dedekind domains are provided: the Gaussian integers with
//! `σ` the identity or complex conjugation, and `k[t]` for `k = F_p` or `Q`
//! with an affine automorphism `σ(t) = a·t + b`. On `Z[i]` the derivation is
//! fixed by `d = δ(i)` and acts as `δ(x + y·i) = y·d`. On `k[t]` it is
//! `δ(f) = h·(σ(f) − f)/(σ(t) − t)` when `σ` moves `t`, and `h·f'` otherwise.

use std::fmt::Debug;
use std::hash::Hash;

use num_traits::One;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::gaussian::Gaussian;
use crate::poly::{Poly, PolyRing};
use crate::scalar::{Field, PrimeField, Rationals};
use crate::text::parse_expr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DomainKind {
    GaussianIntegers,
    PolyFiniteField,
    PolyRationals,
}

/// Order of `σ` as a map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapOrder {
    Finite(u64),
    Infinite,
}

/// Textual description of a domain, as found in run configurations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DomainSpec {
    pub kind: DomainKind,
    /// Field size, for `poly-finite-field` only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u64>,
    /// `identity` or `conjugation` on `Z[i]`; otherwise the image of `t`,
    /// e.g. `t + 1` or `2*t`.
    pub sigma: String,
    /// `δ(i)` on `Z[i]`, the multiplier `h` on polynomial rings.
    #[serde(default = "zero_text")]
    pub delta: String,
}

fn zero_text() -> String {
    "0".to_string()
}

pub trait Domain: Clone + Debug + Send + Sync {
    type Elem: Clone + Eq + Ord + Hash + Debug + Send + Sync;

    fn kind(&self) -> DomainKind;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn pow(&self, a: &Self::Elem, e: u32) -> Self::Elem {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    /// `σ^k(a)` for any integer `k`.
    fn sigma_pow(&self, a: &Self::Elem, k: i64) -> Self::Elem;

    fn sigma(&self, a: &Self::Elem) -> Self::Elem {
        self.sigma_pow(a, 1)
    }

    fn delta(&self, a: &Self::Elem) -> Self::Elem;
    fn sigma_is_identity(&self) -> bool;
    fn delta_is_zero(&self) -> bool;
    fn sigma_order(&self) -> MapOrder;

    /// Generators of the domain as a ring over its prime subring (or over
    /// the coefficient field for polynomial rings).
    fn ring_generators(&self) -> Vec<Self::Elem>;

    /// Representatives spanning `D/(g)` additively over the central prime
    /// subring (or coefficient field); `g` nonzero.
    fn residue_basis(&self, g: &Self::Elem) -> Vec<Self::Elem>;

    /// Euclidean division; `b` must be nonzero.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);
    /// Canonical associate; zero maps to zero.
    fn normalize(&self, a: &Self::Elem) -> Self::Elem;

    fn random_elem(&self, rng: &mut dyn RngCore, size: u32) -> Self::Elem;
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> std::result::Result<Self::Elem, ParseError>;
    /// Canonical description, suitable for echoing in reports.
    fn spec(&self) -> DomainSpec;

    fn is_unit(&self, a: &Self::Elem) -> bool {
        !self.is_zero(a) && self.normalize(a) == self.one()
    }
}

/// `σ^k(a)`.
pub fn apply_sigma<D: Domain>(dom: &D, a: &D::Elem, k: i64) -> D::Elem {
    dom.sigma_pow(a, k)
}

pub fn apply_delta<D: Domain>(dom: &D, a: &D::Elem) -> D::Elem {
    dom.delta(a)
}

/// `Σ_{i<m} σ(a)^i δ(a) a^(m-1-i)`, which equals `δ(a^m)`.
pub fn delta_power_expand<D: Domain>(dom: &D, a: &D::Elem, m: u32) -> D::Elem {
    assert!(m >= 1, "exponent must be positive");
    let sa = dom.sigma(a);
    let da = dom.delta(a);
    let mut acc = dom.zero();
    let mut left = dom.one();
    for i in 0..m {
        let right = dom.pow(a, m - 1 - i);
        acc = dom.add(&acc, &dom.mul(&dom.mul(&left, &da), &right));
        left = dom.mul(&left, &sa);
    }
    acc
}

/// `δ(uv) = σ(u)δ(v) + δ(u)v`.
pub fn leibniz_holds<D: Domain>(dom: &D, u: &D::Elem, v: &D::Elem) -> bool {
    let lhs = dom.delta(&dom.mul(u, v));
    let rhs = dom.add(
        &dom.mul(&dom.sigma(u), &dom.delta(v)),
        &dom.mul(&dom.delta(u), v),
    );
    lhs == rhs
}

pub fn exact_div<D: Domain>(dom: &D, a: &D::Elem, b: &D::Elem) -> Option<D::Elem> {
    if dom.is_zero(b) {
        return dom.is_zero(a).then(|| dom.zero());
    }
    let (q, r) = dom.div_rem(a, b);
    dom.is_zero(&r).then_some(q)
}

/// Whether `a` divides `b`.
pub fn divides<D: Domain>(dom: &D, a: &D::Elem, b: &D::Elem) -> bool {
    exact_div(dom, b, a).is_some()
}

/// Normalized gcd.
pub fn gcd<D: Domain>(dom: &D, a: &D::Elem, b: &D::Elem) -> D::Elem {
    let mut x = a.clone();
    let mut y = b.clone();
    while !dom.is_zero(&y) {
        let r = dom.div_rem(&x, &y).1;
        x = y;
        y = r;
    }
    dom.normalize(&x)
}

/// `δ(b) = a·b − σ(b)·a` for this `a`.
pub fn is_inner_witness_at<D: Domain>(dom: &D, a: &D::Elem, b: &D::Elem) -> bool {
    dom.delta(b) == dom.sub(&dom.mul(a, b), &dom.mul(&dom.sigma(b), a))
}

const INNER_VERIFY_SAMPLES: usize = 64;

/// Finds `a` with `δ(b) = a·b − σ(b)·a` for every `b`, solving on the ring
/// generators and re-verifying on a seeded random sample.
///
/// Returns `Ok(None)` when no such `a` exists in the domain, and
/// `Err(NotApplicable)` when `σ` is the identity but `δ` is not zero.
pub fn inner_witness<D: Domain>(dom: &D) -> Result<Option<D::Elem>> {
    if dom.sigma_is_identity() {
        if dom.delta_is_zero() {
            return Ok(Some(dom.zero()));
        }
        return Err(Error::NotApplicable(
            "σ is the identity and δ is nonzero, so δ cannot be inner".into(),
        ));
    }
    let mut candidate: Option<D::Elem> = None;
    for g in dom.ring_generators() {
        let moved = dom.sub(&g, &dom.sigma(&g));
        let dg = dom.delta(&g);
        if dom.is_zero(&moved) {
            if !dom.is_zero(&dg) {
                return Ok(None);
            }
            continue;
        }
        let Some(a) = exact_div(dom, &dg, &moved) else {
            return Ok(None);
        };
        match &candidate {
            Some(c) if *c != a => return Ok(None),
            _ => candidate = Some(a),
        }
    }
    let a = candidate.unwrap_or_else(|| dom.zero());
    Ok(verify_inner_witness(dom, &a).then_some(a))
}

/// Checks `δ(b) = a·b − σ(b)·a` on the ring generators, which decides it
/// for all `b`, and again on a seeded random sample.
pub fn verify_inner_witness<D: Domain>(dom: &D, a: &D::Elem) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1a2e);
    dom.ring_generators()
        .iter()
        .all(|g| is_inner_witness_at(dom, a, g))
        && (0..INNER_VERIFY_SAMPLES).all(|_| {
            let b = dom.random_elem(&mut rng, 4);
            is_inner_witness_at(dom, a, &b)
        })
}

const CONSTRUCTION_SAMPLES: usize = 32;

/// Checks that `σ` is an invertible ring map and `δ` a σ-derivation, on the
/// generators and a seeded sample.
fn validate<D: Domain>(dom: &D) -> Result<()> {
    let one = dom.one();
    if dom.sigma(&one) != one {
        return Err(Error::InvalidDomain("σ(1) ≠ 1".into()));
    }
    if !dom.is_zero(&dom.delta(&one)) {
        return Err(Error::InvalidDomain("δ(1) ≠ 0".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xd0d0);
    let mut pairs: Vec<(D::Elem, D::Elem)> = Vec::new();
    for g in dom.ring_generators() {
        for h in dom.ring_generators() {
            pairs.push((g.clone(), h));
        }
    }
    for _ in 0..CONSTRUCTION_SAMPLES {
        pairs.push((dom.random_elem(&mut rng, 3), dom.random_elem(&mut rng, 3)));
    }
    for (u, v) in &pairs {
        if !leibniz_holds(dom, u, v) {
            return Err(Error::InvalidDomain(format!(
                "δ violates the σ-Leibniz rule at ({}, {})",
                dom.format(u),
                dom.format(v)
            )));
        }
        let suv = dom.sigma(&dom.mul(u, v));
        if suv != dom.mul(&dom.sigma(u), &dom.sigma(v)) {
            return Err(Error::InvalidDomain("σ is not multiplicative".into()));
        }
        if dom.sigma_pow(&dom.sigma(u), -1) != *u {
            return Err(Error::InvalidDomain("σ is not invertible".into()));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Gaussian integers

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GaussSigma {
    Identity,
    Conjugation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianDomain {
    sigma: GaussSigma,
    d: Gaussian,
}

impl GaussianDomain {
    pub fn new(sigma: GaussSigma, d: Gaussian) -> Result<Self> {
        let dom = GaussianDomain { sigma, d };
        validate(&dom)?;
        Ok(dom)
    }

    pub fn sigma_kind(&self) -> GaussSigma {
        self.sigma
    }

    /// `δ(i)`.
    pub fn delta_at_i(&self) -> &Gaussian {
        &self.d
    }
}

impl Domain for GaussianDomain {
    type Elem = Gaussian;

    fn kind(&self) -> DomainKind {
        DomainKind::GaussianIntegers
    }
    fn zero(&self) -> Gaussian {
        Gaussian::zero()
    }
    fn one(&self) -> Gaussian {
        Gaussian::one()
    }
    fn from_i64(&self, n: i64) -> Gaussian {
        Gaussian::new(n, 0)
    }
    fn is_zero(&self, a: &Gaussian) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Gaussian, b: &Gaussian) -> Gaussian {
        a.add(b)
    }
    fn neg(&self, a: &Gaussian) -> Gaussian {
        a.neg()
    }
    fn sub(&self, a: &Gaussian, b: &Gaussian) -> Gaussian {
        a.sub(b)
    }
    fn mul(&self, a: &Gaussian, b: &Gaussian) -> Gaussian {
        a.mul(b)
    }
    fn pow(&self, a: &Gaussian, e: u32) -> Gaussian {
        a.pow(e)
    }
    fn sigma_pow(&self, a: &Gaussian, k: i64) -> Gaussian {
        match self.sigma {
            GaussSigma::Conjugation if k.rem_euclid(2) == 1 => a.conj(),
            _ => a.clone(),
        }
    }
    fn delta(&self, a: &Gaussian) -> Gaussian {
        self.d.scale(&a.im)
    }
    fn sigma_is_identity(&self) -> bool {
        self.sigma == GaussSigma::Identity
    }
    fn delta_is_zero(&self) -> bool {
        self.d.is_zero()
    }
    fn sigma_order(&self) -> MapOrder {
        match self.sigma {
            GaussSigma::Identity => MapOrder::Finite(1),
            GaussSigma::Conjugation => MapOrder::Finite(2),
        }
    }
    fn ring_generators(&self) -> Vec<Gaussian> {
        vec![Gaussian::i()]
    }
    fn residue_basis(&self, _g: &Gaussian) -> Vec<Gaussian> {
        vec![Gaussian::one(), Gaussian::i()]
    }
    fn div_rem(&self, a: &Gaussian, b: &Gaussian) -> (Gaussian, Gaussian) {
        a.div_rem(b)
    }
    fn normalize(&self, a: &Gaussian) -> Gaussian {
        a.normalize()
    }
    fn random_elem(&self, rng: &mut dyn RngCore, size: u32) -> Gaussian {
        let s = size.max(1) as i64;
        Gaussian::new(rng.gen_range(-s..=s), rng.gen_range(-s..=s))
    }
    fn format(&self, a: &Gaussian) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> std::result::Result<Gaussian, ParseError> {
        parse_gaussian(s)
    }
    fn spec(&self) -> DomainSpec {
        DomainSpec {
            kind: DomainKind::GaussianIntegers,
            modulus: None,
            sigma: match self.sigma {
                GaussSigma::Identity => "identity".into(),
                GaussSigma::Conjugation => "conjugation".into(),
            },
            delta: self.d.to_string(),
        }
    }
}

pub fn parse_gaussian(s: &str) -> std::result::Result<Gaussian, ParseError> {
    let e = parse_expr(s)?;
    if let Some(v) = e.var {
        if v != 'i' {
            return Err(ParseError::WrongVariable {
                expected: 'i',
                found: v,
            });
        }
    }
    if e.modulus.is_some() {
        return Err(ParseError::Invalid(
            "Gaussian integers take no modulus".into(),
        ));
    }
    let mut acc = Gaussian::zero();
    for t in e.terms {
        if !t.den.is_one() {
            return Err(ParseError::Invalid(
                "Gaussian integer coefficients must be integers".into(),
            ));
        }
        // i^k cycles with period 4
        let unit = match t.power % 4 {
            0 => Gaussian::new(1, 0),
            1 => Gaussian::new(0, 1),
            2 => Gaussian::new(-1, 0),
            _ => Gaussian::new(0, -1),
        };
        acc = acc.add(&unit.scale(&t.num));
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Polynomial rings k[t]

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyDomain<F: Field> {
    ring: PolyRing<F>,
    /// σ(t) = a·t + b
    a: F::Elem,
    b: F::Elem,
    h: Poly<F::Elem>,
}

pub type FiniteFieldPoly = PolyDomain<PrimeField>;
pub type RationalPoly = PolyDomain<Rationals>;

impl<F: Field> PolyDomain<F> {
    pub fn new(field: F, a: F::Elem, b: F::Elem, h: Poly<F::Elem>) -> Result<Self> {
        if field.inv(&a).is_none() {
            return Err(Error::InvalidDomain(
                "σ(t) = a·t + b needs a unit a to be an automorphism".into(),
            ));
        }
        let dom = PolyDomain {
            ring: PolyRing::new(field),
            a,
            b,
            h,
        };
        validate(&dom)?;
        Ok(dom)
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    /// The pair `(a, b)` with `σ(t) = a·t + b`.
    pub fn affine_pair(&self) -> (&F::Elem, &F::Elem) {
        (&self.a, &self.b)
    }

    /// `δ(t)`.
    pub fn delta_at_t(&self) -> &Poly<F::Elem> {
        &self.h
    }

    /// Coefficients `(A, B)` with `σ^k(t) = A·t + B`.
    pub fn affine_power(&self, k: i64) -> (F::Elem, F::Elem) {
        let f = self.field();
        let (mut base_a, mut base_b) = if k >= 0 {
            (self.a.clone(), self.b.clone())
        } else {
            // inverse of t ↦ a t + b is t ↦ a⁻¹ t − a⁻¹ b
            let inv = f.inv(&self.a).expect("a is a unit");
            let nb = f.neg(&f.mul(&inv, &self.b));
            (inv, nb)
        };
        let mut e = k.unsigned_abs();
        let (mut acc_a, mut acc_b) = (f.one(), f.zero());
        while e > 0 {
            if e & 1 == 1 {
                // (acc ∘ base)(t) = acc_a (base_a t + base_b) + acc_b
                acc_b = f.add(&f.mul(&acc_a, &base_b), &acc_b);
                acc_a = f.mul(&acc_a, &base_a);
            }
            let sq_b = f.add(&f.mul(&base_a, &base_b), &base_b);
            base_a = f.mul(&base_a, &base_a);
            base_b = sq_b;
            e >>= 1;
        }
        (acc_a, acc_b)
    }

    fn sigma_moves(&self) -> Poly<F::Elem> {
        // σ(t) − t
        let f = self.field();
        self.ring
            .from_coeffs(vec![self.b.clone(), f.sub(&self.a, &f.one())])
    }

    pub fn format_poly(&self, p: &Poly<F::Elem>) -> String {
        let f = self.field();
        let mut out = String::new();
        for (k, c) in p.coeffs().iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let neg = f.is_negative(c);
            let mag = if neg { f.neg(c) } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff = f.format(&mag);
            match k {
                0 => out.push_str(&coeff),
                _ => {
                    if !f.is_one(&mag) {
                        out.push_str(&coeff);
                        out.push('*');
                    }
                    out.push('t');
                    if k > 1 {
                        out.push('^');
                        out.push_str(&k.to_string());
                    }
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        if let Some(q) = f.order() {
            out.push_str(&format!(" mod {q}"));
        }
        out
    }

    pub fn parse_poly(&self, s: &str) -> std::result::Result<Poly<F::Elem>, ParseError> {
        let e = parse_expr(s)?;
        if let Some(v) = e.var {
            if v != 't' {
                return Err(ParseError::WrongVariable {
                    expected: 't',
                    found: v,
                });
            }
        }
        let f = self.field();
        match (e.modulus, f.order()) {
            (Some(m), Some(q)) if m != q => {
                return Err(ParseError::ModulusMismatch {
                    expected: q,
                    found: m,
                })
            }
            (Some(_), None) => {
                return Err(ParseError::Invalid(
                    "rational polynomials take no modulus".into(),
                ))
            }
            _ => {}
        }
        let deg = e.terms.iter().map(|t| t.power as usize).max().unwrap_or(0);
        let mut coeffs = vec![f.zero(); deg + 1];
        for t in &e.terms {
            let c = f.from_ratio(&t.num, &t.den)?;
            let k = t.power as usize;
            coeffs[k] = f.add(&coeffs[k], &c);
        }
        Ok(self.ring.from_coeffs(coeffs))
    }
}

impl<F: Field> Domain for PolyDomain<F> {
    type Elem = Poly<F::Elem>;

    fn kind(&self) -> DomainKind {
        if self.field().order().is_some() {
            DomainKind::PolyFiniteField
        } else {
            DomainKind::PolyRationals
        }
    }
    fn zero(&self) -> Self::Elem {
        self.ring.zero()
    }
    fn one(&self) -> Self::Elem {
        self.ring.one()
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.ring.constant(self.field().from_i64(n))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.ring.add(a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.ring.neg(a)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.ring.sub(a, b)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.ring.mul(a, b)
    }
    fn pow(&self, a: &Self::Elem, e: u32) -> Self::Elem {
        self.ring.pow(a, e)
    }
    fn sigma_pow(&self, p: &Self::Elem, k: i64) -> Self::Elem {
        if k == 0 || p.degree().unwrap_or(0) == 0 {
            return p.clone();
        }
        let (a, b) = self.affine_power(k);
        let image = self.ring.from_coeffs(vec![b, a]);
        self.ring.compose(p, &image)
    }
    fn delta(&self, p: &Self::Elem) -> Self::Elem {
        if self.h.is_zero() {
            return self.zero();
        }
        if self.sigma_is_identity() {
            return self.ring.mul(&self.h, &self.ring.derivative(p));
        }
        let diff = self.ring.sub(&self.sigma(p), p);
        let q = self
            .ring
            .exact_div(&diff, &self.sigma_moves())
            .expect("σ(t) − t divides σ(f) − f");
        self.ring.mul(&self.h, &q)
    }
    fn sigma_is_identity(&self) -> bool {
        self.field().is_one(&self.a) && self.field().is_zero(&self.b)
    }
    fn delta_is_zero(&self) -> bool {
        self.h.is_zero()
    }
    fn sigma_order(&self) -> MapOrder {
        let f = self.field();
        if f.is_one(&self.a) {
            if f.is_zero(&self.b) {
                MapOrder::Finite(1)
            } else if f.characteristic() > 0 {
                MapOrder::Finite(f.characteristic())
            } else {
                MapOrder::Infinite
            }
        } else {
            // a ≠ 1: σ^n(t) = a^n t + b(a^n − 1)/(a − 1) is t iff a^n = 1
            match f.multiplicative_order(&self.a) {
                Some(n) => MapOrder::Finite(n),
                None => MapOrder::Infinite,
            }
        }
    }
    fn ring_generators(&self) -> Vec<Self::Elem> {
        vec![self.ring.var()]
    }
    fn residue_basis(&self, g: &Self::Elem) -> Vec<Self::Elem> {
        let d = g.degree().unwrap_or(0).max(1);
        (0..d)
            .map(|k| self.ring.monomial(self.field().one(), k))
            .collect()
    }
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem) {
        self.ring.div_rem(a, b)
    }
    fn normalize(&self, a: &Self::Elem) -> Self::Elem {
        self.ring.monic(a)
    }
    fn random_elem(&self, rng: &mut dyn RngCore, size: u32) -> Self::Elem {
        let deg = rng.gen_range(0..=size as usize);
        let coeffs = (0..=deg).map(|_| self.field().random(rng)).collect();
        self.ring.from_coeffs(coeffs)
    }
    fn format(&self, a: &Self::Elem) -> String {
        self.format_poly(a)
    }
    fn parse(&self, s: &str) -> std::result::Result<Self::Elem, ParseError> {
        self.parse_poly(s)
    }
    fn spec(&self) -> DomainSpec {
        let sigma_t = self.ring.from_coeffs(vec![self.b.clone(), self.a.clone()]);
        let strip = |s: String| match s.find(" mod ") {
            Some(i) => s[..i].to_string(),
            None => s,
        };
        DomainSpec {
            kind: self.kind(),
            modulus: self.field().order(),
            sigma: strip(self.format_poly(&sigma_t)),
            delta: strip(self.format_poly(&self.h)),
        }
    }
}

// ---------------------------------------------------------------------------
// Runtime selection

/// One of the three testbeds, chosen at run time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyDomain {
    Gaussian(GaussianDomain),
    FiniteField(FiniteFieldPoly),
    Rational(RationalPoly),
}

impl AnyDomain {
    pub fn kind(&self) -> DomainKind {
        match self {
            AnyDomain::Gaussian(d) => d.kind(),
            AnyDomain::FiniteField(d) => d.kind(),
            AnyDomain::Rational(d) => d.kind(),
        }
    }

    pub fn spec(&self) -> DomainSpec {
        match self {
            AnyDomain::Gaussian(d) => d.spec(),
            AnyDomain::FiniteField(d) => d.spec(),
            AnyDomain::Rational(d) => d.spec(),
        }
    }
}

fn parse_affine<F: Field>(field: &F, sigma: &str) -> Result<(F::Elem, F::Elem)> {
    if sigma.trim() == "identity" {
        return Ok((field.one(), field.zero()));
    }
    // Parse against a throwaway identity domain to reuse the element reader.
    let probe = PolyDomain {
        ring: PolyRing::new(field.clone()),
        a: field.one(),
        b: field.zero(),
        h: PolyRing::new(field.clone()).zero(),
    };
    let img = probe.parse_poly(sigma)?;
    match img.degree() {
        Some(1) => Ok((img.coeffs()[1].clone(), img.coeffs()[0].clone())),
        _ => Err(Error::InvalidDomain(format!(
            "σ(t) = {sigma} is not a·t + b with a a unit"
        ))),
    }
}

fn parse_multiplier<F: Field>(field: &F, delta: &str) -> Result<Poly<F::Elem>> {
    let probe = PolyDomain {
        ring: PolyRing::new(field.clone()),
        a: field.one(),
        b: field.zero(),
        h: PolyRing::new(field.clone()).zero(),
    };
    Ok(probe.parse_poly(delta)?)
}

/// Validates a textual description and builds the domain.
pub fn build_domain(spec: &DomainSpec) -> Result<AnyDomain> {
    match spec.kind {
        DomainKind::GaussianIntegers => {
            if spec.modulus.is_some() {
                return Err(Error::InvalidDomain(
                    "Gaussian integers take no modulus".into(),
                ));
            }
            let sigma = match spec.sigma.trim() {
                "identity" => GaussSigma::Identity,
                "conjugation" => GaussSigma::Conjugation,
                other => {
                    return Err(Error::InvalidDomain(format!(
                        "σ on Z[i] must be identity or conjugation, got {other:?}"
                    )))
                }
            };
            let d = parse_gaussian(&spec.delta)?;
            Ok(AnyDomain::Gaussian(GaussianDomain::new(sigma, d)?))
        }
        DomainKind::PolyFiniteField => {
            let q = spec
                .modulus
                .ok_or_else(|| Error::InvalidDomain("poly-finite-field needs a modulus".into()))?;
            let field = PrimeField::new(q)?;
            let (a, b) = parse_affine(&field, &spec.sigma)?;
            let h = parse_multiplier(&field, &spec.delta)?;
            Ok(AnyDomain::FiniteField(PolyDomain::new(field, a, b, h)?))
        }
        DomainKind::PolyRationals => {
            if spec.modulus.is_some() {
                return Err(Error::InvalidDomain(
                    "rational polynomials take no modulus".into(),
                ));
            }
            let (a, b) = parse_affine(&Rationals, &spec.sigma)?;
            let h = parse_multiplier(&Rationals, &spec.delta)?;
            Ok(AnyDomain::Rational(PolyDomain::new(Rationals, a, b, h)?))
        }
    }
}

/// Convenience constructors used throughout tests and examples.
impl GaussianDomain {
    pub fn conjugation(d: i64) -> Self {
        GaussianDomain::new(GaussSigma::Conjugation, Gaussian::new(d, 0)).expect("valid")
    }
}

impl FiniteFieldPoly {
    /// `F_p[t]` with `σ(t) = a·t + b` and `δ(t) = h`, `h` given by its
    /// coefficients.
    pub fn affine(p: u64, a: i64, b: i64, h: &[i64]) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let ring = PolyRing::new(field);
        let h = ring.from_coeffs(h.iter().map(|c| field.from_i64(*c)).collect());
        PolyDomain::new(field, field.from_i64(a), field.from_i64(b), h)
    }
}

impl RationalPoly {
    /// `Q[t]` with integer affine data.
    pub fn affine(a: i64, b: i64, h: &[i64]) -> Result<Self> {
        let ring = PolyRing::new(Rationals);
        let h = ring.from_coeffs(h.iter().map(|c| Rationals.from_i64(*c)).collect());
        PolyDomain::new(Rationals, Rationals.from_i64(a), Rationals.from_i64(b), h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> Gaussian {
        Gaussian::new(a, b)
    }

    fn f3_shift(h: &[i64]) -> FiniteFieldPoly {
        FiniteFieldPoly::affine(3, 1, 1, h).unwrap()
    }

    #[test]
    fn build_examples() {
        let ok = build_domain(&DomainSpec {
            kind: DomainKind::GaussianIntegers,
            modulus: None,
            sigma: "conjugation".into(),
            delta: "2".into(),
        });
        assert!(ok.is_ok());
        let ok = build_domain(&DomainSpec {
            kind: DomainKind::PolyFiniteField,
            modulus: Some(3),
            sigma: "t + 2".into(),
            delta: "t".into(),
        });
        assert!(ok.is_ok());
        let bad = build_domain(&DomainSpec {
            kind: DomainKind::PolyRationals,
            modulus: None,
            sigma: "0*t + 1".into(),
            delta: "0".into(),
        });
        assert!(matches!(bad, Err(Error::InvalidDomain(_))));
    }

    #[test]
    fn identity_on_gaussians_forces_zero_delta() {
        assert!(GaussianDomain::new(GaussSigma::Identity, g(1, 0)).is_err());
        assert!(GaussianDomain::new(GaussSigma::Identity, g(0, 0)).is_ok());
    }

    #[test]
    fn sigma_examples() {
        let z = GaussianDomain::conjugation(2);
        assert_eq!(apply_sigma(&z, &g(3, 4), 1), g(3, -4));
        assert_eq!(apply_sigma(&z, &g(3, 4), 0), g(3, 4));
        let d = f3_shift(&[1]);
        let t = d.parse("t").unwrap();
        assert_eq!(apply_sigma(&d, &t, -1), d.parse("t + 2").unwrap());
        assert_eq!(apply_sigma(&d, &t, 0), t);
    }

    #[test]
    fn delta_examples() {
        let z = GaussianDomain::conjugation(2);
        assert_eq!(apply_delta(&z, &g(3, 4)), g(8, 0));
        assert_eq!(apply_delta(&z, &g(1, 0)), g(0, 0));
        let d = f3_shift(&[1]);
        let t2 = d.parse("t^2").unwrap();
        assert_eq!(apply_delta(&d, &t2), d.parse("2*t + 1").unwrap());
        assert!(apply_delta(&d, &d.one()).is_zero());
    }

    #[test]
    fn delta_power_examples() {
        let z = GaussianDomain::conjugation(2);
        assert_eq!(
            delta_power_expand(&z, &g(5, 7), 1),
            apply_delta(&z, &g(5, 7))
        );
        assert_eq!(delta_power_expand(&z, &Gaussian::i(), 2), g(0, 0));
        let d = f3_shift(&[1]);
        let t = d.parse("t").unwrap();
        assert_eq!(delta_power_expand(&d, &t, 3), d.one());
    }

    #[test]
    fn inner_witness_examples() {
        assert_eq!(
            inner_witness(&GaussianDomain::conjugation(2)).unwrap(),
            Some(g(0, -1))
        );
        assert_eq!(
            inner_witness(&GaussianDomain::conjugation(1)).unwrap(),
            None
        );
        let d = f3_shift(&[1]);
        assert_eq!(inner_witness(&d).unwrap(), Some(d.parse("2").unwrap()));
        let deriv = FiniteFieldPoly::affine(3, 1, 0, &[1]).unwrap();
        assert!(matches!(
            inner_witness(&deriv),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn no_inner_witness_by_exhaustion() {
        // 2a·i = 1 has no solution: search all |re|, |im| <= 2.
        let z = GaussianDomain::conjugation(1);
        for x in -2..=2 {
            for y in -2..=2 {
                let a = g(x, y);
                assert!(!is_inner_witness_at(&z, &a, &Gaussian::i()));
            }
        }
    }

    #[test]
    fn affine_power_matches_iteration() {
        let d = FiniteFieldPoly::affine(7, 3, 2, &[1]).unwrap();
        let t = d.parse("t").unwrap();
        let mut cur = t.clone();
        for k in 1..10 {
            cur = d.sigma(&cur);
            assert_eq!(d.sigma_pow(&t, k), cur);
        }
        assert_eq!(d.sigma_order(), MapOrder::Finite(6));
    }

    #[test]
    fn sigma_orders() {
        assert_eq!(f3_shift(&[1]).sigma_order(), MapOrder::Finite(3));
        assert_eq!(
            RationalPoly::affine(2, 0, &[1]).unwrap().sigma_order(),
            MapOrder::Infinite
        );
        assert_eq!(
            RationalPoly::affine(-1, 3, &[1]).unwrap().sigma_order(),
            MapOrder::Finite(2)
        );
        assert_eq!(
            RationalPoly::affine(1, 1, &[1]).unwrap().sigma_order(),
            MapOrder::Infinite
        );
    }

    #[test]
    fn canonical_text() {
        let d = f3_shift(&[1]);
        let f = d.parse("2 + t + t^2").unwrap();
        assert_eq!(d.format(&f), "2 + t + t^2 mod 3");
        assert_eq!(d.format(&d.zero()), "0 mod 3");
        assert_eq!(d.parse("1 mod 3").unwrap(), d.one());
        assert!(d.parse("1 mod 5").is_err());
        let q = RationalPoly::affine(2, 0, &[1]).unwrap();
        let f = q.parse("-1/2 + t - 3/4*t^2").unwrap();
        assert_eq!(q.format(&f), "-1/2 + t - 3/4*t^2");
        assert_eq!(parse_gaussian("3-4*i").unwrap(), g(3, -4));
        assert_eq!(g(3, -4).to_string(), "3-4*i");
        assert_eq!(g(0, 1).to_string(), "0+1*i");
    }

    #[test]
    fn spec_roundtrip() {
        let d = FiniteFieldPoly::affine(5, 2, 1, &[0, 0, 1]).unwrap();
        let spec = d.spec();
        assert_eq!(spec.sigma, "1 + 2*t");
        assert_eq!(spec.delta, "t^2");
        let rebuilt = build_domain(&spec).unwrap();
        assert_eq!(rebuilt, AnyDomain::FiniteField(d));
    }
}
