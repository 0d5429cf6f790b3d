//! Skew polynomials `D[x;σ,δ]` in left standard form `f_0 + f_1 x + … + f_n x^n`.
//!
//! Multiplication rewrites `x·a = σ(a)x + δ(a)`. The same type also carries
//! elements of `D[y;σ]`, where the rewrite drops the `δ` term.

use rand::{Rng, RngCore};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::domain::{verify_inner_witness, Domain};
use crate::error::{Error, ParseError, Result};
use crate::ideal::{generator, Ideal};
use crate::prime::{is_stable_ideal, StabilityMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingTag {
    /// `D[x;σ,δ]`
    #[serde(rename = "x-sigma-delta")]
    SigmaDelta,
    /// `D[y;σ]`
    #[serde(rename = "y-sigma")]
    PureSigma,
}

impl RingTag {
    pub fn variable(self) -> char {
        match self {
            RingTag::SigmaDelta => 'x',
            RingTag::PureSigma => 'y',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrePoly<E> {
    tag: RingTag,
    coeffs: Vec<E>,
}

impl<E: Clone> OrePoly<E> {
    pub fn tag(&self) -> RingTag {
        self.tag
    }

    /// Left coefficients, lowest degree first.
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }
}

pub fn from_coeffs<D: Domain>(dom: &D, tag: RingTag, mut coeffs: Vec<D::Elem>) -> OrePoly<D::Elem> {
    while coeffs.last().is_some_and(|c| dom.is_zero(c)) {
        coeffs.pop();
    }
    OrePoly { tag, coeffs }
}

pub fn zero<E>(tag: RingTag) -> OrePoly<E> {
    OrePoly {
        tag,
        coeffs: Vec::new(),
    }
}

pub fn constant<D: Domain>(dom: &D, tag: RingTag, c: D::Elem) -> OrePoly<D::Elem> {
    from_coeffs(dom, tag, vec![c])
}

/// `c·x^k`.
pub fn monomial<D: Domain>(dom: &D, tag: RingTag, c: D::Elem, k: usize) -> OrePoly<D::Elem> {
    let mut coeffs = vec![dom.zero(); k + 1];
    coeffs[k] = c;
    from_coeffs(dom, tag, coeffs)
}

/// The variable `x` (or `y`).
pub fn var<D: Domain>(dom: &D, tag: RingTag) -> OrePoly<D::Elem> {
    monomial(dom, tag, dom.one(), 1)
}

fn same_ring<E>(f: &OrePoly<E>, g: &OrePoly<E>) {
    assert_eq!(f.tag, g.tag, "operands live in different rings");
}

pub fn add<D: Domain>(dom: &D, f: &OrePoly<D::Elem>, g: &OrePoly<D::Elem>) -> OrePoly<D::Elem> {
    same_ring(f, g);
    let n = f.coeffs.len().max(g.coeffs.len());
    let zero = dom.zero();
    let coeffs = (0..n)
        .map(|k| {
            dom.add(
                f.coeffs.get(k).unwrap_or(&zero),
                g.coeffs.get(k).unwrap_or(&zero),
            )
        })
        .collect();
    from_coeffs(dom, f.tag, coeffs)
}

pub fn neg<D: Domain>(dom: &D, f: &OrePoly<D::Elem>) -> OrePoly<D::Elem> {
    OrePoly {
        tag: f.tag,
        coeffs: f.coeffs.iter().map(|c| dom.neg(c)).collect(),
    }
}

pub fn sub<D: Domain>(dom: &D, f: &OrePoly<D::Elem>, g: &OrePoly<D::Elem>) -> OrePoly<D::Elem> {
    add(dom, f, &neg(dom, g))
}

/// `c·f`, multiplying on the left by a scalar.
pub fn scale_left<D: Domain>(dom: &D, c: &D::Elem, f: &OrePoly<D::Elem>) -> OrePoly<D::Elem> {
    from_coeffs(dom, f.tag, f.coeffs.iter().map(|a| dom.mul(c, a)).collect())
}

/// `x·f` in left standard form.
fn x_times<D: Domain>(dom: &D, tag: RingTag, coeffs: &[D::Elem]) -> Vec<D::Elem> {
    let mut out = vec![dom.zero(); coeffs.len() + 1];
    for (k, c) in coeffs.iter().enumerate() {
        out[k + 1] = dom.add(&out[k + 1], &dom.sigma(c));
        if tag == RingTag::SigmaDelta {
            out[k] = dom.add(&out[k], &dom.delta(c));
        }
    }
    out
}

/// `x^n·a`. The constant term is `δ^n(a)` and the top term `σ^n(a)`.
pub fn xn_times_a<D: Domain>(dom: &D, n: usize, a: &D::Elem) -> OrePoly<D::Elem> {
    xn_times_a_in(dom, RingTag::SigmaDelta, n, a)
}

pub fn xn_times_a_in<D: Domain>(dom: &D, tag: RingTag, n: usize, a: &D::Elem) -> OrePoly<D::Elem> {
    let mut cur = vec![a.clone()];
    for _ in 0..n {
        cur = x_times(dom, tag, &cur);
    }
    from_coeffs(dom, tag, cur)
}

pub fn mul<D: Domain>(dom: &D, f: &OrePoly<D::Elem>, g: &OrePoly<D::Elem>) -> OrePoly<D::Elem> {
    same_ring(f, g);
    if f.is_zero() || g.is_zero() {
        return zero(f.tag);
    }
    let m = f.coeffs.len() - 1;
    let n = g.coeffs.len() - 1;
    let mut out = vec![dom.zero(); m + n + 1];
    for (j, gj) in g.coeffs.iter().enumerate() {
        // row holds x^i·g_j for i = 0, 1, …, m
        let mut row = vec![gj.clone()];
        for (i, fi) in f.coeffs.iter().enumerate() {
            if i > 0 {
                row = x_times(dom, f.tag, &row);
            }
            if dom.is_zero(fi) {
                continue;
            }
            for (k, c) in row.iter().enumerate() {
                if !dom.is_zero(c) {
                    out[k + j] = dom.add(&out[k + j], &dom.mul(fi, c));
                }
            }
        }
    }
    from_coeffs(dom, f.tag, out)
}

pub fn pow<D: Domain>(dom: &D, f: &OrePoly<D::Elem>, e: u32) -> OrePoly<D::Elem> {
    (0..e).fold(constant(dom, f.tag, dom.one()), |acc, _| mul(dom, &acc, f))
}

/// Coefficients `b_k` with `f = Σ x^k·b_k`; the top one is `σ^{-n}(f_n)`.
pub fn right_coefficients<D: Domain>(dom: &D, f: &OrePoly<D::Elem>) -> Vec<D::Elem> {
    let Some(n) = f.degree() else {
        return Vec::new();
    };
    let mut rest = f.clone();
    let mut out = vec![dom.zero(); n + 1];
    while let Some(k) = rest.degree() {
        let b = dom.sigma_pow(rest.leading().expect("nonzero"), -(k as i64));
        rest = sub(dom, &rest, &xn_times_a_in(dom, f.tag, k, &b));
        out[k] = b;
    }
    out
}

/// `Σ x^k·b_k` in left standard form.
pub fn from_right_coefficients<D: Domain>(
    dom: &D,
    tag: RingTag,
    b: &[D::Elem],
) -> OrePoly<D::Elem> {
    b.iter().enumerate().fold(zero(tag), |acc, (k, bk)| {
        add(dom, &acc, &xn_times_a_in(dom, tag, k, bk))
    })
}

/// Membership in `𝔭R`. Coefficientwise testing is sound only for
/// `(σ,δ)`-stable `𝔭`, so other ideals are rejected.
pub fn in_extended_ideal<D: Domain>(
    dom: &D,
    f: &OrePoly<D::Elem>,
    p: &Ideal<D::Elem>,
) -> Result<bool> {
    if !is_stable_ideal(dom, p, StabilityMode::SigmaDelta) {
        return Err(Error::Precondition(
            "extended-ideal membership needs a (σ,δ)-stable ideal".into(),
        ));
    }
    Ok(in_extension_unchecked(dom, f, p))
}

pub(crate) fn in_extension_unchecked<D: Domain>(
    dom: &D,
    f: &OrePoly<D::Elem>,
    p: &Ideal<D::Elem>,
) -> bool {
    let g = generator(dom, p);
    f.coeffs.iter().all(|c| crate::domain::divides(dom, &g, c))
}

/// Image of `f ∈ D[x;σ,δ]` in `D[y;σ]` under `x ↦ y + a`.
pub fn to_pure_sigma<D: Domain>(
    dom: &D,
    f: &OrePoly<D::Elem>,
    a: &D::Elem,
) -> Result<OrePoly<D::Elem>> {
    if f.tag != RingTag::SigmaDelta {
        return Err(Error::Precondition("input must lie in D[x;σ,δ]".into()));
    }
    if !verify_inner_witness(dom, a) {
        return Err(Error::Precondition(format!(
            "{} is not an inner witness for δ",
            dom.format(a)
        )));
    }
    Ok(substitute(dom, f, RingTag::PureSigma, a))
}

/// Image of `g ∈ D[y;σ]` in `D[x;σ,δ]` under `y ↦ x − a`.
pub fn from_pure_sigma<D: Domain>(
    dom: &D,
    g: &OrePoly<D::Elem>,
    a: &D::Elem,
) -> Result<OrePoly<D::Elem>> {
    if g.tag != RingTag::PureSigma {
        return Err(Error::Precondition("input must lie in D[y;σ]".into()));
    }
    if !verify_inner_witness(dom, a) {
        return Err(Error::Precondition(format!(
            "{} is not an inner witness for δ",
            dom.format(a)
        )));
    }
    Ok(substitute(dom, g, RingTag::SigmaDelta, &dom.neg(a)))
}

// Σ f_k (v + shift)^k computed in the target ring.
fn substitute<D: Domain>(
    dom: &D,
    f: &OrePoly<D::Elem>,
    target: RingTag,
    shift: &D::Elem,
) -> OrePoly<D::Elem> {
    let base = from_coeffs(dom, target, vec![shift.clone(), dom.one()]);
    let mut power = constant(dom, target, dom.one());
    let mut acc = zero(target);
    for (k, c) in f.coeffs.iter().enumerate() {
        if k > 0 {
            power = mul(dom, &power, &base);
        }
        acc = add(dom, &acc, &scale_left(dom, c, &power));
    }
    acc
}

pub fn random_ore<D: Domain>(
    dom: &D,
    tag: RingTag,
    rng: &mut dyn RngCore,
    max_degree: usize,
    size: u32,
) -> OrePoly<D::Elem> {
    let deg = rng.gen_range(0..=max_degree);
    let coeffs = (0..=deg).map(|_| dom.random_elem(rng, size)).collect();
    from_coeffs(dom, tag, coeffs)
}

/// Human-readable form, e.g. `(2 + t mod 3)*x^2 + (1 mod 3)`.
pub fn format_ore<D: Domain>(dom: &D, f: &OrePoly<D::Elem>) -> String {
    if f.is_zero() {
        return format!("({})", dom.format(&dom.zero()));
    }
    let v = f.tag.variable();
    let terms: Vec<String> = f
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !dom.is_zero(c))
        .map(|(k, c)| match k {
            0 => format!("({})", dom.format(c)),
            1 => format!("({})*{v}", dom.format(c)),
            _ => format!("({})*{v}^{k}", dom.format(c)),
        })
        .collect();
    terms.join(" + ")
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OreJson {
    ring: RingTag,
    coeffs: Vec<String>,
}

pub fn ore_to_json<D: Domain>(dom: &D, f: &OrePoly<D::Elem>) -> Value {
    serde_json::to_value(OreJson {
        ring: f.tag,
        coeffs: f.coeffs.iter().map(|c| dom.format(c)).collect(),
    })
    .expect("plain data serializes")
}

/// Largest degree accepted when reading skew polynomials.
pub const MAX_ORE_DEGREE: usize = 4096;

pub fn ore_from_json<D: Domain>(dom: &D, v: &Value) -> Result<OrePoly<D::Elem>> {
    let raw: OreJson = serde_json::from_value(v.clone())
        .map_err(|e| Error::Parse(ParseError::Invalid(e.to_string())))?;
    if raw.coeffs.len() > MAX_ORE_DEGREE + 1 {
        return Err(Error::Parse(ParseError::Invalid("degree too large".into())));
    }
    let coeffs = raw
        .coeffs
        .iter()
        .map(|s| dom.parse(s))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(from_coeffs(dom, raw.ring, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{FiniteFieldPoly, GaussianDomain};
    use crate::gaussian::Gaussian;
    use crate::ideal::ideal_make;

    const X: RingTag = RingTag::SigmaDelta;

    fn g(a: i64, b: i64) -> Gaussian {
        Gaussian::new(a, b)
    }

    #[test]
    fn mul_examples() {
        let z = GaussianDomain::conjugation(2);
        let x = var(&z, X);
        let i = constant(&z, X, Gaussian::i());
        assert_eq!(mul(&z, &x, &i), from_coeffs(&z, X, vec![g(2, 0), g(0, -1)]));
        let ix = monomial(&z, X, Gaussian::i(), 1);
        assert_eq!(
            mul(&z, &ix, &ix),
            from_coeffs(&z, X, vec![g(0, 0), g(0, 2), g(1, 0)])
        );
        assert_eq!(mul(&z, &ix, &constant(&z, X, g(1, 0))), ix);
    }

    #[test]
    fn xn_examples() {
        let d = FiniteFieldPoly::affine(3, 1, 1, &[1]).unwrap();
        let t = d.parse("t").unwrap();
        let f = xn_times_a(&d, 2, &t);
        assert_eq!(
            f.coeffs(),
            [d.zero(), d.parse("2").unwrap(), d.parse("t + 2").unwrap()]
        );
        assert_eq!(xn_times_a(&d, 0, &t), constant(&d, X, t.clone()));
        let one = xn_times_a(&d, 1, &t);
        assert_eq!(one.coeffs(), [d.one(), d.parse("t + 1").unwrap()]);
    }

    #[test]
    fn right_coefficient_examples() {
        let z = GaussianDomain::conjugation(2);
        let ix = monomial(&z, X, Gaussian::i(), 1);
        assert_eq!(right_coefficients(&z, &ix), vec![g(2, 0), g(0, -1)]);
        let c = constant(&z, X, g(3, 4));
        assert_eq!(right_coefficients(&z, &c), vec![g(3, 4)]);
        assert_eq!(from_right_coefficients(&z, X, &[g(2, 0), g(0, -1)]), ix);
    }

    #[test]
    fn extended_ideal_examples() {
        let d = FiniteFieldPoly::affine(3, 1, 1, &[1]).unwrap();
        let p = ideal_make(&d, &[d.parse("t^3 - t").unwrap()]).unwrap();
        let s = d.parse("t^3 - t").unwrap();
        let f = from_coeffs(&d, X, vec![s.clone(), s]);
        assert!(in_extended_ideal(&d, &f, &p).unwrap());
        assert!(!in_extended_ideal(&d, &var(&d, X), &p).unwrap());
        let z = GaussianDomain::conjugation(1);
        let five = ideal_make(&z, &[g(5, 0)]).unwrap();
        let f = monomial(&z, X, g(2, 1), 1);
        assert!(!in_extended_ideal(&z, &f, &five).unwrap());
        let unstable = ideal_make(&d, &[d.parse("t").unwrap()]).unwrap();
        assert!(in_extended_ideal(&d, &f_const(&d), &unstable).is_err());
    }

    fn f_const(d: &FiniteFieldPoly) -> OrePoly<crate::poly::Poly<u64>> {
        constant(d, X, d.one())
    }

    #[test]
    fn isomorphism_examples() {
        let z = GaussianDomain::conjugation(2);
        let a = g(0, -1);
        let x = var(&z, X);
        let y_img = to_pure_sigma(&z, &x, &a).unwrap();
        assert_eq!(y_img.coeffs(), [g(0, -1), g(1, 0)]);
        let xi = mul(&z, &x, &constant(&z, X, Gaussian::i()));
        let img = to_pure_sigma(&z, &xi, &a).unwrap();
        assert_eq!(img.coeffs(), [g(1, 0), g(0, -1)]);
        let expected = mul(&z, &y_img, &constant(&z, RingTag::PureSigma, Gaussian::i()));
        assert_eq!(img, expected);
        let c = constant(&z, X, g(3, 4));
        assert_eq!(to_pure_sigma(&z, &c, &a).unwrap().coeffs(), [g(3, 4)]);
        assert_eq!(from_pure_sigma(&z, &img, &a).unwrap(), xi);
        assert!(to_pure_sigma(&z, &x, &g(0, 1)).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let d = FiniteFieldPoly::affine(3, 1, 1, &[1]).unwrap();
        let f = from_coeffs(&d, X, vec![d.zero(), d.one()]);
        let v = ore_to_json(&d, &f);
        assert_eq!(
            v,
            serde_json::json!({"ring": "x-sigma-delta", "coeffs": ["0 mod 3", "1 mod 3"]})
        );
        assert_eq!(ore_from_json(&d, &v).unwrap(), f);
        assert!(ore_from_json(&d, &serde_json::json!({"ring": "z", "coeffs": []})).is_err());
    }
}
