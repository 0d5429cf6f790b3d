//! Ideals of the coefficient domains in factored form.
//!
//! All three testbeds are principal ideal domains, so an ideal is either
//! zero or a product of canonical prime generators with positive exponents.
//! Containment is divisibility and intersection takes exponent-wise maxima.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Value};

use crate::domain::{self, Domain, GaussianDomain, MapOrder, PolyDomain};
use crate::error::{Error, ParseError, Result};
use crate::gaussian::enumerate_gaussian_primes;
use crate::poly::{factor_finite, factor_rational, is_irreducible_finite, is_irreducible_rational};
use crate::scalar::{Field, PrimeField, Rationals};

/// Domains whose elements can be split into canonical primes.
pub trait FactorDomain: Domain {
    /// Canonical prime factors of a nonzero element, sorted.
    fn factor(&self, a: &Self::Elem) -> Result<Vec<(Self::Elem, u32)>>;
    fn is_prime_elem(&self, a: &Self::Elem) -> Result<bool>;
    /// Residue-ring cardinality, or the height surrogate on `Q[t]`.
    fn prime_norm(&self, p: &Self::Elem) -> BigUint;
    /// Canonical primes of norm at most `bound`, sorted by norm then
    /// generator.
    fn enumerate_primes(&self, bound: u64) -> Vec<Self::Elem>;
}

impl FactorDomain for GaussianDomain {
    fn factor(&self, a: &Self::Elem) -> Result<Vec<(Self::Elem, u32)>> {
        a.factor()
    }
    fn is_prime_elem(&self, a: &Self::Elem) -> Result<bool> {
        a.is_prime()
    }
    fn prime_norm(&self, p: &Self::Elem) -> BigUint {
        p.norm()
    }
    fn enumerate_primes(&self, bound: u64) -> Vec<Self::Elem> {
        enumerate_gaussian_primes(bound)
    }
}

impl FactorDomain for PolyDomain<PrimeField> {
    fn factor(&self, a: &Self::Elem) -> Result<Vec<(Self::Elem, u32)>> {
        Ok(factor_finite(self.ring(), a))
    }
    fn is_prime_elem(&self, a: &Self::Elem) -> Result<bool> {
        Ok(is_irreducible_finite(self.ring(), a))
    }
    fn prime_norm(&self, p: &Self::Elem) -> BigUint {
        let q = self.field().modulus();
        BigUint::from(q).pow(p.degree().unwrap_or(0) as u32)
    }
    fn enumerate_primes(&self, bound: u64) -> Vec<Self::Elem> {
        let q = self.field().modulus();
        let mut out = Vec::new();
        let mut deg = 1u32;
        while (q as u128).pow(deg) <= bound as u128 {
            // monic polynomials of degree `deg`, lower coefficients as base-q digits
            let count = q.pow(deg);
            for code in 0..count {
                let mut coeffs = Vec::with_capacity(deg as usize + 1);
                let mut c = code;
                for _ in 0..deg {
                    coeffs.push(c % q);
                    c /= q;
                }
                coeffs.push(1);
                let f = self.ring().from_coeffs(coeffs);
                if is_irreducible_finite(self.ring(), &f) {
                    out.push(f);
                }
            }
            deg += 1;
        }
        out.sort();
        out
    }
}

impl FactorDomain for PolyDomain<Rationals> {
    fn factor(&self, a: &Self::Elem) -> Result<Vec<(Self::Elem, u32)>> {
        factor_rational(self.ring(), a)
    }
    fn is_prime_elem(&self, a: &Self::Elem) -> Result<bool> {
        is_irreducible_rational(a)
    }
    fn prime_norm(&self, p: &Self::Elem) -> BigUint {
        let f = self.field();
        let h = p
            .coeffs()
            .iter()
            .map(|c| f.height(c))
            .max()
            .unwrap_or_default();
        BigUint::from(p.degree().unwrap_or(0)) + h
    }
    /// Only the monic linear primes `t − r`; their surrogate norm is
    /// `1 + max(|num r|, den r)`.
    fn enumerate_primes(&self, bound: u64) -> Vec<Self::Elem> {
        let f = self.field();
        let mut out = Vec::new();
        if bound < 2 {
            return out;
        }
        let h = (bound - 1) as i64;
        for den in 1..=h {
            for num in -h..=h {
                if num.gcd(&den) != 1 {
                    continue;
                }
                let r = f.from_ratio(&num.into(), &den.into()).expect("nonzero den");
                out.push(self.ring().from_coeffs(vec![f.neg(&r), f.one()]));
            }
        }
        let mut keyed: Vec<_> = out.into_iter().map(|p| (self.prime_norm(&p), p)).collect();
        keyed.sort();
        keyed.into_iter().map(|(_, p)| p).collect()
    }
}

/// An ideal in canonical factored form. The empty factorization is the
/// unit ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ideal<E: Ord> {
    Zero,
    Factored(BTreeMap<E, u32>),
}

impl<E: Clone + Ord> Ideal<E> {
    pub fn zero() -> Self {
        Ideal::Zero
    }

    pub fn unit() -> Self {
        Ideal::Factored(BTreeMap::new())
    }

    /// `p^e` for a canonical prime `p`.
    pub fn prime_power(p: E, e: u32) -> Self {
        let mut m = BTreeMap::new();
        if e > 0 {
            m.insert(p, e);
        }
        Ideal::Factored(m)
    }

    pub fn prime(p: E) -> Self {
        Ideal::prime_power(p, 1)
    }

    pub fn from_factors(fs: impl IntoIterator<Item = (E, u32)>) -> Self {
        let mut m = BTreeMap::new();
        for (p, e) in fs {
            if e > 0 {
                *m.entry(p).or_insert(0) += e;
            }
        }
        Ideal::Factored(m)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Ideal::Zero)
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Ideal::Factored(m) if m.is_empty())
    }

    /// Sorted `(prime, exponent)` pairs; `None` for the zero ideal.
    pub fn factors(&self) -> Option<&BTreeMap<E, u32>> {
        match self {
            Ideal::Zero => None,
            Ideal::Factored(m) => Some(m),
        }
    }

    pub fn support(&self) -> Vec<E> {
        self.factors()
            .map(|m| m.keys().cloned().collect())
            .unwrap_or_default()
    }

    pub fn exponent(&self, p: &E) -> u32 {
        self.factors().and_then(|m| m.get(p).copied()).unwrap_or(0)
    }

    /// Is this a single prime with exponent one?
    pub fn as_prime(&self) -> Option<&E> {
        match self.factors() {
            Some(m) if m.len() == 1 => m.iter().next().filter(|(_, e)| **e == 1).map(|(p, _)| p),
            _ => None,
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors().is_some_and(|m| m.values().all(|e| *e == 1))
    }

    pub fn product(&self, other: &Self) -> Self {
        match (self, other) {
            (Ideal::Factored(a), Ideal::Factored(b)) => {
                let mut m = a.clone();
                for (p, e) in b {
                    *m.entry(p.clone()).or_insert(0) += e;
                }
                Ideal::Factored(m)
            }
            _ => Ideal::Zero,
        }
    }

    pub fn power(&self, k: u32) -> Self {
        (0..k).fold(Ideal::unit(), |acc, _| acc.product(self))
    }

    pub fn intersect(&self, other: &Self) -> Self {
        match (self, other) {
            (Ideal::Zero, _) | (_, Ideal::Zero) => Ideal::Zero,
            (Ideal::Factored(a), Ideal::Factored(b)) => {
                let mut m = a.clone();
                for (p, e) in b {
                    let slot = m.entry(p.clone()).or_insert(0);
                    *slot = (*slot).max(*e);
                }
                Ideal::Factored(m)
            }
        }
    }

    /// `self + other`: exponent-wise minima.
    pub fn sum(&self, other: &Self) -> Self {
        match (self, other) {
            (Ideal::Zero, x) | (x, Ideal::Zero) => x.clone(),
            (Ideal::Factored(a), Ideal::Factored(b)) => Ideal::Factored(
                a.iter()
                    .filter_map(|(p, e)| b.get(p).map(|f| (p.clone(), (*e).min(*f))))
                    .collect(),
            ),
        }
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Self) -> bool {
        match (self, other) {
            (_, Ideal::Zero) => true,
            (Ideal::Zero, _) => false,
            (Ideal::Factored(a), Ideal::Factored(b)) => {
                a.iter().all(|(p, e)| b.get(p).is_some_and(|f| f >= e))
            }
        }
    }

    /// `other ⊊ self`.
    pub fn strictly_contains(&self, other: &Self) -> bool {
        self != other && self.contains(other)
    }

    /// Are `self` and `other` comaximal?
    pub fn coprime(&self, other: &Self) -> bool {
        self.sum(other).is_unit()
    }
}

/// The ideal generated by `gens`.
pub fn ideal_make<D: FactorDomain>(dom: &D, gens: &[D::Elem]) -> Result<Ideal<D::Elem>> {
    if gens.is_empty() {
        return Err(Error::Precondition(
            "an ideal needs at least one generator".into(),
        ));
    }
    let g = gens
        .iter()
        .fold(dom.zero(), |acc, x| domain::gcd(dom, &acc, x));
    if dom.is_zero(&g) {
        return Ok(Ideal::Zero);
    }
    Ok(Ideal::from_factors(dom.factor(&g)?))
}

/// A principal generator; zero for the zero ideal, one for the unit ideal.
pub fn generator<D: Domain>(dom: &D, i: &Ideal<D::Elem>) -> D::Elem {
    match i {
        Ideal::Zero => dom.zero(),
        Ideal::Factored(m) => dom.normalize(
            &m.iter()
                .fold(dom.one(), |acc, (p, e)| dom.mul(&acc, &dom.pow(p, *e))),
        ),
    }
}

pub fn ideal_factor<D: Domain>(i: &Ideal<D::Elem>) -> Result<Vec<(D::Elem, u32)>> {
    match i {
        Ideal::Zero => Err(Error::Precondition(
            "the zero ideal has no factorization".into(),
        )),
        Ideal::Factored(m) => Ok(m.iter().map(|(p, e)| (p.clone(), *e)).collect()),
    }
}

/// Norm of a nonzero ideal; `None` for the zero ideal.
pub fn ideal_norm<D: FactorDomain>(dom: &D, i: &Ideal<D::Elem>) -> Option<BigUint> {
    i.factors().map(|m| {
        m.iter().fold(BigUint::one(), |acc, (p, e)| {
            acc * dom.prime_norm(p).pow(*e)
        })
    })
}

/// `σ^k(I)`.
pub fn ideal_sigma<D: Domain>(dom: &D, i: &Ideal<D::Elem>, k: i64) -> Ideal<D::Elem> {
    match i {
        Ideal::Zero => Ideal::Zero,
        Ideal::Factored(m) => Ideal::from_factors(
            m.iter()
                .map(|(p, e)| (dom.normalize(&dom.sigma_pow(p, k)), *e)),
        ),
    }
}

/// Factors `a`, a divisor of the generator of `i`, by trial division with
/// the primes of `i`.
pub fn divisor_ideal<D: Domain>(dom: &D, i: &Ideal<D::Elem>, a: &D::Elem) -> Ideal<D::Elem> {
    assert!(!dom.is_zero(a), "zero is not a divisor");
    let mut rest = a.clone();
    let mut out = BTreeMap::new();
    for p in i.support() {
        let mut k = 0;
        while let Some(q) = domain::exact_div(dom, &rest, &p) {
            rest = q;
            k += 1;
        }
        if k > 0 {
            out.insert(p, k);
        }
    }
    debug_assert!(
        dom.is_unit(&rest),
        "element does not divide the ideal generator"
    );
    Ideal::Factored(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitResult<E> {
    /// `[p, σ(p), …]` closing up after `period` steps.
    Finite {
        primes: Vec<E>,
        period: u64,
    },
    Infinite,
    /// Neither closed within the bound nor provably infinite.
    Unknown {
        explored: Vec<E>,
    },
}

/// The σ-orbit of a canonical prime.
///
/// On `Q[t]` with an affine map of infinite order, the only periodic points
/// of `t ↦ a·t + b` over an algebraic closure are fixed points, so a prime
/// has a finite orbit exactly when `σ` fixes it.
pub fn sigma_orbit<D: Domain>(dom: &D, p: &D::Elem, bound: u64) -> OrbitResult<D::Elem> {
    let p = dom.normalize(p);
    if dom.sigma_order() == MapOrder::Infinite {
        let sp = dom.normalize(&dom.sigma(&p));
        return if sp == p {
            OrbitResult::Finite {
                primes: vec![p],
                period: 1,
            }
        } else {
            OrbitResult::Infinite
        };
    }
    let mut primes = vec![p.clone()];
    let mut cur = p.clone();
    for _ in 0..bound {
        cur = dom.normalize(&dom.sigma(&cur));
        if cur == p {
            let period = primes.len() as u64;
            return OrbitResult::Finite { primes, period };
        }
        primes.push(cur.clone());
    }
    OrbitResult::Unknown { explored: primes }
}

/// All nonzero ideals of norm at most `bound`, sorted by norm then factored
/// form. The unit ideal is included.
pub fn enumerate_ideals<D: FactorDomain>(dom: &D, bound: u64) -> Vec<Ideal<D::Elem>> {
    let primes: Vec<(D::Elem, u64)> = dom
        .enumerate_primes(bound)
        .into_iter()
        .map(|p| {
            let n = dom.prime_norm(&p).to_u64().unwrap_or(u64::MAX);
            (p, n)
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = BTreeMap::new();
    extend_ideals(&primes, 0, 1, bound, &mut cur, &mut out);
    out.sort_by_key(|(n, i)| (*n, i.clone()));
    out.into_iter().map(|(_, i)| i).collect()
}

fn extend_ideals<E: Clone + Ord>(
    primes: &[(E, u64)],
    start: usize,
    norm: u64,
    bound: u64,
    cur: &mut BTreeMap<E, u32>,
    out: &mut Vec<(u64, Ideal<E>)>,
) {
    out.push((norm, Ideal::Factored(cur.clone())));
    for k in start..primes.len() {
        let (p, n) = &primes[k];
        let mut acc = norm;
        let mut e = 0;
        loop {
            acc = match acc.checked_mul(*n) {
                Some(x) if x <= bound => x,
                _ => break,
            };
            e += 1;
            cur.insert(p.clone(), e);
            extend_ideals(primes, k + 1, acc, bound, cur, out);
        }
        cur.remove(p);
    }
}

// ---------------------------------------------------------------------------
// Text and JSON forms

/// `(g)` with `g` the canonical generator; `(0)` for the zero ideal.
pub fn format_ideal<D: Domain>(dom: &D, i: &Ideal<D::Elem>) -> String {
    format!("({})", dom.format(&generator(dom, i)))
}

pub fn ideal_to_json<D: Domain>(dom: &D, i: &Ideal<D::Elem>) -> Value {
    match i {
        Ideal::Zero => json!({"zero": true}),
        Ideal::Factored(m) if m.is_empty() => json!({"unit": true}),
        Ideal::Factored(m) => Value::Array(
            m.iter()
                .map(|(p, e)| json!({"prime": dom.format(p), "exp": e}))
                .collect(),
        ),
    }
}

/// Reads the JSON form; every listed prime is re-checked and normalized.
pub fn ideal_from_json<D: FactorDomain>(dom: &D, v: &Value) -> Result<Ideal<D::Elem>> {
    let bad = |msg: &str| Error::Parse(ParseError::Invalid(msg.to_string()));
    match v {
        Value::Object(o) if o.len() == 1 && o.get("zero") == Some(&Value::Bool(true)) => {
            Ok(Ideal::Zero)
        }
        Value::Object(o) if o.len() == 1 && o.get("unit") == Some(&Value::Bool(true)) => {
            Ok(Ideal::unit())
        }
        Value::Array(items) => {
            if items.is_empty() {
                return Err(bad("empty factor list; use {\"unit\": true}"));
            }
            let mut fs = Vec::with_capacity(items.len());
            for item in items {
                let o = item
                    .as_object()
                    .ok_or_else(|| bad("factor must be an object"))?;
                if o.len() != 2 {
                    return Err(bad("factor needs exactly the keys prime and exp"));
                }
                let text = o
                    .get("prime")
                    .and_then(Value::as_str)
                    .ok_or_else(|| bad("prime must be a string"))?;
                let exp = o
                    .get("exp")
                    .and_then(Value::as_u64)
                    .filter(|e| (1..=u64::from(MAX_IDEAL_EXPONENT)).contains(e))
                    .ok_or_else(|| bad("exp must be a positive integer"))?;
                let p = dom.normalize(&dom.parse(text)?);
                if !dom.is_prime_elem(&p)? {
                    return Err(bad(&format!("{text} is not prime")));
                }
                fs.push((p, exp as u32));
            }
            Ok(Ideal::from_factors(fs))
        }
        _ => Err(bad(
            "expected {\"zero\":true}, {\"unit\":true} or a factor list",
        )),
    }
}

/// Largest exponent accepted when reading ideals.
pub const MAX_IDEAL_EXPONENT: u32 = 64;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{FiniteFieldPoly, RationalPoly};
    use crate::gaussian::Gaussian;

    fn f3() -> FiniteFieldPoly {
        FiniteFieldPoly::affine(3, 1, 1, &[1]).unwrap()
    }

    fn pid(d: &FiniteFieldPoly, s: &str) -> Ideal<crate::poly::Poly<u64>> {
        ideal_make(d, &[d.parse(s).unwrap()]).unwrap()
    }

    #[test]
    fn make_examples() {
        let z = GaussianDomain::conjugation(2);
        let i = ideal_make(&z, &[Gaussian::new(2, 0), Gaussian::new(1, 1)]).unwrap();
        assert_eq!(i, Ideal::prime(Gaussian::new(1, 1)));
        assert_eq!(ideal_make(&z, &[Gaussian::zero()]).unwrap(), Ideal::Zero);
        let d = f3();
        let i = ideal_make(
            &d,
            &[d.parse("t^2 - 1").unwrap(), d.parse("t - 1").unwrap()],
        )
        .unwrap();
        assert_eq!(i, Ideal::prime(d.parse("t + 2").unwrap()));
    }

    #[test]
    fn product_and_intersection_examples() {
        let z = GaussianDomain::conjugation(2);
        let p = Ideal::prime(Gaussian::new(1, 1));
        let two = ideal_make(&z, &[Gaussian::new(2, 0)]).unwrap();
        assert_eq!(p.product(&p), two);
        assert_eq!(two.intersect(&p), two);
        assert_eq!(p.product(&Ideal::unit()), p);
        let d = f3();
        let a = pid(&d, "t");
        let b = pid(&d, "t + 1");
        assert_eq!(a.product(&b), pid(&d, "t^2 + t"));
        assert_eq!(a.intersect(&b), a.product(&b));
        assert_eq!(a.intersect(&a), a);
    }

    #[test]
    fn containment_examples() {
        let d = f3();
        assert!(pid(&d, "t").contains(&pid(&d, "t^2")));
        assert!(!pid(&d, "t").contains(&pid(&d, "t + 1")));
        assert!(pid(&d, "t").contains(&Ideal::Zero));
        assert!(!Ideal::<Gaussian>::Zero.contains(&Ideal::unit()));
    }

    #[test]
    fn factor_examples() {
        let d = f3();
        let fs = ideal_factor::<FiniteFieldPoly>(&pid(&d, "t^3 - t")).unwrap();
        let names: Vec<String> = fs.iter().map(|(p, _)| d.format(p)).collect();
        assert_eq!(names, ["t mod 3", "1 + t mod 3", "2 + t mod 3"]);
        let z = GaussianDomain::conjugation(1);
        let five = ideal_make(&z, &[Gaussian::new(5, 0)]).unwrap();
        let fs = ideal_factor::<GaussianDomain>(&five).unwrap();
        assert_eq!(fs, vec![(Gaussian::new(1, 2), 1), (Gaussian::new(2, 1), 1)]);
        assert!(ideal_factor::<GaussianDomain>(&Ideal::unit())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn orbit_examples() {
        let d = f3();
        match sigma_orbit(&d, &d.parse("t").unwrap(), 10) {
            OrbitResult::Finite { primes, period } => {
                assert_eq!(period, 3);
                assert_eq!(primes[1], d.parse("t + 1").unwrap());
                assert_eq!(primes[2], d.parse("t + 2").unwrap());
            }
            other => panic!("{other:?}"),
        }
        let z = GaussianDomain::conjugation(1);
        assert_eq!(
            sigma_orbit(&z, &Gaussian::new(2, 1), 10),
            OrbitResult::Finite {
                primes: vec![Gaussian::new(2, 1), Gaussian::new(1, 2)],
                period: 2
            }
        );
        let q = RationalPoly::affine(2, 0, &[1]).unwrap();
        assert_eq!(
            sigma_orbit(&q, &q.parse("t - 1").unwrap(), 10),
            OrbitResult::Infinite
        );
        assert!(matches!(
            sigma_orbit(&q, &q.parse("t").unwrap(), 10),
            OrbitResult::Finite { period: 1, .. }
        ));
        // F_7 with σ(t) = t + 1 has order 7; a short bound cannot close it.
        let long = FiniteFieldPoly::affine(7, 1, 1, &[0]).unwrap();
        assert!(matches!(
            sigma_orbit(&long, &long.parse("t").unwrap(), 3),
            OrbitResult::Unknown { .. }
        ));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(f3().enumerate_primes(9).len(), 6);
        let z = GaussianDomain::conjugation(1);
        assert_eq!(
            z.enumerate_primes(5),
            vec![
                Gaussian::new(1, 1),
                Gaussian::new(1, 2),
                Gaussian::new(2, 1)
            ]
        );
        assert!(z.enumerate_primes(1).is_empty());
        assert!(f3().enumerate_primes(1).is_empty());
        let q = RationalPoly::affine(2, 0, &[1]).unwrap();
        let lin = q.enumerate_primes(3);
        // t, t ± 1, t ± 2, t ± 1/2
        assert_eq!(lin.len(), 7);
    }

    #[test]
    fn enumerated_ideals_roundtrip() {
        let d = f3();
        let all = enumerate_ideals(&d, 81);
        for i in &all {
            let g = generator(&d, i);
            assert_eq!(&ideal_make(&d, &[g]).unwrap(), i);
        }
        let z = GaussianDomain::conjugation(1);
        let all = enumerate_ideals(&z, 100);
        // ideals of Z[i] with norm n ≤ 100 correspond to first-quadrant
        // elements with a > 0, b ≥ 0 and a² + b² ≤ 100
        let mut expected = 0;
        for a in 1..=10i64 {
            for b in 0..=10i64 {
                if a * a + b * b <= 100 {
                    expected += 1;
                }
            }
        }
        assert_eq!(all.len(), expected);
        for i in &all {
            let g = generator(&z, i);
            assert_eq!(&ideal_make(&z, &[g]).unwrap(), i);
        }
    }

    #[test]
    fn json_roundtrip() {
        let d = f3();
        for i in [
            Ideal::Zero,
            Ideal::unit(),
            pid(&d, "t^3 - t"),
            pid(&d, "t^2"),
        ] {
            let v = ideal_to_json(&d, &i);
            assert_eq!(ideal_from_json(&d, &v).unwrap(), i);
        }
        let bad = serde_json::json!([{"prime": "t^2 + 2 mod 3", "exp": 1}]);
        assert!(ideal_from_json(&d, &bad).is_err());
    }
}
