//! Brute-force reference checks over bounded instances.
//!
//! Everything here works with principal generators and the definitions:
//! an ideal `(g)` is stable when `g` divides `σ(g)` and `δ(r·g)` for the
//! sampled `r`, containment `(h) ⊆ (g)` is a zero remainder, and
//! `(σ,δ)`-primeness quantifies over every pair of enumerated stable ideals.
//! Factored forms appear only when results are handed back.
//!
//! Two facts keep the bounded searches exact. If stable `J, K` violate
//! primality of `I`, so do `J + I` and `K + I`, which divide `I`; hence
//! enumerating up to the norm and exponents of `I` suffices. And a nonzero
//! stable ideal `M ⊆ 𝔭` found in the enumeration is contained in the true
//! maximum, whose norm divides that of `M`, so the maximum was enumerated
//! too.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use crate::domain::{Domain, GaussianDomain, PolyDomain};
use crate::error::{Error, Result};
use crate::gaussian::Gaussian;
use crate::ideal::{
    enumerate_ideals, format_ideal, generator, ideal_make, ideal_to_json, FactorDomain, Ideal,
};
use crate::prime::{is_sigma_delta_prime, largest_stable_ideal};
use crate::scalar::PrimeField;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleBudget {
    pub norm_bound: u64,
    pub max_exponent: u32,
    pub sample_count: u32,
    pub seed: u64,
}

impl OracleBudget {
    pub fn new(norm_bound: u64) -> Self {
        OracleBudget {
            norm_bound,
            max_exponent: 3,
            sample_count: 8,
            seed: 0,
        }
    }

    pub fn with_max_exponent(self, max_exponent: u32) -> Self {
        OracleBudget {
            max_exponent,
            ..self
        }
    }
}

/// Domains with finite residue rings, where bounded enumeration is
/// exhaustive.
pub trait OracleDomain: FactorDomain {
    /// Canonical nonzero generators of norm at most `bound`.
    fn candidates(&self, bound: u64) -> Vec<Self::Elem>;
    /// `|D/(g)|` for nonzero `g`.
    fn elem_norm(&self, g: &Self::Elem) -> BigUint;
}

impl OracleDomain for GaussianDomain {
    fn candidates(&self, bound: u64) -> Vec<Gaussian> {
        let mut out = Vec::new();
        let mut a = 1u64;
        while a.saturating_mul(a) <= bound {
            let mut b = 0u64;
            while a * a + b.saturating_mul(b) <= bound {
                out.push(Gaussian::new(a, b));
                b += 1;
            }
            a += 1;
        }
        out
    }

    fn elem_norm(&self, g: &Gaussian) -> BigUint {
        g.norm()
    }
}

impl OracleDomain for PolyDomain<PrimeField> {
    fn candidates(&self, bound: u64) -> Vec<Self::Elem> {
        let q = self.field().modulus();
        let mut out = vec![self.one()];
        let mut deg = 1u32;
        while (q as u128).pow(deg) <= bound as u128 {
            for code in 0..q.pow(deg) {
                let mut c = code;
                let mut coeffs: Vec<u64> = (0..deg)
                    .map(|_| {
                        let r = c % q;
                        c /= q;
                        r
                    })
                    .collect();
                coeffs.push(1);
                out.push(self.ring().from_coeffs(coeffs));
            }
            deg += 1;
        }
        out
    }

    fn elem_norm(&self, g: &Self::Elem) -> BigUint {
        BigUint::from(self.field().modulus()).pow(g.degree().unwrap_or(0) as u32)
    }
}

fn divides<D: Domain>(dom: &D, a: &D::Elem, b: &D::Elem) -> bool {
    if dom.is_zero(a) {
        return dom.is_zero(b);
    }
    dom.is_zero(&dom.div_rem(b, a).1)
}

/// `(h) ⊆ (g)`.
fn contained<D: Domain>(dom: &D, h: &D::Elem, g: &D::Elem) -> bool {
    divides(dom, g, h)
}

fn stable_generator<D: Domain>(dom: &D, g: &D::Elem, budget: &OracleBudget) -> bool {
    if !divides(dom, g, &dom.sigma(g)) || !divides(dom, g, &dom.delta(g)) {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let mut probes = dom.ring_generators();
    probes.extend((0..budget.sample_count).map(|_| dom.random_elem(&mut rng, 3)));
    probes.iter().all(|r| {
        let rg = dom.mul(r, g);
        divides(dom, g, &dom.delta(&rg)) && divides(dom, g, &dom.sigma(&rg))
    })
}

// `nonunits` must be sorted by norm.
fn within_exponent_cap<D: OracleDomain>(
    dom: &D,
    g: &D::Elem,
    cap: u32,
    nonunits: &[(BigUint, D::Elem)],
) -> bool {
    let n = dom.elem_norm(g);
    nonunits
        .iter()
        .take_while(|(m, _)| m.pow(cap + 1) <= n)
        .all(|(_, h)| !divides(dom, &dom.pow(h, cap + 1), g))
}

// Nonunit candidates that could appear with exponent above `cap` in an
// element of norm at most `bound`, sorted by norm.
fn cap_probes<D: OracleDomain>(dom: &D, bound: u64, cap: u32) -> Vec<(BigUint, D::Elem)> {
    let root = integer_root(bound, cap + 1);
    let mut out: Vec<(BigUint, D::Elem)> = dom
        .candidates(root)
        .into_iter()
        .filter(|c| !dom.is_unit(c))
        .map(|c| (dom.elem_norm(&c), c))
        .collect();
    out.sort();
    out
}

fn integer_root(n: u64, k: u32) -> u64 {
    let mut r = (n as f64).powf(1.0 / f64::from(k)) as u64;
    while r > 0 && (r as u128).pow(k) > n as u128 {
        r -= 1;
    }
    while ((r + 1) as u128).pow(k) <= n as u128 {
        r += 1;
    }
    r
}

/// Generators `g·h` of the stable ideals inside `(g)` with norm at most the
/// budget, sorted by norm.
fn stable_multiples<D: OracleDomain>(dom: &D, g: &D::Elem, budget: &OracleBudget) -> Vec<D::Elem> {
    let gn = dom.elem_norm(g).to_u64().unwrap_or(u64::MAX).max(1);
    let probes = cap_probes(dom, budget.norm_bound, budget.max_exponent);
    let mut keyed: Vec<(BigUint, D::Elem)> = dom
        .candidates(budget.norm_bound / gn)
        .into_iter()
        .map(|h| dom.normalize(&dom.mul(g, &h)))
        .filter(|m| stable_generator(dom, m, budget))
        .filter(|m| within_exponent_cap(dom, m, budget.max_exponent, &probes))
        .map(|m| (dom.elem_norm(&m), m))
        .collect();
    keyed.sort();
    keyed.into_iter().map(|(_, m)| m).collect()
}

/// Generators of all `(σ,δ)`-stable ideals in the budget, zero first, then
/// by norm.
pub fn stable_generators<D: OracleDomain>(dom: &D, budget: &OracleBudget) -> Vec<D::Elem> {
    let mut out = vec![dom.zero()];
    out.extend(stable_multiples(dom, &dom.one(), budget));
    out
}

pub fn enumerate_stable_ideals<D: OracleDomain>(
    dom: &D,
    budget: &OracleBudget,
) -> Result<Vec<Ideal<D::Elem>>> {
    stable_generators(dom, budget)
        .iter()
        .map(|g| ideal_make(dom, std::slice::from_ref(g)))
        .collect()
}

fn check_in_budget<D: OracleDomain>(dom: &D, g: &D::Elem, budget: &OracleBudget) -> Result<()> {
    if dom.is_zero(g) {
        return Ok(());
    }
    let n = dom.elem_norm(g);
    if n > BigUint::from(budget.norm_bound) {
        return Err(Error::OutOfOracleBudget(format!(
            "norm {n} above bound {}",
            budget.norm_bound
        )));
    }
    let probes = cap_probes(dom, n.to_u64().unwrap_or(u64::MAX), budget.max_exponent);
    if !within_exponent_cap(dom, g, budget.max_exponent, &probes) {
        return Err(Error::OutOfOracleBudget(format!(
            "an exponent exceeds {}",
            budget.max_exponent
        )));
    }
    Ok(())
}

fn sd_prime_gen<D: OracleDomain>(
    dom: &D,
    g: &D::Elem,
    stable: &[D::Elem],
    budget: &OracleBudget,
) -> bool {
    if dom.is_unit(g) || !stable_generator(dom, g, budget) {
        return false;
    }
    for j in stable {
        if contained(dom, j, g) {
            continue;
        }
        for k in stable {
            if contained(dom, k, g) {
                continue;
            }
            if contained(dom, &dom.mul(j, k), g) {
                return false;
            }
        }
    }
    true
}

/// Definitional `(σ,δ)`-primeness.
pub fn brute_is_sigma_delta_prime<D: OracleDomain>(
    dom: &D,
    i: &Ideal<D::Elem>,
    budget: &OracleBudget,
) -> Result<bool> {
    let g = generator(dom, i);
    check_in_budget(dom, &g, budget)?;
    let stable = stable_generators(dom, budget);
    Ok(sd_prime_gen(dom, &g, &stable, budget))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleLargest<E: Ord> {
    Found(Ideal<E>),
    /// Only `(0)` was found; the true maximum may lie outside the bound.
    Flagged,
}

/// The largest enumerated stable ideal inside `p`.
pub fn brute_largest_stable<D: OracleDomain>(
    dom: &D,
    p: &Ideal<D::Elem>,
    budget: &OracleBudget,
) -> Result<OracleLargest<D::Elem>> {
    let pg = generator(dom, p);
    if dom.is_zero(&pg) {
        return Err(Error::Precondition("the prime must be nonzero".into()));
    }
    let inside = stable_multiples(dom, &pg, budget);
    let top = inside
        .iter()
        .find(|m| inside.iter().all(|g| contained(dom, g, m)));
    match top {
        Some(m) => Ok(OracleLargest::Found(ideal_make(
            dom,
            std::slice::from_ref(m),
        )?)),
        None if inside.is_empty() => Ok(OracleLargest::Flagged),
        None => Err(Error::OutOfOracleBudget(
            "stable ideals under the prime have no maximum in the bound".into(),
        )),
    }
}

/// Grows the bound by factors of `N(p)` until a nonzero stable ideal turns
/// up or `limit` is passed.
pub fn brute_largest_stable_deepening<D: OracleDomain>(
    dom: &D,
    p: &Ideal<D::Elem>,
    start: &OracleBudget,
    limit: u64,
) -> Result<OracleLargest<D::Elem>> {
    let step = dom
        .elem_norm(&generator(dom, p))
        .to_u64()
        .unwrap_or(u64::MAX)
        .max(2);
    let mut budget = *start;
    loop {
        let r = brute_largest_stable(dom, p, &budget)?;
        if matches!(r, OracleLargest::Found(_)) || budget.norm_bound >= limit {
            return Ok(r);
        }
        budget.norm_bound = budget.norm_bound.saturating_mul(step).min(limit);
    }
}

/// No nonzero `(σ,δ)`-prime strictly inside `p` within the budget.
pub fn brute_minimality_check<D: OracleDomain>(
    dom: &D,
    p: &Ideal<D::Elem>,
    budget: &OracleBudget,
) -> Result<bool> {
    if !brute_is_sigma_delta_prime(dom, p, budget)? {
        return Err(Error::Precondition("the ideal is not (σ,δ)-prime".into()));
    }
    let pg = generator(dom, p);
    if dom.is_zero(&pg) {
        return Ok(true);
    }
    let stable = stable_generators(dom, budget);
    let smaller = stable.iter().any(|q| {
        !dom.is_zero(q)
            && contained(dom, q, &pg)
            && !contained(dom, &pg, q)
            && sd_prime_gen(dom, q, &stable, budget)
    });
    Ok(!smaller)
}

/// Length of the σ-orbit of a canonical generator, by direct iteration.
pub fn brute_orbit_length<D: Domain>(dom: &D, g: &D::Elem, limit: u64) -> Option<u64> {
    let start = dom.normalize(g);
    let mut cur = start.clone();
    for k in 1..=limit {
        cur = dom.normalize(&dom.sigma(&cur));
        if cur == start {
            return Some(k);
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    pub instance: String,
    pub fast_path_result: Value,
    pub oracle_result: Value,
    pub agree: bool,
}

fn saturating_power(n: &BigUint, k: u64, limit: u64) -> u64 {
    let limit_big = BigUint::from(limit);
    let mut acc = BigUint::one();
    for _ in 0..k {
        acc *= n;
        if acc > limit_big {
            return limit;
        }
    }
    acc.to_u64().unwrap_or(limit)
}

fn fast_bool(r: &Result<bool>) -> Value {
    match r {
        Ok(b) => Value::Bool(*b),
        Err(e) => Value::String(format!("error: {e}")),
    }
}

/// Fast-path against definitional `(σ,δ)`-primeness on the zero ideal and
/// every ideal of norm at most `norm_bound`.
///
/// The oracle's exponent cap is raised to the largest exponent that fits
/// the bound, so no instance is out of oracle range.
pub fn agree_sigma_delta_prime<D: OracleDomain>(
    dom: &D,
    norm_bound: u64,
    budget: u64,
) -> Vec<OracleReport> {
    let cap = (u64::BITS - norm_bound.max(2).leading_zeros()).max(1);
    let ob = OracleBudget::new(norm_bound).with_max_exponent(cap);
    let stable = stable_generators(dom, &ob);
    let mut ideals = vec![Ideal::Zero];
    ideals.extend(enumerate_ideals(dom, norm_bound));
    ideals
        .iter()
        .map(|i| {
            let fast = is_sigma_delta_prime(dom, i, budget);
            let brute = sd_prime_gen(dom, &generator(dom, i), &stable, &ob);
            OracleReport {
                instance: format_ideal(dom, i),
                fast_path_result: fast_bool(&fast),
                oracle_result: Value::Bool(brute),
                agree: matches!(fast, Ok(b) if b == brute),
            }
        })
        .collect()
}

/// Fast-path against brute-force largest stable ideals for every prime of
/// norm at most `norm_bound`. The oracle bound starts at `N(p)^period` and
/// deepens up to `limit`.
pub fn agree_largest_stable<D: OracleDomain>(
    dom: &D,
    norm_bound: u64,
    budget: u64,
    limit: u64,
) -> Vec<OracleReport> {
    dom.enumerate_primes(norm_bound)
        .into_iter()
        .map(|q| {
            let p = Ideal::prime(q.clone());
            let fast = largest_stable_ideal(dom, &p, budget);
            let period = brute_orbit_length(dom, &q, budget).unwrap_or(budget);
            let start = OracleBudget::new(saturating_power(&dom.elem_norm(&q), period, limit))
                .with_max_exponent(16);
            let brute = brute_largest_stable_deepening(dom, &p, &start, limit);
            let fast_v = match &fast {
                Ok(i) => ideal_to_json(dom, i),
                Err(e) => Value::String(format!("error: {e}")),
            };
            let brute_v = match &brute {
                Ok(OracleLargest::Found(i)) => ideal_to_json(dom, i),
                Ok(OracleLargest::Flagged) => Value::String("flagged".into()),
                Err(e) => Value::String(format!("error: {e}")),
            };
            let agree = matches!((&fast, &brute), (Ok(a), Ok(OracleLargest::Found(b))) if a == b);
            OracleReport {
                instance: format_ideal(dom, &p),
                fast_path_result: fast_v,
                oracle_result: brute_v,
                agree,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::FiniteFieldPoly;

    fn f3(h: &[i64]) -> FiniteFieldPoly {
        FiniteFieldPoly::affine(3, 1, 1, h).unwrap()
    }

    fn pid<D: FactorDomain>(d: &D, s: &str) -> Ideal<D::Elem> {
        ideal_make(d, &[d.parse(s).unwrap()]).unwrap()
    }

    #[test]
    fn stable_enumeration_examples() {
        let d = f3(&[1]);
        let all = enumerate_stable_ideals(&d, &OracleBudget::new(27)).unwrap();
        assert!(all.contains(&Ideal::Zero));
        assert!(all.contains(&Ideal::unit()));
        assert!(all.contains(&pid(&d, "t^3 - t")));
        assert_eq!(
            enumerate_stable_ideals(&d, &OracleBudget::new(1)).unwrap(),
            vec![Ideal::Zero, Ideal::unit()]
        );
        let z = GaussianDomain::conjugation(1);
        let all = enumerate_stable_ideals(&z, &OracleBudget::new(50)).unwrap();
        for s in ["2", "5"] {
            assert!(all.contains(&pid(&z, s)), "{s}");
        }
        assert!(!all.contains(&pid(&z, "1+i")));
        // (10) has norm 100
        assert!(!all.contains(&pid(&z, "10")));
        let all = enumerate_stable_ideals(&z, &OracleBudget::new(100)).unwrap();
        assert!(all.contains(&pid(&z, "10")));
    }

    #[test]
    fn brute_prime_examples() {
        let d = f3(&[1]);
        let b = OracleBudget::new(729).with_max_exponent(2);
        let s = pid(&d, "t^3 - t");
        assert!(brute_is_sigma_delta_prime(&d, &s, &b).unwrap());
        assert!(!brute_is_sigma_delta_prime(&d, &s.power(2), &b).unwrap());
        assert!(brute_is_sigma_delta_prime(&d, &Ideal::Zero, &b).unwrap());
    }

    #[test]
    fn brute_largest_examples() {
        let d = f3(&[1]);
        assert_eq!(
            brute_largest_stable(&d, &pid(&d, "t"), &OracleBudget::new(27)).unwrap(),
            OracleLargest::Found(pid(&d, "t^3 - t"))
        );
        let z = GaussianDomain::conjugation(1);
        assert_eq!(
            brute_largest_stable(&z, &pid(&z, "2+i"), &OracleBudget::new(50)).unwrap(),
            OracleLargest::Found(pid(&z, "5"))
        );
        // t^3 + t^2 + 2 over F_3 moves under t ↦ t + 1: its orbit product
        // has norm 3^9, far outside a bound of 27.
        let p = pid(&d, "t^3 + t^2 + 2");
        assert!(matches!(
            brute_largest_stable(&d, &p, &OracleBudget::new(27)),
            Ok(OracleLargest::Flagged)
        ));
    }

    #[test]
    fn brute_minimality_examples() {
        let d = f3(&[1]);
        let b = OracleBudget::new(729);
        assert!(brute_minimality_check(&d, &pid(&d, "t^3 - t"), &b).unwrap());
        assert!(brute_minimality_check(&d, &Ideal::Zero, &b).unwrap());
        // (t^3 - t) times the orbit product of t^2 + 1 is stable but not prime
        let q = pid(&d, "t^2 + 1")
            .intersect(&pid(&d, "t^2 + 2*t + 2"))
            .intersect(&pid(&d, "t^2 + t + 2"));
        let both = pid(&d, "t^3 - t").product(&q);
        let big = OracleBudget::new(20000);
        assert!(matches!(
            brute_minimality_check(&d, &both, &big),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn agreement_suites_small() {
        for h in [&[1][..], &[0, 1][..]] {
            let d = f3(h);
            let r = agree_sigma_delta_prime(&d, 27, 1000);
            assert!(
                r.iter().all(|x| x.agree),
                "{:?}",
                r.iter().find(|x| !x.agree)
            );
            let r = agree_largest_stable(&d, 27, 1000, 1_000_000);
            assert!(
                r.iter().all(|x| x.agree),
                "{:?}",
                r.iter().find(|x| !x.agree)
            );
        }
        let g = GaussianDomain::conjugation(2);
        assert!(agree_sigma_delta_prime(&g, 25, 1000)
            .iter()
            .all(|x| x.agree));
        assert!(agree_largest_stable(&g, 25, 1000, 1_000_000)
            .iter()
            .all(|x| x.agree));
    }
}
