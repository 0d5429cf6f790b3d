//! Stable and `(σ,δ)`-prime ideals of the coefficient domain, the largest
//! stable ideal inside a prime, and the classification of contractions.
//!
//! Primality of a nonzero `(σ,δ)`-ideal is decided through cores: the core
//! of a prime `q` is the largest `(σ,δ)`-stable ideal inside `q`. Every core
//! is `(σ,δ)`-prime (if `JK ⊆ core(q) ⊆ q` then `J` or `K` lies in `q`,
//! hence in its core), and a nonzero `(σ,δ)`-prime `I = ∏ q_i^{e_i}`
//! contains `∏ core(q_i)^{e_i}`, so it equals one of the cores. Cores with
//! finite orbits are supported on a single orbit, which makes the first
//! prime of `I` a valid representative.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::domain::{self, inner_witness, Domain};
use crate::error::{Error, Result};
use crate::ideal::{
    divisor_ideal, generator, ideal_norm, ideal_sigma, sigma_orbit, FactorDomain, Ideal,
    OrbitResult,
};
use crate::ore::{self, in_extension_unchecked, OrePoly, RingTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabilityMode {
    Sigma,
    Delta,
    SigmaDelta,
}

pub fn is_stable_ideal<D: Domain>(dom: &D, i: &Ideal<D::Elem>, mode: StabilityMode) -> bool {
    let sigma_ok = || ideal_sigma(dom, i, 1) == *i;
    // δ(r·g) = σ(r)δ(g) + δ(r)g, so (g) is δ-stable iff g | δ(g)
    let delta_ok = || {
        let g = generator(dom, i);
        domain::divides(dom, &g, &dom.delta(&g))
    };
    match mode {
        StabilityMode::Sigma => sigma_ok(),
        StabilityMode::Delta => delta_ok(),
        StabilityMode::SigmaDelta => sigma_ok() && delta_ok(),
    }
}

/// `{a ∈ I : δ(a) ∈ I}`. For `I = (g)` and `a = r·g` the condition reads
/// `σ(r)·δ(g) ∈ (g)`, i.e. `r ∈ σ^{-1}(g / gcd(g, δ(g)))`.
pub fn delta_preimage<D: Domain>(dom: &D, i: &Ideal<D::Elem>) -> Ideal<D::Elem> {
    if i.is_zero() {
        return Ideal::Zero;
    }
    let g = generator(dom, i);
    let c = domain::gcd(dom, &g, &dom.delta(&g));
    let q = domain::exact_div(dom, &g, &c).expect("gcd divides");
    let quotient = divisor_ideal(dom, i, &q);
    i.product(&ideal_sigma(dom, &quotient, -1))
}

/// The largest `(σ,δ)`-stable ideal contained in `i`.
///
/// Infinite σ-orbits force the zero ideal: a nonzero σ-stable ideal under a
/// prime would be divisible by every prime of its orbit. Otherwise the
/// σ-orbit intersection is refined by `I ← I ∩ σ(I) ∩ σ^{-1}(I) ∩ Δ(I)`
/// until it stops moving; `budget` caps both the orbit walk and the
/// refinement.
pub fn largest_stable_ideal<D: Domain>(
    dom: &D,
    i: &Ideal<D::Elem>,
    budget: u64,
) -> Result<Ideal<D::Elem>> {
    if i.is_zero() || i.is_unit() {
        return Ok(i.clone());
    }
    let mut cur = Ideal::unit();
    for p in i.support() {
        match sigma_orbit(dom, &p, budget) {
            OrbitResult::Infinite => return Ok(Ideal::Zero),
            OrbitResult::Unknown { .. } => {
                return Err(Error::BudgetExhausted {
                    budget,
                    what: format!("σ-orbit of ({}) did not close", dom.format(&p)),
                })
            }
            OrbitResult::Finite { .. } => {}
        }
    }
    // σ-orbit intersection of i
    let mut shifted = i.clone();
    for _ in 0..budget {
        cur = cur.intersect(&shifted);
        shifted = ideal_sigma(dom, &shifted, 1);
        if shifted == *i {
            break;
        }
    }
    for _ in 0..budget {
        let next = cur
            .intersect(&ideal_sigma(dom, &cur, 1))
            .intersect(&ideal_sigma(dom, &cur, -1))
            .intersect(&delta_preimage(dom, &cur));
        if next == cur {
            debug_assert!(i.contains(&cur));
            return Ok(cur);
        }
        cur = next;
    }
    Err(Error::BudgetExhausted {
        budget,
        what: "stable-ideal refinement did not settle".into(),
    })
}

/// Fast-path decision of `(σ,δ)`-primeness.
pub fn is_sigma_delta_prime<D: Domain>(dom: &D, i: &Ideal<D::Elem>, budget: u64) -> Result<bool> {
    if i.is_zero() {
        return Ok(true);
    }
    if i.is_unit() || !is_stable_ideal(dom, i, StabilityMode::SigmaDelta) {
        return Ok(false);
    }
    let q = i.support().into_iter().next().expect("proper ideal");
    Ok(largest_stable_ideal(dom, &Ideal::prime(q), budget)? == *i)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<E: Ord> {
    /// `𝔭[x;σ,δ]` is a minimal prime of `R`.
    ExtensionMinimal {
        p: Ideal<E>,
    },
    /// Every prime of `R` contracting to `𝔭` is minimal.
    ContractionMinimal {
        p: Ideal<E>,
    },
    /// A nonzero stable ideal (or smaller `(σ,δ)`-prime) strictly inside `𝔭`.
    NotMinimal {
        witness: Ideal<E>,
    },
    OutsideDichotomy {
        reason: String,
    },
    Undecided {
        budget: u64,
        what: String,
    },
}

impl<E: Ord> Verdict<E> {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::ExtensionMinimal { .. } => "ExtensionMinimal",
            Verdict::ContractionMinimal { .. } => "ContractionMinimal",
            Verdict::NotMinimal { .. } => "NotMinimal",
            Verdict::OutsideDichotomy { .. } => "OutsideDichotomy",
            Verdict::Undecided { .. } => "Undecided",
        }
    }
}

// Budget exhaustion becomes an Undecided verdict; other errors propagate.
fn or_undecided<T, E: Ord>(r: Result<T>) -> Result<std::result::Result<T, Verdict<E>>> {
    match r {
        Ok(x) => Ok(Ok(x)),
        Err(Error::BudgetExhausted { budget, what }) => {
            Ok(Err(Verdict::Undecided { budget, what }))
        }
        Err(e) => Err(e),
    }
}

/// Classifies a nonzero contraction `𝔭 = P ∩ D`.
///
/// `𝔭` must be `(σ,δ)`-prime or prime. Minimality among `(σ,δ)`-primes
/// follows the nonzero convention: `(0)` never counts as a smaller one.
pub fn classify_contraction<D: Domain>(
    dom: &D,
    p: &Ideal<D::Elem>,
    budget: u64,
) -> Result<Verdict<D::Elem>> {
    if p.is_zero() {
        return Err(Error::Precondition(
            "the contraction must be nonzero".into(),
        ));
    }
    if p.is_unit() {
        return Err(Error::Precondition("the unit ideal is not prime".into()));
    }
    let sd_prime = match or_undecided(is_sigma_delta_prime(dom, p, budget))? {
        Ok(b) => b,
        Err(v) => return Ok(v),
    };
    if sd_prime {
        for q in p.support() {
            let core = match or_undecided(largest_stable_ideal(dom, &Ideal::prime(q), budget))? {
                Ok(c) => c,
                Err(v) => return Ok(v),
            };
            if !core.is_zero() && p.strictly_contains(&core) {
                return Ok(Verdict::NotMinimal { witness: core });
            }
        }
        return Ok(Verdict::ExtensionMinimal { p: p.clone() });
    }
    let Some(q) = p.as_prime() else {
        return Err(Error::Precondition(
            "the ideal is neither prime nor (σ,δ)-prime".into(),
        ));
    };
    let sq = dom.normalize(&dom.sigma(q));
    if sq != *q {
        return Ok(match or_undecided(largest_stable_ideal(dom, p, budget))? {
            Ok(m) if m.is_zero() => Verdict::ContractionMinimal { p: p.clone() },
            Ok(m) => Verdict::NotMinimal { witness: m },
            Err(v) => v,
        });
    }
    Ok(Verdict::OutsideDichotomy {
        reason: format!("σ fixes ({}) but δ does not preserve it", dom.format(q)),
    })
}

/// Re-checks the obligations a verdict carries.
pub fn validate_verdict<D: Domain>(
    dom: &D,
    p: &Ideal<D::Elem>,
    verdict: &Verdict<D::Elem>,
    budget: u64,
) -> std::result::Result<(), String> {
    match verdict {
        Verdict::ExtensionMinimal { p: q } => {
            if q != p {
                return Err("verdict names a different ideal".into());
            }
            match is_sigma_delta_prime(dom, p, budget) {
                Ok(true) => Ok(()),
                Ok(false) => Err("ExtensionMinimal on an ideal that is not (σ,δ)-prime".into()),
                Err(e) => Err(e.to_string()),
            }
        }
        Verdict::ContractionMinimal { p: q } => {
            if q != p {
                return Err("verdict names a different ideal".into());
            }
            let prime = p
                .as_prime()
                .ok_or("ContractionMinimal on a non-prime ideal")?;
            if dom.normalize(&dom.sigma(prime)) == *prime {
                return Err("ContractionMinimal on a σ-fixed prime".into());
            }
            match largest_stable_ideal(dom, p, budget) {
                Ok(m) if m.is_zero() => Ok(()),
                Ok(_) => Err("a nonzero stable ideal lies inside the prime".into()),
                Err(e) => Err(e.to_string()),
            }
        }
        Verdict::NotMinimal { witness } => {
            if witness.is_zero() {
                return Err("witness is zero".into());
            }
            if !is_stable_ideal(dom, witness, StabilityMode::SigmaDelta) {
                return Err("witness is not (σ,δ)-stable".into());
            }
            if !p.strictly_contains(witness) {
                return Err("witness is not strictly inside the ideal".into());
            }
            Ok(())
        }
        Verdict::OutsideDichotomy { .. } => {
            let prime = p
                .as_prime()
                .ok_or("OutsideDichotomy on a non-prime ideal")?;
            if dom.normalize(&dom.sigma(prime)) != *prime {
                return Err("OutsideDichotomy on a prime moved by σ".into());
            }
            if is_stable_ideal(dom, p, StabilityMode::Delta) {
                return Err("OutsideDichotomy on a δ-stable prime".into());
            }
            Ok(())
        }
        Verdict::Undecided { .. } => Ok(()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalPrimes<E: Ord> {
    /// σ-primes of `D` in the bound; each `𝔭[x;σ,δ]` is a minimal prime.
    pub primes: Vec<Ideal<E>>,
    pub note: &'static str,
}

pub const SPEC0_NOTE: &str = "nonzero members of Spec_0(R) (primes with zero contraction) are \
                              also minimal but are not enumerated";

/// Minimal primes of `R` with nonzero contraction and norm at most
/// `norm_bound`, for an inner `δ` and `σ ≠ id`.
///
/// With `δ` inner every σ-stable ideal is δ-stable, so the contractions are
/// the σ-primes: squarefree products over one finite σ-orbit.
pub fn minimal_primes_inner<D: FactorDomain>(
    dom: &D,
    norm_bound: u64,
) -> Result<MinimalPrimes<D::Elem>> {
    if dom.sigma_is_identity() {
        return Err(Error::NotApplicable("σ is the identity".into()));
    }
    if inner_witness(dom)?.is_none() {
        return Err(Error::NotApplicable("δ is not inner".into()));
    }
    let bound = BigUint::from(norm_bound);
    // an orbit of length k has norm N(p)^k ≥ 2^k
    let steps = u64::from(u64::BITS - norm_bound.leading_zeros()) + 1;
    let mut found: BTreeSet<(BigUint, Ideal<D::Elem>)> = BTreeSet::new();
    for p in dom.enumerate_primes(norm_bound) {
        if let OrbitResult::Finite { primes, .. } = sigma_orbit(dom, &p, steps) {
            let i = Ideal::from_factors(primes.into_iter().map(|q| (q, 1)));
            let n = ideal_norm(dom, &i).expect("nonzero");
            if n <= bound {
                found.insert((n, i));
            }
        }
    }
    Ok(MinimalPrimes {
        primes: found.into_iter().map(|(_, i)| i).collect(),
        note: SPEC0_NOTE,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Falsifier<E> {
    pub f: OrePoly<E>,
    pub r: OrePoly<E>,
    pub g: OrePoly<E>,
}

const FALSIFY_MAX_DEGREE: usize = 4;
const FALSIFY_MAX_MIDDLE: usize = 8;
const POOL_CAP: usize = 4096;

/// Searches for `f, g ∉ 𝔭R` with `f·R·g ⊆ 𝔭R`, which would refute
/// primality of `𝔭R`.
///
/// A single product `f·r·g ∈ 𝔭R` proves nothing once `D/𝔭` has zero
/// divisors, so a pair is only reported when `f·(b·x^k)·g ∈ 𝔭R` for every
/// `b` in an additive basis of `D/𝔭` and every `k ≤ 8`; the returned `r` is
/// the last middle checked. Half of the draws are left multiples of
/// generators of stable ideals strictly between `𝔭` and `D`.
pub fn extend_and_falsify<D: Domain>(
    dom: &D,
    p: &Ideal<D::Elem>,
    samples: u64,
    seed: u64,
) -> Result<Option<Falsifier<D::Elem>>> {
    if !is_stable_ideal(dom, p, StabilityMode::SigmaDelta) {
        return Err(Error::Precondition(
            "falsification needs a (σ,δ)-stable ideal".into(),
        ));
    }
    // (0)R is prime since R is a domain
    if p.is_unit() || p.is_zero() {
        return Ok(None);
    }
    let pool: Vec<D::Elem> = stable_divisors(dom, p)
        .iter()
        .map(|j| generator(dom, j))
        .collect();
    let tag = RingTag::SigmaDelta;
    let middles: Vec<OrePoly<D::Elem>> = (0..=FALSIFY_MAX_MIDDLE)
        .flat_map(|k| {
            dom.residue_basis(&generator(dom, p))
                .into_iter()
                .map(move |b| (b, k))
        })
        .map(|(b, k)| ore::monomial(dom, tag, b, k))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| loop {
        let mut f = ore::random_ore(dom, tag, rng, FALSIFY_MAX_DEGREE, 3);
        if !pool.is_empty() && rng.gen_bool(0.5) {
            let s = &pool[rng.gen_range(0..pool.len())];
            f = ore::scale_left(dom, s, &f);
        }
        if !in_extension_unchecked(dom, &f, p) {
            return f;
        }
    };
    for _ in 0..samples {
        let f = draw(&mut rng);
        let g = draw(&mut rng);
        let kills = middles.iter().all(|r| {
            let prod = ore::mul(dom, &ore::mul(dom, &f, r), &g);
            in_extension_unchecked(dom, &prod, p)
        });
        if kills {
            let r = middles.last().expect("nonempty").clone();
            return Ok(Some(Falsifier { f, r, g }));
        }
    }
    Ok(None)
}

/// Stable ideals `J` with `p ⊊ J ⊊ D`, read off the factored form of `p`.
fn stable_divisors<D: Domain>(dom: &D, p: &Ideal<D::Elem>) -> Vec<Ideal<D::Elem>> {
    let Some(fs) = p.factors() else {
        return Vec::new();
    };
    let fs: Vec<_> = fs.iter().map(|(q, e)| (q.clone(), *e)).collect();
    let mut out = Vec::new();
    let mut exps = vec![0u32; fs.len()];
    let mut visited = 0usize;
    loop {
        let j = Ideal::from_factors(fs.iter().zip(&exps).map(|((q, _), e)| (q.clone(), *e)));
        if !j.is_unit() && j != *p && is_stable_ideal(dom, &j, StabilityMode::SigmaDelta) {
            out.push(j);
        }
        visited += 1;
        if visited >= POOL_CAP {
            break;
        }
        // odometer over 0..=e for each prime
        let mut k = 0;
        while k < fs.len() {
            if exps[k] < fs[k].1 {
                exps[k] += 1;
                break;
            }
            exps[k] = 0;
            k += 1;
        }
        if k == fs.len() {
            break;
        }
    }
    out
}
