//! Factorization over prime fields: square-free decomposition, distinct
//! degree splitting and Cantor–Zassenhaus equal-degree splitting.

use num_bigint::BigUint;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Poly, PolyRing};
use crate::scalar::{Field, PrimeField};

type P = Poly<u64>;

/// Monic irreducible factors of `f` with multiplicities, sorted.
/// `f` must be nonzero; the leading coefficient is discarded.
pub fn factor_finite(ring: &PolyRing<PrimeField>, f: &P) -> Vec<(P, u32)> {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let f = ring.monic(f);
    let mut out: Vec<(P, u32)> = Vec::new();
    // The same seed every call keeps factorization deterministic.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for (sqf, mult) in squarefree(ring, &f) {
        for (block, d) in distinct_degree(ring, &sqf) {
            for irr in equal_degree(ring, &block, d, &mut rng) {
                out.push((irr, mult));
            }
        }
    }
    out.sort();
    out
}

pub fn is_irreducible_finite(ring: &PolyRing<PrimeField>, f: &P) -> bool {
    match f.degree() {
        None | Some(0) => false,
        Some(1) => true,
        Some(_) => {
            let fs = factor_finite(ring, f);
            fs.len() == 1 && fs[0].1 == 1
        }
    }
}

fn squarefree(ring: &PolyRing<PrimeField>, f: &P) -> Vec<(P, u32)> {
    let p = ring.field().modulus();
    let mut result = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return result;
    }
    let df = ring.derivative(f);
    let mut c = ring.gcd(f, &df);
    let mut w = ring.exact_div(f, &c).expect("gcd divides f");
    let mut i = 1u32;
    while !ring.is_one(&w) {
        let y = ring.gcd(&w, &c);
        let fac = ring.exact_div(&w, &y).expect("gcd divides w");
        if fac.degree().unwrap_or(0) > 0 {
            result.push((ring.monic(&fac), i));
        }
        c = ring.exact_div(&c, &y).expect("gcd divides c");
        w = y;
        i += 1;
    }
    if c.degree().unwrap_or(0) > 0 {
        // c is a p-th power: c(t) = g(t^p) with g(t)^p = g(t^p) over F_p.
        let root = ring.from_coeffs(c.coeffs().iter().step_by(p as usize).cloned().collect());
        for (g, m) in squarefree(ring, &root) {
            result.push((g, m * p as u32));
        }
    }
    result
}

fn distinct_degree(ring: &PolyRing<PrimeField>, f: &P) -> Vec<(P, usize)> {
    let p = BigUint::from(ring.field().modulus());
    let mut out = Vec::new();
    let mut rest = ring.monic(f);
    let t = ring.var();
    let mut h = ring.rem(&t, &rest);
    let mut d = 1usize;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = ring.pow_mod(&h, &p, &rest);
        let g = ring.gcd(&ring.sub(&h, &t), &rest);
        if !ring.is_one(&g) {
            out.push((g.clone(), d));
            rest = ring.exact_div(&rest, &g).expect("gcd divides");
            h = ring.rem(&h, &rest);
        }
        d += 1;
    }
    if let Some(deg) = rest.degree() {
        if deg > 0 {
            out.push((rest, deg));
        }
    }
    out
}

fn equal_degree(ring: &PolyRing<PrimeField>, f: &P, d: usize, rng: &mut ChaCha8Rng) -> Vec<P> {
    let n = f.degree().expect("nonzero");
    if n == d {
        return vec![ring.monic(f)];
    }
    let field = *ring.field();
    let p = field.modulus();
    loop {
        let a = ring.from_coeffs((0..n).map(|_| field.random(rng)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // Trace map t + t^2 + ... + t^(2^(d-1)) into F_2.
            let mut acc = a.clone();
            let mut cur = a.clone();
            for _ in 1..d {
                cur = ring.mul_mod(&cur, &cur, f);
                acc = ring.add(&acc, &cur);
            }
            acc
        } else {
            let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) >> 1;
            ring.sub(&ring.pow_mod(&a, &e, f), &ring.one())
        };
        let g = ring.gcd(f, &b);
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let other = ring.exact_div(f, &g).expect("gcd divides");
            let mut out = equal_degree(ring, &g, d, rng);
            out.extend(equal_degree(ring, &other, d, rng));
            return out;
        }
    }
}
