#[macro_use]
mod common;

use ore_core::domain::{apply_delta, apply_sigma, inner_witness, Domain};
use ore_core::ore::{
    add, from_pure_sigma, from_right_coefficients, mul, ore_from_json, ore_to_json, random_ore,
    right_coefficients, to_pure_sigma, xn_times_a, OrePoly, RingTag,
};
use proptest::prelude::*;

fn triple<D: Domain>(d: &D, seed: u64) -> [OrePoly<D::Elem>; 3] {
    let mut r = common::rng(seed);
    [0, 1, 2].map(|_| random_ore(d, RingTag::SigmaDelta, &mut r, 6, 2))
}

fn ring_axioms<D: Domain>(d: &D, seed: u64) -> Result<(), String> {
    let [f, g, h] = triple(d, seed);
    if mul(d, &mul(d, &f, &g), &h) != mul(d, &f, &mul(d, &g, &h)) {
        return Err("associativity".into());
    }
    if mul(d, &f, &add(d, &g, &h)) != add(d, &mul(d, &f, &g), &mul(d, &f, &h)) {
        return Err("left distributivity".into());
    }
    if mul(d, &add(d, &f, &g), &h) != add(d, &mul(d, &f, &h), &mul(d, &g, &h)) {
        return Err("right distributivity".into());
    }
    Ok(())
}

fn degree_law<D: Domain>(d: &D, seed: u64) -> Result<(), String> {
    let [f, g, _] = triple(d, seed);
    let fg = mul(d, &f, &g);
    match (f.degree(), g.degree()) {
        (Some(m), Some(n)) => {
            let lead = d.mul(
                f.leading().unwrap(),
                &apply_sigma(d, g.leading().unwrap(), m as i64),
            );
            if fg.degree() != Some(m + n) || fg.leading() != Some(&lead) {
                return Err(format!("deg {m}+{n}"));
            }
        }
        _ => {
            if !fg.is_zero() {
                return Err("zero factor".into());
            }
        }
    }
    Ok(())
}

fn endpoints<D: Domain>(d: &D, seed: u64) -> Result<(), String> {
    let mut r = common::rng(seed);
    let a = d.random_elem(&mut r, 3);
    let mut dn = a.clone();
    for n in 0..=8usize {
        let e = xn_times_a(d, n, &a);
        let c = e.coeffs();
        let at = |k: usize| c.get(k).cloned().unwrap_or_else(|| d.zero());
        if at(0) != dn || at(n) != apply_sigma(d, &a, n as i64) || c.len() > n + 1 {
            return Err(format!("n = {n}"));
        }
        dn = apply_delta(d, &dn);
    }
    Ok(())
}

fn right_round_trip<D: Domain>(d: &D, seed: u64) -> Result<(), String> {
    let mut r = common::rng(seed);
    let f = random_ore(d, RingTag::SigmaDelta, &mut r, 6, 3);
    let b = right_coefficients(d, &f);
    if let Some(n) = f.degree() {
        if b[n] != apply_sigma(d, f.leading().unwrap(), -(n as i64)) {
            return Err("top right coefficient".into());
        }
    }
    if from_right_coefficients(d, RingTag::SigmaDelta, &b) != f {
        return Err("round trip".into());
    }
    Ok(())
}

fn isomorphism<D: Domain>(d: &D, seed: u64) -> Result<(), String> {
    let a = inner_witness(d)
        .map_err(|e| e.to_string())?
        .ok_or("not inner")?;
    let [f, g, _] = triple(d, seed);
    let phi = |p: &OrePoly<D::Elem>| to_pure_sigma(d, p, &a).unwrap();
    let (pf, pg) = (phi(&f), phi(&g));
    if pf.tag() != RingTag::PureSigma {
        return Err("tag".into());
    }
    if phi(&add(d, &f, &g)) != add(d, &pf, &pg) {
        return Err("additivity".into());
    }
    if phi(&mul(d, &f, &g)) != mul(d, &pf, &pg) {
        return Err("multiplicativity".into());
    }
    if pf.degree() != f.degree() {
        return Err("degree".into());
    }
    if from_pure_sigma(d, &pf, &a).unwrap() != f {
        return Err("round trip".into());
    }
    Ok(())
}

#[test]
fn ring_axioms_500_triples() {
    each_testbed!(|d, name| {
        for s in 0..500 {
            ring_axioms(&d, s).unwrap_or_else(|e| panic!("{name} seed {s}: {e}"));
        }
    });
}

#[test]
fn endpoint_law_200_samples() {
    each_testbed!(|d, name| {
        for s in 0..200 {
            endpoints(&d, s).unwrap_or_else(|e| panic!("{name} seed {s}: {e}"));
        }
    });
}

#[test]
fn right_coefficients_500_samples() {
    each_testbed!(|d, name| {
        for s in 0..500 {
            right_round_trip(&d, s).unwrap_or_else(|e| panic!("{name} seed {s}: {e}"));
        }
    });
}

#[test]
fn isomorphism_300_pairs() {
    each_inner_testbed!(|d, name| {
        for s in 0..300 {
            isomorphism(&d, s).unwrap_or_else(|e| panic!("{name} seed {s}: {e}"));
        }
    });
}

#[test]
fn non_inner_is_rejected() {
    let d = common::zi_conj(1);
    assert_eq!(inner_witness(&d).unwrap(), None);
    let f = ore_core::ore::var(&d, RingTag::SigmaDelta);
    assert!(to_pure_sigma(&d, &f, &d.parse("0-1*i").unwrap()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn degree_and_leading_coefficient(seed in any::<u64>()) {
        each_testbed!(|d, name| {
            let r = degree_law(&d, seed);
            prop_assert!(r.is_ok(), "{}: {:?}", name, r);
        });
    }

    #[test]
    fn ring_axioms_random_seeds(seed in any::<u64>()) {
        each_testbed!(|d, name| {
            let r = ring_axioms(&d, seed);
            prop_assert!(r.is_ok(), "{}: {:?}", name, r);
        });
    }

    #[test]
    fn json_round_trip(seed in any::<u64>()) {
        each_testbed!(|d, name| {
            let mut r = common::rng(seed);
            let f = random_ore(&d, RingTag::SigmaDelta, &mut r, 5, 3);
            let back = ore_from_json(&d, &ore_to_json(&d, &f));
            prop_assert_eq!(back.as_ref().ok(), Some(&f), "{}", name);
        });
    }
}
