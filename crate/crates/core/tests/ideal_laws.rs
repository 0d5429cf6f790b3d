#[macro_use]
mod common;

use ore_core::domain::{divides, gcd, Domain};
use ore_core::ideal::{
    enumerate_ideals, generator, ideal_make, ideal_norm, ideal_sigma, FactorDomain, Ideal,
};
use proptest::prelude::*;

fn round_trip<D: FactorDomain>(d: &D, bound: u64) {
    for i in enumerate_ideals(d, bound) {
        let g = generator(d, &i);
        assert_eq!(ideal_make(d, std::slice::from_ref(&g)).unwrap(), i);
        let from_factors = i
            .factors()
            .unwrap()
            .iter()
            .fold(d.one(), |acc, (p, e)| d.mul(&acc, &d.pow(p, *e)));
        assert_eq!(d.normalize(&from_factors), d.normalize(&g));
        assert!(ideal_norm(d, &i).unwrap() <= bound.into());
    }
}

#[test]
fn factor_multiply_round_trip() {
    round_trip(&common::fq(3, 1, 1, &[1]), 81);
    round_trip(&common::zi_conj(1), 100);
}

fn lattice_laws<D: FactorDomain>(d: &D, bound: u64) {
    let all = enumerate_ideals(d, bound);
    for i in &all {
        for j in &all {
            let (gi, gj) = (generator(d, i), generator(d, j));
            // containment is divisibility of generators
            assert_eq!(i.contains(j), divides(d, &gi, &gj));
            if i.contains(j) && j.contains(i) {
                assert_eq!(i, j);
            }
            let ij = i.product(j);
            let cap = i.intersect(j);
            assert!(cap.contains(&ij));
            assert_eq!(cap == ij, i.coprime(j), "{:?} {:?}", i, j);
            let sum = i.sum(j);
            assert_eq!(generator(d, &sum), d.normalize(&gcd(d, &gi, &gj)));
            assert!(sum.contains(i) && sum.contains(j));
            assert!(i.contains(&cap) && j.contains(&cap));
        }
    }
}

#[test]
fn lattice_laws_on_enumerated_pairs() {
    lattice_laws(&common::fq(3, 1, 1, &[1]), 81);
    lattice_laws(&common::zi_conj(2), 100);
}

fn transitivity<D: FactorDomain>(d: &D, bound: u64) {
    let all = enumerate_ideals(d, bound);
    for a in &all {
        for b in all.iter().filter(|b| a.contains(b)) {
            for c in all.iter().filter(|c| b.contains(c)) {
                assert!(a.contains(c));
            }
        }
    }
}

#[test]
fn containment_is_transitive() {
    transitivity(&common::fq(3, 1, 1, &[1]), 81);
    transitivity(&common::zi_conj(1), 100);
}

fn sigma_permutes_primes<D: FactorDomain>(d: &D, bound: u64) {
    let primes = d.enumerate_primes(bound);
    for p in &primes {
        let sp = ideal_sigma(d, &Ideal::prime(p.clone()), 1);
        let q = sp.as_prime().expect("σ(p) is prime").clone();
        assert!(
            primes.contains(&q),
            "σ({}) left the enumeration",
            d.format(p)
        );
        assert_eq!(d.prime_norm(&q), d.prime_norm(p));
        assert_eq!(ideal_sigma(d, &sp, -1), Ideal::prime(p.clone()));
    }
}

#[test]
fn sigma_maps_primes_to_primes() {
    sigma_permutes_primes(&common::fq(3, 1, 1, &[1]), 81);
    sigma_permutes_primes(&common::fq(5, 2, 1, &[1]), 125);
    sigma_permutes_primes(&common::zi_conj(1), 100);
    sigma_permutes_primes(&common::zi_id(), 100);
}

#[test]
fn enumeration_is_sorted_and_complete() {
    let d = common::fq(3, 1, 1, &[1]);
    let primes = d.enumerate_primes(81);
    // monic irreducibles over F_3: 3, 3, 8, 18 of degrees 1..4
    assert_eq!(primes.len(), 32);
    let norms: Vec<_> = primes.iter().map(|p| d.prime_norm(p)).collect();
    assert!(norms.windows(2).all(|w| w[0] <= w[1]));
    let z = common::zi_id();
    // Gaussian primes of norm ≤ 50: 1+i, 3, 7, and a conjugate pair over
    // each rational prime 5, 13, 17, 29, 37, 41
    assert_eq!(z.enumerate_primes(50).len(), 15);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn factorization_multiplies_back(seed in any::<u64>()) {
        each_testbed!(|d, name| {
            let mut r = common::rng(seed);
            let a = d.random_elem(&mut r, 5);
            if !d.is_zero(&a) {
                if let Ok(fs) = d.factor(&a) {
                    let prod = fs.iter().fold(d.one(), |acc, (p, e)| d.mul(&acc, &d.pow(p, *e)));
                    prop_assert_eq!(d.normalize(&prod), d.normalize(&a), "{}", name);
                    for (p, _) in &fs {
                        prop_assert_eq!(d.normalize(p), p.clone());
                    }
                }
            }
        });
    }

    #[test]
    fn ideal_make_is_gcd(seed in any::<u64>()) {
        each_testbed!(|d, name| {
            let mut r = common::rng(seed);
            let a = d.random_elem(&mut r, 4);
            let b = d.random_elem(&mut r, 4);
            if let Ok(i) = ideal_make(&d, &[a.clone(), b.clone()]) {
                let g = gcd(&d, &a, &b);
                prop_assert_eq!(generator(&d, &i), d.normalize(&g), "{}", name);
            }
        });
    }
}
