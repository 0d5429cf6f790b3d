#![no_main]
use libfuzzer_sys::fuzz_target;
use ore_core::domain::{Domain, FiniteFieldPoly, GaussianDomain, RationalPoly};

fn round_trip<D: Domain>(d: &D, s: &str) {
    if let Ok(a) = d.parse(s) {
        let text = d.format(&a);
        assert_eq!(d.parse(&text).as_ref(), Ok(&a), "{s:?} -> {text:?}");
    }
}

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        round_trip(&GaussianDomain::conjugation(2), s);
        round_trip(&FiniteFieldPoly::affine(3, 1, 1, &[1]).unwrap(), s);
        round_trip(&FiniteFieldPoly::affine(7, 3, 0, &[0, 1]).unwrap(), s);
        round_trip(&RationalPoly::affine(2, 0, &[1]).unwrap(), s);
    }
});
