#![no_main]
use libfuzzer_sys::fuzz_target;
use ore_core::domain::{FiniteFieldPoly, GaussianDomain, RationalPoly};
use ore_core::ore::{ore_from_json, ore_to_json};
use serde_json::Value;

fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<Value>(data) else {
        return;
    };
    let g = GaussianDomain::conjugation(2);
    if let Ok(f) = ore_from_json(&g, &v) {
        assert_eq!(ore_from_json(&g, &ore_to_json(&g, &f)).as_ref(), Ok(&f));
    }
    let p = FiniteFieldPoly::affine(5, 2, 1, &[0, 1]).unwrap();
    if let Ok(f) = ore_from_json(&p, &v) {
        assert_eq!(ore_from_json(&p, &ore_to_json(&p, &f)).as_ref(), Ok(&f));
    }
    let _ = ore_from_json(&RationalPoly::affine(1, 1, &[1]).unwrap(), &v);
});
