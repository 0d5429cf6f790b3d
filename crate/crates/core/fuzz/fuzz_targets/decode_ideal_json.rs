#![no_main]
use libfuzzer_sys::fuzz_target;
use ore_core::domain::{FiniteFieldPoly, GaussianDomain, RationalPoly};
use ore_core::ideal::{ideal_from_json, ideal_to_json};
use serde_json::Value;

fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<Value>(data) else {
        return;
    };
    let g = GaussianDomain::conjugation(1);
    if let Ok(i) = ideal_from_json(&g, &v) {
        assert_eq!(ideal_from_json(&g, &ideal_to_json(&g, &i)).as_ref(), Ok(&i));
    }
    let f = FiniteFieldPoly::affine(3, 1, 1, &[1]).unwrap();
    if let Ok(i) = ideal_from_json(&f, &v) {
        assert_eq!(ideal_from_json(&f, &ideal_to_json(&f, &i)).as_ref(), Ok(&i));
    }
    let q = RationalPoly::affine(2, 0, &[1]).unwrap();
    let _ = ideal_from_json(&q, &v);
});
