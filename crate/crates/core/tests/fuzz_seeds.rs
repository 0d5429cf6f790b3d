//! Replays the checked-in fuzz corpus through the same entry points as the
//! fuzz targets.

use std::path::PathBuf;

use ore_core::cli::{parse_config, Args};
use ore_core::domain::{build_domain, Domain, FiniteFieldPoly, GaussianDomain, RationalPoly};
use ore_core::ideal::{ideal_from_json, ideal_to_json};
use ore_core::ore::{ore_from_json, ore_to_json};
use serde_json::Value;

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fuzz/corpus")
        .join(target);
    let mut out: Vec<_> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| {
            let p = e.unwrap().path();
            (
                p.file_name().unwrap().to_string_lossy().into_owned(),
                std::fs::read(&p).unwrap(),
            )
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

fn round_trip<D: Domain>(d: &D, s: &str) -> bool {
    match d.parse(s) {
        Ok(a) => {
            assert_eq!(d.parse(&d.format(&a)).as_ref(), Ok(&a));
            true
        }
        Err(_) => false,
    }
}

#[test]
fn parse_element_seeds() {
    let mut parsed = 0;
    for (_, data) in seeds("parse_element") {
        let s = std::str::from_utf8(&data).unwrap();
        parsed += usize::from(round_trip(&GaussianDomain::conjugation(2), s));
        parsed += usize::from(round_trip(
            &FiniteFieldPoly::affine(3, 1, 1, &[1]).unwrap(),
            s,
        ));
        parsed += usize::from(round_trip(&RationalPoly::affine(2, 0, &[1]).unwrap(), s));
    }
    assert!(parsed > 0);
}

#[test]
fn parse_expr_seeds() {
    for (_, data) in seeds("parse_expr") {
        let _ = ore_core::text::parse_expr(std::str::from_utf8(&data).unwrap());
    }
}

#[test]
fn parse_config_seeds() {
    for (name, data) in seeds("parse_config") {
        let cfg = parse_config(std::str::from_utf8(&data).unwrap(), &Args::default())
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(
            build_domain(&cfg.domain).is_ok(),
            name != "seed_bad_sigma",
            "{name}"
        );
    }
}

#[test]
fn decode_ideal_json_seeds() {
    let g = GaussianDomain::conjugation(1);
    let f = FiniteFieldPoly::affine(3, 1, 1, &[1]).unwrap();
    let q = RationalPoly::affine(2, 0, &[1]).unwrap();
    for (name, data) in seeds("decode_ideal_json") {
        let v: Value = serde_json::from_slice(&data).unwrap();
        let decoded = [
            ideal_from_json(&g, &v).map(|i| ideal_to_json(&g, &i)),
            ideal_from_json(&f, &v).map(|i| ideal_to_json(&f, &i)),
            ideal_from_json(&q, &v).map(|i| ideal_to_json(&q, &i)),
        ];
        assert!(decoded.iter().any(|r| r.is_ok()), "{name}");
    }
}

#[test]
fn decode_orepoly_json_seeds() {
    let g = GaussianDomain::conjugation(2);
    let p = FiniteFieldPoly::affine(5, 2, 1, &[0, 1]).unwrap();
    let q = RationalPoly::affine(1, 1, &[1]).unwrap();
    for (name, data) in seeds("decode_orepoly_json") {
        let v: Value = serde_json::from_slice(&data).unwrap();
        let ok = [
            ore_from_json(&g, &v).map(|f| ore_to_json(&g, &f)).is_ok(),
            ore_from_json(&p, &v).map(|f| ore_to_json(&p, &f)).is_ok(),
            ore_from_json(&q, &v).map(|f| ore_to_json(&q, &f)).is_ok(),
        ];
        assert!(ok.iter().any(|b| *b), "{name}");
    }
}

mod arbitrary_input {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(512))]

        #[test]
        fn element_parsers_never_panic(s in "[-+*/^()0-9ti mod]{0,24}") {
            round_trip(&GaussianDomain::conjugation(2), &s);
            round_trip(&FiniteFieldPoly::affine(7, 3, 0, &[0, 1]).unwrap(), &s);
            round_trip(&RationalPoly::affine(2, 0, &[1]).unwrap(), &s);
        }

        #[test]
        fn config_parser_never_panics(s in "\\PC{0,200}") {
            if let Ok(cfg) = parse_config(&s, &Args::default()) {
                let _ = build_domain(&cfg.domain);
            }
        }

        #[test]
        fn json_decoders_never_panic(
            prime in "[-+*^0-9ti mod]{0,16}",
            exp in 0u64..100,
            coeffs in proptest::collection::vec("[-+*/^0-9ti mod]{0,10}", 0..6),
        ) {
            let v = serde_json::json!([{"prime": prime, "exp": exp}]);
            let _ = ideal_from_json(&GaussianDomain::conjugation(1), &v);
            let _ = ideal_from_json(&FiniteFieldPoly::affine(3, 1, 1, &[1]).unwrap(), &v);
            let w = serde_json::json!({"ring": "x-sigma-delta", "coeffs": coeffs});
            let _ = ore_from_json(&FiniteFieldPoly::affine(5, 2, 1, &[0, 1]).unwrap(), &w);
            let _ = ore_from_json(&RationalPoly::affine(1, 1, &[1]).unwrap(), &w);
        }
    }
}
