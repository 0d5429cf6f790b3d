#![no_main]
use libfuzzer_sys::fuzz_target;
use ore_core::cli::{parse_config, Args};
use ore_core::domain::build_domain;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(cfg) = parse_config(s, &Args::default()) {
            let _ = build_domain(&cfg.domain);
        }
    }
});
