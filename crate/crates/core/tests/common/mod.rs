#![allow(dead_code, unused_macros)]

use ore_core::domain::{FiniteFieldPoly, GaussSigma, GaussianDomain, RationalPoly};
use ore_core::gaussian::Gaussian;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn zi_conj(d: i64) -> GaussianDomain {
    GaussianDomain::conjugation(d)
}

pub fn zi_id() -> GaussianDomain {
    GaussianDomain::new(GaussSigma::Identity, Gaussian::zero()).unwrap()
}

pub fn fq(p: u64, a: i64, b: i64, h: &[i64]) -> FiniteFieldPoly {
    FiniteFieldPoly::affine(p, a, b, h).unwrap()
}

pub fn qt(a: i64, b: i64, h: &[i64]) -> RationalPoly {
    RationalPoly::affine(a, b, h).unwrap()
}

/// Runs `$body` once per testbed with `$d` bound to the domain and `$name`
/// to a label.
macro_rules! each_testbed {
    (|$d:ident, $name:ident| $body:block) => {{
        {
            let $d = common::zi_conj(2);
            let $name = "Z[i] conj d=2";
            $body
        }
        {
            let $d = common::zi_conj(1);
            let $name = "Z[i] conj d=1";
            $body
        }
        {
            let $d = common::zi_id();
            let $name = "Z[i] id";
            $body
        }
        {
            let $d = common::fq(3, 1, 1, &[1]);
            let $name = "F3 t+1 h=1";
            $body
        }
        {
            let $d = common::fq(3, 1, 2, &[0, 1]);
            let $name = "F3 t+2 h=t";
            $body
        }
        {
            let $d = common::fq(5, 2, 1, &[0, 0, 1]);
            let $name = "F5 2t+1 h=t^2";
            $body
        }
        {
            let $d = common::fq(7, 1, 0, &[1]);
            let $name = "F7 id h=1";
            $body
        }
        {
            let $d = common::qt(2, 0, &[1]);
            let $name = "Q 2t h=1";
            $body
        }
        {
            let $d = common::qt(1, 1, &[1, 1]);
            let $name = "Q t+1 h=1+t";
            $body
        }
    }};
}

/// The inner configurations among the testbeds.
macro_rules! each_inner_testbed {
    (|$d:ident, $name:ident| $body:block) => {{
        {
            let $d = common::zi_conj(2);
            let $name = "Z[i] conj d=2";
            $body
        }
        {
            let $d = common::zi_conj(4);
            let $name = "Z[i] conj d=4";
            $body
        }
        {
            let $d = common::fq(3, 1, 1, &[1]);
            let $name = "F3 t+1 h=1";
            $body
        }
        {
            let $d = common::fq(3, 1, 2, &[0, 1]);
            let $name = "F3 t+2 h=t";
            $body
        }
        {
            let $d = common::fq(5, 1, 3, &[2, 0, 1]);
            let $name = "F5 t+3 h=t^2+2";
            $body
        }
    }};
}
