//! Splitting of rational polynomials into linear factors by rational root
//! search. Cubic and quadratic cofactors without rational roots are
//! irreducible and accepted as primes; anything larger is refused.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Poly, PolyRing};
use crate::error::Error;
use crate::scalar::Rationals;

type P = Poly<BigRational>;

/// Largest absolute value of the extreme integer coefficients for which
/// divisor enumeration is attempted.
pub const RATIONAL_HEIGHT_LIMIT: u64 = 1_000_000_000_000;

pub fn factor_rational(ring: &PolyRing<Rationals>, f: &P) -> Result<Vec<(P, u32)>, Error> {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let mut rest = ring.monic(f);
    let mut out: Vec<(P, u32)> = Vec::new();
    let push = |p: P, out: &mut Vec<(P, u32)>| match out.iter_mut().find(|(q, _)| *q == p) {
        Some((_, e)) => *e += 1,
        None => out.push((p, 1)),
    };

    while rest.degree().unwrap_or(0) >= 1 {
        let deg = rest.degree().unwrap();
        if deg == 1 {
            push(rest.clone(), &mut out);
            break;
        }
        match rational_root(&rest)? {
            Some(r) => {
                let lin = ring.from_coeffs(vec![-r, BigRational::one()]);
                push(lin.clone(), &mut out);
                rest = ring.exact_div(&rest, &lin).expect("root gives a factor");
            }
            None if deg <= 3 => {
                push(rest.clone(), &mut out);
                break;
            }
            None => {
                return Err(Error::FactorBudget(format!(
                    "degree {deg} cofactor has no rational root; only linear splitting is supported"
                )))
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Irreducible over Q, decided for degree at most 3.
pub fn is_irreducible_rational(f: &P) -> Result<bool, Error> {
    match f.degree() {
        None | Some(0) => Ok(false),
        Some(1) => Ok(true),
        Some(2) | Some(3) => Ok(rational_root(f)?.is_none()),
        Some(d) => Err(Error::FactorBudget(format!(
            "irreducibility of degree {d} rational polynomials is not decided"
        ))),
    }
}

/// Integer coefficients with unit content, same roots as `f`.
fn primitive_integer(f: &P) -> Vec<BigInt> {
    let lcm = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &content).collect()
}

fn rational_root(f: &P) -> Result<Option<BigRational>, Error> {
    let coeffs = primitive_integer(f);
    if coeffs[0].is_zero() {
        return Ok(Some(BigRational::zero()));
    }
    let a0 = coeffs[0].abs();
    let an = coeffs.last().unwrap().abs();
    let limit = BigInt::from(RATIONAL_HEIGHT_LIMIT);
    if a0 > limit || an > limit {
        return Err(Error::FactorBudget(format!(
            "coefficient height above {RATIONAL_HEIGHT_LIMIT} for rational root search"
        )));
    }
    let nums = divisors(a0.to_u64().unwrap());
    let dens = divisors(an.to_u64().unwrap());
    for q in &dens {
        for p in &nums {
            if BigInt::from(*p).gcd(&BigInt::from(*q)) != BigInt::one() {
                continue;
            }
            for sign in [1i64, -1] {
                let num = BigInt::from(*p) * sign;
                let den = BigInt::from(*q);
                if vanishes(&coeffs, &num, &den) {
                    return Ok(Some(BigRational::new(num, den)));
                }
            }
        }
    }
    Ok(None)
}

// sum a_k num^k den^(n-k) == 0
fn vanishes(coeffs: &[BigInt], num: &BigInt, den: &BigInt) -> bool {
    let n = coeffs.len() - 1;
    let mut acc = BigInt::zero();
    let mut num_pow = BigInt::one();
    let den_pows: Vec<BigInt> = (0..=n)
        .scan(BigInt::one(), |s, _| {
            let cur = s.clone();
            *s *= den;
            Some(cur)
        })
        .collect();
    for (k, a) in coeffs.iter().enumerate() {
        acc += a * &num_pow * &den_pows[n - k];
        num_pow *= num;
    }
    acc.is_zero()
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
