//! The Gaussian integers `Z[i]`: exact arithmetic, Euclidean division,
//! canonical associates and prime factorization.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gaussian {
    pub re: BigInt,
    pub im: BigInt,
}

impl Gaussian {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        Gaussian {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn zero() -> Self {
        Gaussian::new(0, 0)
    }

    pub fn one() -> Self {
        Gaussian::new(1, 0)
    }

    pub fn i() -> Self {
        Gaussian::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn conj(&self) -> Self {
        Gaussian::new(self.re.clone(), -&self.im)
    }

    pub fn norm(&self) -> BigUint {
        (&self.re * &self.re + &self.im * &self.im)
            .to_biguint()
            .expect("norm is nonnegative")
    }

    pub fn add(&self, o: &Self) -> Self {
        Gaussian::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Gaussian::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn neg(&self) -> Self {
        Gaussian::new(-&self.re, -&self.im)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Gaussian::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    pub fn scale(&self, n: &BigInt) -> Self {
        Gaussian::new(&self.re * n, &self.im * n)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Gaussian::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Division with the quotient rounded to the nearest lattice point, so
    /// that `N(r) <= N(b)/2`. Panics on a zero divisor.
    pub fn div_rem(&self, b: &Self) -> (Self, Self) {
        assert!(!b.is_zero(), "division by zero Gaussian integer");
        let n = BigInt::from(b.norm());
        let num = self.mul(&b.conj());
        let q = Gaussian::new(round_div(&num.re, &n), round_div(&num.im, &n));
        let r = self.sub(&q.mul(b));
        (q, r)
    }

    pub fn exact_div(&self, b: &Self) -> Option<Self> {
        if b.is_zero() {
            return self.is_zero().then(Gaussian::zero);
        }
        let (q, r) = self.div_rem(b);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    /// The unique associate with positive real part and nonnegative
    /// imaginary part; zero maps to zero.
    pub fn normalize(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.clone();
        for _ in 0..4 {
            if g.re.is_positive() && !g.im.is_negative() {
                return g;
            }
            // multiply by i
            g = Gaussian::new(-&g.im, g.re.clone());
        }
        unreachable!("one of the four associates lies in the first quadrant")
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.normalize()
    }

    pub fn is_prime(&self) -> Result<bool, Error> {
        if self.is_zero() {
            return Ok(false);
        }
        let n = self.norm();
        let n64 = n.to_u64().ok_or_else(|| {
            Error::FactorBudget(format!("norm {n} exceeds the primality test range"))
        })?;
        if is_prime(n64) {
            return Ok(true);
        }
        // Inert rational primes p = 3 mod 4 have norm p^2.
        if self.re.is_zero() || self.im.is_zero() {
            let p = self.re.abs().max(self.im.abs()).to_u64().unwrap_or(0);
            return Ok(p % 4 == 3 && is_prime(p));
        }
        Ok(false)
    }

    /// Canonical prime factors with multiplicities, sorted; the unit part is
    /// dropped. `self` must be nonzero.
    pub fn factor(&self) -> Result<Vec<(Gaussian, u32)>, Error> {
        assert!(!self.is_zero(), "cannot factor zero");
        let n = self.norm();
        let n64 = n.to_u64().ok_or_else(|| {
            Error::FactorBudget(format!("norm {n} exceeds the factorization range"))
        })?;
        let mut rest = self.clone();
        let mut out = Vec::new();
        for (p, e) in factor_u64(n64) {
            if p == 2 {
                out.push((Gaussian::new(1, 1), e));
                rest = rest
                    .exact_div(&Gaussian::new(1, 1).pow(e))
                    .expect("ramified part");
            } else if p % 4 == 3 {
                let k = e / 2;
                out.push((Gaussian::new(p, 0), k));
                rest = rest
                    .exact_div(&Gaussian::new(p, 0).pow(k))
                    .expect("inert part");
            } else {
                let r = sqrt_neg_one(p);
                let pi = Gaussian::new(p, 0).gcd(&Gaussian::new(r, 1));
                let pi_bar = pi.conj().normalize();
                for q in [pi, pi_bar] {
                    let mut k = 0;
                    while let Some(next) = rest.exact_div(&q) {
                        rest = next;
                        k += 1;
                    }
                    if k > 0 {
                        out.push((q, k));
                    }
                }
            }
        }
        debug_assert!(rest.is_unit());
        out.sort();
        Ok(out)
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}-{}*i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

fn round_div(x: &BigInt, n: &BigInt) -> BigInt {
    // floor((2x + n) / 2n), n > 0
    let num: BigInt = x * 2 + n;
    num.div_floor(&(n * 2))
}

/// Canonical Gaussian primes of norm at most `bound`, sorted by norm and
/// then by (real, imaginary) part.
pub fn enumerate_gaussian_primes(bound: u64) -> Vec<Gaussian> {
    let mut out: Vec<(u64, Gaussian)> = Vec::new();
    let mut a = 1u64;
    while a.saturating_mul(a) <= bound {
        let mut b = 0u64;
        while a * a + b.saturating_mul(b) <= bound {
            let n = a * a + b * b;
            let prime = if b == 0 {
                a % 4 == 3 && is_prime(a)
            } else {
                is_prime(n)
            };
            if prime {
                out.push((n, Gaussian::new(a, b)));
            }
            b += 1;
        }
        a += 1;
    }
    out.sort();
    out.into_iter().map(|(_, g)| g).collect()
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for 64-bit inputs.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

/// Prime factorization of a 64-bit integer, sorted by prime.
pub(crate) fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut primes = Vec::new();
    let mut d = 2u64;
    while d < 1000 && d * d <= n {
        while n.is_multiple_of(d) {
            primes.push(d);
            n /= d;
        }
        d += 1;
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime(m) {
            primes.push(m);
            continue;
        }
        let f = pollard_rho(m);
        stack.push(f);
        stack.push(m / f);
    }
    primes.sort_unstable();
    let mut out: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// A square root of -1 modulo a prime `p = 1 mod 4`.
fn sqrt_neg_one(p: u64) -> u64 {
    (2..p)
        .map(|c| pow_mod(c, (p - 1) / 4, p))
        .find(|&r| mul_mod(r, r, p) == p - 1)
        .expect("p = 1 mod 4 has a square root of -1")
}
