//! Reader for the canonical element text forms.
//!
//! Both families share one grammar: a signed sum of terms
//! `c`, `c*v`, `c*v^k`, `v^k` where `c` is an integer or a fraction `p/q`
//! and `v` is a single-letter variable, optionally followed by `mod q`.
//! `3-4*i`, `2 + t + 2*t^2 mod 3` and `-1/2 + t` are all accepted; the
//! `*` may be omitted (`4i`).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::ParseError;

/// Largest exponent accepted on a variable.
pub const MAX_EXPONENT: u64 = 4096;
const MAX_DIGITS: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub num: BigInt,
    pub den: BigInt,
    pub power: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub terms: Vec<Term>,
    pub var: Option<char>,
    pub modulus: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Var(char),
    Mod,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(s: &str) -> Result<Vec<Tok>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut k = 0;
    while k < chars.len() {
        let (off, c) = chars[k];
        match c {
            c if c.is_whitespace() => k += 1,
            '+' => {
                out.push(Tok::Plus);
                k += 1
            }
            '-' => {
                out.push(Tok::Minus);
                k += 1
            }
            '*' => {
                out.push(Tok::Star);
                k += 1
            }
            '/' => {
                out.push(Tok::Slash);
                k += 1
            }
            '^' => {
                out.push(Tok::Caret);
                k += 1
            }
            '0'..='9' => {
                let start = k;
                while k < chars.len() && chars[k].1.is_ascii_digit() {
                    k += 1;
                }
                if k - start > MAX_DIGITS {
                    return Err(ParseError::Invalid("number literal too long".into()));
                }
                let digits: String = chars[start..k].iter().map(|(_, c)| *c).collect();
                let n = digits
                    .parse::<BigInt>()
                    .map_err(|e| ParseError::Invalid(e.to_string()))?;
                out.push(Tok::Num(n));
            }
            c if c.is_ascii_alphabetic() => {
                let start = k;
                while k < chars.len() && chars[k].1.is_ascii_alphabetic() {
                    k += 1;
                }
                let word: String = chars[start..k].iter().map(|(_, c)| *c).collect();
                match word.as_str() {
                    "mod" => out.push(Tok::Mod),
                    w if w.len() == 1 => out.push(Tok::Var(c)),
                    w => return Err(ParseError::UnexpectedToken(w.to_string())),
                }
            }
            c => return Err(ParseError::UnexpectedChar(c, off)),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    var: Option<char>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn number(&mut self) -> Result<BigInt, ParseError> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(n),
            Some(t) => Err(ParseError::UnexpectedToken(format!("{t:?}"))),
            None => Err(ParseError::UnexpectedEnd),
        }
    }

    fn variable(&mut self, v: char) -> Result<u32, ParseError> {
        match self.var {
            Some(prev) if prev != v => {
                return Err(ParseError::WrongVariable {
                    expected: prev,
                    found: v,
                })
            }
            _ => self.var = Some(v),
        }
        if self.peek() == Some(&Tok::Caret) {
            self.next();
            let e = self.number()?;
            let e: u64 = e
                .try_into()
                .map_err(|_| ParseError::ExponentTooLarge(u64::MAX))?;
            if e > MAX_EXPONENT {
                return Err(ParseError::ExponentTooLarge(e));
            }
            Ok(e as u32)
        } else {
            Ok(1)
        }
    }

    fn term(&mut self, negative: bool) -> Result<Term, ParseError> {
        let sign = if negative {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        match self.next() {
            Some(Tok::Var(v)) => {
                let power = self.variable(v)?;
                Ok(Term {
                    num: sign,
                    den: BigInt::one(),
                    power,
                })
            }
            Some(Tok::Num(n)) => {
                let mut den = BigInt::one();
                if self.peek() == Some(&Tok::Slash) {
                    self.next();
                    den = self.number()?;
                    if den.is_zero() {
                        return Err(ParseError::ZeroDenominator);
                    }
                }
                let mut power = 0;
                match self.peek() {
                    Some(Tok::Star) => {
                        self.next();
                        match self.next() {
                            Some(Tok::Var(v)) => power = self.variable(v)?,
                            Some(t) => return Err(ParseError::UnexpectedToken(format!("{t:?}"))),
                            None => return Err(ParseError::UnexpectedEnd),
                        }
                    }
                    Some(Tok::Var(v)) => {
                        let v = *v;
                        self.next();
                        power = self.variable(v)?;
                    }
                    _ => {}
                }
                Ok(Term {
                    num: sign * n,
                    den,
                    power,
                })
            }
            Some(t) => Err(ParseError::UnexpectedToken(format!("{t:?}"))),
            None => Err(ParseError::UnexpectedEnd),
        }
    }
}

/// Parses the shared grammar without interpreting coefficients.
pub fn parse_expr(s: &str) -> Result<Expr, ParseError> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(ParseError::UnexpectedEnd);
    }
    let mut p = Parser {
        toks,
        pos: 0,
        var: None,
    };
    let mut terms = Vec::new();
    let mut negative = false;
    match p.peek() {
        Some(Tok::Minus) => {
            p.next();
            negative = true;
        }
        Some(Tok::Plus) => {
            p.next();
        }
        _ => {}
    }
    terms.push(p.term(negative)?);
    let mut modulus = None;
    while let Some(t) = p.next() {
        match t {
            Tok::Plus => terms.push(p.term(false)?),
            Tok::Minus => terms.push(p.term(true)?),
            Tok::Mod => {
                let q = p.number()?;
                let q: u64 = q
                    .try_into()
                    .map_err(|_| ParseError::Invalid("modulus out of range".into()))?;
                modulus = Some(q);
                if let Some(extra) = p.next() {
                    return Err(ParseError::UnexpectedToken(format!("{extra:?}")));
                }
                break;
            }
            other => return Err(ParseError::UnexpectedToken(format!("{other:?}"))),
        }
    }
    Ok(Expr {
        terms,
        var: p.var,
        modulus,
    })
}
