//! Text and exchange formats.
//!
//! Text form is a signed sum of monomials in `t`, highest exponent first:
//! `t^2-t+1`, `2*t^-1+3`, `3/2*t-1/2`. The printer always emits this shape
//! and the parser accepts it plus whitespace, `t^(-1)` and omitted `*`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use super::LaurentPoly;
use crate::error::{Error, Result};
use crate::scalar::{ParseScalar, Scalar};
use crate::{Poly, Rational};

impl<T: Scalar> fmt::Display for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (exp, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            if neg {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let mag = c.abs();
            if exp == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            match exp {
                1 => f.write_str("t")?,
                e => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

struct Cursor<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, reason: impl Into<String>) -> Error {
        Error::PolyParse { input: self.src.to_string(), reason: reason.into() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn coefficient<T: ParseScalar>(&mut self) -> Result<Option<T>> {
        let Some(num) = self.digits() else {
            return Ok(None);
        };
        let text = if self.eat('/') {
            let den = self.digits().ok_or_else(|| self.err("expected denominator after '/'"))?;
            format!("{num}/{den}")
        } else {
            num
        };
        let value = text.parse::<T>().map_err(|_| self.err(format!("bad coefficient {text:?}")))?;
        Ok(Some(value))
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.eat('(');
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let digits = self.digits().ok_or_else(|| self.err("expected exponent"))?;
        if paren && !self.eat(')') {
            return Err(self.err("unclosed parenthesis in exponent"));
        }
        let e: i64 = digits.parse().map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -e } else { e })
    }
}

/// Parses polynomial text in the variable `t`.
pub fn parse_poly<T: ParseScalar>(src: &str) -> Result<LaurentPoly<T>> {
    let chars: Vec<char> = src.chars().filter(|c| !c.is_whitespace()).collect();
    let mut cur = Cursor { src, chars, pos: 0 };
    if cur.chars.is_empty() {
        return Err(cur.err("empty input"));
    }
    let mut terms = Vec::new();
    while cur.peek().is_some() {
        let neg = if cur.eat('-') {
            true
        } else {
            if !cur.eat('+') && !terms.is_empty() {
                return Err(cur.err(format!("expected '+' or '-' at position {}", cur.pos)));
            }
            false
        };
        let coeff = cur.coefficient::<T>()?;
        let has_star = coeff.is_some() && cur.eat('*');
        let exp = if cur.eat('t') {
            if cur.eat('^') {
                cur.exponent()?
            } else {
                1
            }
        } else if coeff.is_none() || has_star {
            return Err(cur.err(format!("expected a term at position {}", cur.pos)));
        } else {
            0
        };
        let c = coeff.unwrap_or_else(T::one);
        terms.push((exp, if neg { -c } else { c }));
    }
    Ok(LaurentPoly::from_terms(terms))
}

impl<T: ParseScalar> FromStr for LaurentPoly<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

impl<T: Scalar> Serialize for LaurentPoly<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de, T: ParseScalar> Deserialize<'de> for LaurentPoly<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_poly(&text).map_err(de::Error::custom)
    }
}

/// `[exponent, numerator, denominator]` in lowest terms.
pub type Triple = [i64; 3];

impl Poly {
    /// Exchange form: one `[exponent, numerator, denominator]` triple per
    /// nonzero term, ascending exponent.
    pub fn to_triples(&self) -> Result<Vec<Triple>> {
        self.terms()
            .map(|(e, c)| {
                let num = c.numer().to_i64().ok_or_else(|| Error::TripleOverflow(c.to_string()))?;
                let den = c.denom().to_i64().ok_or_else(|| Error::TripleOverflow(c.to_string()))?;
                Ok([e, num, den])
            })
            .collect()
    }

    pub fn from_triples(triples: &[Triple]) -> Result<Self> {
        let terms = triples
            .iter()
            .map(|&[e, n, d]| {
                if d == 0 {
                    return Err(Error::InvalidInput(format!("zero denominator in triple [{e}, {n}, {d}]")));
                }
                Ok((e, Rational::new(BigInt::from(n), BigInt::from(d))))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_terms(terms))
    }

    /// Scales by a positive rational so the coefficients become coprime
    /// integers; the primitive part of the canonical form.
    pub fn primitive(&self) -> Self {
        use num_integer::Integer;
        let c = self.canonicalize();
        if c.is_zero() {
            return c;
        }
        let den = c.coeffs().iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let num = c.coeffs().iter().fold(BigInt::zero(), |acc, x| acc.gcd(x.numer()));
        c.scale(&Rational::new(den, num))
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs().iter().all(|c| c.is_integer())
    }
}
