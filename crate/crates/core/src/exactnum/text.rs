//! Canonical text forms for scalars.
//!
//! Integers render as decimal, rationals as `p/q` (`p` when `q = 1`),
//! polynomials as `c0 + c1*x + ...` and quadratic elements as
//! `a + b*sqrt(d)`. [`Scalar::parse`] accepts the same grammar.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Domain, QuadElem, RatPoly, Scalar};
use crate::error::{Error, Result};

pub fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p` or `p/q` (optional sign on `p`, `q > 0`).
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = match den {
        Some(d) => {
            if d.starts_with(['+', '-']) {
                return Err(bad());
            }
            BigInt::from_str(d).map_err(|_| bad())?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(num, den))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(v) => write!(f, "{v}"),
            Scalar::Rat(v) => f.write_str(&fmt_rational(v)),
            Scalar::Poly(v) => write!(f, "{v}"),
            Scalar::Quad(v) => fmt_quad(v, f),
        }
    }
}

fn fmt_quad(v: &QuadElem, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let (a, b, d) = (v.rational_part(), v.irrational_part(), v.radicand());
    if b.is_zero() {
        return f.write_str(&fmt_rational(a));
    }
    let surd = |mag: &BigRational| {
        if mag.is_one() {
            format!("sqrt({d})")
        } else {
            format!("{}*sqrt({d})", fmt_rational(mag))
        }
    };
    if a.is_zero() {
        let sign = if b.is_negative() { "-" } else { "" };
        return write!(f, "{sign}{}", surd(&b.abs()));
    }
    let op = if b.is_negative() { '-' } else { '+' };
    write!(f, "{} {op} {}", fmt_rational(a), surd(&b.abs()))
}

/// Splits `s` (whitespace already removed) into signed additive terms.
fn split_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let mut terms = Vec::new();
    let bytes = s.as_bytes();
    let mut start = 0;
    let mut negative = false;
    let mut depth = 0i32;
    for (i, &c) in bytes.iter().enumerate() {
        match c {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 => {
                let prev = if i == 0 { None } else { Some(bytes[i - 1]) };
                if matches!(prev, Some(b'^' | b'*' | b'/')) {
                    continue;
                }
                if i > start {
                    terms.push((negative, &s[start..i]));
                } else if i > 0 {
                    return Err(Error::Parse(format!("dangling sign in `{s}`")));
                }
                negative = c == b'-';
                start = i + 1;
            }
            _ => {}
        }
    }
    if start >= s.len() {
        return Err(Error::Parse(format!("empty term in `{s}`")));
    }
    terms.push((negative, &s[start..]));
    Ok(terms)
}

/// Splits `coef*rest` / `rest` / `coef` into (coefficient, remainder).
fn split_coefficient<'a>(term: &'a str, marker: &str) -> Result<(BigRational, Option<&'a str>)> {
    match term.find(marker) {
        None => Ok((parse_rational(term)?, None)),
        Some(0) => Ok((BigRational::one(), Some(term))),
        Some(pos) => {
            let coef = term[..pos].strip_suffix('*').unwrap_or(&term[..pos]);
            Ok((parse_rational(coef)?, Some(&term[pos..])))
        }
    }
}

fn parse_poly(s: &str) -> Result<RatPoly> {
    let mut coeffs: Vec<BigRational> = Vec::new();
    for (neg, term) in split_terms(s)? {
        let (mut c, rest) = split_coefficient(term, "x")?;
        let power = match rest {
            None => 0,
            Some("x") => 1,
            Some(r) => r
                .strip_prefix("x^")
                .and_then(|e| e.parse::<usize>().ok())
                .ok_or_else(|| Error::Parse(format!("invalid monomial `{r}`")))?,
        };
        if neg {
            c = -c;
        }
        if coeffs.len() <= power {
            coeffs.resize(power + 1, BigRational::zero());
        }
        coeffs[power] += c;
    }
    Ok(RatPoly::from_coeffs(coeffs))
}

fn parse_quad(s: &str, d: i64) -> Result<QuadElem> {
    let mut a = BigRational::zero();
    let mut b = BigRational::zero();
    for (neg, term) in split_terms(s)? {
        let (mut c, rest) = split_coefficient(term, "sqrt(")?;
        if neg {
            c = -c;
        }
        match rest {
            None => a += c,
            Some(r) => {
                let inner = r
                    .strip_prefix("sqrt(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| Error::Parse(format!("invalid surd `{r}`")))?;
                let radicand: i64 = inner
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid radicand `{inner}`")))?;
                if radicand != d {
                    return Err(Error::DomainMismatch {
                        left: Domain::Quad(d),
                        right: Domain::Quad(radicand),
                    });
                }
                b += c;
            }
        }
    }
    QuadElem::new(a, b, d)
}

impl Scalar {
    /// Parses the canonical text form of a value in `domain`.
    pub fn parse(s: &str, domain: Domain) -> Result<Scalar> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty value".into()));
        }
        match domain {
            Domain::Int => BigInt::from_str(&compact)
                .map(Scalar::Int)
                .map_err(|_| Error::Parse(format!("invalid integer `{s}`"))),
            Domain::Rat => parse_rational(&compact).map(Scalar::Rat),
            Domain::PolyRat => parse_poly(&compact).map(Scalar::Poly),
            Domain::Quad(d) => parse_quad(&compact, d).map(Scalar::Quad),
        }
    }

    /// Parses an integer literal as `Int`, otherwise a rational literal as `Rat`.
    pub fn parse_number(s: &str) -> Result<Scalar> {
        let s = s.trim();
        if s.contains('/') {
            Scalar::parse(s, Domain::Rat)
        } else {
            Scalar::parse(s, Domain::Int)
        }
    }
}
