//! Exact coefficient domains.
//!
//! Every value handled by the crate is a [`Scalar`]: an arbitrary precision
//! integer, a rational in lowest terms, a dense polynomial over the
//! rationals, or an element of a fixed quadratic field Q(sqrt(d)). Arithmetic
//! is closed inside one domain. Moving between domains only happens through
//! [`Scalar::promote`].

mod poly;
mod quad;
mod text;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub use poly::RatPoly;
pub use quad::{check_radicand, is_squarefree, QuadElem};
pub use text::{fmt_rational, parse_rational};

use crate::error::{Error, Result};

/// Tag naming one of the supported coefficient domains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Domain {
    Int,
    Rat,
    PolyRat,
    Quad(i64),
}

impl Domain {
    pub fn is_field(self) -> bool {
        matches!(self, Domain::Rat | Domain::Quad(_))
    }

    /// Validates the radicand of a `Quad` tag.
    pub fn check(self) -> Result<Self> {
        if let Domain::Quad(d) = self {
            check_radicand(d)?;
        }
        Ok(self)
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Int => f.write_str("Int"),
            Domain::Rat => f.write_str("Rat"),
            Domain::PolyRat => f.write_str("PolyRat"),
            Domain::Quad(d) => write!(f, "Quad({d})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    Poly(RatPoly),
    Quad(QuadElem),
}

impl Scalar {
    pub fn int(v: i64) -> Self {
        Scalar::Int(BigInt::from(v))
    }

    /// Rational `num/den` in lowest terms. Panics if `den == 0`.
    pub fn rat(num: i64, den: i64) -> Self {
        Scalar::Rat(BigRational::new(num.into(), den.into()))
    }

    pub fn poly(coeffs: &[i64]) -> Self {
        Scalar::Poly(RatPoly::from_ints(coeffs))
    }

    /// The polynomial indeterminate `x` in the `PolyRat` domain.
    pub fn indeterminate() -> Self {
        Scalar::Poly(RatPoly::x())
    }

    /// `a + b*sqrt(d)` with rational parts given as `(num, den)` pairs.
    pub fn quad(a: (i64, i64), b: (i64, i64), d: i64) -> Result<Self> {
        QuadElem::new(
            BigRational::new(a.0.into(), a.1.into()),
            BigRational::new(b.0.into(), b.1.into()),
            d,
        )
        .map(Scalar::Quad)
    }

    pub fn domain(&self) -> Domain {
        match self {
            Scalar::Int(_) => Domain::Int,
            Scalar::Rat(_) => Domain::Rat,
            Scalar::Poly(_) => Domain::PolyRat,
            Scalar::Quad(q) => Domain::Quad(q.radicand()),
        }
    }

    pub fn zero(domain: Domain) -> Self {
        Self::from_bigint(BigInt::zero(), domain)
    }

    pub fn one(domain: Domain) -> Self {
        Self::from_bigint(BigInt::one(), domain)
    }

    /// The image of an integer in `domain`. A `Quad` tag is assumed valid.
    pub fn from_bigint(n: BigInt, domain: Domain) -> Self {
        let r = || BigRational::from_integer(n.clone());
        match domain {
            Domain::Int => Scalar::Int(n),
            Domain::Rat => Scalar::Rat(r()),
            Domain::PolyRat => Scalar::Poly(RatPoly::constant(r())),
            Domain::Quad(d) => Scalar::Quad(QuadElem::with_radicand(r(), BigRational::zero(), d)),
        }
    }

    pub fn from_i64(n: i64, domain: Domain) -> Self {
        Self::from_bigint(BigInt::from(n), domain)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_zero(),
            Scalar::Rat(v) => v.is_zero(),
            Scalar::Poly(v) => v.is_zero(),
            Scalar::Quad(v) => v.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_one(),
            Scalar::Rat(v) => v.is_one(),
            Scalar::Poly(v) => v.is_one(),
            Scalar::Quad(v) => v.is_one(),
        }
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Scalar::Int(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_poly(&self) -> Option<&RatPoly> {
        match self {
            Scalar::Poly(v) => Some(v),
            _ => None,
        }
    }

    /// Explicit promotion into `target`.
    ///
    /// Allowed moves: identity, Int -> Rat, Int/Rat -> PolyRat (constant),
    /// Int/Rat -> Quad(d) (zero irrational part). Anything else is a
    /// [`Error::DomainMismatch`].
    pub fn promote(&self, target: Domain) -> Result<Scalar> {
        let mismatch = || Error::DomainMismatch {
            left: self.domain(),
            right: target,
        };
        if self.domain() == target {
            return Ok(self.clone());
        }
        let rational = match self {
            Scalar::Int(v) => BigRational::from_integer(v.clone()),
            Scalar::Rat(v) => v.clone(),
            _ => return Err(mismatch()),
        };
        match target {
            Domain::Int => Err(mismatch()),
            Domain::Rat => Ok(Scalar::Rat(rational)),
            Domain::PolyRat => Ok(Scalar::Poly(RatPoly::constant(rational))),
            Domain::Quad(d) => QuadElem::from_rational(rational, d).map(Scalar::Quad),
        }
    }

    fn same_domain(&self, other: &Scalar) -> Result<()> {
        if self.domain() == other.domain() {
            Ok(())
        } else {
            Err(Error::DomainMismatch {
                left: self.domain(),
                right: other.domain(),
            })
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_domain(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.same_domain(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_domain(other)?;
        Ok(self * other)
    }

    /// Multiplicative inverse in a field domain.
    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Poly(_) | Scalar::Int(_) if self.is_zero() => Err(Error::DivisionByZero),
            Scalar::Poly(_) => Err(Error::NonInvertibleDomain(Domain::PolyRat)),
            Scalar::Int(_) => Err(Error::NonInvertibleDomain(Domain::Int)),
            Scalar::Rat(v) if v.is_zero() => Err(Error::DivisionByZero),
            Scalar::Rat(v) => Ok(Scalar::Rat(v.recip())),
            Scalar::Quad(v) => v.inv().map(Scalar::Quad),
        }
    }

    /// `self^n` by repeated squaring; `x^0 = 1` for every `x`.
    pub fn pow(&self, mut n: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(self.domain());
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplication by an integer, valid in every domain.
    pub fn mul_int(&self, k: &BigInt) -> Scalar {
        match self {
            Scalar::Int(v) => Scalar::Int(v * k),
            Scalar::Rat(v) => Scalar::Rat(v * BigRational::from_integer(k.clone())),
            Scalar::Poly(v) => Scalar::Poly(v.scale(&BigRational::from_integer(k.clone()))),
            Scalar::Quad(v) => {
                let k = BigRational::from_integer(k.clone());
                Scalar::Quad(QuadElem::with_radicand(
                    v.rational_part() * &k,
                    v.irrational_part() * &k,
                    v.radicand(),
                ))
            }
        }
    }

    /// Sign test for integer and rational values (`None` elsewhere).
    pub fn is_negative(&self) -> Option<bool> {
        match self {
            Scalar::Int(v) => Some(v.is_negative()),
            Scalar::Rat(v) => Some(v.is_negative()),
            _ => None,
        }
    }
}

pub fn scalar_add(x: &Scalar, y: &Scalar) -> Result<Scalar> {
    x.try_add(y)
}

pub fn scalar_mul(x: &Scalar, y: &Scalar) -> Result<Scalar> {
    x.try_mul(y)
}

pub fn scalar_neg(x: &Scalar) -> Scalar {
    -x
}

pub fn scalar_inv(x: &Scalar) -> Result<Scalar> {
    x.inv()
}

pub fn scalar_pow(x: &Scalar, n: u64) -> Scalar {
    x.pow(n)
}

/// Checks that every value lives in `domain`.
pub fn check_all_in(values: &[Scalar], domain: Domain) -> Result<()> {
    match values.iter().find(|v| v.domain() != domain) {
        Some(v) => Err(Error::DomainMismatch {
            left: domain,
            right: v.domain(),
        }),
        None => Ok(()),
    }
}

// The operator impls panic on a domain mismatch; the fallible `try_*`
// methods are the checked entry points.

fn mismatch_panic(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar domain mismatch: {} vs {}", a.domain(), b.domain())
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a $op b),
                    (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a $op b),
                    (Scalar::Poly(a), Scalar::Poly(b)) => Scalar::Poly(a $op b),
                    (Scalar::Quad(a), Scalar::Quad(b)) if a.radicand() == b.radicand() => {
                        Scalar::Quad(a $op b)
                    }
                    _ => mismatch_panic(self, rhs),
                }
            }
        }

        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                &self $op &rhs
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Int(v) => Scalar::Int(-v),
            Scalar::Rat(v) => Scalar::Rat(-v),
            Scalar::Poly(v) => Scalar::Poly(-v),
            Scalar::Quad(v) => Scalar::Quad(-v),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
