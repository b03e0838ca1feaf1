//! Elements `a + b*sqrt(d)` of a quadratic field Q(sqrt(d)).

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Returns true when `d` has no square factor > 1.
pub fn is_squarefree(d: i64) -> bool {
    if d == 0 {
        return false;
    }
    let n = d.unsigned_abs();
    let mut p: u64 = 2;
    while p * p <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

/// Checks that `d` defines a proper quadratic extension.
pub fn check_radicand(d: i64) -> Result<()> {
    if d == 1 || !is_squarefree(d) {
        return Err(Error::InvalidQuadField(d));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadElem {
    a: BigRational,
    b: BigRational,
    d: i64,
}

impl QuadElem {
    pub fn new(a: BigRational, b: BigRational, d: i64) -> Result<Self> {
        check_radicand(d)?;
        Ok(QuadElem { a, b, d })
    }

    /// Construction without re-validating `d`; callers hold an element of the
    /// same field already.
    pub(crate) fn with_radicand(a: BigRational, b: BigRational, d: i64) -> Self {
        QuadElem { a, b, d }
    }

    pub fn from_rational(a: BigRational, d: i64) -> Result<Self> {
        Self::new(a, BigRational::zero(), d)
    }

    /// `sqrt(d)` itself.
    pub fn sqrt_d(d: i64) -> Result<Self> {
        Self::new(BigRational::zero(), BigRational::one(), d)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn irrational_part(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> i64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// Field norm `a^2 - d*b^2`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - self.d_rat() * &self.b * &self.b
    }

    pub fn conjugate(&self) -> Self {
        Self::with_radicand(self.a.clone(), -&self.b, self.d)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // d is not a rational square, so the norm of a nonzero element is nonzero.
        let n = self.norm();
        Ok(Self::with_radicand(&self.a / &n, -&self.b / &n, self.d))
    }

    fn d_rat(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.d))
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(
            self.d, other.d,
            "quadratic field mismatch: sqrt({}) vs sqrt({})",
            self.d, other.d
        );
    }
}

impl Add<&QuadElem> for &QuadElem {
    type Output = QuadElem;
    fn add(self, rhs: &QuadElem) -> QuadElem {
        self.assert_same_field(rhs);
        QuadElem::with_radicand(&self.a + &rhs.a, &self.b + &rhs.b, self.d)
    }
}

impl Sub<&QuadElem> for &QuadElem {
    type Output = QuadElem;
    fn sub(self, rhs: &QuadElem) -> QuadElem {
        self.assert_same_field(rhs);
        QuadElem::with_radicand(&self.a - &rhs.a, &self.b - &rhs.b, self.d)
    }
}

impl Mul<&QuadElem> for &QuadElem {
    type Output = QuadElem;
    fn mul(self, rhs: &QuadElem) -> QuadElem {
        self.assert_same_field(rhs);
        let a = &self.a * &rhs.a + self.d_rat() * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadElem::with_radicand(a, b, self.d)
    }
}

impl Neg for &QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem::with_radicand(-&self.a, -&self.b, self.d)
    }
}
