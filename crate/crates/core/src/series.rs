//! Truncated ordinary and exponential generating functions.
//!
//! For an OGF the stored coefficients are `[z^n] A(z)`. For an EGF they are
//! the sequence values `a_n = n! [t^n] Â(t)`, so EGF products are binomial
//! convolutions and stay inside integer and polynomial domains.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{check_all_in, fmt_rational, Domain, Scalar};
use crate::transform::{PascalRows, SequencePrefix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SeriesKind {
    Ogf,
    Egf,
}

/// A power series known up to and including `z^order` (or `t^order`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    kind: SeriesKind,
    domain: Domain,
    coeffs: Vec<Scalar>,
}

impl TruncSeries {
    pub fn new(kind: SeriesKind, coeffs: Vec<Scalar>) -> Result<Self> {
        let domain = coeffs.first().ok_or(Error::EmptyPrefix)?.domain();
        check_all_in(&coeffs, domain)?;
        Ok(TruncSeries {
            kind,
            domain,
            coeffs,
        })
    }

    fn from_parts(kind: SeriesKind, domain: Domain, coeffs: Vec<Scalar>) -> Self {
        TruncSeries {
            kind,
            domain,
            coeffs,
        }
    }

    /// `1 + 0 z + ...` to the given order.
    pub fn one(kind: SeriesKind, domain: Domain, order: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(domain); order + 1];
        coeffs[0] = Scalar::one(domain);
        Self::from_parts(kind, domain, coeffs)
    }

    /// The series whose stored coefficients are `1, r, r^2, ...`.
    ///
    /// As an OGF this is `1/(1 - r z)`; as an EGF it is `e^(r t)`.
    pub fn geometric(kind: SeriesKind, r: &Scalar, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut p = Scalar::one(r.domain());
        for _ in 0..=order {
            coeffs.push(p.clone());
            p = &p * r;
        }
        Self::from_parts(kind, r.domain(), coeffs)
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Option<&Scalar> {
        self.coeffs.get(n)
    }

    fn check_compatible(&self, other: &TruncSeries) -> Result<()> {
        if self.kind != other.kind {
            return Err(Error::KindMismatch);
        }
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        if self.domain != other.domain {
            return Err(Error::DomainMismatch {
                left: self.domain,
                right: other.domain,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_compatible(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self::from_parts(self.kind, self.domain, coeffs))
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Scalar) -> Result<TruncSeries> {
        let c = c.promote(self.domain)?;
        let coeffs = self.coeffs.iter().map(|a| a * &c).collect();
        Ok(Self::from_parts(self.kind, self.domain, coeffs))
    }

    /// Multiplicative inverse; needs an invertible constant term.
    ///
    /// Only the OGF case is provided. Constant term 1 works in every domain,
    /// other constants need a field.
    pub fn inverse(&self) -> Result<TruncSeries> {
        if self.kind != SeriesKind::Ogf {
            return Err(Error::KindMismatch);
        }
        let c0 = &self.coeffs[0];
        let c0_inv = if c0.is_one() {
            Scalar::one(self.domain)
        } else {
            c0.inv()?
        };
        let mut out: Vec<Scalar> = Vec::with_capacity(self.coeffs.len());
        out.push(c0_inv.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = Scalar::zero(self.domain);
            for k in 1..=n {
                acc = &acc + &(&self.coeffs[k] * &out[n - k]);
            }
            out.push(-&(&acc * &c0_inv));
        }
        Ok(Self::from_parts(self.kind, self.domain, out))
    }

    /// Coefficients of `a_n t^n / n!` as exact rationals, for display.
    ///
    /// Defined for `Int` and `Rat` EGFs only.
    pub fn egf_analytic_coeffs(&self) -> Option<Vec<BigRational>> {
        if self.kind != SeriesKind::Egf {
            return None;
        }
        let mut fact = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                fact *= n;
            }
            let value = match c {
                Scalar::Int(v) => BigRational::from_integer(v.clone()),
                Scalar::Rat(v) => v.clone(),
                _ => return None,
            };
            out.push(value / BigRational::from_integer(fact.clone()));
        }
        Some(out)
    }
}

impl fmt::Display for TruncSeries {
    /// `c0 + c1*z + ... + O(z^(N+1))` for OGFs; EGFs use `t` and show the
    /// factorial, e.g. `c2*t^2/2!`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = match self.kind {
            SeriesKind::Ogf => "z",
            SeriesKind::Egf => "t",
        };
        let mut parts = Vec::new();
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coef = match c {
                Scalar::Poly(_) | Scalar::Quad(_) if n > 0 => format!("({c})"),
                _ => c.to_string(),
            };
            let mono = match n {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{n}"),
            };
            let term = match (n, self.kind) {
                (0, _) => coef,
                (1, _) => format!("{coef}*{mono}"),
                (_, SeriesKind::Ogf) => format!("{coef}*{mono}"),
                (_, SeriesKind::Egf) => format!("{coef}*{mono}/{n}!"),
            };
            parts.push(term);
        }
        parts.push(format!("O({var}^{})", self.coeffs.len()));
        f.write_str(&parts.join(" + "))
    }
}

/// Analytic EGF coefficient `a_n / n!` rendered as a rational string.
pub fn egf_coefficient_text(f: &TruncSeries, n: usize) -> Option<String> {
    f.egf_analytic_coeffs()
        .and_then(|c| c.get(n).map(fmt_rational))
}

/// OGF: truncated Cauchy product. EGF: binomial convolution
/// `c_n = sum_k C(n,k) f_k g_(n-k)`.
pub fn series_mul(f: &TruncSeries, g: &TruncSeries) -> Result<TruncSeries> {
    f.check_compatible(g)?;
    let mut pascal = PascalRows::new();
    let mut out = Vec::with_capacity(f.coeffs.len());
    for n in 0..f.coeffs.len() {
        let row = pascal.next_row();
        let mut acc = Scalar::zero(f.domain);
        for k in 0..=n {
            let term = &f.coeffs[k] * &g.coeffs[n - k];
            acc = match f.kind {
                SeriesKind::Ogf => &acc + &term,
                SeriesKind::Egf => &acc + &term.mul_int(&row[k]),
            };
        }
        out.push(acc);
    }
    Ok(TruncSeries::from_parts(f.kind, f.domain, out))
}

/// `(1 - r z)^(-1) f(z / (1 - r z))`, the OGF of `T_r` applied to the
/// coefficient sequence of `f`.
///
/// The substitution is evaluated Horner style in `h = z/(1 - r z)`, which has
/// zero constant term, so truncation at the input order is exact.
pub fn series_compose_geometric(f: &TruncSeries, r: &Scalar) -> Result<TruncSeries> {
    if f.kind != SeriesKind::Ogf {
        return Err(Error::KindMismatch);
    }
    let r = r.promote(f.domain)?;
    let order = f.order();
    let g = TruncSeries::geometric(SeriesKind::Ogf, &r, order);
    let h = shift_by_z(&g);
    let mut acc = TruncSeries::one(SeriesKind::Ogf, f.domain, order).scale(&f.coeffs[order])?;
    for c in f.coeffs[..order].iter().rev() {
        acc = series_mul(&acc, &h)?;
        acc.coeffs[0] = &acc.coeffs[0] + c;
    }
    series_mul(&g, &acc)
}

/// Multiplies an OGF by `z`, dropping the top coefficient.
fn shift_by_z(g: &TruncSeries) -> TruncSeries {
    let mut coeffs = Vec::with_capacity(g.coeffs.len());
    coeffs.push(Scalar::zero(g.domain));
    coeffs.extend_from_slice(&g.coeffs[..g.coeffs.len() - 1]);
    TruncSeries::from_parts(g.kind, g.domain, coeffs)
}

/// `e^(r t) Â(t)` on the stored sequence values of an EGF.
pub fn egf_transform(f: &TruncSeries, r: &Scalar) -> Result<TruncSeries> {
    if f.kind != SeriesKind::Egf {
        return Err(Error::KindMismatch);
    }
    let r = r.promote(f.domain)?;
    let exp = TruncSeries::geometric(SeriesKind::Egf, &r, f.order());
    series_mul(&exp, f)
}

/// Entry `[z^n] g(z) f(z)^k` of the Riordan array
/// `(g, f) = (1/(1 - r z), z/(1 - r z))`, computed by series arithmetic.
///
/// The closed form is `C(n,k) r^(n-k)`, zero above the diagonal.
pub fn riordan_entry(r: &Scalar, n: usize, k: usize) -> Scalar {
    if k > n {
        return Scalar::zero(r.domain());
    }
    let g = TruncSeries::geometric(SeriesKind::Ogf, r, n);
    let f = shift_by_z(&g);
    let mut acc = g;
    for _ in 0..k {
        acc = series_mul(&acc, &f).expect("same kind, order and domain");
    }
    acc.coeffs.swap_remove(n)
}

/// The `size x size` leading block of the Riordan array of `T_r`.
pub fn riordan_matrix(r: &Scalar, size: usize) -> Vec<Vec<Scalar>> {
    if size == 0 {
        return Vec::new();
    }
    let order = size - 1;
    let g = TruncSeries::geometric(SeriesKind::Ogf, r, order);
    let f = shift_by_z(&g);
    let mut columns = Vec::with_capacity(size);
    let mut col = g;
    for _ in 0..size {
        columns.push(col.coeffs.clone());
        col = series_mul(&col, &f).expect("same kind, order and domain");
    }
    (0..size)
        .map(|n| (0..size).map(|k| columns[k][n].clone()).collect())
        .collect()
}

pub fn series_from_prefix(a: &SequencePrefix, kind: SeriesKind) -> TruncSeries {
    TruncSeries::from_parts(kind, a.domain(), a.values().to_vec())
}

pub fn prefix_from_series(f: &TruncSeries) -> SequencePrefix {
    SequencePrefix::new(f.coeffs.clone()).expect("series are nonempty and single-domain")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transform::binomial;

    fn ogf(v: &[i64]) -> TruncSeries {
        TruncSeries::new(SeriesKind::Ogf, v.iter().map(|&x| Scalar::int(x)).collect()).unwrap()
    }

    fn egf(v: &[i64]) -> TruncSeries {
        TruncSeries::new(SeriesKind::Egf, v.iter().map(|&x| Scalar::int(x)).collect()).unwrap()
    }

    fn ints(s: &TruncSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c.as_int().unwrap()).unwrap())
            .collect()
    }

    #[test]
    fn cauchy_product_of_geometric_series() {
        let ones = ogf(&[1; 5]);
        assert_eq!(ints(&series_mul(&ones, &ones).unwrap()), [1, 2, 3, 4, 5]);
    }

    #[test]
    fn binomial_convolution_of_exponentials() {
        let ones = egf(&[1; 5]);
        assert_eq!(ints(&series_mul(&ones, &ones).unwrap()), [1, 2, 4, 8, 16]);
    }

    #[test]
    fn unit_is_neutral() {
        let f = ogf(&[3, -1, 4, 1, -5]);
        assert_eq!(series_mul(&f, &ogf(&[1, 0, 0, 0, 0])).unwrap(), f);
        let e = egf(&[3, -1, 4, 1, -5]);
        assert_eq!(series_mul(&e, &egf(&[1, 0, 0, 0, 0])).unwrap(), e);
    }

    #[test]
    fn mul_errors() {
        assert_eq!(series_mul(&ogf(&[1, 2]), &egf(&[1, 2])), Err(Error::KindMismatch));
        assert_eq!(
            series_mul(&ogf(&[1, 2]), &ogf(&[1, 2, 3])),
            Err(Error::OrderMismatch(1, 2))
        );
        assert_eq!(
            series_compose_geometric(&egf(&[1]), &Scalar::int(1)),
            Err(Error::KindMismatch)
        );
        assert_eq!(egf_transform(&ogf(&[1]), &Scalar::int(1)), Err(Error::KindMismatch));
    }

    #[test]
    fn fibonacci_ogf_substitution() {
        // z/(1 - z - z^2) to order 9 is the Fibonacci prefix.
        let denom = ogf(&[1, -1, -1, 0, 0, 0, 0, 0, 0, 0]);
        let z = ogf(&[0, 1, 0, 0, 0, 0, 0, 0, 0, 0]);
        let fib = series_mul(&z, &denom.inverse().unwrap()).unwrap();
        assert_eq!(ints(&fib), [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]);
        let t = series_compose_geometric(&fib, &Scalar::int(1)).unwrap();
        assert_eq!(ints(&t), [0, 1, 3, 8, 21, 55, 144, 377, 987, 2584]);
    }

    #[test]
    fn substitution_identity_and_powers_of_two() {
        let f = ogf(&[2, 7, 1, 8, 2, 8]);
        assert_eq!(series_compose_geometric(&f, &Scalar::int(0)).unwrap(), f);
        let ones = ogf(&[1; 7]);
        let t = series_compose_geometric(&ones, &Scalar::int(1)).unwrap();
        assert_eq!(ints(&t), [1, 2, 4, 8, 16, 32, 64]);
    }

    #[test]
    fn egf_examples() {
        let lucas = egf(&[2, 1, 3, 4, 7, 11, 18, 29, 47, 76]);
        let t = egf_transform(&lucas, &Scalar::int(1)).unwrap();
        assert_eq!(ints(&t), [2, 3, 7, 18, 47, 123, 322, 843, 2207, 5778]);
        assert_eq!(egf_transform(&lucas, &Scalar::int(0)).unwrap(), lucas);
        let one = egf(&[1, 0, 0, 0, 0]);
        assert_eq!(ints(&egf_transform(&one, &Scalar::int(3)).unwrap()), [1, 3, 9, 27, 81]);
    }

    #[test]
    fn riordan_examples() {
        assert_eq!(riordan_entry(&Scalar::int(2), 3, 1), Scalar::int(12));
        assert_eq!(riordan_entry(&Scalar::int(1), 4, 2), Scalar::int(6));
        assert_eq!(riordan_entry(&Scalar::int(1), 2, 5), Scalar::int(0));
        for n in 0..6 {
            assert!(riordan_entry(&Scalar::rat(-3, 7), n, n).is_one());
        }
    }

    #[test]
    fn riordan_matrix_matches_entries() {
        let r = Scalar::int(-2);
        let m = riordan_matrix(&r, 7);
        for n in 0..7 {
            for k in 0..7 {
                assert_eq!(m[n][k], riordan_entry(&r, n, k));
                let closed = if k > n {
                    Scalar::int(0)
                } else {
                    Scalar::Int(binomial(n as u64, k as u64)) * r.pow((n - k) as u64)
                };
                assert_eq!(m[n][k], closed);
            }
        }
    }

    #[test]
    fn prefix_views() {
        let a = SequencePrefix::from_i64s(&[0, 1, 1, 2]).unwrap();
        let s = series_from_prefix(&a, SeriesKind::Ogf);
        assert_eq!(s.order(), 3);
        assert_eq!(ints(&s), [0, 1, 1, 2]);
        assert_eq!(prefix_from_series(&s), a);

        let e = series_from_prefix(&SequencePrefix::from_i64s(&[1, 1, 1]).unwrap(), SeriesKind::Egf);
        assert_eq!(egf_coefficient_text(&e, 2).unwrap(), "1/2");
    }

    #[test]
    fn inverse_needs_unit_or_field() {
        let f = ogf(&[2, 1]);
        assert_eq!(f.inverse(), Err(Error::NonInvertibleDomain(Domain::Int)));
        let q = TruncSeries::new(SeriesKind::Ogf, vec![Scalar::rat(2, 1), Scalar::rat(1, 1)]).unwrap();
        let inv = q.inverse().unwrap();
        assert_eq!(inv.coeffs(), [Scalar::rat(1, 2), Scalar::rat(-1, 4)]);
    }

    #[test]
    fn rendering() {
        assert_eq!(ogf(&[0, 1, 3]).to_string(), "1*z + 3*z^2 + O(z^3)");
        assert_eq!(egf(&[2, 1, 3]).to_string(), "2 + 1*t + 3*t^2/2! + O(t^3)");
    }
}
