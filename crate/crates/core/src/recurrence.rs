//! Constant-coefficient recurrences and the root shift `P(X) -> P(X - r)`.
//!
//! Polynomials are stored in descending order, `P(X) = sum_k p_k X^(d-k)`
//! with `p_0` leading. A sequence satisfies `P` when `P(S) a = 0`, `S` the
//! forward shift. Because `(S - r) T_r = T_r S`, the transformed sequence
//! `T_r a` is annihilated by `P(X - r)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exactnum::{check_all_in, Domain, Scalar};
use crate::transform::{apply_transform, binomial, SequencePrefix};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharPoly {
    domain: Domain,
    coeffs: Vec<Scalar>,
}

impl CharPoly {
    /// Descending coefficients `p_0, ..., p_d` with `p_0 != 0` and `d >= 1`.
    pub fn new(coeffs: Vec<Scalar>) -> Result<Self> {
        let lead = coeffs.first().ok_or(Error::ZeroDegree)?;
        if coeffs.len() < 2 {
            return Err(Error::ZeroDegree);
        }
        if lead.is_zero() {
            return Err(Error::NonMonic);
        }
        let domain = lead.domain();
        check_all_in(&coeffs, domain)?;
        Ok(CharPoly { domain, coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Scalar::int(c)).collect())
    }

    /// `X^2 - p X + q`.
    pub fn second_order(p: &Scalar, q: &Scalar) -> Result<Self> {
        let q = q.promote(p.domain())?;
        Self::new(vec![Scalar::one(p.domain()), -p, q])
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs[0].is_one()
    }

    fn require_monic(&self) -> Result<()> {
        if self.is_monic() {
            Ok(())
        } else {
            Err(Error::NonMonic)
        }
    }

    /// Divides through by the leading coefficient.
    ///
    /// Works in field domains, and over the integers when the leading
    /// coefficient is a unit.
    pub fn normalized(&self) -> Result<CharPoly> {
        let lead = &self.coeffs[0];
        if lead.is_one() {
            return Ok(self.clone());
        }
        let lead_inv = match lead {
            Scalar::Int(v) if v.abs() == BigInt::from(1) => lead.clone(),
            Scalar::Int(_) | Scalar::Poly(_) => {
                return Err(Error::NonInvertibleDomain(self.domain))
            }
            _ => lead.inv()?,
        };
        let coeffs = self.coeffs.iter().map(|c| c * &lead_inv).collect();
        Ok(CharPoly {
            domain: self.domain,
            coeffs,
        })
    }

    pub fn promote(&self, target: Domain) -> Result<CharPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.promote(target))
            .collect::<Result<Vec<_>>>()?;
        Ok(CharPoly {
            domain: target,
            coeffs,
        })
    }
}

impl fmt::Display for CharPoly {
    /// Descending form with explicit signs, e.g. `X^2 - 3*X + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = d - k;
            let neg = match c {
                Scalar::Poly(q) => q.coeff(q.degree().unwrap_or(0)).is_negative(),
                _ => c.is_negative() == Some(true),
            };
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mag_text = match mag.to_string() {
                t if t.contains(' ') => format!("({t})"),
                t => t,
            };
            let mono = match power {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{power}"),
            };
            match (power, mag.is_one()) {
                (0, _) => f.write_str(&mag_text)?,
                (_, true) => f.write_str(&mono)?,
                _ => write!(f, "{mag_text}*{mono}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A monic characteristic polynomial together with `a_0..a_(d-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Recurrence {
    poly: CharPoly,
    init: Vec<Scalar>,
}

impl Recurrence {
    pub fn new(poly: CharPoly, init: Vec<Scalar>) -> Result<Self> {
        poly.require_monic()?;
        if init.len() != poly.degree() {
            return Err(Error::InitLength {
                expected: poly.degree(),
                got: init.len(),
            });
        }
        check_all_in(&init, poly.domain())?;
        Ok(Recurrence { poly, init })
    }

    pub fn poly(&self) -> &CharPoly {
        &self.poly
    }

    pub fn init(&self) -> &[Scalar] {
        &self.init
    }

    pub fn domain(&self) -> Domain {
        self.poly.domain()
    }

    pub fn order(&self) -> usize {
        self.poly.degree()
    }

    pub fn promote(&self, target: Domain) -> Result<Recurrence> {
        let init = self
            .init
            .iter()
            .map(|c| c.promote(target))
            .collect::<Result<Vec<_>>>()?;
        Recurrence::new(self.poly.promote(target)?, init)
    }
}

/// `a_0..=a_(n_max)` from `a_n = -sum_(k=1..d) p_k a_(n-k)`.
pub fn unroll(rec: &Recurrence, n_max: usize) -> SequencePrefix {
    let p = rec.poly.coeffs();
    let d = rec.order();
    let mut values: Vec<Scalar> = rec.init.iter().take(n_max + 1).cloned().collect();
    while values.len() <= n_max {
        let n = values.len();
        let mut acc = Scalar::zero(rec.domain());
        for k in 1..=d {
            acc = &acc + &(&p[k] * &values[n - k]);
        }
        values.push(-acc);
    }
    SequencePrefix::new(values).expect("recurrence values share the polynomial domain")
}

/// `(P(S) a)_n = sum_k p_k a_(n+d-k)` for `0 <= n <= len(a) - 1 - d`.
pub fn apply_char_operator(poly: &CharPoly, a: &SequencePrefix) -> Result<SequencePrefix> {
    let d = poly.degree();
    if a.len() < d + 1 {
        return Err(Error::PrefixTooShort {
            needed: d,
            available: a.len(),
        });
    }
    if poly.domain() != a.domain() {
        return Err(Error::DomainMismatch {
            left: poly.domain(),
            right: a.domain(),
        });
    }
    let values = a.values();
    let out = (0..a.len() - d)
        .map(|n| {
            poly.coeffs()
                .iter()
                .enumerate()
                .fold(Scalar::zero(a.domain()), |acc, (k, c)| {
                    &acc + &(c * &values[n + d - k])
                })
        })
        .collect();
    SequencePrefix::new(out)
}

/// `Q(X) = P(X - r)` through `q_j = sum_(k<=j) p_k C(d-k, j-k) (-r)^(j-k)`.
pub fn shift_characteristic(poly: &CharPoly, r: &Scalar) -> Result<CharPoly> {
    poly.require_monic()?;
    let r = r.promote(poly.domain())?;
    let neg_r = -&r;
    let d = poly.degree();
    let p = poly.coeffs();
    // powers of -r up to d
    let mut pows = Vec::with_capacity(d + 1);
    pows.push(Scalar::one(poly.domain()));
    for i in 1..=d {
        pows.push(&pows[i - 1] * &neg_r);
    }
    let q = (0..=d)
        .map(|j| {
            (0..=j).fold(Scalar::zero(poly.domain()), |acc, k| {
                let c = binomial((d - k) as u64, (j - k) as u64);
                &acc + &(&p[k] * &pows[j - k]).mul_int(&c)
            })
        })
        .collect();
    Ok(CharPoly {
        domain: poly.domain(),
        coeffs: q,
    })
}

/// The recurrence satisfied by `T_r a`: polynomial `P(X - r)` and initial
/// values `(T_r a)_0..(T_r a)_(d-1)`.
pub fn transform_recurrence(rec: &Recurrence, r: &Scalar) -> Result<Recurrence> {
    let d = rec.order();
    let poly = shift_characteristic(&rec.poly, r)?;
    let head = unroll(rec, d - 1);
    let init = apply_transform(&head, r, d - 1)?.into_values();
    Recurrence::new(poly, init)
}

/// Coefficients `(p + 2r, r^2 + p r + q)` of the transformed second-order
/// recurrence `b_n = (p + 2r) b_(n-1) - (r^2 + p r + q) b_(n-2)`.
pub fn second_order_template(p: &Scalar, q: &Scalar, r: &Scalar) -> Result<(Scalar, Scalar)> {
    let dom = p.domain();
    let q = q.promote(dom)?;
    let r = r.promote(dom)?;
    let two = Scalar::from_i64(2, dom);
    let lin = p + &(&two * &r);
    let cst = &(&(&r * &r) + &(p * &r)) + &q;
    Ok((lin, cst))
}

/// `(S - r) T_r a - T_r S a` on indices `0..=len(a) - 2`; identically zero.
pub fn intertwine_residual(a: &SequencePrefix, r: &Scalar) -> Result<SequencePrefix> {
    if a.len() < 2 {
        return Err(Error::PrefixTooShort {
            needed: 1,
            available: a.len(),
        });
    }
    let r = r.promote(a.domain())?;
    let n = a.max_index();
    let t = apply_transform(a, &r, n)?;
    let ts = apply_transform(&a.shifted()?, &r, n - 1)?;
    let out = (0..n)
        .map(|i| {
            let lhs = &t.values()[i + 1] - &(&r * &t.values()[i]);
            &lhs - &ts.values()[i]
        })
        .collect();
    SequencePrefix::new(out)
}
