//! The binomial-convolution operators `T_r` acting on finite sequence prefixes.
//!
//! `(T_r a)_n = sum_{k=0}^{n} C(n,k) r^(n-k) a_k`. The family is an additive
//! semigroup in `r`: `T_r T_s = T_(r+s)`, `T_0` is the identity and
//! `T_(-r)` inverts `T_r`. `T_1` is the classical binomial transform.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{check_all_in, Domain, Scalar};

/// The terms `a_0..=a_N` of a sequence, all in one domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SequencePrefix {
    domain: Domain,
    values: Vec<Scalar>,
}

impl SequencePrefix {
    pub fn new(values: Vec<Scalar>) -> Result<Self> {
        let first = values.first().ok_or(Error::EmptyPrefix)?;
        let domain = first.domain();
        check_all_in(&values, domain)?;
        Ok(SequencePrefix { domain, values })
    }

    pub fn from_i64s(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| Scalar::int(v)).collect())
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Scalar> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest available index `N`.
    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<&Scalar> {
        self.values.get(n)
    }

    /// First `n_max + 1` terms.
    pub fn truncate(&self, n_max: usize) -> Result<Self> {
        self.check_index(n_max)?;
        Ok(SequencePrefix {
            domain: self.domain,
            values: self.values[..=n_max].to_vec(),
        })
    }

    /// Promotes every term into `target`.
    pub fn promote(&self, target: Domain) -> Result<Self> {
        let values = self
            .values
            .iter()
            .map(|v| v.promote(target))
            .collect::<Result<Vec<_>>>()?;
        Ok(SequencePrefix {
            domain: target,
            values,
        })
    }

    /// The forward shift `(S a)_n = a_(n+1)`; loses the last available term.
    pub fn shifted(&self) -> Result<Self> {
        if self.values.len() < 2 {
            return Err(Error::PrefixTooShort {
                needed: 1,
                available: self.values.len(),
            });
        }
        SequencePrefix::new(self.values[1..].to_vec())
    }

    pub(crate) fn check_index(&self, n_max: usize) -> Result<()> {
        if n_max >= self.values.len() {
            Err(Error::PrefixTooShort {
                needed: n_max,
                available: self.values.len(),
            })
        } else {
            Ok(())
        }
    }

    /// Comma separated values with one space after each comma.
    pub fn to_oeis_string(&self) -> String {
        self.values
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for SequencePrefix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_oeis_string())
    }
}

/// Row-by-row generator of binomial coefficients `C(n, 0..=n)`.
pub(crate) struct PascalRows {
    row: Vec<BigInt>,
}

impl PascalRows {
    pub(crate) fn new() -> Self {
        PascalRows { row: Vec::new() }
    }

    /// Advances to the next row and returns it (row 0 first).
    pub(crate) fn next_row(&mut self) -> &[BigInt] {
        if self.row.is_empty() {
            self.row.push(BigInt::one());
        } else {
            let mut next = Vec::with_capacity(self.row.len() + 1);
            next.push(BigInt::one());
            for w in self.row.windows(2) {
                next.push(&w[0] + &w[1]);
            }
            next.push(BigInt::one());
            self.row = next;
        }
        &self.row
    }
}

/// `C(n, k)` as a big integer (zero when `k > n`).
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `(T_r a)_n` for `0 <= n <= n_max`.
///
/// `r` is promoted into the prefix domain; a value that cannot be promoted
/// (a rational `r` against an integer prefix, say) is a
/// [`Error::DomainMismatch`]. Each row is evaluated Horner style in `r`
/// using one running Pascal row, so no powers of `r` are recomputed.
pub fn apply_transform(a: &SequencePrefix, r: &Scalar, n_max: usize) -> Result<SequencePrefix> {
    a.check_index(n_max)?;
    let r = r.promote(a.domain())?;
    let mut pascal = PascalRows::new();
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let row = pascal.next_row();
        // sum_k C(n,k) r^(n-k) a_k  =  (...((C(n,0)a_0) r + C(n,1)a_1) r + ...) + C(n,n)a_n
        let mut acc = Scalar::zero(a.domain());
        for (k, c) in row.iter().enumerate() {
            if k > 0 {
                acc = &acc * &r;
            }
            acc = &acc + &a.values[k].mul_int(c);
        }
        out.push(acc);
        debug_assert_eq!(out.len(), n + 1);
    }
    Ok(SequencePrefix {
        domain: a.domain(),
        values: out,
    })
}

/// `T_r (T_s a)` computed as the single pass `T_(r+s) a`.
pub fn compose_transforms(
    a: &SequencePrefix,
    r: &Scalar,
    s: &Scalar,
    n_max: usize,
) -> Result<SequencePrefix> {
    let r = r.promote(a.domain())?;
    let s = s.promote(a.domain())?;
    apply_transform(a, &(&r + &s), n_max)
}

/// `T_(-r) b`, the inverse of [`apply_transform`].
pub fn inverse_transform(b: &SequencePrefix, r: &Scalar, n_max: usize) -> Result<SequencePrefix> {
    let r = r.promote(b.domain())?;
    apply_transform(b, &(-&r), n_max)
}

/// The `m`-fold classical binomial transform `B^m a = T_m a`.
pub fn iterated_binomial(a: &SequencePrefix, m: u64, n_max: usize) -> Result<SequencePrefix> {
    let m = Scalar::from_bigint(BigInt::from(m), a.domain());
    apply_transform(a, &m, n_max)
}
