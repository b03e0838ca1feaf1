//! Three closed models of `T_r`: Binet forms with translated roots, the
//! spectral shift `M -> M + rI` of a matrix model, and colored labeled
//! structures counted by brute force.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{Domain, Scalar};
use crate::recurrence::{CharPoly, Recurrence};
use crate::transform::SequencePrefix;

/// `a_n = sum_j c_j rho_j^n` over a field, with pairwise distinct roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinetForm {
    domain: Domain,
    terms: Vec<(Scalar, Scalar)>,
}

impl BinetForm {
    /// Terms are `(c_j, rho_j)` pairs.
    pub fn new(terms: Vec<(Scalar, Scalar)>) -> Result<Self> {
        let domain = terms.first().ok_or(Error::EmptyPrefix)?.0.domain();
        if !domain.is_field() {
            return Err(Error::NotAField(domain));
        }
        for (c, rho) in &terms {
            for v in [c, rho] {
                if v.domain() != domain {
                    return Err(Error::DomainMismatch {
                        left: domain,
                        right: v.domain(),
                    });
                }
            }
        }
        for (i, (_, a)) in terms.iter().enumerate() {
            if terms[i + 1..].iter().any(|(_, b)| a == b) {
                return Err(Error::RepeatedRoot);
            }
        }
        Ok(BinetForm { domain, terms })
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn terms(&self) -> &[(Scalar, Scalar)] {
        &self.terms
    }

    pub fn roots(&self) -> impl Iterator<Item = &Scalar> {
        self.terms.iter().map(|(_, rho)| rho)
    }

    /// Values `a_0..=a_(n_max)`.
    pub fn prefix(&self, n_max: usize) -> SequencePrefix {
        let mut values = Vec::with_capacity(n_max + 1);
        let mut powers: Vec<Scalar> = self.terms.iter().map(|(c, _)| c.clone()).collect();
        for _ in 0..=n_max {
            let sum = powers
                .iter()
                .fold(Scalar::zero(self.domain), |acc, p| &acc + p);
            values.push(sum);
            for (p, (_, rho)) in powers.iter_mut().zip(&self.terms) {
                *p = &*p * rho;
            }
        }
        SequencePrefix::new(values).expect("single field domain")
    }
}

pub fn binet_eval(form: &BinetForm, n: u64) -> Scalar {
    form.terms
        .iter()
        .fold(Scalar::zero(form.domain), |acc, (c, rho)| &acc + &(c * &rho.pow(n)))
}

/// Same coefficients, roots `rho_j + r`.
pub fn binet_shift(form: &BinetForm, r: &Scalar) -> Result<BinetForm> {
    let r = r.promote(form.domain)?;
    let terms = form
        .terms
        .iter()
        .map(|(c, rho)| (c.clone(), rho + &r))
        .collect();
    Ok(BinetForm {
        domain: form.domain,
        terms,
    })
}

/// Dense square matrix of scalars in one domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    domain: Domain,
    rows: Vec<Vec<Scalar>>,
}

impl Matrix {
    pub fn new(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let m = rows.len();
        let domain = rows
            .first()
            .and_then(|r| r.first())
            .ok_or_else(|| Error::DimensionMismatch("empty matrix".into()))?
            .domain();
        for row in &rows {
            if row.len() != m {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a {m}x{m} matrix",
                    row.len()
                )));
            }
            crate::exactnum::check_all_in(row, domain)?;
        }
        Ok(Matrix { domain, rows })
    }

    pub fn from_i64s(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::int(v)).collect())
                .collect(),
        )
    }

    pub fn identity(m: usize, domain: Domain) -> Self {
        let rows = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        if i == j {
                            Scalar::one(domain)
                        } else {
                            Scalar::zero(domain)
                        }
                    })
                    .collect()
            })
            .collect();
        Matrix { domain, rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let m = self.dim();
        let rows = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        (0..m).fold(Scalar::zero(self.domain), |acc, k| {
                            &acc + &(&self.rows[i][k] * &other.rows[k][j])
                        })
                    })
                    .collect()
            })
            .collect();
        Matrix {
            domain: self.domain,
            rows,
        }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(Scalar::zero(self.domain), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    /// `M + r I`.
    pub fn shift_diagonal(&self, r: &Scalar) -> Matrix {
        let mut rows = self.rows.clone();
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = &row[i] + r;
        }
        Matrix {
            domain: self.domain,
            rows,
        }
    }

    /// `M^n` by repeated squaring.
    pub fn pow(&self, mut n: u64) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.dim(), self.domain);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// `d x d` companion matrix of a monic `P`, bottom-row convention:
/// ones on the superdiagonal and last row `(-p_d, ..., -p_1)`.
pub fn companion_matrix(poly: &CharPoly) -> Result<Matrix> {
    if !poly.is_monic() {
        return Err(Error::NonMonic);
    }
    let d = poly.degree();
    let dom = poly.domain();
    let p = poly.coeffs();
    let rows = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    if i + 1 < d {
                        if j == i + 1 {
                            Scalar::one(dom)
                        } else {
                            Scalar::zero(dom)
                        }
                    } else {
                        -&p[d - j]
                    }
                })
                .collect()
        })
        .collect();
    Ok(Matrix { domain: dom, rows })
}

/// `a_n = u^T M^n v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixModel {
    m: Matrix,
    u: Vec<Scalar>,
    v: Vec<Scalar>,
}

impl MatrixModel {
    pub fn new(m: Matrix, u: Vec<Scalar>, v: Vec<Scalar>) -> Result<Self> {
        if u.len() != m.dim() || v.len() != m.dim() {
            return Err(Error::DimensionMismatch(format!(
                "vectors of length {} and {} against a {}x{} matrix",
                u.len(),
                v.len(),
                m.dim(),
                m.dim()
            )));
        }
        crate::exactnum::check_all_in(&u, m.domain())?;
        crate::exactnum::check_all_in(&v, m.domain())?;
        Ok(MatrixModel { m, u, v })
    }

    /// Companion model of a recurrence.
    ///
    /// The state vector is `(a_n, ..., a_(n+d-1))`, advanced by the
    /// companion matrix, so `u = e_1` and `v` is the initial segment itself.
    pub fn from_recurrence(rec: &Recurrence) -> Result<Self> {
        let m = companion_matrix(rec.poly())?;
        let d = m.dim();
        let dom = rec.domain();
        let mut u = vec![Scalar::zero(dom); d];
        u[0] = Scalar::one(dom);
        Self::new(m, u, rec.init().to_vec())
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    pub fn domain(&self) -> Domain {
        self.m.domain()
    }

    /// `u^T M^n v`.
    pub fn eval(&self, n: u64) -> Scalar {
        dot(&self.u, &self.m.pow(n).mul_vec(&self.v), self.domain())
    }

    /// `a_0..=a_(n_max)` by repeated matrix-vector products.
    pub fn prefix(&self, n_max: usize) -> SequencePrefix {
        walk(&self.m, &self.u, &self.v, n_max)
    }
}

fn dot(u: &[Scalar], w: &[Scalar], domain: Domain) -> Scalar {
    u.iter()
        .zip(w)
        .fold(Scalar::zero(domain), |acc, (a, b)| &acc + &(a * b))
}

fn walk(m: &Matrix, u: &[Scalar], v: &[Scalar], n_max: usize) -> SequencePrefix {
    let mut state = v.to_vec();
    let mut values = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        if n > 0 {
            state = m.mul_vec(&state);
        }
        values.push(dot(u, &state, m.domain()));
    }
    SequencePrefix::new(values).expect("single domain")
}

/// `u^T (M + rI)^n v`.
pub fn matrix_transform_eval(model: &MatrixModel, r: &Scalar, n: u64) -> Result<Scalar> {
    let r = r.promote(model.domain())?;
    let shifted = model.m.shift_diagonal(&r);
    Ok(dot(&model.u, &shifted.pow(n).mul_vec(&model.v), model.domain()))
}

/// `u^T (M + rI)^n v` for `0 <= n <= n_max`.
pub fn matrix_transform_prefix(
    model: &MatrixModel,
    r: &Scalar,
    n_max: usize,
) -> Result<SequencePrefix> {
    let r = r.promote(model.domain())?;
    Ok(walk(&model.m.shift_diagonal(&r), &model.u, &model.v, n_max))
}

/// Largest label count the enumerator accepts.
pub const ENUMERATION_LIMIT: usize = 12;

/// Counts pairs (structure on a subset K of `{1..n}`, `r`-coloring of the
/// complement) by visiting all `2^n` subsets.
///
/// `a_k` is the number of structures on a `k`-element label set.
pub fn colored_count_bruteforce(a: &SequencePrefix, r: u64, n: usize) -> Result<BigInt> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::EnumerationTooLarge(n));
    }
    a.check_index(n)?;
    let counts = a
        .values()
        .iter()
        .take(n + 1)
        .map(|v| match v {
            Scalar::Int(c) if !c.is_negative() => Ok(c.clone()),
            Scalar::Int(_) => Err(Error::NegativeInput),
            other => Err(Error::DomainMismatch {
                left: Domain::Int,
                right: other.domain(),
            }),
        })
        .collect::<Result<Vec<_>>>()?;
    let colors = BigInt::from(r);
    let mut total = BigInt::zero();
    for mask in 0u32..(1u32 << n) {
        let carried = mask.count_ones() as usize;
        let structures = &counts[carried];
        if structures.is_zero() {
            continue;
        }
        // each uncolored label independently picks one of r colors
        let mut colorings = BigInt::one();
        for label in 0..n {
            if mask & (1 << label) == 0 {
                colorings *= &colors;
            }
        }
        total += structures * colorings;
    }
    Ok(total)
}

/// Converts a small nonnegative integer scalar to `u64`.
pub fn as_color_count(r: &Scalar) -> Result<u64> {
    match r {
        Scalar::Int(v) => v.to_u64().ok_or(Error::NegativeInput),
        other => Err(Error::DomainMismatch {
            left: Domain::Int,
            right: other.domain(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q5(a: (i64, i64), b: (i64, i64)) -> Scalar {
        Scalar::quad(a, b, 5).unwrap()
    }

    fn fibonacci_form() -> BinetForm {
        BinetForm::new(vec![
            (q5((0, 1), (1, 5)), q5((1, 2), (1, 2))),
            (q5((0, 1), (-1, 5)), q5((1, 2), (-1, 2))),
        ])
        .unwrap()
    }

    fn mersenne_form() -> BinetForm {
        BinetForm::new(vec![
            (Scalar::rat(-1, 1), Scalar::rat(1, 1)),
            (Scalar::rat(1, 1), Scalar::rat(2, 1)),
        ])
        .unwrap()
    }

    #[test]
    fn binet_fibonacci() {
        let f = fibonacci_form();
        assert_eq!(binet_eval(&f, 10), Scalar::from_i64(55, Domain::Quad(5)));
        assert_eq!(binet_eval(&f, 0), Scalar::zero(Domain::Quad(5)));
        let shifted = binet_shift(&f, &Scalar::int(1)).unwrap();
        let values: Vec<_> = (0..5).map(|n| binet_eval(&shifted, n)).collect();
        let expected: Vec<_> = [0, 1, 3, 8, 21]
            .iter()
            .map(|&v| Scalar::from_i64(v, Domain::Quad(5)))
            .collect();
        assert_eq!(values, expected);
        assert_eq!(binet_shift(&f, &Scalar::int(0)).unwrap(), f);
    }

    #[test]
    fn binet_mersenne() {
        let m = mersenne_form();
        assert_eq!(binet_eval(&m, 5), Scalar::rat(31, 1));
        let shifted = binet_shift(&m, &Scalar::int(1)).unwrap();
        assert_eq!(
            shifted.roots().cloned().collect::<Vec<_>>(),
            [Scalar::rat(2, 1), Scalar::rat(3, 1)]
        );
        assert_eq!(binet_eval(&shifted, 4), Scalar::rat(65, 1));
    }

    #[test]
    fn binet_validation() {
        let dup = BinetForm::new(vec![
            (Scalar::rat(1, 1), Scalar::rat(2, 1)),
            (Scalar::rat(3, 1), Scalar::rat(2, 1)),
        ]);
        assert_eq!(dup, Err(Error::RepeatedRoot));
        assert_eq!(
            BinetForm::new(vec![(Scalar::int(1), Scalar::int(2))]),
            Err(Error::NotAField(Domain::Int))
        );
        let mixed = BinetForm::new(vec![
            (q5((1, 1), (0, 1)), q5((0, 1), (1, 1))),
            (q5((1, 1), (0, 1)), Scalar::quad((0, 1), (1, 1), 2).unwrap()),
        ]);
        assert!(matches!(mixed, Err(Error::DomainMismatch { .. })));
        assert!(binet_shift(&fibonacci_form(), &Scalar::poly(&[1])).is_err());
    }

    #[test]
    fn companion_examples() {
        let fib = companion_matrix(&CharPoly::from_i64s(&[1, -1, -1]).unwrap()).unwrap();
        assert_eq!(fib, Matrix::from_i64s(&[&[0, 1], &[1, 1]]).unwrap());
        let lin = companion_matrix(&CharPoly::from_i64s(&[1, -7]).unwrap()).unwrap();
        assert_eq!(lin, Matrix::from_i64s(&[&[7]]).unwrap());
        let mer = companion_matrix(&CharPoly::from_i64s(&[1, -3, 2]).unwrap()).unwrap();
        assert_eq!(mer, Matrix::from_i64s(&[&[0, 1], &[-2, 3]]).unwrap());
        let non_monic = CharPoly::from_i64s(&[2, 1]).unwrap();
        assert_eq!(companion_matrix(&non_monic), Err(Error::NonMonic));
    }

    #[test]
    fn companion_characteristic_polynomial_by_expansion() {
        // det(XI - M) for the 2x2 Mersenne companion: X(X - 3) + 2.
        let m = companion_matrix(&CharPoly::from_i64s(&[1, -3, 2]).unwrap()).unwrap();
        let r = m.rows();
        let trace = &r[0][0] + &r[1][1];
        let det = &(&r[0][0] * &r[1][1]) - &(&r[0][1] * &r[1][0]);
        assert_eq!((trace, det), (Scalar::int(3), Scalar::int(2)));
    }

    #[test]
    fn matrix_spectral_shift() {
        let m = Matrix::from_i64s(&[&[0, 1], &[1, 1]]).unwrap();
        let model = MatrixModel::new(m, vec![Scalar::int(1), Scalar::int(0)], vec![Scalar::int(0), Scalar::int(1)]).unwrap();
        assert_eq!(matrix_transform_eval(&model, &Scalar::int(1), 4).unwrap(), Scalar::int(21));
        assert_eq!(matrix_transform_eval(&model, &Scalar::int(5), 0).unwrap(), Scalar::int(0));
        assert_eq!(matrix_transform_eval(&model, &Scalar::int(0), 3).unwrap(), Scalar::int(2));
        assert_eq!(model.eval(3), Scalar::int(2));
        assert!(matrix_transform_eval(&model, &Scalar::rat(1, 2), 3).is_err());
    }

    #[test]
    fn model_from_recurrence_matches_unroll() {
        let lucas = Recurrence::new(
            CharPoly::from_i64s(&[1, -1, -1]).unwrap(),
            vec![Scalar::int(2), Scalar::int(1)],
        )
        .unwrap();
        let model = MatrixModel::from_recurrence(&lucas).unwrap();
        assert_eq!(model.prefix(9), crate::recurrence::unroll(&lucas, 9));
        assert_eq!(model.eval(9), Scalar::int(76));
    }

    #[test]
    fn model_dimension_checks() {
        let m = Matrix::from_i64s(&[&[0, 1], &[1, 1]]).unwrap();
        assert!(MatrixModel::new(m, vec![Scalar::int(1)], vec![Scalar::int(0), Scalar::int(1)]).is_err());
        assert!(Matrix::from_i64s(&[&[0, 1], &[1]]).is_err());
    }

    #[test]
    fn colored_examples() {
        let ones = SequencePrefix::from_i64s(&[1, 1, 1]).unwrap();
        assert_eq!(colored_count_bruteforce(&ones, 2, 2).unwrap(), BigInt::from(9));
        let a = SequencePrefix::from_i64s(&[4, 0, 7, 2]).unwrap();
        for n in 0..4 {
            assert_eq!(
                Scalar::Int(colored_count_bruteforce(&a, 0, n).unwrap()),
                a.values()[n]
            );
        }
        let perms = SequencePrefix::from_i64s(&[1, 1, 2, 6]).unwrap();
        assert_eq!(colored_count_bruteforce(&perms, 1, 3).unwrap(), BigInt::from(16));
    }

    #[test]
    fn colored_errors() {
        let long = SequencePrefix::from_i64s(&[1; 14]).unwrap();
        assert_eq!(colored_count_bruteforce(&long, 1, 13), Err(Error::EnumerationTooLarge(13)));
        let neg = SequencePrefix::from_i64s(&[1, -1]).unwrap();
        assert_eq!(colored_count_bruteforce(&neg, 1, 1), Err(Error::NegativeInput));
        let rat = SequencePrefix::new(vec![Scalar::rat(1, 2)]).unwrap();
        assert!(colored_count_bruteforce(&rat, 1, 0).is_err());
        assert!(colored_count_bruteforce(&neg, 1, 2).is_err());
    }
}
