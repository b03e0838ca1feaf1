//! Classical second-order families and their transformed recurrences.
//!
//! Each family is `a_n = p a_(n-1) - q a_(n-2)` with characteristic
//! polynomial `X^2 - pX + q`. The five integer families are joined by the
//! generalized Mersenne polynomials `W_n(x)` (`p = 3x`, `q = 2`). Running
//! the recurrence machinery over `PolyRat` with the indeterminate standing
//! for `r` turns the symbolic recurrence table into exact polynomials.

use num_bigint::BigInt;
use num_traits::{One, Pow};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{Domain, RatPoly, Scalar};
use crate::models::BinetForm;
use crate::recurrence::{
    second_order_template, transform_recurrence, unroll, CharPoly, Recurrence,
};
use crate::series::{series_compose_geometric, series_from_prefix, SeriesKind};
use crate::transform::{apply_transform, SequencePrefix};

const RECURRENCES: &str = include_str!("../data/recurrences.txt");
const SEGMENTS: &str = include_str!("../data/segments.txt");

/// Registered family names, in table order.
pub const INTEGER_FAMILIES: [&str; 5] = ["fibonacci", "lucas", "pell", "jacobsthal", "mersenne"];
pub const GENERALIZED_MERSENNE: &str = "generalized-mersenne";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: &'static str,
    pub oeis: Option<&'static str>,
    pub p: Scalar,
    pub q: Scalar,
    pub init: [Scalar; 2],
}

impl FamilySpec {
    pub fn domain(&self) -> Domain {
        self.p.domain()
    }

    pub fn char_poly(&self) -> CharPoly {
        CharPoly::second_order(&self.p, &self.q).expect("registry polynomials are valid")
    }

    pub fn recurrence(&self) -> Recurrence {
        Recurrence::new(self.char_poly(), self.init.to_vec()).expect("registry recurrences are valid")
    }
}

fn int_family(name: &'static str, oeis: &'static str, p: i64, q: i64, init: [i64; 2]) -> FamilySpec {
    FamilySpec {
        name,
        oeis: Some(oeis),
        p: Scalar::int(p),
        q: Scalar::int(q),
        init: [Scalar::int(init[0]), Scalar::int(init[1])],
    }
}

pub fn registry() -> Vec<FamilySpec> {
    vec![
        int_family("fibonacci", "A000045", 1, -1, [0, 1]),
        int_family("lucas", "A000032", 1, -1, [2, 1]),
        int_family("pell", "A000129", 2, -1, [0, 1]),
        int_family("jacobsthal", "A001045", 1, -2, [0, 1]),
        int_family("mersenne", "A000225", 3, 2, [0, 1]),
        FamilySpec {
            name: GENERALIZED_MERSENNE,
            oeis: None,
            p: Scalar::poly(&[0, 3]),
            q: Scalar::poly(&[2]),
            init: [Scalar::poly(&[]), Scalar::poly(&[1])],
        },
    ]
}

pub fn family(name: &str) -> Result<FamilySpec> {
    registry()
        .into_iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::UnknownFamily(name.to_string()))
}

/// `a_0..=a_(n_max)` of a registered family.
pub fn family_prefix(name: &str, n_max: usize) -> Result<SequencePrefix> {
    let spec = family(name)?;
    let prefix = unroll(&spec.recurrence(), n_max);
    if spec.name == "mersenne" {
        for (n, v) in prefix.values().iter().enumerate() {
            let closed = BigInt::from(2).pow(n) - BigInt::one();
            assert_eq!(v, &Scalar::Int(closed), "mersenne closed form at n = {n}");
        }
    }
    Ok(prefix)
}

/// The recurrence of `T_r a` for a registered family.
///
/// Integer families are promoted into the domain of `r`, so a `PolyRat`
/// indeterminate yields the symbolic recurrence. The `W` family already
/// lives in `PolyRat` (in `x`); there `r` must be promotable to `PolyRat`.
pub fn transformed_family_recurrence(name: &str, r: &Scalar) -> Result<Recurrence> {
    let rec = family(name)?.recurrence();
    let rec = if rec.domain() == Domain::Int {
        rec.promote(r.domain())?
    } else {
        rec
    };
    transform_recurrence(&rec, r)
}

/// Closed form `a_n = sum_j c_j rho_j^n` of an integer family, with the
/// roots written out exactly: `Quad(5)` for Fibonacci and Lucas, `Quad(2)`
/// for Pell, rationals for Jacobsthal and Mersenne.
pub fn family_binet_form(name: &str) -> Result<BinetForm> {
    let q = |a: (i64, i64), b: (i64, i64), d: i64| Scalar::quad(a, b, d);
    let terms = match family(name)?.name {
        "fibonacci" => vec![
            (q((0, 1), (1, 5), 5)?, q((1, 2), (1, 2), 5)?),
            (q((0, 1), (-1, 5), 5)?, q((1, 2), (-1, 2), 5)?),
        ],
        "lucas" => vec![
            (q((1, 1), (0, 1), 5)?, q((1, 2), (1, 2), 5)?),
            (q((1, 1), (0, 1), 5)?, q((1, 2), (-1, 2), 5)?),
        ],
        "pell" => vec![
            (q((0, 1), (1, 4), 2)?, q((1, 1), (1, 1), 2)?),
            (q((0, 1), (-1, 4), 2)?, q((1, 1), (-1, 1), 2)?),
        ],
        "jacobsthal" => vec![
            (Scalar::rat(1, 3), Scalar::rat(2, 1)),
            (Scalar::rat(-1, 3), Scalar::rat(-1, 1)),
        ],
        "mersenne" => vec![
            (Scalar::rat(-1, 1), Scalar::rat(1, 1)),
            (Scalar::rat(1, 1), Scalar::rat(2, 1)),
        ],
        other => return Err(Error::UnknownFamily(other.to_string())),
    };
    BinetForm::new(terms)
}

/// Base `W_0(x)..=W_(n_max)(x)`.
pub fn generalized_mersenne_prefix(n_max: usize) -> SequencePrefix {
    unroll(&family(GENERALIZED_MERSENNE).expect("registered").recurrence(), n_max)
}

/// `W^(r)_n(x)` from `W^(r)_n = (2r+3x) W^(r)_(n-1) - (r^2+3xr+2) W^(r)_(n-2)`
/// with `W^(r)_0 = 0`, `W^(r)_1 = 1`.
pub fn generalized_mersenne_transformed(r: &Scalar, n_max: usize) -> Result<SequencePrefix> {
    let (lin, cst) = second_order_template(&Scalar::poly(&[0, 3]), &Scalar::poly(&[2]), r)?;
    let poly = CharPoly::second_order(&lin, &cst)?;
    let rec = Recurrence::new(poly, vec![Scalar::poly(&[]), Scalar::poly(&[1])])?;
    Ok(unroll(&rec, n_max))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecurrenceRow {
    pub family: String,
    pub oeis: String,
    pub char_poly: String,
    /// Coefficient of `b_(n-1)` as a polynomial in `r`.
    pub linear: String,
    /// Negated coefficient of `b_(n-2)` as a polynomial in `r`.
    pub constant: String,
    pub recurrence: String,
    pub initial: [String; 2],
    pub matches_golden: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecurrenceTable {
    pub rows: Vec<RecurrenceRow>,
}

impl RecurrenceTable {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches_golden)
    }
}

fn compact_poly(s: &Scalar) -> String {
    match s {
        Scalar::Poly(p) => p.to_compact_string("r"),
        other => other.to_string(),
    }
}

fn strip_layout(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect()
}

fn golden_rows(text: &str) -> impl Iterator<Item = Vec<&str>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split('|').map(str::trim).collect())
}

/// Symbolic transformed recurrences for the five integer families, with
/// the shift parameter as a polynomial indeterminate.
pub fn table_recurrences() -> RecurrenceTable {
    let golden: Vec<Vec<&str>> = golden_rows(RECURRENCES).collect();
    let r = Scalar::Poly(RatPoly::x());
    let rows = INTEGER_FAMILIES
        .iter()
        .map(|&name| {
            let spec = family(name).expect("registered");
            let rec = transformed_family_recurrence(name, &r).expect("symbolic shift");
            let c = rec.poly().coeffs();
            let linear = compact_poly(&-&c[1]);
            let constant = compact_poly(&c[2]);
            let initial = [compact_poly(&rec.init()[0]), compact_poly(&rec.init()[1])];
            let char_poly = spec.char_poly().to_string();
            let matches_golden = golden.iter().any(|g| {
                g.len() == 5
                    && g[0] == name
                    && g[1] == strip_layout(&char_poly)
                    && g[2] == linear
                    && g[3] == constant
                    && g[4] == format!("{}, {}", initial[0], initial[1])
            });
            RecurrenceRow {
                family: name.to_string(),
                oeis: spec.oeis.unwrap_or_default().to_string(),
                recurrence: format!("b_n = ({linear})b_{{n-1}} - ({constant})b_{{n-2}}"),
                char_poly,
                linear,
                constant,
                initial,
                matches_golden,
            }
        })
        .collect();
    RecurrenceTable { rows }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SegmentRow {
    pub family: String,
    pub r: i64,
    pub values: Vec<String>,
    /// `None` when no golden row exists for this `(family, r)`.
    pub matches_golden: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SegmentTable {
    pub rows: Vec<SegmentRow>,
}

impl SegmentTable {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches_golden != Some(false))
    }
}

/// Golden first-ten-terms rows keyed by `(family, r)`.
pub fn golden_segments() -> Vec<(String, i64, Vec<BigInt>)> {
    golden_rows(SEGMENTS)
        .map(|g| {
            let values = g[2]
                .split(',')
                .map(|v| v.trim().parse::<BigInt>().expect("golden integers"))
                .collect();
            (g[0].to_string(), g[1].parse().expect("golden r"), values)
        })
        .collect()
}

/// Ten transformed values of one integer family at integer `r`.
pub fn segment_row(name: &str, r: i64) -> Result<SegmentRow> {
    let values = apply_transform(&family_prefix(name, 9)?, &Scalar::int(r), 9)?;
    let golden = golden_segments()
        .into_iter()
        .find(|(f, gr, _)| f == name && *gr == r)
        .map(|(_, _, v)| v);
    let matches_golden = golden.map(|g| {
        g.len() == values.len()
            && g.iter()
                .zip(values.values())
                .all(|(a, b)| b.as_int() == Some(a))
    });
    Ok(SegmentRow {
        family: name.to_string(),
        r,
        values: values.values().iter().map(ToString::to_string).collect(),
        matches_golden,
    })
}

/// Initial segments at `r = 1` and `r = 2` for the five integer families.
pub fn table_initial_segments() -> SegmentTable {
    let rows = INTEGER_FAMILIES
        .iter()
        .flat_map(|&name| [1, 2].map(|r| segment_row(name, r).expect("registered family")))
        .collect();
    SegmentTable { rows }
}

/// The three routes to a table row: direct transform, transformed
/// recurrence, OGF substitution. Returns the three prefixes.
pub fn segment_routes(name: &str, r: i64, n_max: usize) -> Result<[SequencePrefix; 3]> {
    let r = Scalar::int(r);
    let base = family_prefix(name, n_max)?;
    let direct = apply_transform(&base, &r, n_max)?;
    let via_rec = unroll(&transformed_family_recurrence(name, &r)?, n_max);
    let via_ogf = crate::series::prefix_from_series(&series_compose_geometric(
        &series_from_prefix(&base, SeriesKind::Ogf),
        &r,
    )?);
    Ok([direct, via_rec, via_ogf])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexCheck {
    pub n: usize,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub checks: Vec<IndexCheck>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identities: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.identities.iter().all(IdentityCheck::passed)
    }
}

fn check_identity(
    label: &str,
    lhs: &SequencePrefix,
    rhs: impl Fn(usize) -> BigInt,
) -> IdentityCheck {
    let checks = lhs
        .values()
        .iter()
        .enumerate()
        .map(|(n, v)| {
            let expected = Scalar::Int(rhs(n));
            IndexCheck {
                n,
                lhs: v.to_string(),
                rhs: expected.to_string(),
                pass: *v == expected,
            }
        })
        .collect();
    IdentityCheck {
        identity: label.to_string(),
        checks,
    }
}

/// Index-wise check of the binomial-transform identities
/// `(BF)_n = F_2n`, `(BL)_n = L_2n`, `(Bm)_n = 3^n - 2^n`, and
/// `(BJ)_0 = 0`, `(BJ)_n = 3^(n-1)`.
pub fn special_identities_report(n_max: usize) -> IdentityReport {
    let one = Scalar::int(1);
    let transformed = |name: &str| {
        apply_transform(&family_prefix(name, n_max).expect("registered"), &one, n_max)
            .expect("prefix long enough")
    };
    let fib = family_prefix("fibonacci", 2 * n_max).expect("registered");
    let lucas = family_prefix("lucas", 2 * n_max).expect("registered");
    let at = |p: &SequencePrefix, i: usize| p.values()[i].as_int().cloned().expect("integer family");
    let three = BigInt::from(3);
    let two = BigInt::from(2);
    IdentityReport {
        identities: vec![
            check_identity("(BF)_n = F_2n", &transformed("fibonacci"), |n| at(&fib, 2 * n)),
            check_identity("(BL)_n = L_2n", &transformed("lucas"), |n| at(&lucas, 2 * n)),
            check_identity("(Bm)_n = 3^n - 2^n", &transformed("mersenne"), |n| {
                three.clone().pow(n) - two.clone().pow(n)
            }),
            check_identity("(BJ)_n = 3^(n-1), (BJ)_0 = 0", &transformed("jacobsthal"), |n| {
                if n == 0 {
                    BigInt::from(0)
                } else {
                    three.clone().pow(n - 1)
                }
            }),
        ],
    }
}
