//! Seeded property suites over the whole crate.
//!
//! Every suite is deterministic for a given seed. Each property counts its
//! checks and keeps the smallest failing case it saw.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::exactnum::{Domain, Scalar};
use crate::families::{
    family_binet_form, family_prefix, generalized_mersenne_prefix,
    generalized_mersenne_transformed, segment_routes, special_identities_report,
    table_initial_segments, table_recurrences, transformed_family_recurrence, INTEGER_FAMILIES,
};
use crate::models::{
    binet_eval, binet_shift, colored_count_bruteforce, matrix_transform_eval,
    matrix_transform_prefix, MatrixModel,
};
use crate::recurrence::{
    apply_char_operator, intertwine_residual, shift_characteristic, transform_recurrence, unroll,
    CharPoly, Recurrence,
};
use crate::series::{
    egf_transform, prefix_from_series, riordan_entry, riordan_matrix, series_compose_geometric,
    series_from_prefix, SeriesKind,
};
use crate::transform::{
    apply_transform, binomial, compose_transforms, inverse_transform, iterated_binomial,
    SequencePrefix,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Semigroup,
    Rootshift,
    Identities,
    Models,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Semigroup, Suite::Rootshift, Suite::Identities, Suite::Models];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Semigroup => "semigroup",
            Suite::Rootshift => "rootshift",
            Suite::Identities => "identities",
            Suite::Models => "models",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Random cases per randomized property.
    pub cases: usize,
    /// Index bound for the deterministic identity checks.
    pub n_max: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0,
            cases: 100,
            n_max: 20,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyOutcome {
    pub property: String,
    pub checks: usize,
    pub failures: usize,
    /// Smallest failing case, if any.
    pub counterexample: Option<String>,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub properties: Vec<PropertyOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyOutcome::passed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub cases: usize,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }
}

struct Tally {
    name: String,
    checks: usize,
    failures: usize,
    smallest: Option<(usize, String)>,
}

impl Tally {
    fn new(name: &str) -> Self {
        Tally {
            name: name.to_string(),
            checks: 0,
            failures: 0,
            smallest: None,
        }
    }

    fn record(&mut self, ok: bool, size: usize, case: impl FnOnce() -> String) {
        self.checks += 1;
        if ok {
            return;
        }
        self.failures += 1;
        if self.smallest.as_ref().is_none_or(|(s, _)| size < *s) {
            self.smallest = Some((size, case()));
        }
    }

    fn finish(self) -> PropertyOutcome {
        PropertyOutcome {
            property: self.name,
            checks: self.checks,
            failures: self.failures,
            counterexample: self.smallest.map(|(_, c)| c),
        }
    }
}

fn random_rat(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Scalar {
    Scalar::rat(rng.random_range(-num..=num), rng.random_range(1..=den))
}

/// Rational prefix with small numerators and denominators.
pub fn random_prefix(rng: &mut ChaCha8Rng, len: usize) -> SequencePrefix {
    SequencePrefix::new((0..len).map(|_| random_rat(rng, 9, 9)).collect()).expect("nonempty")
}

fn random_shift(rng: &mut ChaCha8Rng) -> Scalar {
    random_rat(rng, 4, 4)
}

fn random_monic(rng: &mut ChaCha8Rng, degree: usize) -> CharPoly {
    let mut coeffs = vec![Scalar::rat(1, 1)];
    coeffs.extend((0..degree).map(|_| random_rat(rng, 5, 3)));
    CharPoly::new(coeffs).expect("monic")
}

fn is_zero_prefix(a: &SequencePrefix) -> bool {
    a.values().iter().all(Scalar::is_zero)
}

fn show(a: &SequencePrefix) -> String {
    a.to_string()
}

/// `sum_k C(n,k) r^(n-k) sum_j C(k,j) s^(k-j) a_j` with explicit powers.
pub fn nested_double_sum(a: &SequencePrefix, r: &Scalar, s: &Scalar, n_max: usize) -> SequencePrefix {
    let dom = a.domain();
    let values = (0..=n_max)
        .map(|n| {
            let mut outer = Scalar::zero(dom);
            for k in 0..=n {
                let mut inner = Scalar::zero(dom);
                for j in 0..=k {
                    let t = s.pow((k - j) as u64) * a.values()[j].clone();
                    inner = inner + t.mul_int(&binomial(k as u64, j as u64));
                }
                let t = r.pow((n - k) as u64) * inner;
                outer = outer + t.mul_int(&binomial(n as u64, k as u64));
            }
            outer
        })
        .collect();
    SequencePrefix::new(values).expect("nonempty")
}

/// `P(X - r)` by Horner substitution over ascending coefficient vectors.
pub fn naive_substitution(poly: &CharPoly, r: &Scalar) -> Vec<Scalar> {
    let dom = poly.domain();
    let r = r.promote(dom).expect("promotable shift");
    let mut acc: Vec<Scalar> = vec![poly.coeffs()[0].clone()];
    for p in &poly.coeffs()[1..] {
        // acc * (X - r) + p
        let mut next = vec![Scalar::zero(dom); acc.len() + 1];
        for (i, c) in acc.iter().enumerate() {
            next[i + 1] = &next[i + 1] + c;
            next[i] = &next[i] - &(c * &r);
        }
        next[0] = &next[0] + p;
        acc = next;
    }
    acc.reverse();
    acc
}

fn semigroup_suite(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> SuiteReport {
    const LEN: usize = 12;
    let n = LEN - 1;
    let mut law = Tally::new("T_r T_s = T_(r+s)");
    let mut oracle = Tally::new("single pass equals double-sum expansion");
    let mut inverse = Tally::new("T_(-r) T_r = id");
    let mut linear = Tally::new("linearity");
    let mut triangular = Tally::new("triangularity");
    let mut iterated = Tally::new("B^m = T_m, additive in m");

    for _ in 0..cfg.cases {
        let a = random_prefix(rng, LEN);
        let b = random_prefix(rng, LEN);
        let r = random_shift(rng);
        let s = random_shift(rng);

        let nested = apply_transform(&apply_transform(&a, &s, n).unwrap(), &r, n).unwrap();
        let single = compose_transforms(&a, &r, &s, n).unwrap();
        let direct = apply_transform(&a, &(&r + &s), n).unwrap();
        law.record(nested == single && single == direct, LEN, || {
            format!("a = {}, r = {r}, s = {s}", show(&a))
        });

        if oracle.checks < cfg.cases.min(25) {
            let brute = nested_double_sum(&a, &r, &s, n);
            oracle.record(brute == single, LEN, || format!("a = {}, r = {r}, s = {s}", show(&a)));
        }

        let back = inverse_transform(&apply_transform(&a, &r, n).unwrap(), &r, n).unwrap();
        inverse.record(back == a, LEN, || format!("a = {}, r = {r}", show(&a)));

        let alpha = random_rat(rng, 5, 5);
        let beta = random_rat(rng, 5, 5);
        let combo = SequencePrefix::new(
            a.values()
                .iter()
                .zip(b.values())
                .map(|(x, y)| &(&alpha * x) + &(&beta * y))
                .collect(),
        )
        .unwrap();
        let lhs = apply_transform(&combo, &r, n).unwrap();
        let ta = apply_transform(&a, &r, n).unwrap();
        let tb = apply_transform(&b, &r, n).unwrap();
        let rhs_ok = lhs
            .values()
            .iter()
            .zip(ta.values().iter().zip(tb.values()))
            .all(|(l, (x, y))| *l == &(&alpha * x) + &(&beta * y));
        linear.record(rhs_ok, LEN, || {
            format!("a = {}, b = {}, alpha = {alpha}, beta = {beta}, r = {r}", show(&a), show(&b))
        });

        let cut = rng.random_range(0..n);
        let mut perturbed = a.values().to_vec();
        for v in perturbed.iter_mut().skip(cut + 1) {
            *v = &*v + &random_rat(rng, 9, 9) + Scalar::rat(1, 1);
        }
        let perturbed = SequencePrefix::new(perturbed).unwrap();
        let tp = apply_transform(&perturbed, &r, n).unwrap();
        triangular.record(tp.values()[..=cut] == ta.values()[..=cut], cut + 1, || {
            format!("a = {}, cut = {cut}, r = {r}", show(&a))
        });

        let m1 = rng.random_range(0..4u64);
        let m2 = rng.random_range(0..4u64);
        let split = iterated_binomial(&iterated_binomial(&a, m1, n).unwrap(), m2, n).unwrap();
        let whole = iterated_binomial(&a, m1 + m2, n).unwrap();
        let mut repeated = a.clone();
        for _ in 0..m1 + m2 {
            repeated = apply_transform(&repeated, &Scalar::int(1), n).unwrap();
        }
        iterated.record(split == whole && whole == repeated, LEN, || {
            format!("a = {}, m1 = {m1}, m2 = {m2}", show(&a))
        });
    }

    SuiteReport {
        suite: Suite::Semigroup,
        properties: [law, oracle, inverse, linear, triangular, iterated]
            .into_iter()
            .map(Tally::finish)
            .collect(),
    }
}

fn rootshift_suite(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> SuiteReport {
    const N: usize = 20;
    let mut annihilate = Tally::new("P(S - r) annihilates T_r a on indices 0..=16");
    let mut intertwine = Tally::new("(S - r) T_r = T_r S");
    let mut formula = Tally::new("coefficient formula equals P(X - r) by substitution");
    let mut adds = Tally::new("shifts compose additively");
    let mut undo = Tally::new("shift by -r undoes shift by r");
    let mut coherence = Tally::new("unroll of transformed recurrence equals T_r of unroll");

    for _ in 0..cfg.cases {
        let d = rng.random_range(1..=4usize);
        let poly = random_monic(rng, d);
        let init: Vec<Scalar> = (0..d).map(|_| random_rat(rng, 9, 9)).collect();
        let rec = Recurrence::new(poly.clone(), init).unwrap();
        let r = random_shift(rng);
        let s = random_shift(rng);

        let b = apply_transform(&unroll(&rec, N), &r, N).unwrap();
        let q = shift_characteristic(&poly, &r).unwrap();
        let residual = apply_char_operator(&q, &b).unwrap();
        let ok = residual.len() >= 17 && is_zero_prefix(&residual.truncate(16).unwrap());
        annihilate.record(ok, d, || format!("P = {poly}, init = {:?}, r = {r}", rec.init()));

        let a = random_prefix(rng, 12);
        let res = intertwine_residual(&a, &r).unwrap();
        intertwine.record(is_zero_prefix(&res), a.len(), || format!("a = {}, r = {r}", show(&a)));

        let wide_degree = rng.random_range(1..=6usize);
        let wide = random_monic(rng, wide_degree);
        let via_formula = shift_characteristic(&wide, &r).unwrap();
        formula.record(via_formula.coeffs() == naive_substitution(&wide, &r).as_slice(), wide.degree(), || {
            format!("P = {wide}, r = {r}")
        });

        let twice = shift_characteristic(&q, &s).unwrap();
        let once = shift_characteristic(&poly, &(&r + &s)).unwrap();
        adds.record(twice == once, d, || format!("P = {poly}, r = {r}, s = {s}"));

        let back = shift_characteristic(&q, &(-&r)).unwrap();
        undo.record(back == poly, d, || format!("P = {poly}, r = {r}"));

        let t = transform_recurrence(&rec, &r).unwrap();
        coherence.record(unroll(&t, N) == b, d, || {
            format!("P = {poly}, init = {:?}, r = {r}", rec.init())
        });
    }

    for name in INTEGER_FAMILIES {
        for r in -2..=2 {
            let r = Scalar::int(r);
            let t = transformed_family_recurrence(name, &r).unwrap();
            let expected = apply_transform(&family_prefix(name, N).unwrap(), &r, N).unwrap();
            coherence.record(unroll(&t, N) == expected, 2, || format!("family {name}, r = {r}"));
        }
    }

    SuiteReport {
        suite: Suite::Rootshift,
        properties: [annihilate, intertwine, formula, adds, undo, coherence]
            .into_iter()
            .map(Tally::finish)
            .collect(),
    }
}

fn identities_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut props = Vec::new();

    let report = special_identities_report(cfg.n_max);
    for identity in &report.identities {
        let mut t = Tally::new(&identity.identity);
        for c in &identity.checks {
            t.record(c.pass, c.n, || format!("n = {}: {} != {}", c.n, c.lhs, c.rhs));
        }
        props.push(t.finish());
    }

    let mut t2 = Tally::new("initial segments match golden rows");
    for row in table_initial_segments().rows {
        t2.record(row.matches_golden == Some(true), 10, || {
            format!("{} r = {}: {}", row.family, row.r, row.values.join(", "))
        });
    }
    props.push(t2.finish());

    let mut routes = Tally::new("direct, recurrence and OGF routes agree");
    for name in INTEGER_FAMILIES {
        for r in [1, 2] {
            let [a, b, c] = segment_routes(name, r, 9).unwrap();
            routes.record(a == b && b == c, 10, || format!("{name} r = {r}"));
        }
    }
    props.push(routes.finish());

    let mut t1 = Tally::new("symbolic recurrences match golden rows");
    for row in table_recurrences().rows {
        t1.record(row.matches_golden, 2, || format!("{row:?}"));
    }
    props.push(t1.finish());

    let mut w = Tally::new("transformed W recurrence equals T_r of W");
    let base = generalized_mersenne_prefix(10);
    for r in 0..=2 {
        let r = Scalar::int(r);
        let lhs = generalized_mersenne_transformed(&r, 10).unwrap();
        let rhs = apply_transform(&base, &r, 10).unwrap();
        w.record(lhs == rhs, 10, || format!("r = {r}: {} vs {}", show(&lhs), show(&rhs)));
    }
    props.push(w.finish());

    SuiteReport {
        suite: Suite::Identities,
        properties: props,
    }
}

fn model_shifts() -> Vec<Scalar> {
    vec![Scalar::int(-1), Scalar::int(1), Scalar::int(2), Scalar::rat(1, 2)]
}

fn models_suite(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut binet_rec = Tally::new("Binet form equals recurrence (n <= 30)");
    let mut binet = Tally::new("Binet shift equals T_r (n <= 20)");
    let mut matrix = Tally::new("spectral shift equals T_r (n <= 15)");
    let mut matrix_law = Tally::new("spectral shifts compose additively");
    let mut colored = Tally::new("colored enumeration equals T_r (n <= 8)");
    let mut ogf = Tally::new("OGF substitution equals T_r (order 16)");
    let mut egf = Tally::new("EGF product equals T_r (order 16)");
    let mut riordan = Tally::new("Riordan entries equal C(n,k) r^(n-k)");
    let mut action = Tally::new("Riordan matrix times vector equals T_r");

    for name in INTEGER_FAMILIES {
        let form = family_binet_form(name).unwrap();
        let dom = form.domain();
        let base = family_prefix(name, 30).unwrap().promote(dom).unwrap();
        binet_rec.record(form.prefix(30) == base, 30, || name.to_string());
        for r in [-2, -1, 1, 2] {
            let r = Scalar::int(r);
            let shifted = binet_shift(&form, &r).unwrap();
            let expected = apply_transform(&form.prefix(20), &r, 20).unwrap();
            let ok = (0..=20).all(|n| binet_eval(&shifted, n as u64) == expected.values()[n]);
            binet.record(ok, 20, || format!("{name}, r = {r}"));
        }

        let rec = crate::families::family(name).unwrap().recurrence();
        for r in model_shifts() {
            let rec = rec.promote(r.domain()).unwrap();
            let model = MatrixModel::from_recurrence(&rec).unwrap();
            let expected = apply_transform(&unroll(&rec, 15), &r, 15).unwrap();
            let walked = matrix_transform_prefix(&model, &r, 15).unwrap();
            let ok = walked == expected
                && (0..=15).all(|n| matrix_transform_eval(&model, &r, n as u64).unwrap() == expected.values()[n]);
            matrix.record(ok, 15, || format!("{name}, r = {r}"));

            let s = Scalar::from_i64(3, r.domain());
            let shifted = MatrixModel::new(
                model.matrix().shift_diagonal(&r),
                {
                    let mut u = vec![Scalar::zero(r.domain()); rec.order()];
                    u[0] = Scalar::one(r.domain());
                    u
                },
                rec.init().to_vec(),
            )
            .unwrap();
            let ok = (0..=10).all(|n| {
                matrix_transform_eval(&shifted, &s, n).unwrap()
                    == matrix_transform_eval(&model, &(&r + &s), n).unwrap()
            });
            matrix_law.record(ok, 10, || format!("{name}, r = {r}, s = {s}"));
        }
    }

    for _ in 0..cfg.cases {
        let n = rng.random_range(0..=8usize);
        let r = rng.random_range(0..=3u64);
        let values: Vec<i64> = (0..=n).map(|_| rng.random_range(0..=20)).collect();
        let a = SequencePrefix::from_i64s(&values).unwrap();
        let expected = apply_transform(&a, &Scalar::int(r as i64), n).unwrap();
        let counted = colored_count_bruteforce(&a, r, n).unwrap();
        colored.record(Some(&counted) == expected.values()[n].as_int(), n, || {
            format!("a = {}, r = {r}, n = {n}", show(&a))
        });
    }

    let gf_shifts = [-2, -1, 0, 1, 2].map(Scalar::int).into_iter().chain([Scalar::rat(1, 2)]);
    for r in gf_shifts {
        for name in INTEGER_FAMILIES {
            let base = family_prefix(name, 16).unwrap().promote(r.domain()).unwrap();
            let expected = apply_transform(&base, &r, 16).unwrap();
            let via_ogf = series_compose_geometric(&series_from_prefix(&base, SeriesKind::Ogf), &r).unwrap();
            ogf.record(prefix_from_series(&via_ogf) == expected, 16, || format!("{name}, r = {r}"));
            let via_egf = egf_transform(&series_from_prefix(&base, SeriesKind::Egf), &r).unwrap();
            egf.record(prefix_from_series(&via_egf) == expected, 16, || format!("{name}, r = {r}"));
        }

        let m = riordan_matrix(&r, 13);
        for n in 0..=12usize {
            for k in 0..=n {
                let closed = r.pow((n - k) as u64).mul_int(&binomial(n as u64, k as u64));
                let entry = riordan_entry(&r, n, k);
                riordan.record(entry == closed && m[n][k] == closed, n, || {
                    format!("r = {r}, n = {n}, k = {k}: {entry} != {closed}")
                });
            }
        }

        let a = random_prefix(rng, 13).promote(Domain::Rat).unwrap();
        let r_rat = r.promote(Domain::Rat).unwrap();
        let m = riordan_matrix(&r_rat, 13);
        let expected = apply_transform(&a, &r_rat, 12).unwrap();
        let ok = (0..13).all(|n| {
            let row = m[n]
                .iter()
                .zip(a.values())
                .fold(Scalar::zero(Domain::Rat), |acc, (d, x)| &acc + &(d * x));
            row == expected.values()[n]
        });
        action.record(ok, 13, || format!("a = {}, r = {r}", show(&a)));
    }

    SuiteReport {
        suite: Suite::Models,
        properties: [binet_rec, binet, matrix, matrix_law, colored, ogf, egf, riordan, action]
            .into_iter()
            .map(Tally::finish)
            .collect(),
    }
}

/// Runs one suite. The generator is derived from the seed and the suite, so
/// a suite gives the same result alone or inside `run_all`.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> SuiteReport {
    let salt = Suite::ALL.iter().position(|s| *s == suite).unwrap() as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt);
    match suite {
        Suite::Semigroup => semigroup_suite(cfg, &mut rng),
        Suite::Rootshift => rootshift_suite(cfg, &mut rng),
        Suite::Identities => identities_suite(cfg),
        Suite::Models => models_suite(cfg, &mut rng),
    }
}

pub fn run(suites: &[Suite], cfg: &VerifyConfig) -> VerifyReport {
    VerifyReport {
        seed: cfg.seed,
        cases: cfg.cases,
        suites: suites.iter().map(|&s| run_suite(s, cfg)).collect(),
    }
}

pub fn run_all(cfg: &VerifyConfig) -> VerifyReport {
    run(&Suite::ALL, cfg)
}
