use std::fmt::Write as _;

use binoshift::exactnum::Scalar;
use binoshift::families::{FamilySpec, RecurrenceTable, SegmentTable};
use binoshift::recurrence::CharPoly;
use binoshift::transform::SequencePrefix;
use binoshift::verify::VerifyReport;
use serde::Serialize;

use crate::Format;

pub struct Rendered {
    pub text: String,
    pub status: u8,
}

impl Rendered {
    fn ok(text: String) -> Result<Self, String> {
        Ok(Rendered { text, status: 0 })
    }
}

fn json<T: Serialize>(value: &T) -> Result<Rendered, String> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    text.push('\n');
    Rendered::ok(text)
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<Rendered, String> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header).map_err(|e| e.to_string())?;
    for row in rows {
        w.write_record(&row).map_err(|e| e.to_string())?;
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    Rendered::ok(String::from_utf8(bytes).map_err(|e| e.to_string())?)
}

fn unsupported(format: Format, what: &str) -> Result<Rendered, String> {
    Err(format!("format {format:?} is not available for {what}").to_lowercase())
}

fn strings(values: &[Scalar]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

#[derive(Serialize)]
struct TransformJson<'a> {
    source: &'a str,
    r: String,
    n_max: usize,
    values: Vec<String>,
}

pub fn transform(source: &str, r: &Scalar, b: &SequencePrefix, format: Format) -> Result<Rendered, String> {
    match format {
        Format::Plain => {
            let mut text = String::new();
            for v in b.values() {
                writeln!(text, "{v}").unwrap();
            }
            Rendered::ok(text)
        }
        Format::Oeis => {
            if b.values().iter().any(|v| v.as_int().is_none()) {
                return Err("oeis format needs integer values".into());
            }
            Rendered::ok(format!("{}\n", b.to_oeis_string()))
        }
        Format::Json => json(&TransformJson {
            source,
            r: r.to_string(),
            n_max: b.max_index(),
            values: strings(b.values()),
        }),
        Format::Csv => csv_text(
            &["n", "value"],
            b.values().iter().enumerate().map(|(n, v)| vec![n.to_string(), v.to_string()]),
        ),
    }
}

#[derive(Serialize)]
struct ShiftJson {
    input: String,
    r: String,
    shifted: String,
    coefficients: Vec<String>,
}

pub fn shift_poly(poly: &CharPoly, r: &Scalar, shifted: &CharPoly, format: Format) -> Result<Rendered, String> {
    match format {
        Format::Plain => Rendered::ok(format!("{shifted}\n")),
        Format::Oeis => Rendered::ok(format!("{}\n", strings(shifted.coeffs()).join(", "))),
        Format::Json => json(&ShiftJson {
            input: poly.to_string(),
            r: r.to_string(),
            shifted: shifted.to_string(),
            coefficients: strings(shifted.coeffs()),
        }),
        Format::Csv => {
            let d = shifted.degree();
            csv_text(
                &["power", "coefficient"],
                shifted
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, c)| vec![(d - k).to_string(), c.to_string()]),
            )
        }
    }
}

pub fn recurrences(table: &RecurrenceTable, format: Format) -> Result<Rendered, String> {
    match format {
        Format::Plain => {
            let mut text = String::new();
            for row in &table.rows {
                writeln!(
                    text,
                    "{:<11} {:<8} {:<14} {:<42} ({}, {})",
                    row.family, row.oeis, row.char_poly, row.recurrence, row.initial[0], row.initial[1]
                )
                .unwrap();
            }
            Rendered::ok(text)
        }
        Format::Json => json(table),
        Format::Csv => csv_text(
            &["family", "oeis", "char_poly", "linear", "constant", "b0", "b1"],
            table.rows.iter().map(|r| {
                vec![
                    r.family.clone(),
                    r.oeis.clone(),
                    r.char_poly.clone(),
                    r.linear.clone(),
                    r.constant.clone(),
                    r.initial[0].clone(),
                    r.initial[1].clone(),
                ]
            }),
        ),
        Format::Oeis => unsupported(format, "table recurrences"),
    }
}

pub fn segments(table: &SegmentTable, format: Format) -> Result<Rendered, String> {
    match format {
        Format::Plain => {
            let mut text = String::new();
            for row in &table.rows {
                writeln!(text, "{:<11} r={}  {}", row.family, row.r, row.values.join(", ")).unwrap();
            }
            Rendered::ok(text)
        }
        Format::Oeis => {
            let mut text = String::new();
            for row in &table.rows {
                writeln!(text, "{}", row.values.join(", ")).unwrap();
            }
            Rendered::ok(text)
        }
        Format::Json => json(table),
        Format::Csv => {
            let width = table.rows.first().map_or(0, |r| r.values.len());
            let names: Vec<String> = (0..width).map(|n| format!("a{n}")).collect();
            let mut header = vec!["family", "r"];
            header.extend(names.iter().map(String::as_str));
            csv_text(
                &header,
                table.rows.iter().map(|row| {
                    let mut rec = vec![row.family.clone(), row.r.to_string()];
                    rec.extend(row.values.iter().cloned());
                    rec
                }),
            )
        }
    }
}

pub fn verify(report: &VerifyReport, format: Format) -> Result<Rendered, String> {
    let status = if report.passed() { 0 } else { 1 };
    let mut rendered = match format {
        Format::Plain => {
            let mut text = format!("seed {} cases {}\n", report.seed, report.cases);
            for suite in &report.suites {
                let verdict = if suite.passed() { "PASS" } else { "FAIL" };
                writeln!(text, "[{verdict}] {}", suite.suite.name()).unwrap();
                for p in &suite.properties {
                    let mark = if p.passed() { "ok  " } else { "FAIL" };
                    writeln!(text, "  {mark} {} ({} checks, {} failures)", p.property, p.checks, p.failures).unwrap();
                    if let Some(case) = &p.counterexample {
                        writeln!(text, "       smallest failing case: {case}").unwrap();
                    }
                }
            }
            let overall = if report.passed() { "all properties hold" } else { "verification FAILED" };
            writeln!(text, "{overall}").unwrap();
            Rendered::ok(text)?
        }
        Format::Json => json(report)?,
        Format::Csv => csv_text(
            &["suite", "property", "checks", "failures"],
            report.suites.iter().flat_map(|s| {
                s.properties.iter().map(move |p| {
                    vec![
                        s.suite.name().to_string(),
                        p.property.clone(),
                        p.checks.to_string(),
                        p.failures.to_string(),
                    ]
                })
            }),
        )?,
        Format::Oeis => return unsupported(format, "verify"),
    };
    rendered.status = status;
    Ok(rendered)
}

#[derive(Serialize)]
struct FamilyJson {
    name: String,
    oeis: Option<String>,
    domain: String,
    char_poly: String,
    initial: [String; 2],
}

pub fn families(registry: &[FamilySpec], format: Format) -> Result<Rendered, String> {
    let rows: Vec<FamilyJson> = registry
        .iter()
        .map(|f| FamilyJson {
            name: f.name.to_string(),
            oeis: f.oeis.map(str::to_string),
            domain: f.domain().to_string(),
            char_poly: f.char_poly().to_string(),
            initial: [f.init[0].to_string(), f.init[1].to_string()],
        })
        .collect();
    match format {
        Format::Plain => {
            let mut text = String::new();
            for f in &rows {
                writeln!(
                    text,
                    "{:<21} {:<8} {:<22} ({}, {})",
                    f.name,
                    f.oeis.as_deref().unwrap_or("-"),
                    f.char_poly,
                    f.initial[0],
                    f.initial[1]
                )
                .unwrap();
            }
            Rendered::ok(text)
        }
        Format::Json => json(&rows),
        Format::Csv => csv_text(
            &["name", "oeis", "domain", "char_poly", "a0", "a1"],
            rows.iter().map(|f| {
                vec![
                    f.name.clone(),
                    f.oeis.clone().unwrap_or_default(),
                    f.domain.clone(),
                    f.char_poly.clone(),
                    f.initial[0].clone(),
                    f.initial[1].clone(),
                ]
            }),
        ),
        Format::Oeis => unsupported(format, "family"),
    }
}
