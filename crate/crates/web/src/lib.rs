//! wasm-bindgen surface for the browser demo in `www/`.
//!
//! Every export returns a JSON string; exact values travel as text
//! (`"3/2"`) and the page converts them to floats only for plotting.

use binoshift::exactnum::Scalar;
use binoshift::families::{family_prefix, transformed_family_recurrence};
use binoshift::recurrence::{shift_characteristic, CharPoly};
use binoshift::series::riordan_matrix;
use binoshift::transform::apply_transform;
use binoshift::Domain;
use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

/// Largest prefix or triangle the page may request.
pub const MAX_TERMS: usize = 40;

#[derive(Serialize)]
struct FamilyView {
    family: String,
    r: String,
    base: Vec<String>,
    transformed: Vec<String>,
    char_poly: String,
    shifted_poly: String,
}

#[derive(Serialize)]
struct ShiftView {
    input: String,
    r: String,
    shifted: String,
}

#[derive(Serialize)]
struct TriangleView {
    r: String,
    rows: Vec<Vec<String>>,
}

fn parse_r(r: &str) -> Result<Scalar, String> {
    Scalar::parse_number(r.trim()).map_err(|e| format!("r: {e}"))
}

fn check_len(n: usize) -> Result<(), String> {
    if n == 0 || n > MAX_TERMS {
        return Err(format!("length must be between 1 and {MAX_TERMS}"));
    }
    Ok(())
}

fn to_json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

fn texts(values: &[Scalar]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

/// Base prefix and `T_r` of a registered integer family, plus its
/// characteristic polynomial before and after the root shift.
#[wasm_bindgen]
pub fn transform_family(name: &str, r: &str, len: usize) -> Result<String, String> {
    check_len(len)?;
    let r = parse_r(r)?;
    let mut base = family_prefix(name, len - 1).map_err(|e| e.to_string())?;
    if r.domain() == Domain::Rat {
        base = base.promote(Domain::Rat).map_err(|e| e.to_string())?;
    }
    let transformed = apply_transform(&base, &r, len - 1).map_err(|e| e.to_string())?;
    let shifted = transformed_family_recurrence(name, &r).map_err(|e| e.to_string())?;
    let original = transformed_family_recurrence(name, &Scalar::int(0)).map_err(|e| e.to_string())?;
    to_json(&FamilyView {
        family: name.to_string(),
        r: r.to_string(),
        base: texts(base.values()),
        transformed: texts(transformed.values()),
        char_poly: original.poly().to_string(),
        shifted_poly: shifted.poly().to_string(),
    })
}

/// `P(X - r)` for comma-separated descending coefficients.
#[wasm_bindgen]
pub fn shift_poly(coeffs: &str, r: &str) -> Result<String, String> {
    let r = parse_r(r)?;
    let values = coeffs
        .split(',')
        .map(|c| Scalar::parse_number(c.trim()).and_then(|v| v.promote(Domain::Rat)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| format!("coefficients: {e}"))?;
    let poly = CharPoly::new(values).map_err(|e| e.to_string())?;
    let shifted = shift_characteristic(&poly, &r).map_err(|e| e.to_string())?;
    to_json(&ShiftView {
        input: poly.to_string(),
        r: r.to_string(),
        shifted: shifted.to_string(),
    })
}

/// Lower-triangular rows of the array `C(n,k) r^(n-k)`.
#[wasm_bindgen]
pub fn riordan_triangle(r: &str, size: usize) -> Result<String, String> {
    check_len(size)?;
    let r = parse_r(r)?;
    let m = riordan_matrix(&r, size);
    let rows = m.iter().enumerate().map(|(n, row)| texts(&row[..=n])).collect();
    to_json(&TriangleView { r: r.to_string(), rows })
}
