//! Browser bindings. Every export returns a JSON string; the `*_json`
//! functions hold the logic and run natively too.

use pitelescope::catalog::{identity_line, verify_entry};
use pitelescope::evaluator::{richardson_diagonal, series_target, tau_at_nodes, Schedule};
use pitelescope::{all_entries, find_entry, parse_rational, BigReal, FamilyId, SeriesParams};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

const PREC: u32 = 256;
const MAX_LEVELS: usize = 14;

/// `log10 |x|`, or `null` for an exact zero.
fn log_error(x: &BigReal) -> Value {
    if x.is_zero() {
        Value::Null
    } else {
        json!((x.log10_abs() * 100.0).round() / 100.0)
    }
}

pub fn catalog_json() -> String {
    let rows: Vec<Value> = all_entries()
        .iter()
        .map(|e| {
            json!({
                "id": e.id,
                "family": e.params.family.to_string(),
                "m": e.params.m,
                "params": e.params.to_string(),
                "identity": identity_line(e),
                "provenance": e.provenance,
            })
        })
        .collect();
    Value::Array(rows).to_string()
}

pub fn verify_json(id: &str, digits: u32) -> Result<String, String> {
    let e = find_entry(id).ok_or_else(|| format!("unknown entry {id}"))?;
    let digits = digits.clamp(1, 40);
    let tolerance = BigReal::pow10(-(digits as i32), PREC);
    let r = verify_entry(e, PREC, &tolerance).map_err(|err| err.to_string())?;
    Ok(json!({
        "id": e.id,
        "pass": r.pass,
        "approx": r.approximation.to_string_digits(digits as usize + 3),
        "target": r.target.to_string_digits(digits as usize + 3),
        "abs_error": format!("{:.3e}", r.abs_error.to_f64()),
        "error_estimate": format!("{:.3e}", r.error_estimate.to_f64()),
        "levels": r.work,
    })
    .to_string())
}

/// Partial sums at `16, 32, 64, …` against the Richardson diagonal built
/// from them, both as `log10` of the error.
fn convergence(params: &SeriesParams, levels: usize) -> Result<String, String> {
    let series = params.instance().map_err(|e| e.to_string())?;
    let schedule = Schedule { base: Schedule::DEFAULT_BASE, levels: levels.clamp(2, MAX_LEVELS) };
    let taus = tau_at_nodes(&series, &schedule, PREC + 64);
    let diagonal = richardson_diagonal(&taus);
    let target = series_target(&series, PREC + 64);
    let boundary = BigReal::from_ratio(&series.boundary(), PREC + 64);
    let shift = &target + &boundary;
    let rows: Vec<Value> = schedule
        .nodes()
        .zip(taus.iter().zip(&diagonal))
        .map(|(n, (tau, rich))| {
            json!({
                "terms": n + 1,
                "partial": log_error(&(tau - &shift)),
                "richardson": log_error(&(rich - &shift)),
            })
        })
        .collect();
    Ok(json!({
        "params": params.to_string(),
        "target": target.to_string_digits(30),
        "rows": rows,
    })
    .to_string())
}

pub fn convergence_json(id: &str, levels: usize) -> Result<String, String> {
    let e = find_entry(id).ok_or_else(|| format!("unknown entry {id}"))?;
    convergence(&e.params, levels)
}

fn list<T>(text: &str, parse: impl Fn(&str) -> Result<T, String>) -> Result<Vec<T>, String> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty()).map(parse).collect()
}

/// Custom parameters as comma-separated lists; a single value is used for
/// every variable and an empty list means zeros.
pub fn custom_json(family: &str, x: &str, p: &str, q: &str, r: &str, levels: usize) -> Result<String, String> {
    let family: FamilyId = family.parse()?;
    let x = list(x, |s| parse_rational(s).map_err(|e| e.to_string()))?;
    let int = |s: &str| s.parse::<i64>().map_err(|_| format!("not an integer: {s}"));
    let (p, q, r) = (list(p, int)?, list(q, int)?, list(r, int)?);
    let m = [x.len(), p.len(), q.len(), r.len()].into_iter().max().unwrap_or(0);
    if x.is_empty() || m > 6 {
        return Err("give between 1 and 6 values of x".into());
    }
    let fill = |v: Vec<i64>, name: &str| match v.len() {
        0 => Ok(vec![0; m]),
        1 => Ok(vec![v[0]; m]),
        n if n == m => Ok(v),
        n => Err(format!("{name} has {n} values, expected 1 or {m}")),
    };
    let x = match x.len() {
        1 => vec![x[0].clone(); m],
        n if n == m => x,
        n => return Err(format!("x has {n} values, expected 1 or {m}")),
    };
    let params = SeriesParams::new(family, x, fill(p, "p")?, fill(q, "q")?, fill(r, "r")?);
    let violations: Vec<String> = params.validate().iter().map(|v| v.to_string()).collect();
    if !violations.is_empty() {
        return Err(violations.join("; "));
    }
    convergence(&params, levels)
}

#[wasm_bindgen]
pub fn catalog() -> String {
    catalog_json()
}

#[wasm_bindgen]
pub fn verify(id: &str, digits: u32) -> Result<String, JsValue> {
    verify_json(id, digits).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn convergence_table(id: &str, levels: usize) -> Result<String, JsValue> {
    convergence_json(id, levels).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn custom_table(family: &str, x: &str, p: &str, q: &str, r: &str, levels: usize) -> Result<String, JsValue> {
    custom_json(family, x, p, q, r, levels).map_err(|e| JsValue::from_str(&e))
}
