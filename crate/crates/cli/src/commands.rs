use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;

use pitelescope::catalog::{check_normalization, emit_json, emit_latex, identity_line, latex_value, verify_entry};
use pitelescope::evaluator::{richardson_limit, sum_direct, Schedule};
use pitelescope::{
    all_entries, find_entry, parse_rational, pi_reference, BigReal, CatalogEntry, EvalReport, FamilyId,
    SeriesParams,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::args::{Format, MethodArg, Output};

/// A failure carrying its exit code: 1 for failed checks, 2 for usage and
/// validation errors, 3 for I/O.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }

    fn io(message: impl Into<String>) -> Failure {
        Failure { code: 3, message: message.into() }
    }

    fn check(message: impl fmt::Display) -> Failure {
        Failure { code: 1, message: message.to_string() }
    }
}

pub type Outcome = Result<u8, Failure>;

/// Bits for `digits` decimal digits plus 32 guard bits.
pub fn precision_bits(digits: u32) -> u32 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 32
}

fn lookup(id: &str) -> Result<&'static CatalogEntry, Failure> {
    find_entry(id).ok_or_else(|| Failure::usage(format!("unknown entry id {id:?}")))
}

fn select(ids: &[String], all: bool) -> Result<Vec<&'static CatalogEntry>, Failure> {
    if all {
        return Ok(all_entries().iter().collect());
    }
    if ids.is_empty() {
        return Err(Failure::usage("give entry ids or --all"));
    }
    ids.iter().map(|id| lookup(id)).collect()
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json values serialize"));
}

fn sci(x: &BigReal) -> String {
    format!("{:.3e}", x.to_f64())
}

/// Values are shown to `digits` plus three guard digits.
fn report_json(id: &str, r: &EvalReport, digits: u32) -> Value {
    let shown = digits as usize + 3;
    json!({
        "id": id,
        "pass": r.pass,
        "approx": r.approximation.to_string_digits(shown),
        "target": r.target.to_string_digits(shown),
        "abs_error": sci(&r.abs_error),
        "method": r.method.to_string(),
        "work": r.work,
        "millis": r.wall_time.as_millis() as u64,
    })
}

pub fn list(family: Option<FamilyId>, output: Output) -> Outcome {
    let entries: Vec<_> = all_entries().iter().filter(|e| family.map_or(true, |f| e.params.family == f)).collect();
    match output {
        Output::Json => print_json(&Value::Array(
            entries
                .iter()
                .map(|e| {
                    json!({
                        "id": e.id,
                        "family": e.params.family.to_string(),
                        "m": e.params.m,
                        "identity": identity_line(e),
                        "provenance": e.provenance,
                    })
                })
                .collect(),
        )),
        Output::Text => {
            let width = entries.iter().map(|e| e.id.len()).max().unwrap_or(0);
            for e in entries {
                println!("{:width$}  {}", e.id, identity_line(e));
            }
        }
    }
    Ok(0)
}

pub fn show(id: &str, output: Output) -> Outcome {
    let e = lookup(id)?;
    if output == Output::Json {
        println!("{}", emit_json(e));
        return Ok(0);
    }
    let series = e.params.instance().map_err(|err| Failure::check(err))?;
    let limit = series.limit_value();
    println!("id          {}", e.id);
    println!("source      {}", e.provenance);
    println!("params      {}", e.params);
    println!("rho         {}", e.rho);
    println!("identity    {}", identity_line(e));
    println!("value       {} ≈ {}", latex_value(&e.printed_lhs), e.printed_lhs.numeric(96).to_string_digits(20));
    match &limit.surd_factor {
        Some(s) => println!("limit       ({s})·π^{}", limit.pi_exponent),
        None => println!("limit       numeric only"),
    }
    println!("boundary    {}", series.boundary());
    println!("consistent  {}", check_normalization(e));
    Ok(0)
}

/// Worker pool sized by `PI_TELESCOPE_THREADS` when set.
fn pool() -> Result<rayon::ThreadPool, Failure> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("PI_TELESCOPE_THREADS") {
        let n: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|n| *n > 0)
            .ok_or_else(|| Failure::usage(format!("PI_TELESCOPE_THREADS must be a positive integer, got {v:?}")))?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| Failure::usage(e.to_string()))
}

pub fn verify(ids: &[String], all: bool, digits: u32, tolerance_exp: Option<u32>, output: Output) -> Outcome {
    let mut entries = select(ids, all)?;
    entries.sort_by(|a, b| a.id.cmp(&b.id));
    entries.dedup_by(|a, b| a.id == b.id);
    let tolerance_exp = tolerance_exp.unwrap_or(digits);
    let prec = precision_bits(digits.max(tolerance_exp)).max(256);
    let tolerance = BigReal::pow10(-(tolerance_exp as i32), prec);
    let results: Vec<_> = pool()?.install(|| {
        entries.par_iter().map(|e| (e.id.as_str(), verify_entry(e, prec, &tolerance))).collect()
    });
    let mut failed = 0;
    let mut rows = Vec::new();
    for (id, r) in &results {
        match r {
            Ok(r) => {
                failed += !r.pass as usize;
                rows.push(report_json(id, r, digits));
                if output == Output::Text {
                    println!(
                        "{:<24} {}  abs_error {}  estimate {}  {} {}  {} ms",
                        id,
                        if r.pass { "PASS" } else { "FAIL" },
                        sci(&r.abs_error),
                        sci(&r.error_estimate),
                        r.method,
                        r.work,
                        r.wall_time.as_millis()
                    );
                }
            }
            Err(err) => {
                failed += 1;
                rows.push(json!({ "id": id, "pass": false, "error": err.to_string() }));
                if output == Output::Text {
                    println!("{id:<24} FAIL  {err}");
                }
            }
        }
    }
    match output {
        Output::Json => print_json(&Value::Array(rows)),
        Output::Text => println!("{} of {} passed", results.len() - failed, results.len()),
    }
    Ok(if failed == 0 { 0 } else { 1 })
}

fn broadcast<T: Clone>(name: &str, v: Vec<T>, m: usize, default: T) -> Result<Vec<T>, Failure> {
    match v.len() {
        0 => Ok(vec![default; m]),
        1 => Ok(vec![v[0].clone(); m]),
        n if n == m => Ok(v),
        n => Err(Failure::usage(format!("--{name} given {n} times, expected 1 or m = {m}"))),
    }
}

pub struct EvalArgs {
    pub family: FamilyId,
    pub m: Option<usize>,
    pub x: Vec<String>,
    pub p: Vec<i64>,
    pub q: Vec<i64>,
    pub r: Vec<i64>,
    pub digits: u32,
    pub method: MethodArg,
    pub terms: u64,
    pub levels: Option<usize>,
    pub base: u64,
}

fn eval_params(a: &EvalArgs) -> Result<SeriesParams, Failure> {
    let longest = [a.x.len(), a.p.len(), a.q.len(), a.r.len()].into_iter().max().unwrap_or(1);
    let m = a.m.unwrap_or(longest);
    if m == 0 {
        return Err(Failure::usage("m must be at least 1"));
    }
    if longest > 1 && longest != m {
        return Err(Failure::usage(format!("--m {m} does not match {longest} repeated values")));
    }
    let xs = a
        .x
        .iter()
        .map(|s| parse_rational(s).map_err(|e| Failure::usage(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let x = broadcast("x", xs, m, Default::default())?;
    let params = SeriesParams::new(
        a.family,
        x,
        broadcast("p", a.p.clone(), m, 0)?,
        broadcast("q", a.q.clone(), m, 0)?,
        broadcast("r", a.r.clone(), m, 0)?,
    );
    let violations = params.validate();
    if !violations.is_empty() {
        let text: Vec<_> = violations.iter().map(|v| v.to_string()).collect();
        return Err(Failure::usage(format!("invalid parameters: {}", text.join("; "))));
    }
    Ok(params)
}

pub fn eval(a: EvalArgs, output: Output) -> Outcome {
    let params = eval_params(&a)?;
    let series = params.instance().map_err(|e| Failure::usage(e.to_string()))?;
    let prec = precision_bits(a.digits);
    let tolerance = BigReal::pow10(-(a.digits as i32), prec);
    let report = match a.method {
        MethodArg::Richardson => {
            let levels = a.levels.unwrap_or(Schedule::for_digits(a.digits).levels);
            richardson_limit(&series, a.base, levels, prec)
        }
        MethodArg::Direct => {
            if a.terms == 0 {
                return Err(Failure::usage("--terms must be positive"));
            }
            sum_direct(&series, prec, a.terms)
        }
    };
    let report = match report {
        Ok(r) => r.with_tolerance(&tolerance),
        Err(pitelescope::Error::Schedule { base, levels }) => {
            return Err(Failure::usage(format!("schedule needs base >= 4 and levels >= 2, got {base} and {levels}")))
        }
        Err(e) => return Err(Failure::check(e)),
    };
    match output {
        Output::Json => print_json(&report_json(&params.to_string(), &report, a.digits)),
        Output::Text => {
            println!("params      {params}");
            println!("method      {} ({} {})", report.method, report.work, match report.method {
                pitelescope::Method::Direct => "terms",
                _ => "levels",
            });
            println!("approx      {}", report.approximation.to_string_digits(a.digits as usize + 2));
            println!("target      {}", report.target.to_string_digits(a.digits as usize + 2));
            println!("abs_error   {}", sci(&report.abs_error));
            println!("estimate    {}", sci(&report.error_estimate));
            println!("time        {} ms", report.wall_time.as_millis());
            println!("{}", if report.pass { "PASS" } else { "FAIL" });
        }
    }
    Ok(if report.pass { 0 } else { 1 })
}

/// Leading `digits` significant digits of a number in `[1, 10)`, truncated.
fn leading_digits(x: &BigReal, digits: usize) -> String {
    let (d, _) = x.decimal_digits(digits);
    if digits == 1 {
        d
    } else {
        format!("{}.{}", &d[..1], &d[1..])
    }
}

pub fn pi(via: &str, digits: u32, output: Output) -> Outcome {
    let e = lookup(via)?;
    let series = e.params.instance().map_err(|err| Failure::usage(err.to_string()))?;
    let limit = series.limit_value();
    let surd = limit
        .surd_factor
        .clone()
        .ok_or_else(|| Failure::usage(format!("{via} has no closed-form surd limit")))?;
    let m = e.params.m as u32;
    let prec = precision_bits(digits + 2);
    let schedule = Schedule::for_digits(digits + 2);
    let report = richardson_limit(&series, schedule.base, schedule.levels, prec).map_err(Failure::check)?;
    // series + boundary is the limit surd·π^e, so π = (limit / surd)^(1/e)
    let lim = &report.approximation + &BigReal::from_ratio(&series.boundary(), prec);
    let s = surd.eval(prec);
    let power = if limit.pi_exponent > 0 { &lim / &s } else { &s / &lim };
    if power.is_negative() || power.is_zero() {
        return Err(Failure::check(format!("series value through {via} is not positive")));
    }
    let pi_value = power.nth_root(m);
    // d(π)/π = d(lim)/(m·lim), doubled for the root and division rounding
    let estimate = 2.0 * pi_value.to_f64() * report.error_estimate.to_f64() / (m as f64 * lim.abs().to_f64());
    let supported = if estimate > 0.0 { (-estimate.log10()).floor() as i64 } else { digits as i64 };
    let shown = (digits as i64).min(supported).max(1) as usize;
    let text = leading_digits(&pi_value, shown);
    let oracle = leading_digits(&pi_reference(prec), shown);
    let diff = text.chars().zip(oracle.chars()).filter(|(a, b)| a != b).count();
    let ok = shown == digits as usize && diff == 0;
    match output {
        Output::Json => print_json(&json!({
            "via": via,
            "digits": shown,
            "requested": digits,
            "pi": text,
            "diff": diff,
            "error_estimate": format!("{estimate:.3e}"),
            "levels": report.work,
            "millis": report.wall_time.as_millis() as u64,
        })),
        Output::Text => {
            println!("{text}");
            println!("digits {shown} of {digits} requested, diff {diff} against Machin, estimate {estimate:.3e}");
        }
    }
    Ok(if ok { 0 } else { 1 })
}

pub fn emit(ids: &[String], all: bool, format: Format, out: Option<&Path>) -> Outcome {
    let entries = select(ids, all)?;
    let text = match format {
        Format::Latex => entries.iter().map(|e| emit_latex(e)).collect::<Vec<_>>().join("\n"),
        Format::Json => {
            let values: Vec<Value> = entries
                .iter()
                .map(|e| serde_json::from_str(&emit_json(e)).expect("emitted json parses"))
                .collect();
            let v = if values.len() == 1 { values.into_iter().next().unwrap() } else { Value::Array(values) };
            serde_json::to_string_pretty(&v).expect("json values serialize") + "\n"
        }
    };
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::io(format!("{}: {e}", path.display())))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| Failure::io(e.to_string()))?;
        }
    }
    Ok(0)
}
