//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fail.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use common::{random_family, random_params, rng};
use pitelescope::catalog::{check_normalization, verify_entry, PrintedValue};
use pitelescope::evaluator::{partial_sum_exact, sum_direct, telescoped_partial_sum};
use pitelescope::{all_entries, find_entry, BigReal, CatalogEntry, ExactRational, FamilyId, SurdExpr};

type Check = fn() -> Result<String, String>;

fn telescoping() -> Result<String, String> {
    let mut rng = rng(0xacce);
    for case in 0..200 {
        let family = random_family(&mut rng);
        let params = random_params(&mut rng, family);
        let s = params.instance().map_err(|e| format!("case {case}: {e}"))?;
        for n in [0, 1, 5, 37] {
            if partial_sum_exact(&s, n) != telescoped_partial_sum(&s, n) {
                return Err(format!("case {case}: {params}, N = {n}"));
            }
        }
    }
    Ok("200 parameter sets, N in {0,1,5,37}".into())
}

fn degree_cancellation() -> Result<String, String> {
    let mut rng = rng(0xacc2);
    let mut singles = 0;
    for case in 0..100 {
        let family = random_family(&mut rng);
        let params = random_params(&mut rng, family);
        let s = params.instance().map_err(|e| format!("case {case}: {e}"))?;
        let coeffs = s.bracket_coefficients().map_err(|e| format!("case {case}: {params}: {e}"))?;
        if family == FamilyId::T1 && params.m == 1 {
            let (x, p, q, r) = (&params.x[0], params.p[0], params.q[0], params.r[0]);
            let expected = (ExactRational::from_integer((p - r).into()) + x)
                * (ExactRational::from_integer((1 + q - r).into()) - x);
            if coeffs != vec![expected] {
                return Err(format!("case {case}: {params}: constant {coeffs:?}"));
            }
            singles += 1;
        }
    }
    Ok(format!("100 parameter sets, {singles} single-variable constants checked"))
}

fn metadata() -> Result<String, String> {
    let bad: Vec<_> = all_entries().iter().filter(|e| !check_normalization(e)).map(|e| e.id.as_str()).collect();
    if bad.is_empty() {
        Ok(format!("{} entries", all_entries().len()))
    } else {
        Err(format!("inconsistent: {}", bad.join(", ")))
    }
}

fn binary(args: &[&str]) -> Result<(i32, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_pitelescope")).args(args).output().map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned()))
}

fn full_verification() -> Result<String, String> {
    let (code, out) = binary(&["--output", "json", "verify", "--all", "--digits", "10"])?;
    let rows: Vec<serde_json::Value> = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    if code != 0 || rows.len() != all_entries().len() {
        return Err(format!("exit {code}, {} rows", rows.len()));
    }
    if let Some(row) = rows.iter().find(|r| r["pass"] != true || r["work"].as_u64().unwrap_or(99) > 10) {
        return Err(format!("row {row}"));
    }
    // representative targets, oracle digits truncated
    for (id, digits) in [("t1.ex9", "0.2026423672"), ("t1.ex14", "0.0844343197"), ("t12.ex29", "1.6508262378")] {
        let row = rows.iter().find(|r| r["id"] == id).ok_or(format!("{id} missing"))?;
        let approx = row["approx"].as_str().unwrap_or("");
        if !approx.starts_with(digits) {
            return Err(format!("{id}: {approx} does not start with {digits}"));
        }
    }
    Ok(format!("{} entries within 1e-10", rows.len()))
}

fn direct_sanity() -> Result<String, String> {
    let s = find_entry("t1.ex9").unwrap().params.instance().map_err(|e| e.to_string())?;
    let half = sum_direct(&s, 192, 50_000).map_err(|e| e.to_string())?;
    let full = sum_direct(&s, 192, 100_000).map_err(|e| e.to_string())?;
    let rel = full.abs_error.to_f64() / full.target.to_f64().abs();
    let ratio = half.abs_error.to_f64() / full.abs_error.to_f64();
    let text = format!("relative error {rel:.2e} at 1e5 terms, error ratio N/2N {ratio:.3}");
    if rel <= 1e-4 && (1.7..=2.3).contains(&ratio) {
        Ok(text)
    } else {
        Err(text)
    }
}

fn pi_digits() -> Result<String, String> {
    let (code, out) = binary(&["pi", "--via", "t1.cor4.m1", "--digits", "15"])?;
    let first = out.lines().next().unwrap_or("");
    if code == 0 && first == "3.14159265358979" && out.contains("diff 0") {
        Ok(format!("{first}, diff 0"))
    } else {
        Err(format!("exit {code}: {}", out.trim()))
    }
}

fn negative_controls() -> Result<String, String> {
    let tol = BigReal::pow10(-10, 256);
    let caught = |e: &CatalogEntry| {
        !check_normalization(e) || !verify_entry(e, 256, &tol).map(|r| r.pass).unwrap_or(false)
    };
    let third = ExactRational::new(1.into(), 3.into());
    let mut mutations: Vec<(&str, CatalogEntry)> = Vec::new();

    let mut m = find_entry("t1.ex9").unwrap().clone();
    m.rho = ExactRational::new(1.into(), 4.into());
    mutations.push(("rho", m));

    let mut m = find_entry("t1.ex14").unwrap().clone();
    m.printed_lhs = PrintedValue::pi_power(SurdExpr::rational(ExactRational::new(6.into(), 5.into())), -2);
    mutations.push(("printed coefficient", m));

    let mut m = find_entry("t12.ex29").unwrap().clone();
    m.params.x[0] = third.clone();
    mutations.push(("x", m));

    let mut m = find_entry("t1.cor4.m2").unwrap().clone();
    m.params.q[1] += 1;
    mutations.push(("q", m));

    let mut m = find_entry("t12.ex33").unwrap().clone();
    m.params.r[0] -= 1;
    mutations.push(("r", m));

    let mut m = find_entry("t1.ex5.p0q0r0").unwrap().clone();
    m.printed_lhs = m.printed_lhs.plus(SurdExpr::rational(third), 0);
    mutations.push(("constant term", m));

    let missed: Vec<_> = mutations.iter().filter(|(_, e)| !caught(e)).map(|(name, _)| *name).collect();
    let base_ok = mutations.iter().all(|(_, e)| {
        let original = find_entry(&e.id).unwrap();
        !caught(original)
    });
    if missed.is_empty() && base_ok {
        Ok(format!("{} mutations caught", mutations.len()))
    } else {
        Err(format!("missed: {missed:?}, originals clean: {base_ok}"))
    }
}

fn main() {
    let criteria: [(&str, Check, u64); 7] = [
        ("telescoping exactness", telescoping, 10),
        ("degree cancellation", degree_cancellation, 5),
        ("catalog metadata exactness", metadata, 5),
        ("full catalog verification", full_verification, 120),
        ("direct summation sanity", direct_sanity, 30),
        ("pi digits", pi_digits, 30),
        ("negative controls", negative_controls, 60),
    ];
    let mut failed = 0;
    for (i, (name, check, budget)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let result = check();
        let elapsed = started.elapsed();
        let in_time = elapsed <= Duration::from_secs(*budget);
        let (status, detail) = match (&result, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("{d}; over the {budget} s budget")),
            (Err(d), _) => ("FAIL", d.clone()),
        };
        failed += (status == "FAIL") as usize;
        println!("criterion {}: {status} {name} ({detail}; {:.2} s)", i + 1, elapsed.as_secs_f64());
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
