use pitelescope_web::{catalog_json, convergence_json, custom_json, verify_json};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn catalog_lists_every_entry() {
    let rows = parse(&catalog_json());
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 140);
    assert!(rows.iter().any(|r| r["id"] == "t1.ex9" && r["identity"].as_str().unwrap().contains("\\pi^2")));
}

#[test]
fn verify_entry_report() {
    let r = parse(&verify_json("t12.ex29", 12).unwrap());
    assert_eq!(r["pass"], true);
    assert!(r["target"].as_str().unwrap().starts_with("1.650826237806"));
    assert!(verify_json("nosuch", 10).is_err());
}

#[test]
fn extrapolation_outpaces_partial_sums() {
    let r = parse(&convergence_json("t1.ex9", 8).unwrap());
    let rows = r["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[0]["terms"], 17);
    let last = &rows[7];
    // partial sums gain about 0.3 digits per doubling, Richardson far more
    assert!(last["partial"].as_f64().unwrap() > -7.0);
    assert!(last["richardson"].as_f64().unwrap() < -12.0);
}

#[test]
fn custom_parameters() {
    let r = parse(&custom_json("T12", "1/2, 1/2", "", "", "", 9).unwrap());
    assert!(r["target"].as_str().unwrap().starts_with("5.869604401089358"));
    let err = custom_json("T1", "1/2", "0", "0", "2", 6).unwrap_err();
    assert!(err.contains("p_i+q_i-r_i+1"), "{err}");
    assert!(custom_json("T1", "1/2, 1/3", "0, 0, 0", "", "", 6).is_err());
    assert!(custom_json("T3", "1/2", "", "", "", 6).is_err());
    assert!(custom_json("T1", "", "", "", "", 6).is_err());
}
