use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::{parse_rational, rational_string, SurdExpr};
use crate::error::{Error, Result};
use crate::family::{FamilyId, SeriesParams};

use super::{CatalogEntry, PrintedTerm, PrintedValue, Shifted};

#[derive(Serialize, Deserialize)]
struct JsonEntry {
    id: String,
    family: String,
    m: usize,
    x: Vec<String>,
    p: Vec<i64>,
    q: Vec<i64>,
    r: Vec<i64>,
    rho: String,
    printed_lhs: Vec<JsonPiTerm>,
    printed_term: JsonTerm,
    provenance: String,
}

#[derive(Serialize, Deserialize)]
struct JsonPiTerm {
    coeff: BTreeMap<String, String>,
    pi_exp: i32,
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    numer: Vec<JsonShifted>,
    denom: Vec<JsonShifted>,
    bracket: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct JsonShifted {
    base: String,
    shift: i64,
}

fn shifted_out(v: &[Shifted]) -> Vec<JsonShifted> {
    v.iter().map(|s| JsonShifted { base: rational_string(&s.base), shift: s.shift }).collect()
}

fn shifted_in(v: Vec<JsonShifted>) -> Result<Vec<Shifted>> {
    v.into_iter().map(|s| Ok(Shifted::new(parse_rational(&s.base)?, s.shift))).collect()
}

fn surd_in(coeff: BTreeMap<String, String>) -> Result<SurdExpr> {
    coeff.into_iter().try_fold(SurdExpr::zero(), |acc, (d, c)| {
        let d: u64 = d.parse().map_err(|_| Error::Json(format!("bad radicand {d:?}")))?;
        Ok(&acc + &SurdExpr::term(parse_rational(&c)?, d)?)
    })
}

fn to_json(e: &CatalogEntry) -> JsonEntry {
    JsonEntry {
        id: e.id.clone(),
        family: e.params.family.to_string(),
        m: e.params.m,
        x: e.params.x.iter().map(rational_string).collect(),
        p: e.params.p.clone(),
        q: e.params.q.clone(),
        r: e.params.r.clone(),
        rho: rational_string(&e.rho),
        printed_lhs: e
            .printed_lhs
            .terms
            .iter()
            .map(|(pi_exp, c)| JsonPiTerm {
                coeff: c.terms().map(|(d, v)| (d.to_string(), rational_string(v))).collect(),
                pi_exp: *pi_exp,
            })
            .collect(),
        printed_term: JsonTerm {
            numer: shifted_out(&e.printed_term.numer),
            denom: shifted_out(&e.printed_term.denom),
            bracket: e.printed_term.bracket.iter().map(rational_string).collect(),
        },
        provenance: e.provenance.clone(),
    }
}

pub fn emit_json(entry: &CatalogEntry) -> String {
    serde_json::to_string_pretty(&to_json(entry)).expect("plain data serializes")
}

pub fn parse_json(text: &str) -> Result<CatalogEntry> {
    let j: JsonEntry = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    let family: FamilyId = j.family.parse().map_err(Error::Json)?;
    let x = j.x.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
    if x.len() != j.m || j.p.len() != j.m || j.q.len() != j.m || j.r.len() != j.m {
        return Err(Error::Json(format!("parameter lists do not all have length m = {}", j.m)));
    }
    let mut printed_lhs = PrintedValue::zero();
    for t in j.printed_lhs {
        printed_lhs = printed_lhs.plus(surd_in(t.coeff)?, t.pi_exp);
    }
    Ok(CatalogEntry {
        id: j.id,
        params: SeriesParams::new(family, x, j.p, j.q, j.r),
        rho: parse_rational(&j.rho)?,
        printed_lhs,
        printed_term: PrintedTerm {
            numer: shifted_in(j.printed_term.numer)?,
            denom: shifted_in(j.printed_term.denom)?,
            bracket: j.printed_term.bracket.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?,
        },
        provenance: j.provenance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{all_entries, find_entry};

    #[test]
    fn round_trip_every_entry() {
        for e in all_entries() {
            assert_eq!(&parse_json(&emit_json(e)).unwrap(), e, "{}", e.id);
        }
    }

    #[test]
    fn schema_fields() {
        let v: serde_json::Value = serde_json::from_str(&emit_json(find_entry("t1.ex9").unwrap())).unwrap();
        assert_eq!(v["family"], "T1");
        assert_eq!(v["m"], 2);
        assert_eq!(v["x"], serde_json::json!(["1/2", "1/2"]));
        assert_eq!(v["rho"], "1/2");
        assert_eq!(v["printed_lhs"], serde_json::json!([{"coeff": {"1": "2"}, "pi_exp": -2}]));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_json("{").is_err());
        let mut v: serde_json::Value = serde_json::from_str(&emit_json(find_entry("t1.ex9").unwrap())).unwrap();
        v["m"] = 3.into();
        assert!(parse_json(&v.to_string()).is_err());
        v["m"] = 2.into();
        v["printed_lhs"][0]["coeff"] = serde_json::json!({"7": "1"});
        assert!(parse_json(&v.to_string()).is_err());
    }
}
