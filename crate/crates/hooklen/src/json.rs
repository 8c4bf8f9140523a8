//! JSON encodings.
//!
//! Partitions are arrays of parts. Rationals are strings such as `"-3/2"`.
//! A series is `{"order", "degree_cap", "coefficients"}` where
//! `degree_cap` is `null` over `ℚ` and each coefficient is then a string;
//! over `ℚ[v]` each coefficient is the array of its `v`-coefficients.

use hooklen_core::littlewood::kappa;
use hooklen_core::verify::{CheckReport, ParamValue, Verdict, Witness};
use hooklen_core::{Coefficient, Decomposition, Error, Partition, Ring, TruncatedSeries};
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::runner::TimedReport;

type Result<T> = std::result::Result<T, Error>;

fn bad(what: &str) -> Error {
    Error::Parse(format!("malformed JSON {what}"))
}

pub fn partition_to_json(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn partition_from_json(v: &Value) -> Result<Partition> {
    let parts = v
        .as_array()
        .ok_or_else(|| bad("partition"))?
        .iter()
        .map(|x| x.as_i64().ok_or_else(|| bad("part")))
        .collect::<Result<Vec<i64>>>()?;
    Partition::from_signed(&parts)
}

pub fn decomposition_to_json(d: &Decomposition) -> Value {
    json!({
        "t": d.modulus(),
        "core": partition_to_json(d.core()),
        "quotient": d.quotient().iter().map(partition_to_json).collect::<Vec<_>>(),
    })
}

pub fn decomposition_from_json(v: &Value) -> Result<Decomposition> {
    let core = partition_from_json(v.get("core").ok_or_else(|| bad("decomposition"))?)?;
    let quotient = v
        .get("quotient")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("decomposition"))?
        .iter()
        .map(partition_from_json)
        .collect::<Result<Vec<_>>>()?;
    if let Some(t) = v.get("t").and_then(Value::as_u64) {
        if t as usize != quotient.len() {
            return Err(Error::QuotientArity {
                expected: t as usize,
                found: quotient.len(),
            });
        }
    }
    Decomposition::new(core, quotient)
}

/// Decomposition plus the partition, its boundary word and `κ_t` of the core.
pub fn decomposition_details(p: &Partition, d: &Decomposition) -> Value {
    let mut v = decomposition_to_json(d);
    let obj = v.as_object_mut().expect("object");
    obj.insert("partition".into(), partition_to_json(p));
    obj.insert("word".into(), json!(hooklen_core::BoundaryWord::encode(p).render()));
    let k = kappa(d.core(), d.modulus()).expect("core of a decomposition");
    obj.insert("kappa".into(), json!(k.entries()));
    v
}

fn rational_from_str(s: &str) -> Result<BigRational> {
    s.trim().parse().map_err(|_| Error::Parse(format!("bad rational `{s}`")))
}

pub fn coefficient_to_json(c: &Coefficient) -> Value {
    match c.ring() {
        Ring::Rational => json!(c.terms()[0].to_string()),
        Ring::Poly { .. } => json!(c.terms().iter().map(ToString::to_string).collect::<Vec<_>>()),
    }
}

pub fn coefficient_from_json(ring: Ring, v: &Value) -> Result<Coefficient> {
    match ring {
        Ring::Rational => {
            let s = v.as_str().ok_or_else(|| bad("coefficient"))?;
            Ok(Coefficient::rational(ring, rational_from_str(s)?))
        }
        Ring::Poly { cap } => {
            let terms = v
                .as_array()
                .ok_or_else(|| bad("coefficient"))?
                .iter()
                .map(|x| x.as_str().ok_or_else(|| bad("coefficient")).and_then(rational_from_str))
                .collect::<Result<Vec<_>>>()?;
            if terms.len() > cap + 1 {
                return Err(bad("coefficient"));
            }
            Ok(Coefficient::poly(cap, &terms))
        }
    }
}

pub fn series_to_json(s: &TruncatedSeries) -> Value {
    let cap = match s.ring() {
        Ring::Rational => Value::Null,
        Ring::Poly { cap } => json!(cap),
    };
    json!({
        "order": s.order(),
        "degree_cap": cap,
        "coefficients": s.coefficients().iter().map(coefficient_to_json).collect::<Vec<_>>(),
    })
}

pub fn series_from_json(v: &Value) -> Result<TruncatedSeries> {
    let order = v.get("order").and_then(Value::as_u64).ok_or_else(|| bad("series"))? as usize;
    let ring = match v.get("degree_cap") {
        None | Some(Value::Null) => Ring::Rational,
        Some(c) => Ring::Poly {
            cap: c.as_u64().ok_or_else(|| bad("series"))? as usize,
        },
    };
    let coeffs = v
        .get("coefficients")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("series"))?
        .iter()
        .map(|c| coefficient_from_json(ring, c))
        .collect::<Result<Vec<_>>>()?;
    TruncatedSeries::from_coefficients(ring, order, &coeffs)
}

pub fn report_to_json(r: &TimedReport) -> Value {
    let rep = &r.report;
    let params: Map<String, Value> = rep
        .params
        .iter()
        .map(|(k, v)| {
            let v = match v {
                ParamValue::Int(i) => json!(i),
                ParamValue::Text(s) => json!(s),
            };
            (k.clone(), v)
        })
        .collect();
    let witness = match &rep.witness {
        Some(w) => json!({"n": w.n, "lhs": w.lhs, "rhs": w.rhs}),
        None => Value::Null,
    };
    json!({
        "identity_id": rep.identity_id,
        "params": params,
        "verdict": rep.verdict.as_str(),
        "max_order_checked": rep.max_order_checked,
        "witness": witness,
        "elapsed_ms": r.elapsed_ms,
        "notes": rep.notes,
    })
}

pub fn report_from_json(v: &Value) -> Result<TimedReport> {
    let str_field = |k: &str| v.get(k).and_then(Value::as_str).ok_or_else(|| bad(k));
    let uint_field = |k: &str| v.get(k).and_then(Value::as_u64).ok_or_else(|| bad(k));
    let params = v
        .get("params")
        .and_then(Value::as_object)
        .ok_or_else(|| bad("params"))?
        .iter()
        .map(|(k, v)| {
            let pv = match v {
                Value::Number(n) => ParamValue::Int(n.as_i64().ok_or_else(|| bad("param"))?),
                Value::String(s) => ParamValue::Text(s.clone()),
                _ => return Err(bad("param")),
            };
            Ok((k.clone(), pv))
        })
        .collect::<Result<Vec<_>>>()?;
    let verdict = match str_field("verdict")? {
        "pass" => Verdict::Pass,
        "fail" => Verdict::Fail,
        _ => return Err(bad("verdict")),
    };
    let witness = match v.get("witness") {
        None | Some(Value::Null) => None,
        Some(w) => {
            let s = |k: &str| w.get(k).and_then(Value::as_str).map(str::to_string).ok_or_else(|| bad("witness"));
            Some(Witness {
                n: w.get("n").and_then(Value::as_u64).ok_or_else(|| bad("witness"))? as usize,
                lhs: s("lhs")?,
                rhs: s("rhs")?,
            })
        }
    };
    let notes = match v.get("notes") {
        None => Vec::new(),
        Some(n) => n
            .as_array()
            .ok_or_else(|| bad("notes"))?
            .iter()
            .map(|x| x.as_str().map(str::to_string).ok_or_else(|| bad("notes")))
            .collect::<Result<Vec<_>>>()?,
    };
    Ok(TimedReport {
        report: CheckReport {
            identity_id: str_field("identity_id")?.to_string(),
            params,
            verdict,
            max_order_checked: uint_field("max_order_checked")? as usize,
            witness,
            notes,
        },
        elapsed_ms: uint_field("elapsed_ms")?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use hooklen_core::decompose;

    #[test]
    fn decomposition_shape() {
        let p: Partition = "5,5,2,2".parse().unwrap();
        let d = decompose(&p, 3);
        let v = decomposition_to_json(&d);
        assert_eq!(v, json!({"t": 3, "core": [2], "quotient": [[2], [1], [1]]}));
        assert_eq!(decomposition_from_json(&v).unwrap(), d);
        let details = decomposition_details(&p, &d);
        assert_eq!(details["partition"], json!([5, 5, 2, 2]));
        assert!(details["kappa"].is_array());
    }

    #[test]
    fn rejects_malformed() {
        assert!(partition_from_json(&json!([1, 2])).is_err());
        assert!(partition_from_json(&json!("1,2")).is_err());
        assert!(decomposition_from_json(&json!({"t": 2, "core": [], "quotient": [[]]})).is_err());
        assert!(series_from_json(&json!({"order": 1, "degree_cap": null, "coefficients": ["x"]})).is_err());
    }
}
