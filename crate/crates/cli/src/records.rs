//! Output records and their JSON encoding.

use num_bigint::BigInt;
use serde_json::{json, Value};
use torb_core::rewriting::{CommutatorWitness, SquareWitness};
use torb_core::Mat2;

use crate::Failure;

/// One result, rendered as text lines or as a single JSON object.
pub struct Record {
    text: Vec<String>,
    json: Value,
}

impl Record {
    pub fn new(text: String, json: Value) -> Self {
        Record {
            text: vec![text],
            json,
        }
    }

    pub fn lines(text: Vec<String>, json: Value) -> Self {
        Record { text, json }
    }

    pub fn print(&self, as_json: bool) {
        if as_json {
            println!("{}", self.json);
        } else {
            for line in &self.text {
                println!("{line}");
            }
        }
    }
}

/// `[["a","b"],["c","d"]]`, entries as decimal strings.
pub fn matrix_json(m: &Mat2) -> Value {
    let [a, b, c, d] = m.entries().map(|x| x.to_string());
    json!([[a, b], [c, d]])
}

pub fn pairs_json(pairs: &[(Mat2, Mat2)]) -> Value {
    pairs
        .iter()
        .map(|(x, y)| json!({"x": matrix_json(x), "y": matrix_json(y)}))
        .collect()
}

fn bad(msg: &str) -> Failure {
    Failure::Parse(format!("invalid witness JSON: {msg}"))
}

fn entry(v: &Value) -> Result<BigInt, Failure> {
    match v {
        Value::String(s) => s
            .trim()
            .parse()
            .map_err(|_| bad("matrix entry is not an integer")),
        Value::Number(n) if n.is_i64() => Ok(BigInt::from(n.as_i64().unwrap_or_default())),
        _ => Err(bad("matrix entry must be an integer or a decimal string")),
    }
}

pub fn matrix_from_json(v: &Value) -> Result<Mat2, Failure> {
    let rows = v
        .as_array()
        .filter(|r| r.len() == 2)
        .ok_or_else(|| bad("matrix must have two rows"))?;
    let mut out = Vec::with_capacity(4);
    for row in rows {
        let row = row
            .as_array()
            .filter(|r| r.len() == 2)
            .ok_or_else(|| bad("matrix rows must have two entries"))?;
        for x in row {
            out.push(entry(x)?);
        }
    }
    let [a, b, c, d]: [BigInt; 4] = out.try_into().map_err(|_| bad("matrix must be 2x2"))?;
    Ok(Mat2::new(a, b, c, d)?)
}

pub enum WitnessFile {
    Commutators {
        target: Mat2,
        witness: CommutatorWitness,
    },
    Squares {
        target: Mat2,
        witness: SquareWitness,
    },
}

fn list<'a>(v: &'a Value, key: &str) -> Result<&'a Vec<Value>, Failure> {
    v.get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| bad(&format!("missing array {key:?}")))
}

/// Reads a record written by `torb --json witness` (or `genus`).
pub fn parse_witness(v: &Value) -> Result<WitnessFile, Failure> {
    let target = matrix_from_json(v.get("target").ok_or_else(|| bad("missing \"target\""))?)?;
    match v.get("kind").and_then(Value::as_str) {
        Some("commutators") => {
            let pairs = list(v, "pairs")?
                .iter()
                .map(|p| {
                    let x = p.get("x").ok_or_else(|| bad("pair without \"x\""))?;
                    let y = p.get("y").ok_or_else(|| bad("pair without \"y\""))?;
                    Ok((matrix_from_json(x)?, matrix_from_json(y)?))
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            Ok(WitnessFile::Commutators {
                target,
                witness: CommutatorWitness { pairs },
            })
        }
        Some("squares") => {
            let bases = list(v, "bases")?
                .iter()
                .map(matrix_from_json)
                .collect::<Result<Vec<_>, _>>()?;
            Ok(WitnessFile::Squares {
                target,
                witness: SquareWitness { bases },
            })
        }
        _ => Err(bad("\"kind\" must be \"commutators\" or \"squares\"")),
    }
}
