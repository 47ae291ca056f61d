//! One JSON line per run.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{BenchError, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub problem: String,
    pub algorithm: String,
    /// Baseline the algorithm belongs to, for per-group highlighting.
    pub group: String,
    pub seed: u64,
    pub indicator: String,
    /// `null` in JSON stands for no feasible solution.
    #[serde(serialize_with = "ser_value", deserialize_with = "de_value")]
    pub value: f64,
    #[serde(serialize_with = "ser_values", deserialize_with = "de_values")]
    pub trace: Vec<f64>,
    pub evaluations: usize,
    pub wall_ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

fn ser_value<S: Serializer>(v: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if v.is_finite() {
        s.serialize_f64(*v)
    } else {
        s.serialize_none()
    }
}

fn de_value<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<f64, D::Error> {
    Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::INFINITY))
}

fn ser_values<S: Serializer>(v: &[f64], s: S) -> std::result::Result<S::Ok, S::Error> {
    let opt: Vec<Option<f64>> = v.iter().map(|x| x.is_finite().then_some(*x)).collect();
    opt.serialize(s)
}

fn de_values<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<f64>, D::Error> {
    Ok(Vec::<Option<f64>>::deserialize(d)?.into_iter().map(|v| v.unwrap_or(f64::INFINITY)).collect())
}

pub fn to_jsonl(records: &[RunRecord]) -> String {
    records.iter().map(|r| serde_json::to_string(r).expect("record serializes") + "\n").collect()
}

pub fn from_jsonl(text: &str) -> Result<Vec<RunRecord>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .enumerate()
        .map(|(i, l)| serde_json::from_str(l).map_err(|e| BenchError::Record(format!("line {}: {e}", i + 1))))
        .collect()
}

/// Per-evaluation best-so-far values as CSV.
pub fn trace_csv(records: &[RunRecord]) -> String {
    let mut out = String::from("problem,algorithm,seed,evaluation,best\n");
    for r in records {
        for (i, v) in r.trace.iter().enumerate() {
            let v = if v.is_finite() { v.to_string() } else { "inf".into() };
            out.push_str(&format!("{},{},{},{},{}\n", r.problem, r.algorithm, r.seed, i + 1, v));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_with_infinities() {
        let r = RunRecord {
            problem: "G6".into(),
            algorithm: "GA".into(),
            group: "GA".into(),
            seed: 3,
            indicator: "gap".into(),
            value: f64::INFINITY,
            trace: vec![f64::INFINITY, 2.5],
            evaluations: 2,
            wall_ms: 1,
            error: None,
        };
        let text = to_jsonl(&[r.clone()]);
        assert!(text.contains("\"value\":null"));
        assert_eq!(from_jsonl(&text).unwrap(), vec![r]);
        assert!(from_jsonl("{").is_err());
    }
}
