//! Per-problem domination ranks and their suite averages.

use crate::error::{BenchError, Result};
use crate::record::RunRecord;
use crate::stats::{domination_ranks, RankRow};

#[derive(Debug, Clone, PartialEq)]
pub struct RankTable {
    pub algorithms: Vec<String>,
    pub groups: Vec<String>,
    pub problems: Vec<String>,
    pub rows: Vec<RankRow>,
}

fn first_seen<'a>(items: impl Iterator<Item = &'a str>) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for i in items {
        if !out.iter().any(|o| o == i) {
            out.push(i.to_string());
        }
    }
    out
}

impl RankTable {
    /// Algorithms and problems keep their order of first appearance.
    pub fn from_records(records: &[RunRecord], alpha: f64) -> Result<Self> {
        let algorithms = first_seen(records.iter().map(|r| r.algorithm.as_str()));
        let problems = first_seen(records.iter().map(|r| r.problem.as_str()));
        let groups = algorithms
            .iter()
            .map(|a| records.iter().find(|r| &r.algorithm == a).unwrap().group.clone())
            .collect();
        let mut rows = Vec::with_capacity(problems.len());
        for p in &problems {
            let samples: Vec<Vec<f64>> = algorithms
                .iter()
                .map(|a| records.iter().filter(|r| &r.problem == p && &r.algorithm == a).map(|r| r.value).collect())
                .collect();
            if let Some(i) = samples.iter().position(|s| s.len() < 2) {
                return Err(BenchError::Statistics(format!("{} on {p} has fewer than two runs", algorithms[i])));
            }
            rows.push(domination_ranks(&samples, alpha)?);
        }
        Ok(RankTable { algorithms, groups, problems, rows })
    }

    pub fn mean_ranks(&self) -> Vec<f64> {
        (0..self.algorithms.len())
            .map(|a| self.rows.iter().map(|r| r.ranks[a]).sum::<f64>() / self.rows.len().max(1) as f64)
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!("problem,{}\n", self.algorithms.join(","));
        let line = |name: &str, vals: &[f64]| {
            format!("{name},{}\n", vals.iter().map(|v| format!("{v:.4}")).collect::<Vec<_>>().join(","))
        };
        for (p, row) in self.problems.iter().zip(&self.rows) {
            out.push_str(&line(p, &row.ranks));
        }
        out.push_str(&line("mean", &self.mean_ranks()));
        out
    }

    /// Markdown table; the best rank within each baseline group is bold.
    pub fn to_markdown(&self) -> String {
        let mut out = format!("| problem | {} |\n", self.algorithms.join(" | "));
        out.push_str(&format!("|---|{}\n", "---:|".repeat(self.algorithms.len())));
        let mut line = |name: &str, vals: &[f64]| {
            let cells: Vec<String> = vals
                .iter()
                .enumerate()
                .map(|(a, v)| {
                    let best = (0..vals.len()).filter(|&b| self.groups[b] == self.groups[a]).all(|b| vals[b] >= *v);
                    if best {
                        format!("**{v:.2}**")
                    } else {
                        format!("{v:.2}")
                    }
                })
                .collect();
            out.push_str(&format!("| {name} | {} |\n", cells.join(" | ")));
        };
        for (p, row) in self.problems.iter().zip(&self.rows) {
            line(p, &row.ranks);
        }
        line("mean", &self.mean_ranks());
        out
    }
}
