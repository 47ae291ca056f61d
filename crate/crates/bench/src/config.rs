//! Experiment description read from TOML.

use std::collections::BTreeMap;

use gpsaf::baselines::BaselineKind;
use gpsaf::gpsaf::GpsafConfig;
use gpsaf::problems::{canonical_name, fixed_dimension, make_problem, DEFAULT_N_VAR};
use gpsaf::Problem;
use serde::{Deserialize, Serialize};

use crate::error::{BenchError, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgorithmConfig {
    pub baseline: String,
    #[serde(default)]
    pub gpsaf: bool,
    #[serde(default)]
    pub label: Option<String>,
    #[serde(default)]
    pub alpha: Option<usize>,
    #[serde(default)]
    pub beta: Option<usize>,
    #[serde(default)]
    pub gamma: Option<f64>,
    #[serde(default)]
    pub doe_size: Option<usize>,
}

impl AlgorithmConfig {
    pub fn plain(baseline: &str) -> Self {
        AlgorithmConfig { baseline: baseline.into(), gpsaf: false, label: None, alpha: None, beta: None, gamma: None, doe_size: None }
    }

    pub fn wrapped(baseline: &str) -> Self {
        AlgorithmConfig { gpsaf: true, ..Self::plain(baseline) }
    }

    pub fn kind(&self) -> Result<BaselineKind> {
        BaselineKind::parse(&self.baseline).map_err(|e| BenchError::Config(e.to_string()))
    }

    /// Display name, e.g. `GA` or `GPSAF-GA`.
    pub fn label(&self) -> Result<String> {
        if let Some(l) = &self.label {
            return Ok(l.clone());
        }
        let base = self.kind()?.label();
        Ok(if self.gpsaf { format!("GPSAF-{base}") } else { base.to_string() })
    }

    /// Name of the baseline this entry is compared within.
    pub fn group(&self) -> Result<String> {
        Ok(self.kind()?.label().to_string())
    }

    pub fn gpsaf_config(&self, se_max: usize, seed: u64) -> GpsafConfig {
        let d = GpsafConfig::default();
        GpsafConfig {
            alpha: self.alpha.unwrap_or(d.alpha),
            beta: self.beta.unwrap_or(d.beta),
            gamma: self.gamma.unwrap_or(d.gamma),
            doe_size: self.doe_size.unwrap_or(d.doe_size),
            se_max,
            seed,
            ..d
        }
    }
}

fn default_runs() -> usize {
    11
}
fn default_se_max() -> usize {
    300
}
fn default_significance() -> f64 {
    0.05
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub problems: Vec<String>,
    pub algorithms: Vec<AlgorithmConfig>,
    #[serde(default = "default_runs")]
    pub n_runs: usize,
    #[serde(default = "default_se_max")]
    pub se_max: usize,
    #[serde(default)]
    pub base_seed: u64,
    /// Variable count for problems of free dimension.
    #[serde(default)]
    pub n_var: Option<usize>,
    #[serde(default = "default_significance")]
    pub significance: f64,
    /// Per-problem evaluation budgets overriding `se_max`.
    #[serde(default)]
    pub budgets: BTreeMap<String, usize>,
}

impl ExperimentConfig {
    pub fn new(problems: &[&str], algorithms: Vec<AlgorithmConfig>) -> Self {
        ExperimentConfig {
            problems: problems.iter().map(|p| p.to_string()).collect(),
            algorithms,
            n_runs: default_runs(),
            se_max: default_se_max(),
            base_seed: 0,
            n_var: None,
            significance: default_significance(),
            budgets: BTreeMap::new(),
        }
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let config: Self = toml::from_str(text).map_err(|e| BenchError::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("configuration serializes")
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(BenchError::Config(m));
        if self.problems.is_empty() {
            return bad("no problems listed".into());
        }
        if self.algorithms.is_empty() {
            return bad("no algorithms listed".into());
        }
        if self.n_runs < 2 {
            return bad("n_runs must be at least 2".into());
        }
        if !(self.significance > 0.0 && self.significance < 1.0) {
            return bad("significance must lie in (0, 1)".into());
        }
        for name in &self.problems {
            let problem = self.problem(name)?;
            for alg in &self.algorithms {
                let kind = alg.kind()?;
                if kind == BaselineKind::Nsga2 && problem.n_obj() < 2 {
                    return bad(format!("NSGA-II cannot run single-objective `{name}`"));
                }
                if kind != BaselineKind::Nsga2 && problem.n_obj() > 1 {
                    return bad(format!("{} cannot run multi-objective `{name}`", kind.label()));
                }
                if alg.gpsaf {
                    let label = alg.label()?;
                    alg.gpsaf_config(self.budget(name)?, 0).validate().map_err(|e| BenchError::Config(format!("{label}: {e}")))?;
                }
            }
        }
        for key in self.budgets.keys() {
            if canonical_name(key).is_none() {
                return bad(format!("budget for unknown problem `{key}`"));
            }
        }
        let mut labels = Vec::new();
        for alg in &self.algorithms {
            let l = alg.label()?;
            if labels.contains(&l) {
                return bad(format!("duplicate algorithm label `{l}`"));
            }
            labels.push(l);
        }
        Ok(())
    }

    pub fn problem(&self, name: &str) -> Result<Problem> {
        let canon = canonical_name(name).ok_or_else(|| BenchError::Config(format!("unknown problem `{name}`")))?;
        let n_var = match fixed_dimension(&canon) {
            Some(_) => None,
            None if canon == "ZDT4" && self.n_var.is_none() => None,
            None => Some(self.n_var.unwrap_or(DEFAULT_N_VAR)),
        };
        make_problem(&canon, n_var).map_err(|e| BenchError::Config(e.to_string()))
    }

    pub fn budget(&self, name: &str) -> Result<usize> {
        let canon = canonical_name(name).ok_or_else(|| BenchError::Config(format!("unknown problem `{name}`")))?;
        Ok(self
            .budgets
            .iter()
            .find(|(k, _)| canonical_name(k).as_deref() == Some(canon.as_str()))
            .map_or(self.se_max, |(_, v)| *v))
    }

    pub fn seed(&self, run: usize) -> u64 {
        self.base_seed.wrapping_add(run as u64)
    }
}
