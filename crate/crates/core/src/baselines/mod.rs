//! Population-based algorithms exposing the ask/tell contract.

mod de;
mod ga;
mod nsga2;
pub mod operators;
mod pso;

pub use de::{De, DeConfig};
pub use ga::{Ga, GaConfig};
pub use nsga2::{crowding_distance, non_dominated_sort, Nsga2, Nsga2Config};
pub use pso::{Pso, PsoConfig};

use crate::algorithm::Algorithm;
use crate::doe::sample_doe;
use crate::error::{Error, Result};
use crate::problem::Problem;
use crate::rng::{labels, stream};
use crate::solution::Solution;

/// Initial population: the maximin Latin hypercube drawn from the run's DOE
/// stream, so a wrapper sampling its own DOE from the same seed sees the
/// same designs.
pub(crate) fn initial_designs(problem: &Problem, size: usize, seed: u64) -> Result<Vec<Vec<f64>>> {
    sample_doe(problem, size, &mut stream(seed, labels::DOE))
}

pub(crate) fn check_batch(problem: &Problem, batch: &[Solution]) -> Result<()> {
    for s in batch {
        let ok = s.x.len() == problem.n_var()
            && s.f.as_ref().map_or(false, |f| f.len() == problem.n_obj())
            && s.g.as_ref().map_or(false, |g| g.len() == problem.n_constr());
        if !ok {
            return Err(Error::ContractViolation(format!(
                "advance expects evaluated solutions matching `{}`",
                problem.name()
            )));
        }
    }
    Ok(())
}

/// Baseline algorithms by name: `ga`, `de`, `pso`, `nsga2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaselineKind {
    Ga,
    De,
    Pso,
    Nsga2,
}

impl BaselineKind {
    pub fn parse(name: &str) -> Result<Self> {
        match name.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "ga" => Ok(Self::Ga),
            "de" => Ok(Self::De),
            "pso" => Ok(Self::Pso),
            "nsga2" | "nsgaii" => Ok(Self::Nsga2),
            _ => Err(Error::Configuration(format!("unknown baseline `{name}`"))),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Self::Ga => "GA",
            Self::De => "DE",
            Self::Pso => "PSO",
            Self::Nsga2 => "NSGA-II",
        }
    }

    /// Builds the baseline with default settings.
    pub fn build(&self, problem: &Problem, seed: u64) -> Result<Box<dyn Algorithm>> {
        let p = problem.clone();
        Ok(match self {
            Self::Ga => Box::new(Ga::new(p, GaConfig::default(), seed)?),
            Self::De => Box::new(De::new(p, DeConfig::default(), seed)?),
            Self::Pso => Box::new(Pso::new(p, PsoConfig::default(), seed)?),
            Self::Nsga2 => Box::new(Nsga2::new(p, Nsga2Config::default(), seed)?),
        })
    }
}
