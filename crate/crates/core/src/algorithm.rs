//! The infill/advance (ask/tell) contract and the plain driver loop.

use crate::error::{Error, Result};
use crate::problem::Problem;
use crate::solution::{evaluate_batch, Archive, Budget, Solution};

/// A population-based optimizer split into proposing designs and ingesting
/// their evaluations.
///
/// Implementations must tolerate repeated `infill` calls without an
/// intervening `advance`, and `advance` must accept any evaluated set, not
/// only the last infill output.
pub trait Algorithm: Send {
    fn name(&self) -> &str;

    /// Proposes designs to evaluate next.
    fn infill(&mut self) -> Result<Vec<Vec<f64>>>;

    /// Ingests evaluated solutions. Slot `j` of `evaluated` corresponds to slot
    /// `j` of an infill batch.
    fn advance(&mut self, evaluated: &[Solution]) -> Result<()>;

    /// Independent deep copy, random state included.
    fn snapshot(&self) -> Box<dyn Algorithm>;

    /// Replaces the random state.
    fn reseed(&mut self, seed: u64);

    /// Current population with true values, for inspection.
    fn population(&self) -> Vec<Solution>;
}

impl Clone for Box<dyn Algorithm> {
    fn clone(&self) -> Self {
        self.snapshot()
    }
}

/// Runs `alg` on `problem` until the budget is spent and returns every
/// evaluated solution. The last batch is cut to the remaining budget,
/// keeping the leading designs.
pub fn run_baseline(
    alg: &mut dyn Algorithm,
    problem: &Problem,
    budget: &mut Budget,
) -> Result<Archive> {
    let mut archive = Archive::new();
    while !budget.is_exhausted() {
        let mut designs = alg.infill()?;
        if designs.is_empty() {
            return Err(Error::StalledAlgorithm);
        }
        designs.truncate(budget.remaining());
        let batch = evaluate_batch(problem, designs, budget)?;
        alg.advance(&batch)?;
        archive.extend(batch)?;
    }
    Ok(archive)
}
