use crate::error::{Error, Result};

use super::metrics::{kendall_tau_distance, max_abs_error, Window};

/// Per-function smoothed prediction error of the surrogates.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ErrorEstimate {
    mae: Vec<Window>,
    tau: Vec<Window>,
}

impl ErrorEstimate {
    pub fn new(n_functions: usize) -> Self {
        ErrorEstimate { mae: vec![Window::default(); n_functions], tau: vec![Window::default(); n_functions] }
    }

    /// One window entry per function.
    pub fn seeded(initial: &[f64]) -> Result<Self> {
        let mut e = Self::new(initial.len());
        for (w, v) in e.mae.iter_mut().zip(initial) {
            if !(*v >= 0.0) {
                return Err(Error::ContractViolation(format!("negative error estimate {v}")));
            }
            w.push(*v);
        }
        Ok(e)
    }

    pub fn n_functions(&self) -> usize {
        self.mae.len()
    }

    /// `truth` and `pred` hold one row per solution: objectives, then constraints.
    pub fn update(&mut self, truth: &[Vec<f64>], pred: &[Vec<f64>]) -> Result<()> {
        if truth.is_empty() || truth.len() != pred.len() {
            return Err(Error::ContractViolation("misaligned error batches".into()));
        }
        let n = self.mae.len();
        if truth.iter().chain(pred).any(|r| r.len() != n) {
            return Err(Error::ContractViolation("batch rows do not match function count".into()));
        }
        for i in 0..n {
            let t: Vec<f64> = truth.iter().map(|r| r[i]).collect();
            let p: Vec<f64> = pred.iter().map(|r| r[i]).collect();
            let e = max_abs_error(&p, &t)?;
            self.mae[i].push(if e.is_finite() { e } else { f64::MAX });
            if t.len() >= 2 {
                self.tau[i].push(kendall_tau_distance(&p, &t)?);
            }
        }
        Ok(())
    }

    /// Smoothed error per function; an empty window reads as zero.
    pub fn values(&self) -> Vec<f64> {
        self.mae.iter().map(|w| w.mean().unwrap_or(0.0)).collect()
    }

    pub fn tau_values(&self) -> Vec<Option<f64>> {
        self.tau.iter().map(|w| w.mean()).collect()
    }

    pub fn window(&self, function: usize) -> &Window {
        &self.mae[function]
    }
}
