use crate::error::{Error, Result};
use crate::surrogates::EnsembleOptions;

#[derive(Debug, Clone, PartialEq)]
pub struct GpsafConfig {
    /// Competitors per slot in the tournament pre-filter.
    pub alpha: usize,
    /// Look-ahead iterations on the surrogates.
    pub beta: usize,
    /// Replacement exponent.
    pub gamma: f64,
    pub doe_size: usize,
    pub se_max: usize,
    pub seed: u64,
    pub surrogates: EnsembleOptions,
    /// Collect a per-iteration trace.
    pub trace: bool,
}

impl Default for GpsafConfig {
    fn default() -> Self {
        GpsafConfig {
            alpha: 30,
            beta: 5,
            gamma: 0.5,
            doe_size: 20,
            se_max: 300,
            seed: 0,
            surrogates: EnsembleOptions::default(),
            trace: false,
        }
    }
}

impl GpsafConfig {
    pub fn with_seed(seed: u64) -> Self {
        GpsafConfig { seed, ..Self::default() }
    }

    /// Whether the wrapper reduces to the plain baseline.
    pub fn is_fallback(&self) -> bool {
        self.alpha == 1 && self.beta == 0
    }

    pub fn validate(&self) -> Result<()> {
        if self.alpha < 1 {
            return Err(Error::Configuration("alpha must be at least 1".into()));
        }
        if !(self.gamma > 0.0) || !self.gamma.is_finite() {
            return Err(Error::Configuration("gamma must be positive".into()));
        }
        if self.doe_size == 0 {
            return Err(Error::Configuration("doe_size must be positive".into()));
        }
        if self.doe_size > self.se_max {
            return Err(Error::Budget(format!(
                "design of experiments ({}) exceeds the evaluation budget ({})",
                self.doe_size, self.se_max
            )));
        }
        Ok(())
    }
}
