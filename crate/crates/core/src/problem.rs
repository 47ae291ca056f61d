use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Objective and constraint values of one design. Constraints are satisfied when `g <= 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub f: Vec<f64>,
    pub g: Vec<f64>,
}

type Evaluator = dyn Fn(&[f64]) -> Evaluation + Send + Sync;

/// Box-bounded optimization problem with a deterministic evaluator.
///
/// Problems are immutable after construction and cheap to clone.
#[derive(Clone)]
pub struct Problem {
    name: String,
    n_obj: usize,
    n_constr: usize,
    lower: Vec<f64>,
    upper: Vec<f64>,
    evaluator: Arc<Evaluator>,
    known_optimum: Option<f64>,
    cv_scales: Option<Vec<f64>>,
}

impl fmt::Debug for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Problem")
            .field("name", &self.name)
            .field("n_var", &self.n_var())
            .field("n_obj", &self.n_obj)
            .field("n_constr", &self.n_constr)
            .finish()
    }
}

impl Problem {
    pub fn new<F>(
        name: impl Into<String>,
        lower: Vec<f64>,
        upper: Vec<f64>,
        n_obj: usize,
        n_constr: usize,
        evaluator: F,
    ) -> Result<Self>
    where
        F: Fn(&[f64]) -> Evaluation + Send + Sync + 'static,
    {
        if lower.is_empty() || lower.len() != upper.len() {
            return Err(Error::Configuration(
                "bounds must be non-empty and of equal length".into(),
            ));
        }
        if lower.iter().zip(&upper).any(|(l, u)| !(l < u)) {
            return Err(Error::Configuration("lower bound must be below upper bound".into()));
        }
        if n_obj == 0 {
            return Err(Error::Configuration("at least one objective is required".into()));
        }
        Ok(Self {
            name: name.into(),
            n_obj,
            n_constr,
            lower,
            upper,
            evaluator: Arc::new(evaluator),
            known_optimum: None,
            cv_scales: None,
        })
    }

    /// Attaches the best attainable objective value of a single-objective problem.
    pub fn with_known_optimum(mut self, f: f64) -> Self {
        self.known_optimum = Some(f);
        self
    }

    /// Divides each constraint value by its scale before violations are summed.
    /// Off by default.
    pub fn with_cv_scales(mut self, scales: Vec<f64>) -> Result<Self> {
        if scales.len() != self.n_constr || scales.iter().any(|s| !(*s > 0.0)) {
            return Err(Error::Configuration(
                "one positive scale per constraint expected".into(),
            ));
        }
        self.cv_scales = Some(scales);
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn n_var(&self) -> usize {
        self.lower.len()
    }
    pub fn n_obj(&self) -> usize {
        self.n_obj
    }
    pub fn n_constr(&self) -> usize {
        self.n_constr
    }
    pub fn lower(&self) -> &[f64] {
        &self.lower
    }
    pub fn upper(&self) -> &[f64] {
        &self.upper
    }
    pub fn known_optimum(&self) -> Option<f64> {
        self.known_optimum
    }
    pub fn cv_scales(&self) -> Option<&[f64]> {
        self.cv_scales.as_deref()
    }

    pub fn evaluate(&self, x: &[f64]) -> Result<Evaluation> {
        if x.len() != self.n_var() {
            return Err(Error::ContractViolation(format!(
                "design has {} variables, problem expects {}",
                x.len(),
                self.n_var()
            )));
        }
        let e = (self.evaluator)(x);
        if e.f.len() != self.n_obj || e.g.len() != self.n_constr {
            return Err(Error::ContractViolation(format!(
                "evaluator of `{}` returned {} objectives and {} constraints",
                self.name,
                e.f.len(),
                e.g.len()
            )));
        }
        Ok(e)
    }

    /// Clamps `x` into the box in place.
    pub fn clamp(&self, x: &mut [f64]) {
        for ((v, l), u) in x.iter_mut().zip(&self.lower).zip(&self.upper) {
            *v = v.clamp(*l, *u);
        }
    }

    /// Maps `x` onto the unit box.
    pub fn normalize(&self, x: &[f64]) -> Vec<f64> {
        x.iter()
            .zip(&self.lower)
            .zip(&self.upper)
            .map(|((v, l), u)| (v - l) / (u - l))
            .collect()
    }

    pub fn denormalize(&self, z: &[f64]) -> Vec<f64> {
        z.iter()
            .zip(&self.lower)
            .zip(&self.upper)
            .map(|((v, l), u)| l + v * (u - l))
            .collect()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.n_var()
            && x
                .iter()
                .zip(&self.lower)
                .zip(&self.upper)
                .all(|((v, l), u)| v >= l && v <= u)
    }
}
