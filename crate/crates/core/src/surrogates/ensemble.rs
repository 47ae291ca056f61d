use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problem::Problem;
use crate::solution::Archive;

use super::kriging::{KrigingModel, KrigingOptions};
use super::metrics::{kendall_tau_distance, max_abs_error, Window};
use super::plog::{plog, plog_inv};
use super::rbf::{Kernel, RbfModel};

pub const CV_FOLDS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModelKind {
    Rbf { kernel: Kernel, tail: usize },
    Kriging,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CandidateSpec {
    pub kind: ModelKind,
    pub plog: bool,
}

impl CandidateSpec {
    pub fn id(&self) -> String {
        let base = match self.kind {
            ModelKind::Rbf { kernel, tail } => format!("rbf-{}-t{}", kernel.label(), tail),
            ModelKind::Kriging => "kriging".to_string(),
        };
        if self.plog {
            format!("plog:{base}")
        } else {
            base
        }
    }
}

/// Candidate list for one function. Constraints also get PLOG twins.
pub fn candidate_specs(constraint: bool) -> Vec<CandidateSpec> {
    let mut kinds: Vec<ModelKind> = Vec::new();
    for kernel in Kernel::ALL {
        for tail in [0, 1] {
            kinds.push(ModelKind::Rbf { kernel, tail });
        }
    }
    kinds.push(ModelKind::Kriging);
    let mut specs: Vec<CandidateSpec> = kinds.iter().map(|&kind| CandidateSpec { kind, plog: false }).collect();
    if constraint {
        specs.extend(kinds.iter().map(|&kind| CandidateSpec { kind, plog: true }));
    }
    specs
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EnsembleOptions {
    pub kriging: KrigingOptions,
}

#[derive(Debug, Clone)]
enum Model {
    Rbf(RbfModel),
    Kriging(KrigingModel),
}

/// A candidate fitted on transformed, standardized outputs.
#[derive(Debug, Clone)]
struct Fitted {
    model: Model,
    plog: bool,
    mean: f64,
    std: f64,
}

impl Fitted {
    fn fit(spec: &CandidateSpec, x: &[Vec<f64>], y: &[f64], warm: Option<&[f64]>, opts: &EnsembleOptions) -> Result<Self> {
        let t: Vec<f64> = if spec.plog {
            y.iter().map(|v| plog(*v)).collect::<Result<_>>()?
        } else {
            if y.iter().any(|v| !v.is_finite()) {
                return Err(Error::NumericInput);
            }
            y.to_vec()
        };
        let n = t.len() as f64;
        let mean = t.iter().sum::<f64>() / n;
        let var = t.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
        let std = if var > 0.0 && var.sqrt() > 1e-12 * mean.abs().max(1.0) { var.sqrt() } else { 1.0 };
        let z: Vec<f64> = t.iter().map(|v| (v - mean) / std).collect();
        let model = match spec.kind {
            ModelKind::Rbf { kernel, tail } => Model::Rbf(RbfModel::fit(x, &z, kernel, tail, RbfModel::DEFAULT_LAMBDA)?),
            ModelKind::Kriging => Model::Kriging(KrigingModel::fit(x, &z, warm, opts.kriging)?),
        };
        Ok(Fitted { model, plog: spec.plog, mean, std })
    }

    fn predict(&self, x: &[f64]) -> f64 {
        let z = match &self.model {
            Model::Rbf(m) => m.predict(x),
            Model::Kriging(m) => m.predict(x),
        };
        let t = z * self.std + self.mean;
        if self.plog {
            plog_inv(t).unwrap_or(f64::NAN)
        } else {
            t
        }
    }

    fn log_theta(&self) -> Option<Vec<f64>> {
        match &self.model {
            Model::Kriging(m) => Some(m.log_theta()),
            Model::Rbf(_) => None,
        }
    }
}

#[derive(Debug, Clone)]
struct Slot {
    specs: Vec<CandidateSpec>,
    fitted: Vec<Option<Fitted>>,
    tau: Vec<Window>,
    mae: Vec<Window>,
    warm: Vec<Option<Vec<f64>>>,
    selected: Option<usize>,
    cv_mae: Vec<f64>,
}

impl Slot {
    fn new(constraint: bool) -> Self {
        let specs = candidate_specs(constraint);
        let k = specs.len();
        Slot {
            specs,
            fitted: vec![None; k],
            tau: vec![Window::default(); k],
            mae: vec![Window::default(); k],
            warm: vec![None; k],
            selected: None,
            cv_mae: vec![f64::INFINITY; k],
        }
    }

    fn push_metrics(&mut self, c: usize, pred: &[f64], truth: &[f64]) {
        if pred.iter().any(|v| !v.is_finite()) {
            self.tau[c].push(f64::INFINITY);
            self.mae[c].push(f64::INFINITY);
            return;
        }
        if truth.len() >= 2 {
            self.tau[c].push(kendall_tau_distance(pred, truth).unwrap_or(f64::INFINITY));
        }
        self.mae[c].push(max_abs_error(pred, truth).unwrap_or(f64::INFINITY));
    }

    fn key(&self, c: usize) -> (f64, f64) {
        (self.tau[c].mean().unwrap_or(f64::INFINITY), self.mae[c].mean().unwrap_or(f64::INFINITY))
    }

    fn best_of(&self, plog: bool) -> Option<usize> {
        (0..self.specs.len())
            .filter(|&c| self.specs[c].plog == plog && self.fitted[c].is_some())
            .min_by(|&a, &b| {
                let (ta, ma) = self.key(a);
                let (tb, mb) = self.key(b);
                ta.total_cmp(&tb).then(ma.total_cmp(&mb)).then(a.cmp(&b))
            })
    }

    fn select(&mut self) -> Result<()> {
        let plain = self.best_of(false);
        let twin = self.best_of(true);
        self.selected = match (plain, twin) {
            (Some(p), Some(t)) => Some(if self.key(t).0 < self.key(p).0 { t } else { p }),
            (p, t) => p.or(t),
        };
        if self.selected.is_none() {
            return Err(Error::EnsembleFit("every candidate model failed".into()));
        }
        Ok(())
    }
}

/// Per-function surrogate ensemble over objectives followed by constraints.
#[derive(Debug, Clone)]
pub struct SurrogateEnsemble {
    lower: Vec<f64>,
    upper: Vec<f64>,
    n_obj: usize,
    slots: Vec<Slot>,
    options: EnsembleOptions,
    seen: usize,
    fitted: bool,
}

impl SurrogateEnsemble {
    pub fn new(problem: &Problem, options: EnsembleOptions) -> Self {
        Self::with_bounds(problem.lower(), problem.upper(), problem.n_obj(), problem.n_constr(), options)
    }

    pub fn with_bounds(lower: &[f64], upper: &[f64], n_obj: usize, n_constr: usize, options: EnsembleOptions) -> Self {
        let slots = (0..n_obj + n_constr).map(|i| Slot::new(i >= n_obj)).collect();
        SurrogateEnsemble {
            lower: lower.to_vec(),
            upper: upper.to_vec(),
            n_obj,
            slots,
            options,
            seen: 0,
            fitted: false,
        }
    }

    pub fn n_functions(&self) -> usize {
        self.slots.len()
    }

    pub fn is_fitted(&self) -> bool {
        self.fitted
    }

    fn normalize(&self, x: &[f64]) -> Vec<f64> {
        x.iter()
            .zip(self.lower.iter().zip(&self.upper))
            .map(|(v, (l, u))| if u > l { (v - l) / (u - l) } else { 0.0 })
            .collect()
    }

    /// Fits on every solution of the archive. Solutions added since the
    /// previous fit first serve as a test set for the old models; the very
    /// first fit scores candidates by cross-validation.
    pub fn fit(&mut self, archive: &Archive) -> Result<()> {
        let x = archive.designs();
        let y: Vec<Vec<f64>> = archive
            .iter()
            .map(|s| {
                let mut row = s.f.clone().unwrap_or_default();
                row.extend(s.g.clone().unwrap_or_default());
                row
            })
            .collect();
        self.fit_rows(&x, &y)
    }

    /// Same as [`fit`](Self::fit) on raw rows; row `i` of `y` holds the
    /// objectives then constraints of design `i`. Earlier rows must be
    /// unchanged between calls.
    pub fn fit_rows(&mut self, x: &[Vec<f64>], y: &[Vec<f64>]) -> Result<()> {
        let n_fun = self.slots.len();
        if x.len() != y.len() || y.iter().any(|r| r.len() != n_fun) {
            return Err(Error::ContractViolation("training rows do not match the ensemble".into()));
        }
        let d = self.lower.len();
        if x.len() < d + 2 {
            return Err(Error::EnsembleFit(format!("{} points cannot fit {} variables", x.len(), d)));
        }
        let xn: Vec<Vec<f64>> = x.iter().map(|p| self.normalize(p)).collect();
        let seen = self.seen.min(xn.len());

        for (i, slot) in self.slots.iter_mut().enumerate() {
            let yi: Vec<f64> = y.iter().map(|r| r[i]).collect();
            if !self.fitted {
                cross_validate(slot, &xn, &yi, &self.options);
            } else if xn.len() > seen {
                let truth = &yi[seen..];
                for c in 0..slot.specs.len() {
                    match &slot.fitted[c] {
                        Some(m) => {
                            let pred: Vec<f64> = xn[seen..].iter().map(|p| m.predict(p)).collect();
                            slot.push_metrics(c, &pred, truth);
                        }
                        None => {
                            slot.tau[c].push(f64::INFINITY);
                            slot.mae[c].push(f64::INFINITY);
                        }
                    }
                }
            }
            for c in 0..slot.specs.len() {
                let fitted = Fitted::fit(&slot.specs[c], &xn, &yi, slot.warm[c].as_deref(), &self.options).ok();
                if let Some(t) = fitted.as_ref().and_then(|f| f.log_theta()) {
                    slot.warm[c] = Some(t);
                }
                slot.fitted[c] = fitted;
            }
            slot.select()?;
        }
        self.seen = xn.len();
        self.fitted = true;
        Ok(())
    }

    /// Predicted objectives and constraints, one row per design.
    pub fn predict(&self, designs: &[Vec<f64>]) -> Result<(Vec<Vec<f64>>, Vec<Vec<f64>>)> {
        if !self.fitted {
            return Err(Error::State("ensemble used before fitting".into()));
        }
        let mut f = Vec::with_capacity(designs.len());
        let mut g = Vec::with_capacity(designs.len());
        for x in designs {
            if x.len() != self.lower.len() {
                return Err(Error::ContractViolation("design dimension mismatch".into()));
            }
            let xn = self.normalize(x);
            let row: Vec<f64> = self
                .slots
                .iter()
                .map(|s| s.fitted[s.selected.expect("fitted ensemble has a selection")].as_ref().unwrap().predict(&xn))
                .collect();
            g.push(row[self.n_obj..].to_vec());
            f.push(row[..self.n_obj].to_vec());
        }
        Ok((f, g))
    }

    /// Identifier of the selected model per function.
    pub fn selected_ids(&self) -> Vec<String> {
        self.slots.iter().map(|s| s.selected.map(|c| s.specs[c].id()).unwrap_or_default()).collect()
    }

    /// Cross-validated max-abs-error of each function's selected model.
    pub fn cv_errors(&self) -> Result<Vec<f64>> {
        self.slots
            .iter()
            .map(|s| {
                let c = s.selected.ok_or_else(|| Error::State("ensemble used before fitting".into()))?;
                let e = s.cv_mae[c];
                Ok(if e.is_finite() { e } else { f64::MAX })
            })
            .collect()
    }

    /// Smoothed (tau, MAE) of every candidate of a function, keyed by id.
    pub fn candidate_scores(&self, function: usize) -> Vec<(String, f64, f64)> {
        let s = &self.slots[function];
        (0..s.specs.len())
            .map(|c| {
                let (t, m) = s.key(c);
                (s.specs[c].id(), t, m)
            })
            .collect()
    }
}

fn cross_validate(slot: &mut Slot, x: &[Vec<f64>], y: &[f64], opts: &EnsembleOptions) {
    let n = x.len();
    let folds = CV_FOLDS.min(n);
    for c in 0..slot.specs.len() {
        let mut pred = vec![f64::NAN; n];
        for k in 0..folds {
            let train: Vec<usize> = (0..n).filter(|i| i % folds != k).collect();
            let xt: Vec<Vec<f64>> = train.iter().map(|&i| x[i].clone()).collect();
            let yt: Vec<f64> = train.iter().map(|&i| y[i]).collect();
            if let Ok(m) = Fitted::fit(&slot.specs[c], &xt, &yt, slot.warm[c].as_deref(), opts) {
                if slot.warm[c].is_none() {
                    slot.warm[c] = m.log_theta();
                }
                for i in (k..n).step_by(folds) {
                    pred[i] = m.predict(&x[i]);
                }
            }
        }
        slot.push_metrics(c, &pred, y);
        slot.cv_mae[c] = slot.mae[c].mean().unwrap_or(f64::INFINITY);
    }
}
