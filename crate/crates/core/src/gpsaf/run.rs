use serde::{Deserialize, Serialize};

use crate::algorithm::Algorithm;
use crate::doe::sample_doe;
use crate::error::{Error, Result};
use crate::problem::Problem;
use crate::rng::{labels, stream};
use crate::solution::{evaluate_batch, Archive, Budget, Values};
use crate::surrogates::{ErrorEstimate, SurrogateEnsemble};

use super::config::GpsafConfig;
use super::phases::{alpha_phase, beta_phase, prob_knockout_tournament, replacement_phase, replacement_probabilities};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IterationTrace {
    pub iteration: usize,
    pub evaluations: usize,
    pub batch_size: usize,
    pub cluster_sizes: Vec<usize>,
    pub rho: Vec<f64>,
    pub replaced: Vec<bool>,
    pub selected_models: Vec<String>,
    pub error: Vec<f64>,
    pub best: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GpsafRun {
    pub archive: Archive,
    pub trace: Vec<IterationTrace>,
}

fn row(f: &[f64], g: &[f64]) -> Vec<f64> {
    f.iter().chain(g).copied().collect()
}

/// Runs `baseline` wrapped by the surrogate-assisted loop until `se_max`
/// expensive evaluations are spent.
pub fn run_gpsaf(baseline: &mut dyn Algorithm, problem: &Problem, config: &GpsafConfig) -> Result<Archive> {
    run_gpsaf_traced(baseline, problem, config).map(|r| r.archive)
}

pub fn run_gpsaf_traced(baseline: &mut dyn Algorithm, problem: &Problem, config: &GpsafConfig) -> Result<GpsafRun> {
    config.validate()?;
    let seed = config.seed;
    let mut budget = Budget::new(config.se_max);
    let mut archive = Archive::new();
    let mut trace = Vec::new();

    let doe = sample_doe(problem, config.doe_size, &mut stream(seed, labels::DOE))?;
    let batch = evaluate_batch(problem, doe, &mut budget)?;
    baseline.advance(&batch)?;
    archive.extend(batch)?;

    let mut alpha_rng = stream(seed, labels::ALPHA);
    let mut beta_rng = stream(seed, labels::BETA);
    let mut pkt_rng = stream(seed, labels::PKT);
    let mut replacement_rng = stream(seed, labels::REPLACEMENT);
    let surrogate = !config.is_fallback();
    let mut ensemble = SurrogateEnsemble::new(problem, config.surrogates);
    let mut error: Option<ErrorEstimate> = None;
    let scales = problem.cv_scales();

    let mut iteration = 0;
    while !budget.is_exhausted() {
        iteration += 1;
        if surrogate {
            ensemble.fit(&archive)?;
            if error.is_none() {
                error = Some(ErrorEstimate::seeded(&ensemble.cv_errors()?)?);
            }
        }
        let fitted = surrogate.then_some(&ensemble);

        let mut p = alpha_phase(baseline, fitted, config.alpha, scales, &mut alpha_rng)?;
        if p.is_empty() {
            return Err(Error::StalledAlgorithm);
        }
        let clusters = beta_phase(&*baseline, fitted, &p, config.beta, (problem.lower(), problem.upper()), &mut beta_rng)?;
        let sizes: Vec<usize> = clusters.iter().map(Vec::len).collect();
        let e = error.as_ref().map(|e| e.values()).unwrap_or_default();
        let winners = clusters
            .iter()
            .map(|c| {
                if c.is_empty() {
                    Ok(None)
                } else {
                    Ok(prob_knockout_tournament(c, &e, 1, scales, &mut pkt_rng)?.pop())
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let replaced = replacement_phase(&mut p, &sizes, &winners, config.gamma, &mut replacement_rng)?;

        p.truncate(budget.remaining());
        let designs: Vec<Vec<f64>> = p.iter().map(|s| s.x.clone()).collect();
        let evaluated = evaluate_batch(problem, designs, &mut budget)?;
        baseline.advance(&evaluated)?;

        if let Some(err) = error.as_mut() {
            let truth: Vec<Vec<f64>> = evaluated.iter().map(|s| row(s.f.as_deref().unwrap(), s.g.as_deref().unwrap())).collect();
            let pred: Vec<Vec<f64>> = p
                .iter()
                .map(|s| Ok(row(s.objectives(Values::Predicted)?, s.constraints(Values::Predicted)?)))
                .collect::<Result<_>>()?;
            err.update(&truth, &pred)?;
        }
        archive.extend(evaluated)?;

        if config.trace {
            trace.push(IterationTrace {
                iteration,
                evaluations: budget.used(),
                batch_size: p.len(),
                rho: replacement_probabilities(&sizes, config.gamma),
                cluster_sizes: sizes,
                replaced,
                selected_models: if surrogate { ensemble.selected_ids() } else { Vec::new() },
                error: error.as_ref().map(|e| e.values()).unwrap_or_default(),
                best: if problem.n_obj() == 1 { archive.best_feasible() } else { None },
            });
        }
    }
    Ok(GpsafRun { archive, trace })
}

