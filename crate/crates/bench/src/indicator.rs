//! Scalar performance indicators; smaller is always better.

use gpsaf::problems::{hv_reference_point, hypervolume, igd, non_dominated, reference_front};
use gpsaf::{violation, Archive, Problem, Solution, Values};

use crate::error::Result;

/// Reference-front sample size for IGD.
pub const FRONT_POINTS: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndicatorKind {
    /// Best feasible objective minus the known optimum (or the raw best).
    Gap,
    Igd,
    /// Negated hypervolume.
    NegHv,
}

impl IndicatorKind {
    pub fn label(self) -> &'static str {
        match self {
            IndicatorKind::Gap => "gap",
            IndicatorKind::Igd => "igd",
            IndicatorKind::NegHv => "neg_hv",
        }
    }
}

/// Evaluates archives of one problem, caching its reference data.
#[derive(Debug, Clone)]
pub struct Indicator {
    kind: IndicatorKind,
    optimum: Option<f64>,
    front: Vec<Vec<f64>>,
    reference: Vec<f64>,
}

fn is_feasible(s: &Solution) -> bool {
    violation(s, Values::True).map_or(false, |cv| cv <= 0.0)
}

impl Indicator {
    pub fn for_problem(problem: &Problem) -> Result<Self> {
        if problem.n_obj() == 1 {
            return Ok(Indicator { kind: IndicatorKind::Gap, optimum: problem.known_optimum(), front: Vec::new(), reference: Vec::new() });
        }
        match reference_front(problem.name(), FRONT_POINTS) {
            Ok(front) => Ok(Indicator { kind: IndicatorKind::Igd, optimum: None, front, reference: Vec::new() }),
            Err(_) => Ok(Indicator {
                kind: IndicatorKind::NegHv,
                optimum: None,
                front: Vec::new(),
                reference: hv_reference_point(problem.name())?,
            }),
        }
    }

    pub fn kind(&self) -> IndicatorKind {
        self.kind
    }

    fn of_front(&self, front: &[Vec<f64>]) -> Result<f64> {
        if front.is_empty() {
            return Ok(f64::INFINITY);
        }
        Ok(match self.kind {
            IndicatorKind::Gap => unreachable!("scalar indicator has no front"),
            IndicatorKind::Igd => igd(front, &self.front)?,
            IndicatorKind::NegHv => -hypervolume(front, &self.reference)?,
        })
    }

    /// Indicator of the whole archive; `+inf` without a feasible solution.
    pub fn evaluate(&self, archive: &Archive) -> Result<f64> {
        let feasible = archive.iter().filter(|s| is_feasible(s));
        match self.kind {
            IndicatorKind::Gap => Ok(feasible
                .filter_map(|s| s.f.as_ref().map(|f| f[0] - self.optimum.unwrap_or(0.0)))
                .fold(f64::INFINITY, f64::min)),
            _ => {
                let pts: Vec<Vec<f64>> = feasible.filter_map(|s| s.f.clone()).collect();
                self.of_front(&non_dominated(&pts))
            }
        }
    }

    /// Best-so-far indicator after each evaluation.
    pub fn trace(&self, archive: &Archive) -> Result<Vec<f64>> {
        let mut out = Vec::with_capacity(archive.len());
        let mut best = f64::INFINITY;
        let mut front: Vec<Vec<f64>> = Vec::new();
        for s in archive.iter() {
            if is_feasible(s) {
                let f = s.f.as_ref().expect("archive solutions are evaluated");
                let value = match self.kind {
                    IndicatorKind::Gap => f[0] - self.optimum.unwrap_or(0.0),
                    _ => {
                        if front.iter().any(|q| gpsaf::solution::dominates(q, f) || q == f) {
                            best
                        } else {
                            front.retain(|q| !gpsaf::solution::dominates(f, q));
                            front.push(f.clone());
                            self.of_front(&front)?
                        }
                    }
                };
                best = best.min(value);
            }
            out.push(best);
        }
        Ok(out)
    }
}
