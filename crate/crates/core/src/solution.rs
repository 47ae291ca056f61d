//! Solutions, constrained-dominance comparison, archive and budget bookkeeping.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problem::Problem;

/// Which value set a comparison reads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Values {
    /// Expensive (true) evaluations `f`, `g`.
    True,
    /// Surrogate predictions `f_hat`, `g_hat`.
    Predicted,
}

/// Outcome of a pairwise comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    AWins,
    BWins,
    Tie,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Solution {
    pub x: Vec<f64>,
    pub f: Option<Vec<f64>>,
    pub g: Option<Vec<f64>>,
    pub f_hat: Option<Vec<f64>>,
    pub g_hat: Option<Vec<f64>>,
}

impl Solution {
    pub fn new(x: Vec<f64>) -> Self {
        Self {
            x,
            ..Self::default()
        }
    }

    pub fn evaluated(x: Vec<f64>, f: Vec<f64>, g: Vec<f64>) -> Self {
        Self {
            x,
            f: Some(f),
            g: Some(g),
            ..Self::default()
        }
    }

    pub fn is_evaluated(&self) -> bool {
        self.f.is_some() && self.g.is_some()
    }

    pub fn objectives(&self, values: Values) -> Result<&[f64]> {
        let v = match values {
            Values::True => &self.f,
            Values::Predicted => &self.f_hat,
        };
        v.as_deref()
            .ok_or_else(|| Error::MissingValues(format!("{values:?} objectives")))
    }

    pub fn constraints(&self, values: Values) -> Result<&[f64]> {
        let v = match values {
            Values::True => &self.g,
            Values::Predicted => &self.g_hat,
        };
        v.as_deref()
            .ok_or_else(|| Error::MissingValues(format!("{values:?} constraints")))
    }

    /// Copy whose true values are this solution's predictions. Used when a
    /// shadow algorithm is advanced on surrogate values only.
    pub fn predicted_as_true(&self) -> Result<Self> {
        Ok(Self {
            x: self.x.clone(),
            f: Some(self.objectives(Values::Predicted)?.to_vec()),
            g: Some(self.constraints(Values::Predicted)?.to_vec()),
            f_hat: self.f_hat.clone(),
            g_hat: self.g_hat.clone(),
        })
    }
}

fn aggregate_violation(g: &[f64], scales: Option<&[f64]>) -> f64 {
    match scales {
        Some(s) => g.iter().zip(s).map(|(v, s)| (v / s).max(0.0)).sum(),
        None => g.iter().map(|v| v.max(0.0)).sum(),
    }
}

/// Sum of positive constraint values; zero iff feasible.
pub fn violation(s: &Solution, values: Values) -> Result<f64> {
    Ok(aggregate_violation(s.constraints(values)?, None))
}

/// Like [`violation`], dividing each constraint by `scales[i]` first when given.
pub fn violation_scaled(s: &Solution, values: Values, scales: Option<&[f64]>) -> Result<f64> {
    let g = s.constraints(values)?;
    if let Some(sc) = scales {
        if sc.len() != g.len() {
            return Err(Error::ContractViolation("scale count differs from constraints".into()));
        }
    }
    Ok(aggregate_violation(g, scales))
}

/// Pareto dominance of minimized objective vectors.
pub fn pareto(a: &[f64], b: &[f64]) -> Verdict {
    let mut a_better = false;
    let mut b_better = false;
    for (x, y) in a.iter().zip(b) {
        if x < y {
            a_better = true;
        } else if y < x {
            b_better = true;
        }
        if a_better && b_better {
            return Verdict::Tie;
        }
    }
    match (a_better, b_better) {
        (true, false) => Verdict::AWins,
        (false, true) => Verdict::BWins,
        _ => Verdict::Tie,
    }
}

/// `true` if `a` Pareto-dominates `b`.
pub fn dominates(a: &[f64], b: &[f64]) -> bool {
    pareto(a, b) == Verdict::AWins
}

/// Feasibility-first comparison. Pure: random tie-breaking is left to the caller.
pub fn compare(a: &Solution, b: &Solution, values: Values) -> Result<Verdict> {
    compare_scaled(a, b, values, None)
}

pub fn compare_scaled(
    a: &Solution,
    b: &Solution,
    values: Values,
    scales: Option<&[f64]>,
) -> Result<Verdict> {
    let (fa, fb) = (a.objectives(values)?, b.objectives(values)?);
    let (ga, gb) = (a.constraints(values)?, b.constraints(values)?);
    if fa.len() != fb.len() || ga.len() != gb.len() {
        return Err(Error::ContractViolation(
            "compared solutions differ in objective or constraint count".into(),
        ));
    }
    let cva = violation_scaled(a, values, scales)?;
    let cvb = violation_scaled(b, values, scales)?;
    Ok(match (cva > 0.0, cvb > 0.0) {
        (true, true) => {
            if cva < cvb {
                Verdict::AWins
            } else if cvb < cva {
                Verdict::BWins
            } else {
                Verdict::Tie
            }
        }
        (false, true) => Verdict::AWins,
        (true, false) => Verdict::BWins,
        (false, false) => pareto(fa, fb),
    })
}

/// Sort key for single-objective survival: feasible first, then violation, then objective.
pub(crate) fn scalar_key(s: &Solution, scales: Option<&[f64]>) -> (f64, f64) {
    let cv = violation_scaled(s, Values::True, scales).unwrap_or(f64::INFINITY);
    let f = s.f.as_ref().map(|f| f[0]).unwrap_or(f64::INFINITY);
    if cv > 0.0 {
        (cv, f64::INFINITY)
    } else {
        (0.0, f)
    }
}

/// All truly evaluated solutions of a run, in evaluation order.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Archive {
    solutions: Vec<Solution>,
}

impl Archive {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, s: Solution) -> Result<()> {
        if !s.is_evaluated() {
            return Err(Error::ContractViolation(
                "archive members need true objective and constraint values".into(),
            ));
        }
        self.solutions.push(s);
        Ok(())
    }

    pub fn extend(&mut self, batch: impl IntoIterator<Item = Solution>) -> Result<()> {
        batch.into_iter().try_for_each(|s| self.push(s))
    }

    pub fn len(&self) -> usize {
        self.solutions.len()
    }
    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }
    pub fn solutions(&self) -> &[Solution] {
        &self.solutions
    }
    pub fn iter(&self) -> impl Iterator<Item = &Solution> {
        self.solutions.iter()
    }

    pub fn designs(&self) -> Vec<Vec<f64>> {
        self.solutions.iter().map(|s| s.x.clone()).collect()
    }

    /// Best feasible objective value of a single-objective archive.
    pub fn best_feasible(&self) -> Option<f64> {
        self.solutions
            .iter()
            .filter(|s| violation(s, Values::True).map_or(false, |cv| cv <= 0.0))
            .filter_map(|s| s.f.as_ref().map(|f| f[0]))
            .fold(None, |acc: Option<f64>, f| Some(acc.map_or(f, |a| a.min(f))))
    }
}

/// Expensive-evaluation budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    max: usize,
    used: usize,
}

impl Budget {
    pub fn new(max_evaluations: usize) -> Self {
        Self {
            max: max_evaluations,
            used: 0,
        }
    }
    pub fn max(&self) -> usize {
        self.max
    }
    pub fn used(&self) -> usize {
        self.used
    }
    pub fn remaining(&self) -> usize {
        self.max - self.used
    }
    pub fn is_exhausted(&self) -> bool {
        self.used >= self.max
    }

    pub fn consume(&mut self, n: usize) -> Result<()> {
        if n > self.remaining() {
            return Err(Error::Budget(format!(
                "{n} evaluations requested, {} remaining",
                self.remaining()
            )));
        }
        self.used += n;
        Ok(())
    }
}

/// Truly evaluates designs, clamping each to the box first, and charges the budget.
pub fn evaluate_batch(
    problem: &Problem,
    designs: Vec<Vec<f64>>,
    budget: &mut Budget,
) -> Result<Vec<Solution>> {
    budget.consume(designs.len())?;
    designs
        .into_iter()
        .map(|mut x| {
            problem.clamp(&mut x);
            let e = problem.evaluate(&x)?;
            Ok(Solution::evaluated(x, e.f, e.g))
        })
        .collect()
}
