use rand::seq::SliceRandom;
use rand::Rng as _;
use rand::SeedableRng;

use super::ga::scalar_survival;
use super::{check_batch, initial_designs};
use crate::algorithm::Algorithm;
use crate::error::{Error, Result};
use crate::problem::Problem;
use crate::rng::{labels, stream, Rng};
use crate::solution::{compare_scaled, Solution, Values, Verdict};

/// DE/rand/1/bin settings.
#[derive(Debug, Clone, PartialEq)]
pub struct DeConfig {
    pub pop_size: usize,
    /// Differential weight.
    pub f: f64,
    /// Crossover rate.
    pub cr: f64,
    pub n_offspring: usize,
}

impl Default for DeConfig {
    fn default() -> Self {
        Self {
            pop_size: 20,
            f: 0.5,
            cr: 0.9,
            n_offspring: 10,
        }
    }
}

impl DeConfig {
    pub fn validate(&self) -> Result<()> {
        if self.pop_size < 4 {
            return Err(Error::Configuration(
                "DE needs at least 4 members (target plus three donors)".into(),
            ));
        }
        if !(self.f >= 0.0 && self.f <= 2.0) {
            return Err(Error::Configuration("DE scale factor must lie in [0, 2]".into()));
        }
        if !(0.0..=1.0).contains(&self.cr) {
            return Err(Error::Configuration("DE crossover rate must lie in [0, 1]".into()));
        }
        if self.n_offspring == 0 || self.n_offspring > self.pop_size {
            return Err(Error::Configuration(
                "DE offspring count must lie in 1..=pop_size".into(),
            ));
        }
        Ok(())
    }
}

/// Differential evolution with one-to-one replacement.
///
/// The targets of a generation are drawn at the first infill after an
/// advance and reused by every infill until the next advance, so slot `j` of
/// any batch always competes against the same population member.
#[derive(Debug, Clone)]
pub struct De {
    problem: Problem,
    config: DeConfig,
    seed: u64,
    rng: Rng,
    population: Vec<Solution>,
    targets: Option<Vec<usize>>,
}

impl De {
    pub fn new(problem: Problem, config: DeConfig, seed: u64) -> Result<Self> {
        config.validate()?;
        Ok(Self {
            problem,
            config,
            seed,
            rng: stream(seed, labels::ALGORITHM),
            population: Vec::new(),
            targets: None,
        })
    }

    fn trial(&mut self, target: usize) -> Vec<f64> {
        let n = self.population.len();
        let pick = |exclude: &[usize], rng: &mut Rng| loop {
            let r = rng.gen_range(0..n);
            if !exclude.contains(&r) {
                return r;
            }
        };
        let r1 = pick(&[target], &mut self.rng);
        let r2 = pick(&[target, r1], &mut self.rng);
        let r3 = pick(&[target, r1, r2], &mut self.rng);
        let (x1, x2, x3) = (
            &self.population[r1].x,
            &self.population[r2].x,
            &self.population[r3].x,
        );
        let dim = x1.len();
        let forced = self.rng.gen_range(0..dim);
        let mut trial = self.population[target].x.clone();
        for k in 0..dim {
            if k == forced || self.rng.gen::<f64>() < self.config.cr {
                trial[k] = x1[k] + self.config.f * (x2[k] - x3[k]);
            }
        }
        self.problem.clamp(&mut trial);
        trial
    }
}

impl Algorithm for De {
    fn name(&self) -> &str {
        "DE"
    }

    fn infill(&mut self) -> Result<Vec<Vec<f64>>> {
        if self.population.is_empty() {
            return initial_designs(&self.problem, self.config.pop_size, self.seed);
        }
        let targets = match &self.targets {
            Some(t) => t.clone(),
            None => {
                let mut perm: Vec<usize> = (0..self.population.len()).collect();
                perm.shuffle(&mut self.rng);
                perm.truncate(self.config.n_offspring);
                self.targets = Some(perm.clone());
                perm
            }
        };
        Ok(targets.into_iter().map(|t| self.trial(t)).collect())
    }

    fn advance(&mut self, evaluated: &[Solution]) -> Result<()> {
        check_batch(&self.problem, evaluated)?;
        if self.population.is_empty() {
            self.population = scalar_or_first(evaluated, self.config.pop_size, &self.problem);
            return Ok(());
        }
        let targets = self
            .targets
            .take()
            .ok_or_else(|| Error::ContractViolation("DE advance without a preceding infill".into()))?;
        if evaluated.len() > targets.len() {
            return Err(Error::ContractViolation(format!(
                "DE generation has {} slots, got {} solutions",
                targets.len(),
                evaluated.len()
            )));
        }
        for (trial, &t) in evaluated.iter().zip(&targets) {
            let v = compare_scaled(trial, &self.population[t], Values::True, self.problem.cv_scales())?;
            if v == Verdict::AWins {
                self.population[t] = trial.clone();
            }
        }
        Ok(())
    }

    fn snapshot(&self) -> Box<dyn Algorithm> {
        Box::new(self.clone())
    }

    fn reseed(&mut self, seed: u64) {
        self.rng = Rng::seed_from_u64(seed);
    }

    fn population(&self) -> Vec<Solution> {
        self.population.clone()
    }
}

fn scalar_or_first(batch: &[Solution], n: usize, problem: &Problem) -> Vec<Solution> {
    if problem.n_obj() == 1 {
        scalar_survival(batch.to_vec(), n, problem.cv_scales())
    } else {
        batch.iter().take(n).cloned().collect()
    }
}
