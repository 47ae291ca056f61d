use rand::Rng as _;
use rand::SeedableRng;

use super::operators::{polynomial_mutation, sbx};
use super::{check_batch, initial_designs};
use crate::algorithm::Algorithm;
use crate::error::{Error, Result};
use crate::problem::Problem;
use crate::rng::{labels, stream, Rng};
use crate::solution::{compare_scaled, scalar_key, Solution, Values, Verdict};

/// Real-coded genetic algorithm settings.
#[derive(Debug, Clone, PartialEq)]
pub struct GaConfig {
    pub pop_size: usize,
    pub n_offspring: usize,
    pub sbx_eta: f64,
    pub sbx_prob: f64,
    pub pm_eta: f64,
    /// Per-variable mutation probability; `None` means `1 / n_var`.
    pub pm_prob: Option<f64>,
    pub tournament_size: usize,
}

impl Default for GaConfig {
    fn default() -> Self {
        Self {
            pop_size: 20,
            n_offspring: 10,
            sbx_eta: 15.0,
            sbx_prob: 0.9,
            pm_eta: 20.0,
            pm_prob: None,
            tournament_size: 2,
        }
    }
}

impl GaConfig {
    pub fn validate(&self) -> Result<()> {
        if self.pop_size < 2 {
            return Err(Error::Configuration("GA population needs at least 2 members".into()));
        }
        if self.n_offspring == 0 {
            return Err(Error::Configuration("GA needs at least one offspring".into()));
        }
        if !(self.sbx_prob > 0.0 && self.sbx_prob <= 1.0) {
            return Err(Error::Configuration("sbx_prob must lie in (0, 1]".into()));
        }
        if let Some(p) = self.pm_prob {
            if !(p > 0.0 && p <= 1.0) {
                return Err(Error::Configuration("pm_prob must lie in (0, 1]".into()));
            }
        }
        if self.tournament_size == 0 {
            return Err(Error::Configuration("tournament size must be positive".into()));
        }
        Ok(())
    }
}

/// Single-objective GA: tournament selection, SBX, polynomial mutation and
/// (mu + lambda) survival under feasibility-first ordering.
#[derive(Debug, Clone)]
pub struct Ga {
    problem: Problem,
    config: GaConfig,
    seed: u64,
    rng: Rng,
    population: Vec<Solution>,
}

impl Ga {
    pub fn new(problem: Problem, config: GaConfig, seed: u64) -> Result<Self> {
        config.validate()?;
        if problem.n_obj() != 1 {
            return Err(Error::Configuration(
                "GA is single-objective; use NSGA-II for several objectives".into(),
            ));
        }
        Ok(Self {
            problem,
            config,
            seed,
            rng: stream(seed, labels::ALGORITHM),
            population: Vec::new(),
        })
    }

    fn tournament(&mut self) -> Result<usize> {
        let n = self.population.len();
        let mut winner = self.rng.gen_range(0..n);
        for _ in 1..self.config.tournament_size {
            let challenger = self.rng.gen_range(0..n);
            let v = compare_scaled(
                &self.population[winner],
                &self.population[challenger],
                Values::True,
                self.problem.cv_scales(),
            )?;
            winner = match v {
                Verdict::AWins => winner,
                Verdict::BWins => challenger,
                Verdict::Tie => {
                    if self.rng.gen::<bool>() {
                        winner
                    } else {
                        challenger
                    }
                }
            };
        }
        Ok(winner)
    }
}

/// Keeps the best `n` of `merged` (stable: earlier entries win ties).
pub(crate) fn scalar_survival(mut merged: Vec<Solution>, n: usize, scales: Option<&[f64]>) -> Vec<Solution> {
    merged.sort_by(|a, b| {
        let (ka, kb) = (scalar_key(a, scales), scalar_key(b, scales));
        ka.0.total_cmp(&kb.0).then(ka.1.total_cmp(&kb.1))
    });
    merged.truncate(n);
    merged
}

impl Algorithm for Ga {
    fn name(&self) -> &str {
        "GA"
    }

    fn infill(&mut self) -> Result<Vec<Vec<f64>>> {
        if self.population.is_empty() {
            return initial_designs(&self.problem, self.config.pop_size, self.seed);
        }
        let pm_prob = self
            .config
            .pm_prob
            .unwrap_or(1.0 / self.problem.n_var() as f64);
        let mut children = Vec::with_capacity(self.config.n_offspring + 1);
        while children.len() < self.config.n_offspring {
            let a = self.tournament()?;
            let b = self.tournament()?;
            let (mut c1, mut c2) = sbx(
                &self.population[a].x,
                &self.population[b].x,
                &self.problem,
                self.config.sbx_eta,
                self.config.sbx_prob,
                &mut self.rng,
            );
            polynomial_mutation(&mut c1, &self.problem, self.config.pm_eta, pm_prob, &mut self.rng);
            polynomial_mutation(&mut c2, &self.problem, self.config.pm_eta, pm_prob, &mut self.rng);
            children.push(c1);
            children.push(c2);
        }
        children.truncate(self.config.n_offspring);
        Ok(children)
    }

    fn advance(&mut self, evaluated: &[Solution]) -> Result<()> {
        check_batch(&self.problem, evaluated)?;
        let mut merged = std::mem::take(&mut self.population);
        merged.extend(evaluated.iter().cloned());
        self.population = scalar_survival(merged, self.config.pop_size, self.problem.cv_scales());
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::make_problem;
    use crate::solution::violation;

    fn sphere2() -> Problem {
        make_problem("sphere", Some(2)).unwrap()
    }

    fn evaluate(p: &Problem, xs: Vec<Vec<f64>>) -> Vec<Solution> {
        xs.into_iter()
            .map(|x| {
                let e = p.evaluate(&x).unwrap();
                Solution::evaluated(x, e.f, e.g)
            })
            .collect()
    }

    fn initialized(seed: u64) -> (Problem, Ga) {
        let p = sphere2();
        let mut ga = Ga::new(p.clone(), GaConfig::default(), seed).unwrap();
        let init = ga.infill().unwrap();
        ga.advance(&evaluate(&p, init)).unwrap();
        (p, ga)
    }

    #[test]
    fn first_infill_is_the_initial_population() {
        let p = sphere2();
        let mut ga = Ga::new(p.clone(), GaConfig::default(), 1).unwrap();
        let x = ga.infill().unwrap();
        assert_eq!(x.len(), 20);
        assert!(x.iter().all(|v| p.contains(v)));
    }

    #[test]
    fn repeated_infill_differs() {
        let (p, mut ga) = initialized(4);
        let a = ga.infill().unwrap();
        let b = ga.infill().unwrap();
        assert_eq!(a.len(), 10);
        assert_ne!(a, b);
        assert!(a.iter().chain(&b).all(|v| p.contains(v)));
    }

    #[test]
    fn worse_offspring_leave_population_unchanged() {
        let (p, mut ga) = initialized(5);
        let before = ga.population();
        let worst = before.iter().map(|s| s.f.as_ref().unwrap()[0]).fold(0.0, f64::max);
        let bad: Vec<Solution> = (0..10)
            .map(|_| Solution::evaluated(vec![5.0, 5.0], vec![worst + 1.0], vec![]))
            .collect();
        ga.advance(&bad).unwrap();
        assert_eq!(ga.population(), before);
        let _ = p;
    }

    #[test]
    fn new_best_survives() {
        let (_, mut ga) = initialized(6);
        let best = Solution::evaluated(vec![0.0, 0.0], vec![0.0], vec![]);
        ga.advance(&[best.clone()]).unwrap();
        assert_eq!(ga.population()[0], best);
    }

    #[test]
    fn all_infeasible_keeps_smallest_violations() {
        let p = make_problem("G24", None).unwrap();
        let mut ga = Ga::new(p, GaConfig::default(), 2).unwrap();
        let sols: Vec<Solution> = (0..30)
            .map(|i| {
                let cv = ((i * 17) % 30) as f64 + 1.0;
                Solution::evaluated(vec![0.0, 0.0], vec![-(i as f64)], vec![cv, -1.0])
            })
            .collect();
        ga.advance(&sols).unwrap();
        let mut expected: Vec<f64> = sols.iter().map(|s| violation(s, Values::True).unwrap()).collect();
        expected.sort_by(f64::total_cmp);
        let mut got: Vec<f64> = ga
            .population()
            .iter()
            .map(|s| violation(s, Values::True).unwrap())
            .collect();
        got.sort_by(f64::total_cmp);
        assert_eq!(got, expected[..20].to_vec());
    }

    #[test]
    fn dominant_member_wins_tournaments_often() {
        let (_, mut ga) = initialized(7);
        ga.advance(&[Solution::evaluated(vec![0.0, 0.0], vec![-1.0], vec![])]).unwrap();
        let champion = ga.population.iter().position(|s| s.f.as_ref().unwrap()[0] == -1.0).unwrap();
        let wins = (0..1000).filter(|_| ga.tournament().unwrap() == champion).count();
        // uniform share is 1000 / 20 = 50; binary tournament gives about 1 - (19/20)^2 ~ 97.5
        assert!(wins > 50, "{wins}");
    }

    #[test]
    fn rejects_bad_config() {
        let bad = GaConfig {
            pop_size: 1,
            ..GaConfig::default()
        };
        assert!(Ga::new(sphere2(), bad, 0).is_err());
        let zdt = make_problem("ZDT1", None).unwrap();
        assert!(Ga::new(zdt, GaConfig::default(), 0).is_err());
    }
}
