use rand::Rng as _;
use rand::SeedableRng;

use super::{check_batch, initial_designs};
use crate::algorithm::Algorithm;
use crate::error::{Error, Result};
use crate::problem::Problem;
use crate::rng::{labels, stream, Rng};
use crate::solution::{compare_scaled, Solution, Values, Verdict};

#[derive(Debug, Clone, PartialEq)]
pub struct PsoConfig {
    pub swarm_size: usize,
    /// Inertia weight.
    pub w: f64,
    /// Cognitive coefficient.
    pub c1: f64,
    /// Social coefficient.
    pub c2: f64,
    /// Velocity cap as a fraction of each variable's range.
    pub v_max: f64,
}

impl Default for PsoConfig {
    fn default() -> Self {
        Self {
            swarm_size: 20,
            w: 0.7,
            c1: 1.5,
            c2: 1.5,
            v_max: 0.2,
        }
    }
}

impl PsoConfig {
    pub fn validate(&self) -> Result<()> {
        if self.swarm_size == 0 {
            return Err(Error::Configuration("swarm must not be empty".into()));
        }
        if !(0.0..1.0).contains(&self.w) {
            return Err(Error::Configuration("inertia must lie in [0, 1)".into()));
        }
        if !(self.c1 > 0.0 && self.c2 > 0.0) {
            return Err(Error::Configuration("acceleration coefficients must be positive".into()));
        }
        if !(self.v_max > 0.0) {
            return Err(Error::Configuration("velocity cap must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
struct Particle {
    x: Vec<f64>,
    v: Vec<f64>,
    best: Solution,
}

/// Global-best particle swarm. Infill proposes the next position of every
/// particle; advance moves particle `j` to slot `j` of the evaluated batch,
/// taking the displacement as its new velocity.
#[derive(Debug, Clone)]
pub struct Pso {
    problem: Problem,
    config: PsoConfig,
    seed: u64,
    rng: Rng,
    particles: Vec<Particle>,
    global_best: Option<Solution>,
}

impl Pso {
    pub fn new(problem: Problem, config: PsoConfig, seed: u64) -> Result<Self> {
        config.validate()?;
        Ok(Self {
            problem,
            config,
            seed,
            rng: stream(seed, labels::ALGORITHM),
            particles: Vec::new(),
            global_best: None,
        })
    }

    pub fn global_best(&self) -> Option<&Solution> {
        self.global_best.as_ref()
    }

    pub fn personal_bests(&self) -> Vec<Solution> {
        self.particles.iter().map(|p| p.best.clone()).collect()
    }

    fn cap(&self, d: usize) -> f64 {
        self.config.v_max * (self.problem.upper()[d] - self.problem.lower()[d])
    }

    fn better(&self, a: &Solution, b: &Solution) -> Result<bool> {
        Ok(compare_scaled(a, b, Values::True, self.problem.cv_scales())? == Verdict::AWins)
    }

    fn offer_global(&mut self, s: &Solution) -> Result<()> {
        let replace = match &self.global_best {
            None => true,
            Some(g) => self.better(s, g)?,
        };
        if replace {
            self.global_best = Some(s.clone());
        }
        Ok(())
    }
}

impl Algorithm for Pso {
    fn name(&self) -> &str {
        "PSO"
    }

    fn infill(&mut self) -> Result<Vec<Vec<f64>>> {
        if self.particles.is_empty() {
            return initial_designs(&self.problem, self.config.swarm_size, self.seed);
        }
        let g = self
            .global_best
            .as_ref()
            .ok_or_else(|| Error::State("swarm without global best".into()))?
            .x
            .clone();
        let mut out = Vec::with_capacity(self.particles.len());
        for i in 0..self.particles.len() {
            let mut x = self.particles[i].x.clone();
            for d in 0..x.len() {
                let p = &self.particles[i];
                let (r1, r2): (f64, f64) = (self.rng.gen(), self.rng.gen());
                let cap = self.cap(d);
                let v = self.config.w * p.v[d]
                    + self.config.c1 * r1 * (p.best.x[d] - p.x[d])
                    + self.config.c2 * r2 * (g[d] - p.x[d]);
                x[d] += v.clamp(-cap, cap);
            }
            self.problem.clamp(&mut x);
            out.push(x);
        }
        Ok(out)
    }

    fn advance(&mut self, evaluated: &[Solution]) -> Result<()> {
        check_batch(&self.problem, evaluated)?;
        if self.particles.is_empty() {
            for s in evaluated.iter().take(self.config.swarm_size) {
                self.particles.push(Particle {
                    x: s.x.clone(),
                    v: vec![0.0; s.x.len()],
                    best: s.clone(),
                });
                self.offer_global(s)?;
            }
            return Ok(());
        }
        if evaluated.len() > self.particles.len() {
            return Err(Error::ContractViolation(format!(
                "swarm has {} particles, got {} solutions",
                self.particles.len(),
                evaluated.len()
            )));
        }
        for (j, s) in evaluated.iter().enumerate() {
            let caps: Vec<f64> = (0..s.x.len()).map(|d| self.cap(d)).collect();
            let improved = self.better(s, &self.particles[j].best)?;
            let p = &mut self.particles[j];
            for d in 0..s.x.len() {
                p.v[d] = (s.x[d] - p.x[d]).clamp(-caps[d], caps[d]);
            }
            p.x = s.x.clone();
            if improved {
                p.best = s.clone();
            }
            self.offer_global(s)?;
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
        self.personal_bests()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::make_problem;
    use crate::solution::{evaluate_batch, Budget};

    #[test]
    fn converged_swarm_is_a_fixed_point() {
        let p = make_problem("sphere", Some(2)).unwrap();
        let cfg = PsoConfig {
            w: 0.0,
            swarm_size: 4,
            ..PsoConfig::default()
        };
        let mut pso = Pso::new(p.clone(), cfg, 1).unwrap();
        let at = Solution::evaluated(vec![1.0, -1.0], vec![2.0], vec![]);
        pso.advance(&vec![at.clone(); 4]).unwrap();
        let next = pso.infill().unwrap();
        assert!(next.iter().all(|x| x == &at.x));
    }

    #[test]
    fn improving_particle_updates_its_best() {
        let p = make_problem("sphere", Some(2)).unwrap();
        let mut pso = Pso::new(p.clone(), PsoConfig::default(), 2).unwrap();
        let mut budget = Budget::new(100);
        let init = pso.infill().unwrap();
        pso.advance(&evaluate_batch(&p, init, &mut budget).unwrap()).unwrap();
        let origin = Solution::evaluated(vec![0.0, 0.0], vec![0.0], vec![]);
        pso.advance(&[origin.clone()]).unwrap();
        assert_eq!(pso.personal_bests()[0], origin);
        assert_eq!(pso.global_best(), Some(&origin));
    }

    #[test]
    fn personal_and_global_bests_are_monotone() {
        let p = make_problem("rastrigin", Some(4)).unwrap();
        let mut pso = Pso::new(p.clone(), PsoConfig::default(), 3).unwrap();
        let mut budget = Budget::new(400);
        let mut seen: Vec<Vec<f64>> = Vec::new();
        let mut g_prev = f64::INFINITY;
        while !budget.is_exhausted() {
            let mut xs = pso.infill().unwrap();
            assert!(xs.iter().all(|x| p.contains(x)));
            xs.truncate(budget.remaining());
            let batch = evaluate_batch(&p, xs, &mut budget).unwrap();
            pso.advance(&batch).unwrap();
            if seen.is_empty() {
                seen = batch.iter().map(|s| vec![s.f.as_ref().unwrap()[0]]).collect();
            } else {
                for (j, s) in batch.iter().enumerate() {
                    seen[j].push(s.f.as_ref().unwrap()[0]);
                }
            }
            for (j, b) in pso.personal_bests().iter().enumerate() {
                let min = seen[j].iter().cloned().fold(f64::INFINITY, f64::min);
                assert_eq!(b.f.as_ref().unwrap()[0], min);
            }
            let g = pso.global_best().unwrap().f.as_ref().unwrap()[0];
            assert!(g <= g_prev);
            g_prev = g;
        }
    }
}
