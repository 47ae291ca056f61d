use rand::Rng as _;
use rand::SeedableRng;

use super::operators::{polynomial_mutation, sbx};
use super::{check_batch, initial_designs};
use crate::algorithm::Algorithm;
use crate::error::{Error, Result};
use crate::problem::Problem;
use crate::rng::{labels, stream, Rng};
use crate::solution::{dominates, violation_scaled, Solution, Values};

/// NSGA-II settings; variation defaults match [`GaConfig`](super::GaConfig).
#[derive(Debug, Clone, PartialEq)]
pub struct Nsga2Config {
    pub pop_size: usize,
    pub n_offspring: usize,
    pub sbx_eta: f64,
    pub sbx_prob: f64,
    pub pm_eta: f64,
    pub pm_prob: Option<f64>,
}

impl Default for Nsga2Config {
    fn default() -> Self {
        Self {
            pop_size: 20,
            n_offspring: 10,
            sbx_eta: 15.0,
            sbx_prob: 0.9,
            pm_eta: 20.0,
            pm_prob: None,
        }
    }
}

impl Nsga2Config {
    pub fn validate(&self) -> Result<()> {
        super::GaConfig {
            pop_size: self.pop_size,
            n_offspring: self.n_offspring,
            sbx_eta: self.sbx_eta,
            sbx_prob: self.sbx_prob,
            pm_eta: self.pm_eta,
            pm_prob: self.pm_prob,
            tournament_size: 2,
        }
        .validate()
    }
}

/// Fast non-dominated sorting. Returns fronts of indices into `objs`, best first.
pub fn non_dominated_sort(objs: &[Vec<f64>]) -> Vec<Vec<usize>> {
    let n = objs.len();
    let mut dominated_by = vec![0usize; n];
    let mut dominates_list: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in (i + 1)..n {
            if dominates(&objs[i], &objs[j]) {
                dominates_list[i].push(j);
                dominated_by[j] += 1;
            } else if dominates(&objs[j], &objs[i]) {
                dominates_list[j].push(i);
                dominated_by[i] += 1;
            }
        }
    }
    let mut fronts = Vec::new();
    let mut current: Vec<usize> = (0..n).filter(|&i| dominated_by[i] == 0).collect();
    while !current.is_empty() {
        let mut next = Vec::new();
        for &i in &current {
            for &j in &dominates_list[i] {
                dominated_by[j] -= 1;
                if dominated_by[j] == 0 {
                    next.push(j);
                }
            }
        }
        next.sort_unstable();
        fronts.push(current);
        current = next;
    }
    fronts
}

/// Crowding distance of each point of one front. Extremes get `+inf`.
pub fn crowding_distance(front: &[Vec<f64>]) -> Vec<f64> {
    let n = front.len();
    if n <= 2 {
        return vec![f64::INFINITY; n];
    }
    let mut dist = vec![0.0; n];
    for m in 0..front[0].len() {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| front[a][m].total_cmp(&front[b][m]));
        let lo = front[order[0]][m];
        let hi = front[order[n - 1]][m];
        dist[order[0]] = f64::INFINITY;
        dist[order[n - 1]] = f64::INFINITY;
        if hi - lo <= 0.0 {
            continue;
        }
        for k in 1..n - 1 {
            dist[order[k]] += (front[order[k + 1]][m] - front[order[k - 1]][m]) / (hi - lo);
        }
    }
    dist
}

#[derive(Debug, Clone, PartialEq)]
struct Ranked {
    sol: Solution,
    cv: f64,
    rank: usize,
    crowding: f64,
}

fn survival(merged: Vec<Solution>, n: usize, scales: Option<&[f64]>) -> Vec<Ranked> {
    let cvs: Vec<f64> = merged
        .iter()
        .map(|s| violation_scaled(s, Values::True, scales).unwrap_or(f64::INFINITY))
        .collect();
    let feasible: Vec<usize> = (0..merged.len()).filter(|&i| cvs[i] <= 0.0).collect();
    let mut infeasible: Vec<usize> = (0..merged.len()).filter(|&i| cvs[i] > 0.0).collect();
    infeasible.sort_by(|&a, &b| cvs[a].total_cmp(&cvs[b]));

    let objs: Vec<Vec<f64>> = feasible
        .iter()
        .map(|&i| merged[i].f.clone().unwrap_or_default())
        .collect();
    let mut out: Vec<Ranked> = Vec::with_capacity(n);
    let fronts = non_dominated_sort(&objs);
    let n_fronts = fronts.len();
    for (rank, front) in fronts.into_iter().enumerate() {
        if out.len() >= n {
            break;
        }
        let pts: Vec<Vec<f64>> = front.iter().map(|&k| objs[k].clone()).collect();
        let cd = crowding_distance(&pts);
        let mut order: Vec<usize> = (0..front.len()).collect();
        if out.len() + front.len() > n {
            // stable: equal crowding keeps index order
            order.sort_by(|&a, &b| cd[b].total_cmp(&cd[a]));
            order.truncate(n - out.len());
            order.sort_unstable();
        }
        for k in order {
            let i = feasible[front[k]];
            out.push(Ranked {
                sol: merged[i].clone(),
                cv: 0.0,
                rank,
                crowding: cd[k],
            });
        }
    }
    for (pos, i) in infeasible.into_iter().enumerate() {
        if out.len() >= n {
            break;
        }
        out.push(Ranked {
            sol: merged[i].clone(),
            cv: cvs[i],
            rank: n_fronts + pos,
            crowding: 0.0,
        });
    }
    out
}

/// NSGA-II with feasibility-first ranking: infeasible solutions rank below
/// every feasible one, ordered by constraint violation.
#[derive(Debug, Clone)]
pub struct Nsga2 {
    problem: Problem,
    config: Nsga2Config,
    seed: u64,
    rng: Rng,
    population: Vec<Ranked>,
}

impl Nsga2 {
    pub fn new(problem: Problem, config: Nsga2Config, seed: u64) -> Result<Self> {
        config.validate()?;
        if problem.n_obj() < 2 {
            return Err(Error::Configuration(
                "NSGA-II needs at least two objectives; use GA instead".into(),
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

    fn tournament(&mut self) -> usize {
        let n = self.population.len();
        let a = self.rng.gen_range(0..n);
        let b = self.rng.gen_range(0..n);
        let (pa, pb) = (&self.population[a], &self.population[b]);
        if pa.cv > 0.0 || pb.cv > 0.0 {
            if pa.cv < pb.cv {
                return a;
            } else if pb.cv < pa.cv {
                return b;
            }
        } else if pa.rank != pb.rank {
            return if pa.rank < pb.rank { a } else { b };
        } else if pa.crowding != pb.crowding {
            return if pa.crowding > pb.crowding { a } else { b };
        }
        if self.rng.gen::<bool>() {
            a
        } else {
            b
        }
    }
}

impl Algorithm for Nsga2 {
    fn name(&self) -> &str {
        "NSGA-II"
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
            let a = self.tournament();
            let b = self.tournament();
            let (mut c1, mut c2) = sbx(
                &self.population[a].sol.x,
                &self.population[b].sol.x,
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
        let mut merged: Vec<Solution> = self.population.drain(..).map(|r| r.sol).collect();
        merged.extend(evaluated.iter().cloned());
        self.population = survival(merged, self.config.pop_size, self.problem.cv_scales());
        Ok(())
    }

    fn snapshot(&self) -> Box<dyn Algorithm> {
        Box::new(self.clone())
    }

    fn reseed(&mut self, seed: u64) {
        self.rng = Rng::seed_from_u64(seed);
    }

    fn population(&self) -> Vec<Solution> {
        self.population.iter().map(|r| r.sol.clone()).collect()
    }
}
