//! Space-filling designs: Latin hypercube with maximin restarts.

use rand::seq::SliceRandom;
use rand::Rng as _;

use crate::error::{Error, Result};
use crate::problem::Problem;
use crate::rng::Rng;

/// Number of Latin hypercube candidates drawn by [`sample_doe`].
pub const MAXIMIN_RESTARTS: usize = 100;

/// Latin hypercube of `n` points in the unit cube; row-major, one row per point.
pub fn latin_hypercube(n: usize, dim: usize, rng: &mut Rng) -> Vec<Vec<f64>> {
    let mut pts = vec![vec![0.0; dim]; n];
    let mut strata: Vec<usize> = (0..n).collect();
    for d in 0..dim {
        strata.shuffle(rng);
        for (i, p) in pts.iter_mut().enumerate() {
            p[d] = (strata[i] as f64 + rng.gen::<f64>()) / n as f64;
        }
    }
    pts
}

/// Smallest pairwise Euclidean distance; infinite for fewer than two points.
pub fn min_pairwise_distance(pts: &[Vec<f64>]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            let d2: f64 = pts[i].iter().zip(&pts[j]).map(|(a, b)| (a - b).powi(2)).sum();
            best = best.min(d2);
        }
    }
    best.sqrt()
}

/// Best of `restarts` unit-cube Latin hypercubes by minimal pairwise distance.
/// The first candidate is the plain hypercube the same stream would give.
pub fn maximin_latin_hypercube(n: usize, dim: usize, restarts: usize, rng: &mut Rng) -> Vec<Vec<f64>> {
    let mut best = latin_hypercube(n, dim, rng);
    let mut best_d = min_pairwise_distance(&best);
    for _ in 1..restarts {
        let cand = latin_hypercube(n, dim, rng);
        let d = min_pairwise_distance(&cand);
        if d > best_d {
            best = cand;
            best_d = d;
        }
    }
    best
}

/// Maximin Latin hypercube design of `size` points scaled to the problem box.
pub fn sample_doe(problem: &Problem, size: usize, rng: &mut Rng) -> Result<Vec<Vec<f64>>> {
    if size == 0 {
        return Err(Error::Configuration("design size must be positive".into()));
    }
    let unit = maximin_latin_hypercube(size, problem.n_var(), MAXIMIN_RESTARTS, rng);
    Ok(unit
        .iter()
        .map(|z| {
            let mut x = problem.denormalize(z);
            problem.clamp(&mut x);
            x
        })
        .collect())
}
