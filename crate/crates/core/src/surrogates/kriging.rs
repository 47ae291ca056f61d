use crate::error::{Error, Result};

use super::nelder_mead;

pub const LOG_THETA_MIN: f64 = -3.0;
pub const LOG_THETA_MAX: f64 = 3.0;
pub const NUGGET: f64 = 1e-10;
const REFINE_STEPS: usize = 8;
// Largest nugget-induced residual at a training point, relative to the output spread.
const RESIDUAL_TOL: f64 = 1e-7;

/// Likelihood search effort for one fit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KrigingOptions {
    /// Evaluations for the search from the best start.
    pub main_evals: usize,
    /// Evaluations for each of the remaining starts.
    pub side_evals: usize,
}

impl Default for KrigingOptions {
    fn default() -> Self {
        KrigingOptions { main_evals: 60, side_evals: 15 }
    }
}

/// Ordinary Kriging with a Gaussian correlation and per-dimension θ.
#[derive(Debug, Clone)]
pub struct KrigingModel {
    x: Vec<Vec<f64>>,
    theta: Vec<f64>,
    mu: f64,
    gamma: Vec<f64>,
    nugget: f64,
    chol: Vec<f64>,
}

/// Lower Cholesky factor of a row-major symmetric matrix, in place.
fn cholesky(a: &mut [f64], n: usize) -> bool {
    for j in 0..n {
        let (head, tail) = a.split_at_mut(j * n);
        let row_j = &mut tail[..n];
        for i in 0..j {
            let row_i = &head[i * n..i * n + n];
            let s: f64 = row_i[..i].iter().zip(&row_j[..i]).map(|(p, q)| p * q).sum();
            row_j[i] = (row_j[i] - s) / row_i[i];
        }
        let s: f64 = row_j[..j].iter().map(|v| v * v).sum();
        let pivot = row_j[j] - s;
        if !(pivot > 0.0) || !pivot.is_finite() {
            return false;
        }
        row_j[j] = pivot.sqrt();
        for v in row_j[j + 1..].iter_mut() {
            *v = 0.0;
        }
    }
    true
}

/// Solves `L Lᵀ x = b` given the lower factor.
fn chol_solve(l: &[f64], n: usize, b: &[f64]) -> Vec<f64> {
    let mut y = b.to_vec();
    for i in 0..n {
        let row = &l[i * n..i * n + i];
        let s: f64 = row.iter().zip(&y[..i]).map(|(p, q)| p * q).sum();
        y[i] = (y[i] - s) / l[i * n + i];
    }
    for i in (0..n).rev() {
        let mut s = 0.0;
        for k in i + 1..n {
            s += l[k * n + i] * y[k];
        }
        y[i] = (y[i] - s) / l[i * n + i];
    }
    y
}

struct Data<'a> {
    n: usize,
    d: usize,
    sq: Vec<f64>,
    y: &'a [f64],
    tolerance: f64,
}

impl<'a> Data<'a> {
    fn new(x: &[Vec<f64>], y: &'a [f64]) -> Self {
        let n = x.len();
        let d = x[0].len();
        let mut sq = Vec::with_capacity(n * (n - 1) / 2 * d);
        for i in 0..n {
            for j in 0..i {
                sq.extend(x[i].iter().zip(&x[j]).map(|(a, b)| (a - b) * (a - b)));
            }
        }
        let mean = y.iter().sum::<f64>() / n as f64;
        let spread = (y.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n as f64).sqrt();
        Data { n, d, sq, y, tolerance: RESIDUAL_TOL * spread.max(f64::MIN_POSITIVE) }
    }

    fn correlation(&self, theta: &[f64], nugget: f64) -> Vec<f64> {
        let n = self.n;
        let mut r = vec![0.0; n * n];
        let mut p = 0;
        for i in 0..n {
            for j in 0..i {
                let s: f64 = self.sq[p..p + self.d].iter().zip(theta).map(|(a, t)| a * t).sum();
                r[i * n + j] = (-s).exp();
                p += self.d;
            }
            r[i * n + i] = 1.0 + nugget;
        }
        r
    }

    /// Factor, mean, γ and the negated concentrated log-likelihood.
    fn solve(&self, theta: &[f64], nugget: f64, conditioned: bool) -> Option<(Vec<f64>, f64, Vec<f64>, f64)> {
        let n = self.n;
        let mut l = self.correlation(theta, nugget);
        if !cholesky(&mut l, n) {
            return None;
        }
        let ones = vec![1.0; n];
        let ri1 = chol_solve(&l, n, &ones);
        let riy = chol_solve(&l, n, self.y);
        let denom: f64 = ri1.iter().sum();
        let mu = riy.iter().sum::<f64>() / denom;
        let gamma: Vec<f64> = riy.iter().zip(&ri1).map(|(a, b)| a - mu * b).collect();
        if conditioned && nugget * gamma.iter().fold(0.0f64, |m, g| m.max(g.abs())) > self.tolerance {
            return None;
        }
        let sigma2 = (self.y.iter().zip(&gamma).map(|(y, g)| (y - mu) * g).sum::<f64>() / n as f64)
            .max(1e-300);
        let logdet: f64 = (0..n).map(|i| l[i * n + i].ln()).sum::<f64>() * 2.0;
        let nll = n as f64 * sigma2.ln() + logdet;
        if !nll.is_finite() || !mu.is_finite() {
            return None;
        }
        Some((l, mu, gamma, nll))
    }

    /// Iterative refinement of γ against the nugget-free matrix, pulling
    /// predictions at the training points onto the data.
    fn refine(&self, theta: &[f64], l: &[f64], mu: f64, gamma: &mut [f64]) {
        let n = self.n;
        let r = self.correlation(theta, 0.0);
        let at = |i: usize, j: usize| if j <= i { r[i * n + j] } else { r[j * n + i] };
        for _ in 0..REFINE_STEPS {
            let resid: Vec<f64> = (0..n)
                .map(|i| self.y[i] - mu - (0..n).map(|j| at(i, j) * gamma[j]).sum::<f64>())
                .collect();
            let step = chol_solve(l, n, &resid);
            for (g, s) in gamma.iter_mut().zip(step) {
                *g += s;
            }
        }
    }
}

impl KrigingModel {
    /// Fits θ by bounded Nelder–Mead on log10 θ. `warm` is a previous
    /// log10 θ used as an extra start.
    pub fn fit(x: &[Vec<f64>], y: &[f64], warm: Option<&[f64]>, options: KrigingOptions) -> Result<Self> {
        let n = x.len();
        if n < 2 || n != y.len() {
            return Err(Error::ContractViolation("Kriging needs at least two aligned points".into()));
        }
        let d = x[0].len();
        let data = Data::new(x, y);
        let mut objective = |log_theta: &[f64]| -> f64 {
            let theta: Vec<f64> = log_theta.iter().map(|v| 10f64.powf(*v)).collect();
            data.solve(&theta, NUGGET, true).map_or(f64::INFINITY, |s| s.3)
        };

        let mut starts: Vec<Vec<f64>> = [-1.0, 0.0, 1.0].iter().map(|v| vec![*v; d]).collect();
        if let Some(w) = warm.filter(|w| w.len() == d) {
            starts.insert(0, w.to_vec());
        }
        let mut scored: Vec<(Vec<f64>, f64)> = starts.into_iter().map(|s| {
            let v = objective(&s);
            (s, v)
        }).collect();
        // Dense or smooth data can be ill-conditioned at every default start;
        // shorter length scales always condition better.
        let mut level = 2.0;
        while scored.iter().all(|s| !s.1.is_finite()) && level <= LOG_THETA_MAX {
            let s = vec![level; d];
            let v = objective(&s);
            scored.push((s, v));
            level += 0.5;
        }
        scored.sort_by(|a, b| a.1.total_cmp(&b.1));
        scored.truncate(3);

        let mut best: Option<(Vec<f64>, f64)> = None;
        for (k, (s, _)) in scored.iter().enumerate() {
            let budget = if k == 0 { options.main_evals } else { options.side_evals };
            if budget == 0 {
                continue;
            }
            let (p, v) = nelder_mead::minimize(&mut objective, s, 0.5, LOG_THETA_MIN, LOG_THETA_MAX, budget);
            if best.as_ref().map_or(true, |b| v < b.1) {
                best = Some((p, v));
            }
        }
        let log_theta = match best {
            Some((p, v)) if v.is_finite() => p,
            _ => scored[0].0.clone(),
        };
        let theta: Vec<f64> = log_theta.iter().map(|v| 10f64.powf(*v)).collect();

        let mut nugget = NUGGET;
        while nugget <= 1e-2 {
            if let Some((chol, mu, mut gamma, _)) = data.solve(&theta, nugget, false) {
                data.refine(&theta, &chol, mu, &mut gamma);
                return Ok(KrigingModel { x: x.to_vec(), theta, mu, gamma, nugget, chol });
            }
            nugget *= 100.0;
        }
        Err(Error::EnsembleFit("Kriging correlation matrix not positive definite".into()))
    }

    pub fn theta(&self) -> &[f64] {
        &self.theta
    }

    pub fn log_theta(&self) -> Vec<f64> {
        self.theta.iter().map(|t| t.log10()).collect()
    }

    pub fn nugget(&self) -> f64 {
        self.nugget
    }

    pub fn cholesky_factor(&self) -> &[f64] {
        &self.chol
    }

    pub fn predict(&self, x: &[f64]) -> f64 {
        let r = self.x.iter().zip(&self.gamma).map(|(xi, g)| {
            let s: f64 = xi
                .iter()
                .zip(x)
                .zip(&self.theta)
                .map(|((a, b), t)| t * (a - b) * (a - b))
                .sum();
            g * (-s).exp()
        });
        self.mu + r.sum::<f64>()
    }
}
