use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kernel {
    Cubic,
    Gaussian,
    ThinPlate,
}

impl Kernel {
    pub const ALL: [Kernel; 3] = [Kernel::Cubic, Kernel::Gaussian, Kernel::ThinPlate];

    pub fn label(self) -> &'static str {
        match self {
            Kernel::Cubic => "cubic",
            Kernel::Gaussian => "gaussian",
            Kernel::ThinPlate => "thin_plate",
        }
    }

    fn eval(self, r: f64, width: f64) -> f64 {
        match self {
            Kernel::Cubic => r * r * r,
            Kernel::Gaussian => (-(r / width).powi(2)).exp(),
            Kernel::ThinPlate => {
                if r > 0.0 {
                    r * r * r.ln()
                } else {
                    0.0
                }
            }
        }
    }
}

/// Radial basis function interpolant with an optional linear tail.
#[derive(Debug, Clone)]
pub struct RbfModel {
    kernel: Kernel,
    tail: usize,
    lambda: f64,
    width: f64,
    centers: Vec<Vec<f64>>,
    weights: Vec<f64>,
    tail_coef: Vec<f64>,
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

impl RbfModel {
    pub const DEFAULT_LAMBDA: f64 = 1e-10;

    /// `tail` is the degree of the polynomial tail, 0 or 1.
    pub fn fit(x: &[Vec<f64>], y: &[f64], kernel: Kernel, tail: usize, lambda: f64) -> Result<Self> {
        let n = x.len();
        if n == 0 || n != y.len() {
            return Err(Error::ContractViolation("RBF needs aligned non-empty data".into()));
        }
        if tail > 1 || lambda < 0.0 {
            return Err(Error::Configuration("RBF tail degree must be 0 or 1, lambda >= 0".into()));
        }
        let d = x[0].len();
        let q = if tail == 0 { 1 } else { d + 1 };
        if n < q {
            return Err(Error::EnsembleFit("too few points for the polynomial tail".into()));
        }

        let width = if kernel == Kernel::Gaussian {
            mean_nearest_distance(x)
        } else {
            1.0
        };
        let m = n + q;
        let mut a = DMatrix::<f64>::zeros(m, m);
        for i in 0..n {
            for j in i..n {
                let v = kernel.eval(dist(&x[i], &x[j]), width);
                a[(i, j)] = v;
                a[(j, i)] = v;
            }
            a[(i, i)] += lambda;
            a[(i, n)] = 1.0;
            a[(n, i)] = 1.0;
            if tail == 1 {
                for k in 0..d {
                    a[(i, n + 1 + k)] = x[i][k];
                    a[(n + 1 + k, i)] = x[i][k];
                }
            }
        }
        let mut b = DVector::<f64>::zeros(m);
        for i in 0..n {
            b[i] = y[i];
        }
        let sol = a
            .lu()
            .solve(&b)
            .filter(|s| s.iter().all(|v| v.is_finite()))
            .ok_or_else(|| Error::EnsembleFit(format!("singular {} RBF system", kernel.label())))?;
        Ok(RbfModel {
            kernel,
            tail,
            lambda,
            width,
            centers: x.to_vec(),
            weights: sol.as_slice()[..n].to_vec(),
            tail_coef: sol.as_slice()[n..].to_vec(),
        })
    }

    pub fn kernel(&self) -> Kernel {
        self.kernel
    }
    pub fn tail(&self) -> usize {
        self.tail
    }
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn predict(&self, x: &[f64]) -> f64 {
        let mut v: f64 = self
            .centers
            .iter()
            .zip(&self.weights)
            .map(|(c, w)| w * self.kernel.eval(dist(c, x), self.width))
            .sum();
        v += self.tail_coef[0];
        if self.tail == 1 {
            v += self.tail_coef[1..].iter().zip(x).map(|(c, xi)| c * xi).sum::<f64>();
        }
        v
    }
}

fn mean_nearest_distance(x: &[Vec<f64>]) -> f64 {
    let n = x.len();
    let mut total = 0.0;
    let mut count = 0;
    for i in 0..n {
        let nearest = (0..n)
            .filter(|&j| j != i)
            .map(|j| dist(&x[i], &x[j]))
            .filter(|&r| r > 0.0)
            .fold(f64::INFINITY, f64::min);
        if nearest.is_finite() {
            total += nearest;
            count += 1;
        }
    }
    if count == 0 {
        1.0
    } else {
        total / count as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn interpolates_training_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for d in [1, 2, 5, 10] {
            let x: Vec<Vec<f64>> = (0..20).map(|_| (0..d).map(|_| rng.gen::<f64>()).collect()).collect();
            let y: Vec<f64> = x.iter().map(|p| p.iter().map(|v| (3.0 * v).sin()).sum()).collect();
            for kernel in Kernel::ALL {
                for tail in [0, 1] {
                    let m = RbfModel::fit(&x, &y, kernel, tail, 1e-10).unwrap();
                    for (p, t) in x.iter().zip(&y) {
                        assert!((m.predict(p) - t).abs() < 1e-6, "{kernel:?} tail {tail} d {d}");
                    }
                }
            }
        }
    }

    #[test]
    fn linear_tail_reproduces_plane() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let x: Vec<Vec<f64>> = (0..15).map(|_| vec![rng.gen(), rng.gen()]).collect();
        let f = |p: &[f64]| 2.0 * p[0] - p[1] + 0.5;
        let y: Vec<f64> = x.iter().map(|p| f(p)).collect();
        let m = RbfModel::fit(&x, &y, Kernel::Cubic, 1, 0.0).unwrap();
        assert!((m.predict(&[0.3, 0.9]) - f(&[0.3, 0.9])).abs() < 1e-8);
    }

    #[test]
    fn rejects_bad_config() {
        let x = vec![vec![0.0], vec![1.0]];
        assert!(RbfModel::fit(&x, &[0.0, 1.0], Kernel::Cubic, 2, 0.0).is_err());
        assert!(RbfModel::fit(&x, &[0.0], Kernel::Cubic, 0, 0.0).is_err());
    }
}
