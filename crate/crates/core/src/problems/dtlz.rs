//! DTLZ suite and C2-DTLZ2. The last `k = n_var - n_obj + 1` variables are
//! distance variables.

use std::f64::consts::PI;

fn g_multimodal(xm: &[f64]) -> f64 {
    100.0
        * (xm.len() as f64
            + xm
                .iter()
                .map(|v| (v - 0.5).powi(2) - (20.0 * PI * (v - 0.5)).cos())
                .sum::<f64>())
}

fn g_sphere(xm: &[f64]) -> f64 {
    xm.iter().map(|v| (v - 0.5).powi(2)).sum()
}

/// Points on the positive orthant of a sphere of radius `r` from `m - 1`
/// angles in radians.
fn spherical(theta: &[f64], r: f64) -> Vec<f64> {
    let m = theta.len() + 1;
    (0..m)
        .map(|i| {
            let mut v = r;
            for t in &theta[..m - 1 - i] {
                v *= t.cos();
            }
            if i > 0 {
                v *= theta[m - 1 - i].sin();
            }
            v
        })
        .collect()
}

pub fn dtlz1(x: &[f64], m: usize) -> Vec<f64> {
    let g = g_multimodal(&x[m - 1..]);
    (0..m)
        .map(|i| {
            let mut v = 0.5 * (1.0 + g);
            for xj in &x[..m - 1 - i] {
                v *= xj;
            }
            if i > 0 {
                v *= 1.0 - x[m - 1 - i];
            }
            v
        })
        .collect()
}

fn angles(x: &[f64], m: usize, alpha: f64) -> Vec<f64> {
    x[..m - 1].iter().map(|v| v.powf(alpha) * PI / 2.0).collect()
}

pub fn dtlz2(x: &[f64], m: usize) -> Vec<f64> {
    spherical(&angles(x, m, 1.0), 1.0 + g_sphere(&x[m - 1..]))
}

pub fn dtlz3(x: &[f64], m: usize) -> Vec<f64> {
    spherical(&angles(x, m, 1.0), 1.0 + g_multimodal(&x[m - 1..]))
}

pub fn dtlz4(x: &[f64], m: usize) -> Vec<f64> {
    spherical(&angles(x, m, 100.0), 1.0 + g_sphere(&x[m - 1..]))
}

fn degenerate(x: &[f64], m: usize, g: f64) -> Vec<f64> {
    let mut theta = vec![x[0] * PI / 2.0];
    for xi in &x[1..m - 1] {
        theta.push(PI / (4.0 * (1.0 + g)) * (1.0 + 2.0 * g * xi));
    }
    spherical(&theta, 1.0 + g)
}

pub fn dtlz5(x: &[f64], m: usize) -> Vec<f64> {
    degenerate(x, m, g_sphere(&x[m - 1..]))
}

pub fn dtlz6(x: &[f64], m: usize) -> Vec<f64> {
    degenerate(x, m, x[m - 1..].iter().map(|v| v.powf(0.1)).sum())
}

pub fn dtlz7(x: &[f64], m: usize) -> Vec<f64> {
    let xm = &x[m - 1..];
    let g = 1.0 + 9.0 * xm.iter().sum::<f64>() / xm.len() as f64;
    let mut f: Vec<f64> = x[..m - 1].to_vec();
    let h = m as f64
        - f.iter()
            .map(|fi| fi / (1.0 + g) * (1.0 + (3.0 * PI * fi).sin()))
            .sum::<f64>();
    f.push((1.0 + g) * h);
    f
}

/// C2-DTLZ2 constraint (`<= 0` feasible) on DTLZ2 objectives.
pub fn c2_constraint(f: &[f64]) -> f64 {
    let m = f.len();
    let r: f64 = if m == 3 { 0.4 } else { 0.5 };
    let sq: f64 = f.iter().map(|v| v * v).sum();
    let corner = (0..m)
        .map(|i| sq - f[i] * f[i] + (f[i] - 1.0).powi(2) - r * r)
        .fold(f64::INFINITY, f64::min);
    let center = f
        .iter()
        .map(|v| (v - 1.0 / (m as f64).sqrt()).powi(2))
        .sum::<f64>()
        - r * r;
    corner.min(center)
}
