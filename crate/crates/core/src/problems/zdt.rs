//! ZDT bi-objective suite.

use std::f64::consts::PI;

fn tail_g(x: &[f64]) -> f64 {
    1.0 + 9.0 * x[1..].iter().sum::<f64>() / (x.len() - 1) as f64
}

pub fn zdt1(x: &[f64]) -> Vec<f64> {
    let f1 = x[0];
    let g = tail_g(x);
    vec![f1, g * (1.0 - (f1 / g).sqrt())]
}

pub fn zdt2(x: &[f64]) -> Vec<f64> {
    let f1 = x[0];
    let g = tail_g(x);
    vec![f1, g * (1.0 - (f1 / g).powi(2))]
}

pub fn zdt3(x: &[f64]) -> Vec<f64> {
    let f1 = x[0];
    let g = tail_g(x);
    let r = f1 / g;
    vec![f1, g * (1.0 - r.sqrt() - r * (10.0 * PI * f1).sin())]
}

pub fn zdt4(x: &[f64]) -> Vec<f64> {
    let f1 = x[0];
    let g = 1.0
        + 10.0 * (x.len() - 1) as f64
        + x[1..]
            .iter()
            .map(|v| v * v - 10.0 * (4.0 * PI * v).cos())
            .sum::<f64>();
    vec![f1, g * (1.0 - (f1 / g).sqrt())]
}

pub fn zdt6(x: &[f64]) -> Vec<f64> {
    let f1 = 1.0 - (-4.0 * x[0]).exp() * (6.0 * PI * x[0]).sin().powi(6);
    let g = 1.0 + 9.0 * (x[1..].iter().sum::<f64>() / (x.len() - 1) as f64).powf(0.25);
    vec![f1, g * (1.0 - (f1 / g).powi(2))]
}

/// Disconnected Pareto-optimal `f1` intervals of ZDT3.
pub const ZDT3_SEGMENTS: [(f64, f64); 5] = [
    (0.0, 0.083_001_534_9),
    (0.182_228_728_0, 0.257_762_363_4),
    (0.409_313_674_8, 0.453_882_104_1),
    (0.618_396_794_4, 0.652_511_703_8),
    (0.823_331_798_3, 0.851_832_865_4),
];

/// Smallest `f1` reachable on the ZDT6 front.
pub const ZDT6_F1_MIN: f64 = 0.280_775_319_1;
