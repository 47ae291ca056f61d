//! Classic constrained bi-objective problems.

pub fn bnh(x: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let f = vec![
        4.0 * x[0] * x[0] + 4.0 * x[1] * x[1],
        (x[0] - 5.0).powi(2) + (x[1] - 5.0).powi(2),
    ];
    let g = vec![
        (x[0] - 5.0).powi(2) + x[1] * x[1] - 25.0,
        7.7 - (x[0] - 8.0).powi(2) - (x[1] + 3.0).powi(2),
    ];
    (f, g)
}

pub fn srn(x: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let f = vec![
        2.0 + (x[0] - 2.0).powi(2) + (x[1] - 1.0).powi(2),
        9.0 * x[0] - (x[1] - 1.0).powi(2),
    ];
    let g = vec![x[0] * x[0] + x[1] * x[1] - 225.0, x[0] - 3.0 * x[1] + 10.0];
    (f, g)
}

pub fn tnk(x: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let f = vec![x[0], x[1]];
    let g = vec![
        -x[0] * x[0] - x[1] * x[1] + 1.0 + 0.1 * (16.0 * x[0].atan2(x[1])).cos(),
        (x[0] - 0.5).powi(2) + (x[1] - 0.5).powi(2) - 0.5,
    ];
    (f, g)
}

pub fn osy(x: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let f1 = -(25.0 * (x[0] - 2.0).powi(2)
        + (x[1] - 2.0).powi(2)
        + (x[2] - 1.0).powi(2)
        + (x[3] - 4.0).powi(2)
        + (x[4] - 1.0).powi(2));
    let f2 = x.iter().map(|v| v * v).sum();
    let g = vec![
        -(x[0] + x[1] - 2.0),
        -(6.0 - x[0] - x[1]),
        -(2.0 - x[1] + x[0]),
        -(2.0 - x[0] + 3.0 * x[1]),
        -(4.0 - (x[2] - 3.0).powi(2) - x[3]),
        -((x[4] - 3.0).powi(2) + x[5] - 4.0),
    ];
    (vec![f1, f2], g)
}
