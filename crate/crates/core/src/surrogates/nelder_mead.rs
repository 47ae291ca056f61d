/// Box-bounded Nelder–Mead minimizer. Trial points are clamped to the box.
/// Returns the best point and value found within `max_evals` evaluations.
pub(crate) fn minimize<F>(
    f: &mut F,
    start: &[f64],
    step: f64,
    lower: f64,
    upper: f64,
    max_evals: usize,
) -> (Vec<f64>, f64)
where
    F: FnMut(&[f64]) -> f64,
{
    let d = start.len();
    let clamp = |p: Vec<f64>| -> Vec<f64> { p.into_iter().map(|v| v.clamp(lower, upper)).collect() };
    let mut evals = 0usize;
    let mut eval = |p: &[f64], evals: &mut usize| {
        *evals += 1;
        let v = f(p);
        if v.is_nan() {
            f64::INFINITY
        } else {
            v
        }
    };

    let x0 = clamp(start.to_vec());
    let f0 = eval(&x0, &mut evals);
    let mut simplex = vec![(x0.clone(), f0)];
    for k in 0..d {
        if evals >= max_evals {
            break;
        }
        let mut p = x0.clone();
        p[k] = if p[k] + step <= upper { p[k] + step } else { p[k] - step };
        let p = clamp(p);
        let v = eval(&p, &mut evals);
        simplex.push((p, v));
    }
    if simplex.len() < d + 1 {
        return best(simplex);
    }

    while evals < max_evals {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let worst = simplex[d].clone();
        let centroid: Vec<f64> = (0..d)
            .map(|k| simplex[..d].iter().map(|s| s.0[k]).sum::<f64>() / d as f64)
            .collect();
        let along = |t: f64| -> Vec<f64> {
            clamp(centroid.iter().zip(&worst.0).map(|(c, w)| c + t * (c - w)).collect())
        };

        let xr = along(1.0);
        let fr = eval(&xr, &mut evals);
        if fr < simplex[0].1 {
            if evals >= max_evals {
                simplex[d] = (xr, fr);
                break;
            }
            let xe = along(2.0);
            let fe = eval(&xe, &mut evals);
            simplex[d] = if fe < fr { (xe, fe) } else { (xr, fr) };
        } else if fr < simplex[d - 1].1 {
            simplex[d] = (xr, fr);
        } else {
            if evals >= max_evals {
                break;
            }
            let (xc, fc) = if fr < worst.1 {
                let xc = along(0.5);
                let fc = eval(&xc, &mut evals);
                (xc, fc)
            } else {
                let xc = along(-0.5);
                let fc = eval(&xc, &mut evals);
                (xc, fc)
            };
            if fc < worst.1.min(fr) {
                simplex[d] = (xc, fc);
            } else {
                let b = simplex[0].0.clone();
                for s in simplex.iter_mut().skip(1) {
                    if evals >= max_evals {
                        break;
                    }
                    let p: Vec<f64> = b.iter().zip(&s.0).map(|(bi, si)| bi + 0.5 * (si - bi)).collect();
                    let v = eval(&p, &mut evals);
                    *s = (p, v);
                }
            }
        }
        let spread = simplex.iter().map(|s| s.1).fold(f64::NEG_INFINITY, f64::max)
            - simplex.iter().map(|s| s.1).fold(f64::INFINITY, f64::min);
        if spread.abs() < 1e-10 {
            break;
        }
    }
    best(simplex)
}

fn best(simplex: Vec<(Vec<f64>, f64)>) -> (Vec<f64>, f64) {
    simplex.into_iter().min_by(|a, b| a.1.total_cmp(&b.1)).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_quadratic_minimum() {
        let mut f = |p: &[f64]| (p[0] - 1.0).powi(2) + 3.0 * (p[1] + 0.5).powi(2);
        let (x, v) = minimize(&mut f, &[0.0, 0.0], 0.5, -3.0, 3.0, 400);
        assert!(v < 1e-8, "{v}");
        assert!((x[0] - 1.0).abs() < 1e-3 && (x[1] + 0.5).abs() < 1e-3);
    }

    #[test]
    fn respects_bounds_and_budget() {
        let mut calls = 0;
        let mut f = |p: &[f64]| {
            calls += 1;
            p[0]
        };
        let (x, _) = minimize(&mut f, &[0.0], 0.5, -3.0, 3.0, 50);
        assert!(calls <= 50);
        assert!((x[0] + 3.0).abs() < 1e-9);
    }
}
