//! Real-coded variation operators shared by GA and NSGA-II.

use rand::Rng as _;

use crate::problem::Problem;
use crate::rng::Rng;

/// Bounded simulated binary crossover. Returns two children.
pub fn sbx(
    p1: &[f64],
    p2: &[f64],
    problem: &Problem,
    eta: f64,
    prob: f64,
    rng: &mut Rng,
) -> (Vec<f64>, Vec<f64>) {
    let mut c1 = p1.to_vec();
    let mut c2 = p2.to_vec();
    if rng.gen::<f64>() > prob {
        return (c1, c2);
    }
    for i in 0..p1.len() {
        if rng.gen::<f64>() > 0.5 || (p1[i] - p2[i]).abs() <= 1e-14 {
            continue;
        }
        let (xl, xu) = (problem.lower()[i], problem.upper()[i]);
        let (y1, y2) = if p1[i] < p2[i] { (p1[i], p2[i]) } else { (p2[i], p1[i]) };
        let u: f64 = rng.gen();

        let spread = |beta: f64| -> f64 {
            let alpha = 2.0 - beta.powf(-(eta + 1.0));
            if u <= 1.0 / alpha {
                (u * alpha).powf(1.0 / (eta + 1.0))
            } else {
                (1.0 / (2.0 - u * alpha)).powf(1.0 / (eta + 1.0))
            }
        };

        let beta_lo = 1.0 + 2.0 * (y1 - xl) / (y2 - y1);
        let lo = 0.5 * ((y1 + y2) - spread(beta_lo) * (y2 - y1));
        let beta_hi = 1.0 + 2.0 * (xu - y2) / (y2 - y1);
        let hi = 0.5 * ((y1 + y2) + spread(beta_hi) * (y2 - y1));
        let (lo, hi) = (lo.clamp(xl, xu), hi.clamp(xl, xu));

        if rng.gen::<f64>() <= 0.5 {
            c1[i] = hi;
            c2[i] = lo;
        } else {
            c1[i] = lo;
            c2[i] = hi;
        }
    }
    (c1, c2)
}

/// Bounded polynomial mutation, applied per variable with probability `prob`.
pub fn polynomial_mutation(x: &mut [f64], problem: &Problem, eta: f64, prob: f64, rng: &mut Rng) {
    for i in 0..x.len() {
        if rng.gen::<f64>() > prob {
            continue;
        }
        let (xl, xu) = (problem.lower()[i], problem.upper()[i]);
        let y = x[i];
        let d1 = (y - xl) / (xu - xl);
        let d2 = (xu - y) / (xu - xl);
        let u: f64 = rng.gen();
        let pw = 1.0 / (eta + 1.0);
        let dq = if u < 0.5 {
            let v = 2.0 * u + (1.0 - 2.0 * u) * (1.0 - d1).powf(eta + 1.0);
            v.powf(pw) - 1.0
        } else {
            let v = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * (1.0 - d2).powf(eta + 1.0);
            1.0 - v.powf(pw)
        };
        x[i] = (y + dq * (xu - xl)).clamp(xl, xu);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::Evaluation;
    use crate::rng::stream;
    use proptest::prelude::*;

    fn unit(n: usize) -> Problem {
        Problem::new("u", vec![0.0; n], vec![1.0; n], 1, 0, |_| Evaluation {
            f: vec![0.0],
            g: vec![],
        })
        .unwrap()
    }

    proptest! {
        #[test]
        fn children_stay_in_bounds(seed in 0u64..500, a in prop::collection::vec(0.0f64..=1.0, 4), b in prop::collection::vec(0.0f64..=1.0, 4)) {
            let p = unit(4);
            let mut rng = stream(seed, "t");
            let (mut c1, c2) = sbx(&a, &b, &p, 15.0, 1.0, &mut rng);
            polynomial_mutation(&mut c1, &p, 20.0, 1.0, &mut rng);
            prop_assert!(p.contains(&c1));
            prop_assert!(p.contains(&c2));
        }
    }

    #[test]
    fn sbx_with_zero_probability_copies_parents() {
        let p = unit(3);
        let (c1, c2) = sbx(&[0.1, 0.2, 0.3], &[0.9, 0.8, 0.7], &p, 15.0, 0.0, &mut stream(1, "t"));
        assert_eq!(c1, vec![0.1, 0.2, 0.3]);
        assert_eq!(c2, vec![0.9, 0.8, 0.7]);
    }
}
