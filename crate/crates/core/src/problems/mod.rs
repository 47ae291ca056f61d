//! Analytic test problems, reference fronts and indicators.

mod classic;
mod dtlz;
mod fronts;
mod gfuncs;
mod indicators;
mod single;
mod zdt;

pub use fronts::{
    format_g12, hv_reference_point, parse_front_csv, reference_front, write_front_csv, FRONTS,
};
pub use indicators::{hypervolume, igd, non_dominated};

use crate::error::{Error, Result};
use crate::problem::{Evaluation, Problem};

/// Every problem [`make_problem`] knows, in canonical spelling.
pub const PROBLEM_NAMES: [&str; 29] = [
    "sphere", "rastrigin", "rosenbrock", "ackley", "griewank", "G1", "G4", "G6", "G7", "G8", "G9",
    "G24", "ZDT1", "ZDT2", "ZDT3", "ZDT4", "ZDT6", "DTLZ1", "DTLZ2", "DTLZ3", "DTLZ4", "DTLZ5",
    "DTLZ6", "DTLZ7", "BNH", "SRN", "TNK", "OSY", "C2-DTLZ2",
];

/// Default dimension of scalable problems.
pub const DEFAULT_N_VAR: usize = 10;
/// Objectives of the DTLZ family.
pub const DTLZ_N_OBJ: usize = 3;

/// Canonical spelling of a problem name, matched case-insensitively.
pub fn canonical_name(name: &str) -> Option<String> {
    let key = name.to_ascii_lowercase().replace('_', "-");
    PROBLEM_NAMES
        .iter()
        .find(|n| n.to_ascii_lowercase() == key)
        .map(|n| n.to_string())
}

/// Variable count of problems defined for one dimension only. Expects a
/// canonical name.
pub fn fixed_dimension(name: &str) -> Option<usize> {
    match name {
        "G1" => Some(13),
        "G4" => Some(5),
        "G6" | "G8" | "G24" | "BNH" | "SRN" | "TNK" => Some(2),
        "G7" => Some(10),
        "G9" => Some(7),
        "OSY" => Some(6),
        _ => None,
    }
}

/// Published optimum design and value of a G-problem, for fixtures.
pub fn published_optimum(name: &str) -> Option<(Vec<f64>, f64)> {
    gfuncs::published_optimum(&canonical_name(name)?)
}

fn single(
    name: &str,
    n: usize,
    lo: f64,
    hi: f64,
    f: fn(&[f64]) -> f64,
) -> Result<Problem> {
    Ok(Problem::new(name, vec![lo; n], vec![hi; n], 1, 0, move |x| Evaluation {
        f: vec![f(x)],
        g: vec![],
    })?
    .with_known_optimum(0.0))
}

fn constrained_single(
    name: &str,
    lower: Vec<f64>,
    upper: Vec<f64>,
    n_constr: usize,
    f: fn(&[f64]) -> (f64, Vec<f64>),
) -> Result<Problem> {
    let opt = gfuncs::published_optimum(name).map(|(_, v)| v);
    let p = Problem::new(name, lower, upper, 1, n_constr, move |x| {
        let (f, g) = f(x);
        Evaluation { f: vec![f], g }
    })?;
    Ok(match opt {
        Some(v) => p.with_known_optimum(v),
        None => p,
    })
}

fn multi(
    name: &str,
    lower: Vec<f64>,
    upper: Vec<f64>,
    n_obj: usize,
    f: impl Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
) -> Result<Problem> {
    Problem::new(name, lower, upper, n_obj, 0, move |x| Evaluation { f: f(x), g: vec![] })
}

fn constrained_multi(
    name: &str,
    lower: Vec<f64>,
    upper: Vec<f64>,
    n_constr: usize,
    f: fn(&[f64]) -> (Vec<f64>, Vec<f64>),
) -> Result<Problem> {
    Problem::new(name, lower, upper, 2, n_constr, move |x| {
        let (f, g) = f(x);
        Evaluation { f, g }
    })
}

/// Builds a named test problem. `n_var` overrides the dimension of scalable
/// problems; it is an error for fixed-dimension ones.
pub fn make_problem(name: &str, n_var: Option<usize>) -> Result<Problem> {
    let name = canonical_name(name).ok_or_else(|| Error::UnknownProblem(name.to_string()))?;
    if let (Some(fixed), Some(n)) = (fixed_dimension(&name), n_var) {
        if n != fixed {
            return Err(Error::Configuration(format!(
                "`{name}` has fixed dimension {fixed}, got n_var = {n}"
            )));
        }
    }
    let default_n = if name == "ZDT4" { 5 } else { DEFAULT_N_VAR };
    let n = n_var.unwrap_or(default_n);
    let min_n = if name.starts_with("DTLZ") || name == "C2-DTLZ2" {
        DTLZ_N_OBJ
    } else if name.starts_with("ZDT") || name == "rosenbrock" {
        2
    } else {
        1
    };
    if n < min_n {
        return Err(Error::Configuration(format!("`{name}` needs at least {min_n} variables")));
    }
    let m = DTLZ_N_OBJ;
    match name.as_str() {
        "sphere" => single(&name, n, -5.0, 5.0, single::sphere),
        "rastrigin" => single(&name, n, -5.0, 5.0, single::rastrigin),
        "rosenbrock" => single(&name, n, -5.0, 5.0, single::rosenbrock),
        "ackley" => single(&name, n, -32.768, 32.768, single::ackley),
        "griewank" => single(&name, n, -600.0, 600.0, single::griewank),
        "G1" => {
            let mut upper = vec![1.0; 13];
            upper[9] = 100.0;
            upper[10] = 100.0;
            upper[11] = 100.0;
            constrained_single(&name, vec![0.0; 13], upper, 9, gfuncs::g1)
        }
        "G4" => constrained_single(
            &name,
            vec![78.0, 33.0, 27.0, 27.0, 27.0],
            vec![102.0, 45.0, 45.0, 45.0, 45.0],
            6,
            gfuncs::g4,
        ),
        "G6" => constrained_single(&name, vec![13.0, 0.0], vec![100.0, 100.0], 2, gfuncs::g6),
        "G7" => constrained_single(&name, vec![-10.0; 10], vec![10.0; 10], 8, gfuncs::g7),
        "G8" => constrained_single(&name, vec![0.0; 2], vec![10.0; 2], 2, gfuncs::g8),
        "G9" => constrained_single(&name, vec![-10.0; 7], vec![10.0; 7], 4, gfuncs::g9),
        "G24" => constrained_single(&name, vec![0.0; 2], vec![3.0, 4.0], 2, gfuncs::g24),
        "ZDT1" => multi(&name, vec![0.0; n], vec![1.0; n], 2, zdt::zdt1),
        "ZDT2" => multi(&name, vec![0.0; n], vec![1.0; n], 2, zdt::zdt2),
        "ZDT3" => multi(&name, vec![0.0; n], vec![1.0; n], 2, zdt::zdt3),
        "ZDT4" => {
            let mut lower = vec![-5.0; n];
            let mut upper = vec![5.0; n];
            lower[0] = 0.0;
            upper[0] = 1.0;
            multi(&name, lower, upper, 2, zdt::zdt4)
        }
        "ZDT6" => multi(&name, vec![0.0; n], vec![1.0; n], 2, zdt::zdt6),
        "DTLZ1" => multi(&name, vec![0.0; n], vec![1.0; n], m, move |x| dtlz::dtlz1(x, m)),
        "DTLZ2" => multi(&name, vec![0.0; n], vec![1.0; n], m, move |x| dtlz::dtlz2(x, m)),
        "DTLZ3" => multi(&name, vec![0.0; n], vec![1.0; n], m, move |x| dtlz::dtlz3(x, m)),
        "DTLZ4" => multi(&name, vec![0.0; n], vec![1.0; n], m, move |x| dtlz::dtlz4(x, m)),
        "DTLZ5" => multi(&name, vec![0.0; n], vec![1.0; n], m, move |x| dtlz::dtlz5(x, m)),
        "DTLZ6" => multi(&name, vec![0.0; n], vec![1.0; n], m, move |x| dtlz::dtlz6(x, m)),
        "DTLZ7" => multi(&name, vec![0.0; n], vec![1.0; n], m, move |x| dtlz::dtlz7(x, m)),
        "C2-DTLZ2" => Problem::new(&name, vec![0.0; n], vec![1.0; n], m, 1, move |x| {
            let f = dtlz::dtlz2(x, m);
            let g = vec![dtlz::c2_constraint(&f)];
            Evaluation { f, g }
        }),
        "BNH" => constrained_multi(&name, vec![0.0, 0.0], vec![5.0, 3.0], 2, classic::bnh),
        "SRN" => constrained_multi(&name, vec![-20.0; 2], vec![20.0; 2], 2, classic::srn),
        "TNK" => constrained_multi(
            &name,
            vec![0.0; 2],
            vec![std::f64::consts::PI; 2],
            2,
            classic::tnk,
        ),
        "OSY" => constrained_multi(
            &name,
            vec![0.0, 0.0, 1.0, 0.0, 1.0, 0.0],
            vec![10.0, 10.0, 5.0, 6.0, 5.0, 10.0],
            6,
            classic::osy,
        ),
        _ => Err(Error::UnknownProblem(name)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solution::{violation, Solution, Values};

    #[test]
    fn every_listed_problem_builds() {
        for name in PROBLEM_NAMES {
            let p = make_problem(name, None).unwrap();
            let mid: Vec<f64> = p.lower().iter().zip(p.upper()).map(|(l, u)| 0.5 * (l + u)).collect();
            let e = p.evaluate(&mid).unwrap();
            assert!(e.f.iter().all(|v| v.is_finite()), "{name}");
        }
    }

    #[test]
    fn default_dimensions() {
        assert_eq!(make_problem("sphere", None).unwrap().n_var(), 10);
        assert_eq!(make_problem("ZDT4", None).unwrap().n_var(), 5);
        assert_eq!(make_problem("DTLZ2", None).unwrap().n_var(), 10);
        assert_eq!(make_problem("DTLZ2", None).unwrap().n_obj(), 3);
        assert_eq!(make_problem("G1", None).unwrap().n_var(), 13);
        assert_eq!(make_problem("zdt1", Some(30)).unwrap().n_var(), 30);
    }

    #[test]
    fn errors() {
        assert!(matches!(make_problem("nope", None), Err(Error::UnknownProblem(_))));
        assert!(matches!(make_problem("G6", Some(5)), Err(Error::Configuration(_))));
        assert!(make_problem("G6", Some(2)).is_ok());
    }

    #[test]
    fn analytic_fixtures() {
        let s = make_problem("sphere", None).unwrap();
        assert_eq!(s.evaluate(&[0.0; 10]).unwrap().f, vec![0.0]);
        let z = make_problem("ZDT1", None).unwrap();
        assert_eq!(z.evaluate(&[0.0; 10]).unwrap().f, vec![0.0, 1.0]);
        let r = make_problem("rastrigin", None).unwrap();
        assert_eq!(r.evaluate(&[0.0; 10]).unwrap().f, vec![0.0]);
        let mut x = [0.0; 10];
        x[3] = 1.0;
        // one coordinate at 1: 1 - 10 cos(2 pi) + 10 = 1, every other term vanishes
        assert!((r.evaluate(&x).unwrap().f[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn published_g_optima_reproduce() {
        for name in ["G1", "G4", "G6", "G7", "G8", "G9", "G24"] {
            let p = make_problem(name, None).unwrap();
            let (x, f_star) = published_optimum(name).unwrap();
            let e = p.evaluate(&x).unwrap();
            let s = Solution::evaluated(x.clone(), e.f.clone(), e.g.clone());
            let cv = violation(&s, Values::True).unwrap();
            assert!(cv <= 1e-6, "{name}: violation {cv}");
            assert!((e.f[0] - f_star).abs() <= 1e-4, "{name}: {} vs {f_star}", e.f[0]);
            assert_eq!(p.known_optimum(), Some(f_star));
        }
    }
}
