//! Regenerates the shipped reference fronts of the constrained two-objective
//! problems by merging the final populations of long NSGA-II runs.
//!
//! cargo run --release -p gpsaf --example generate_fronts -- crates/core/data/fronts

use std::path::PathBuf;

use gpsaf::baselines::{Nsga2, Nsga2Config};
use gpsaf::problems::{make_problem, non_dominated, write_front_csv};
use gpsaf::{run_baseline, violation, Algorithm, Budget, Values};

const SEEDS: u64 = 6;
const POP: usize = 200;
const EVALUATIONS: usize = 100_000;
const KEEP: usize = 1000;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out: PathBuf = std::env::args().nth(1).unwrap_or_else(|| "crates/core/data/fronts".into()).into();
    std::fs::create_dir_all(&out)?;
    for name in ["BNH", "SRN", "TNK", "OSY"] {
        let problem = make_problem(name, None)?;
        let mut points = Vec::new();
        for seed in 0..SEEDS {
            let config = Nsga2Config { pop_size: POP, n_offspring: POP, ..Nsga2Config::default() };
            let mut alg = Nsga2::new(problem.clone(), config, seed)?;
            run_baseline(&mut alg, &problem, &mut Budget::new(EVALUATIONS))?;
            for s in alg.population() {
                if violation(&s, Values::True)? <= 0.0 {
                    points.push(s.f.clone().unwrap());
                }
            }
        }
        let mut front = non_dominated(&points);
        front.sort_by(|a, b| a[0].total_cmp(&b[0]));
        front.dedup();
        if front.len() > KEEP {
            let n = front.len();
            front = (0..KEEP).map(|i| front[i * (n - 1) / (KEEP - 1)].clone()).collect();
        }
        std::fs::write(out.join(format!("{name}.csv")), write_front_csv(&front))?;
        println!("{name}: {} points", front.len());
    }
    Ok(())
}
