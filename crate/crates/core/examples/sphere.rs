//! Compares a plain GA with its surrogate-assisted counterpart on a
//! 10-dimensional sphere.

use std::time::Instant;

use gpsaf::baselines::BaselineKind;
use gpsaf::gpsaf::{run_gpsaf, GpsafConfig};
use gpsaf::problems::make_problem;
use gpsaf::{run_baseline, Budget};

fn main() -> gpsaf::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "sphere".into());
    let kind = BaselineKind::parse(&std::env::args().nth(2).unwrap_or_else(|| "ga".into()))?;
    let problem = make_problem(&name, Some(10))?;
    for seed in 0..3 {
        let mut plain = kind.build(&problem, seed)?;
        let base = run_baseline(plain.as_mut(), &problem, &mut Budget::new(300))?;

        let start = Instant::now();
        let mut wrapped = kind.build(&problem, seed)?;
        let config = GpsafConfig::with_seed(seed);
        let assisted = run_gpsaf(wrapped.as_mut(), &problem, &config)?;
        println!(
            "seed {seed}: {} {:.4e}  GPSAF-{} {:.4e}  ({:.1?})",
            kind.label(),
            base.best_feasible().unwrap_or(f64::INFINITY),
            kind.label(),
            assisted.best_feasible().unwrap_or(f64::INFINITY),
            start.elapsed()
        );
    }
    Ok(())
}
