//! Runs the algorithm × problem × seed grid and writes the results.

use std::path::Path;
use std::time::Instant;

use gpsaf::gpsaf::run_gpsaf;
use gpsaf::{run_baseline, Archive, Budget};
use rayon::prelude::*;

use crate::config::ExperimentConfig;
use crate::error::{BenchError, Result};
use crate::indicator::Indicator;
use crate::ranking::RankTable;
use crate::record::{to_jsonl, RunRecord};

/// One grid cell: algorithm `alg` on `problem` for run index `run`.
pub fn run_cell(config: &ExperimentConfig, alg: usize, problem: &str, run: usize) -> Result<RunRecord> {
    let spec = &config.algorithms[alg];
    let p = config.problem(problem)?;
    let seed = config.seed(run);
    let se_max = config.budget(problem)?;
    let indicator = Indicator::for_problem(&p)?;
    let start = Instant::now();
    let outcome = (|| -> gpsaf::Result<Archive> {
        let mut algorithm = spec.kind().map_err(|e| gpsaf::Error::Configuration(e.to_string()))?.build(&p, seed)?;
        if spec.gpsaf {
            run_gpsaf(algorithm.as_mut(), &p, &spec.gpsaf_config(se_max, seed))
        } else {
            run_baseline(algorithm.as_mut(), &p, &mut Budget::new(se_max))
        }
    })();
    let wall_ms = start.elapsed().as_millis() as u64;
    let mut record = RunRecord {
        problem: p.name().to_string(),
        algorithm: spec.label()?,
        group: spec.group()?,
        seed,
        indicator: indicator.kind().label().to_string(),
        value: f64::INFINITY,
        trace: Vec::new(),
        evaluations: 0,
        wall_ms,
        error: None,
    };
    match outcome {
        Ok(archive) => {
            record.value = indicator.evaluate(&archive)?;
            record.trace = indicator.trace(&archive)?;
            record.evaluations = archive.len();
        }
        Err(e) => record.error = Some(e.to_string()),
    }
    Ok(record)
}

/// Every cell in grid order (problem, algorithm, run), computed on `jobs`
/// worker threads.
pub fn run_experiment(config: &ExperimentConfig, jobs: usize) -> Result<Vec<RunRecord>> {
    config.validate()?;
    let cells: Vec<(String, usize, usize)> = config
        .problems
        .iter()
        .flat_map(|p| (0..config.algorithms.len()).flat_map(move |a| (0..config.n_runs).map(move |r| (p.clone(), a, r))))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| BenchError::Config(e.to_string()))?;
    pool.install(|| cells.par_iter().map(|(p, a, r)| run_cell(config, *a, p, *r)).collect())
}

/// Writes `runs.jsonl`, `ranks.csv` and `ranks.md` into `dir`.
pub fn write_results(dir: &Path, records: &[RunRecord], table: &RankTable) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    std::fs::write(dir.join("runs.jsonl"), to_jsonl(records))?;
    std::fs::write(dir.join("ranks.csv"), table.to_csv())?;
    std::fs::write(dir.join("ranks.md"), table.to_markdown())?;
    Ok(())
}
