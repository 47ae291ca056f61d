use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gpsaf::problems::{make_problem, PROBLEM_NAMES};
use gpsaf_bench::record::{from_jsonl, trace_csv};
use gpsaf_bench::{run_experiment, write_results, BenchError, ExperimentConfig, RankTable};

#[derive(Parser)]
#[command(name = "bench", about = "Run and rank surrogate-assisted optimization experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute an experiment grid.
    Run {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Overrides the base seed (and GPSAF_SEED).
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Recompute the rank table from a results directory.
    Rank {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 0.05)]
        significance: f64,
    },
    /// Print every known problem.
    ListProblems,
    /// Per-evaluation best-so-far CSV of a runs file.
    Trace {
        #[arg(long)]
        run: PathBuf,
    },
}

fn exit_code(e: &BenchError) -> ExitCode {
    match e {
        BenchError::Config(_) => ExitCode::from(2),
        _ => ExitCode::from(1),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(command: Command) -> Result<ExitCode, BenchError> {
    match command {
        Command::Run { config, out, jobs, seed } => {
            let text = std::fs::read_to_string(&config)
                .map_err(|e| BenchError::Config(format!("{}: {e}", config.display())))?;
            let mut cfg = ExperimentConfig::from_toml(&text)?;
            let env_seed = match std::env::var("GPSAF_SEED") {
                Ok(v) => Some(v.parse::<u64>().map_err(|_| BenchError::Config(format!("GPSAF_SEED `{v}` is not an integer")))?),
                Err(_) => None,
            };
            if let Some(s) = seed.or(env_seed) {
                cfg.base_seed = s;
            }
            let records = run_experiment(&cfg, jobs)?;
            let table = RankTable::from_records(&records, cfg.significance)?;
            write_results(&out, &records, &table)?;
            print!("{}", table.to_markdown());
            let failed: Vec<_> = records.iter().filter(|r| r.error.is_some()).collect();
            for r in &failed {
                eprintln!("failed: {} on {} seed {}: {}", r.algorithm, r.problem, r.seed, r.error.as_deref().unwrap_or(""));
            }
            Ok(if failed.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(3) })
        }
        Command::Rank { input, out, significance } => {
            let path = if input.is_dir() { input.join("runs.jsonl") } else { input };
            let records = from_jsonl(&std::fs::read_to_string(path)?)?;
            let table = RankTable::from_records(&records, significance)?;
            std::fs::write(out, table.to_csv())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::ListProblems => {
            println!("name,n_var,n_obj,n_constr");
            for name in PROBLEM_NAMES {
                let p = make_problem(name, None)?;
                println!("{name},{},{},{}", p.n_var(), p.n_obj(), p.n_constr());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Trace { run } => {
            let records = from_jsonl(&std::fs::read_to_string(run)?)?;
            print!("{}", trace_csv(&records));
            Ok(ExitCode::SUCCESS)
        }
    }
}
