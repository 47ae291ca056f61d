use std::process::Command;

use gpsaf::problems::{make_problem, reference_front};
use gpsaf::{Archive, Solution};
use gpsaf_bench::{run_experiment, AlgorithmConfig, ExperimentConfig, Indicator, RankTable};

fn small_config() -> ExperimentConfig {
    let mut c = ExperimentConfig::new(&["sphere"], vec![AlgorithmConfig::plain("ga"), AlgorithmConfig::wrapped("ga")]);
    c.n_var = Some(3);
    c.se_max = 40;
    c.algorithms[1].alpha = Some(5);
    c.algorithms[1].beta = Some(2);
    c
}

#[test]
fn indicator_examples() {
    let sphere = make_problem("sphere", Some(2)).unwrap();
    let mut a = Archive::new();
    a.push(Solution::evaluated(vec![1.0, 1.0], vec![2.0], vec![])).unwrap();
    a.push(Solution::evaluated(vec![0.0, 0.0], vec![0.0], vec![])).unwrap();
    let ind = Indicator::for_problem(&sphere).unwrap();
    assert_eq!(ind.evaluate(&a).unwrap(), 0.0);
    assert_eq!(ind.trace(&a).unwrap(), vec![2.0, 0.0]);

    let g6 = make_problem("g6", None).unwrap();
    let mut a = Archive::new();
    a.push(Solution::evaluated(vec![0.0, 0.0], vec![-1.0], vec![1.0, 0.0])).unwrap();
    assert_eq!(Indicator::for_problem(&g6).unwrap().evaluate(&a).unwrap(), f64::INFINITY);

    let zdt1 = make_problem("zdt1", None).unwrap();
    let ind = Indicator::for_problem(&zdt1).unwrap();
    let mut a = Archive::new();
    for f in reference_front("ZDT1", 500).unwrap() {
        a.push(Solution::evaluated(vec![0.0], f, vec![])).unwrap();
    }
    assert!(ind.evaluate(&a).unwrap().abs() < 1e-12);
    let trace = ind.trace(&a).unwrap();
    assert!(trace.windows(2).all(|w| w[1] <= w[0]));
    assert!(trace.last().unwrap().abs() < 1e-12);
}

#[test]
fn grid_accounting_and_reproducibility() {
    let c = small_config();
    let records = run_experiment(&c, 1).unwrap();
    assert_eq!(records.len(), 22);
    assert!(records.iter().all(|r| r.error.is_none() && r.evaluations == 40));
    for r in &records {
        assert!(r.trace.windows(2).all(|w| w[1] <= w[0]));
    }
    let table = RankTable::from_records(&records, 0.05).unwrap();
    assert_eq!(table.rows.len(), 1);
    let again = RankTable::from_records(&run_experiment(&c, 2).unwrap(), 0.05).unwrap();
    assert_eq!(table.to_csv(), again.to_csv());
}

#[test]
fn unknown_problem_fails_fast() {
    let mut c = small_config();
    c.problems.push("no-such-problem".into());
    assert!(run_experiment(&c, 1).is_err());
}

fn bench() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bench"))
}

#[test]
fn cli_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("exp.toml");
    let mut c = small_config();
    c.n_runs = 3;
    std::fs::write(&config, c.to_toml()).unwrap();
    let out = dir.path().join("out");
    let status = bench().args(["run", "--config"]).arg(&config).arg("--out").arg(&out).args(["--jobs", "2", "--seed", "5"]).status().unwrap();
    assert_eq!(status.code(), Some(0));
    let runs = std::fs::read_to_string(out.join("runs.jsonl")).unwrap();
    assert_eq!(runs.lines().count(), 6);
    assert!(runs.contains("\"seed\":5"));
    let md = std::fs::read_to_string(out.join("ranks.md")).unwrap();
    assert!(md.contains("GPSAF-GA") && md.contains("**"));

    let csv = dir.path().join("again.csv");
    let status = bench().args(["rank", "--in"]).arg(&out).arg("--out").arg(&csv).status().unwrap();
    assert_eq!(status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&csv).unwrap(), std::fs::read_to_string(out.join("ranks.csv")).unwrap());

    let trace = bench().args(["trace", "--run"]).arg(out.join("runs.jsonl")).output().unwrap();
    let text = String::from_utf8(trace.stdout).unwrap();
    assert!(text.starts_with("problem,algorithm,seed,evaluation,best"));
    assert_eq!(text.lines().count(), 1 + 6 * 40);

    let env = bench().args(["run", "--config"]).arg(&config).arg("--out").arg(dir.path().join("env")).env("GPSAF_SEED", "9").status().unwrap();
    assert_eq!(env.code(), Some(0));
    assert!(std::fs::read_to_string(dir.path().join("env/runs.jsonl")).unwrap().contains("\"seed\":9"));
}

#[test]
fn cli_validation_and_listing() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("bad.toml");
    std::fs::write(&config, "problems = [\"nope\"]\n[[algorithms]]\nbaseline = \"ga\"\n").unwrap();
    let status = bench().args(["run", "--config"]).arg(&config).arg("--out").arg(dir.path()).status().unwrap();
    assert_eq!(status.code(), Some(2));
    assert!(!dir.path().join("runs.jsonl").exists());

    let list = bench().arg("list-problems").output().unwrap();
    let text = String::from_utf8(list.stdout).unwrap();
    assert!(text.contains("G24,2,1,2") && text.contains("ZDT1,10,2,0"));
}
