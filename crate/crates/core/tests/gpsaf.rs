use gpsaf::baselines::{BaselineKind, Ga, GaConfig};
use gpsaf::gpsaf::{
    alpha_phase, beta_phase, compare_noisy, nearest, prob_knockout_tournament, replacement_phase,
    replacement_probabilities, run_gpsaf, run_gpsaf_traced, GpsafConfig,
};
use gpsaf::problems::make_problem;
use gpsaf::rng::stream;
use gpsaf::surrogates::{EnsembleOptions, SurrogateEnsemble};
use gpsaf::{compare, run_baseline, Algorithm, Archive, Budget, Error, Solution, Values, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn predicted(f: &[f64], g: &[f64]) -> Solution {
    Solution { f_hat: Some(f.to_vec()), g_hat: Some(g.to_vec()), ..Solution::new(vec![0.0]) }
}

fn fitted_sphere(n: usize, seed: u64) -> (gpsaf::Problem, Box<dyn Algorithm>, SurrogateEnsemble) {
    let p = make_problem("sphere", Some(n)).unwrap();
    let mut alg = BaselineKind::Ga.build(&p, seed).unwrap();
    let archive = run_baseline(alg.as_mut(), &p, &mut Budget::new(40)).unwrap();
    let mut e = SurrogateEnsemble::new(&p, EnsembleOptions::default());
    e.fit(&archive).unwrap();
    (p, alg, e)
}

#[test]
fn fallback_matches_baseline_bit_for_bit() {
    for (kind, name) in [(BaselineKind::Ga, "rastrigin"), (BaselineKind::De, "g6"), (BaselineKind::Pso, "sphere"), (BaselineKind::Nsga2, "zdt2")] {
        let p = make_problem(name, None).unwrap();
        let config = GpsafConfig { alpha: 1, beta: 0, se_max: 85, seed: 17, ..GpsafConfig::default() };
        let mut wrapped = kind.build(&p, 17).unwrap();
        let a = run_gpsaf(wrapped.as_mut(), &p, &config).unwrap();
        let mut bare = kind.build(&p, 17).unwrap();
        let b = run_baseline(bare.as_mut(), &p, &mut Budget::new(85)).unwrap();
        assert_eq!(a, b, "{kind:?} on {name}");
    }
}

#[test]
fn budget_edges() {
    let p = make_problem("sphere", Some(3)).unwrap();
    let mut alg = BaselineKind::Ga.build(&p, 1).unwrap();
    let config = GpsafConfig { se_max: 20, doe_size: 20, ..GpsafConfig::default() };
    assert_eq!(run_gpsaf(alg.as_mut(), &p, &config).unwrap().len(), 20);

    let mut alg = BaselineKind::Ga.build(&p, 1).unwrap();
    let config = GpsafConfig { se_max: 10, doe_size: 20, ..GpsafConfig::default() };
    assert!(matches!(run_gpsaf(alg.as_mut(), &p, &config), Err(Error::Budget(_))));
}

#[test]
fn default_run_spends_exact_budget() {
    let p = make_problem("g9", None).unwrap();
    let mut alg = BaselineKind::De.build(&p, 3).unwrap();
    let config = GpsafConfig { se_max: 57, seed: 3, trace: true, ..GpsafConfig::default() };
    let run = run_gpsaf_traced(alg.as_mut(), &p, &config).unwrap();
    assert_eq!(run.archive.len(), 57);
    assert_eq!(run.trace.last().unwrap().evaluations, 57);
    for t in &run.trace {
        assert_eq!(t.cluster_sizes.iter().sum::<usize>(), config.beta * 10);
        assert!(t.rho.iter().all(|r| (0.0..=1.0).contains(r)));
        assert!(t.rho.iter().any(|r| *r == 1.0));
        assert!(t.error.iter().all(|e| *e >= 0.0));
    }
    for s in alg.population() {
        assert!(s.f_hat.is_none() && s.f.is_some());
    }
}

#[test]
fn alpha_one_returns_the_infill_untouched() {
    let (_, mut alg, e) = fitted_sphere(3, 2);
    let mut twin = alg.snapshot();
    let p = alpha_phase(alg.as_mut(), Some(&e), 1, None, &mut stream(0, "a")).unwrap();
    let raw = twin.infill().unwrap();
    assert_eq!(p.iter().map(|s| s.x.clone()).collect::<Vec<_>>(), raw);
}

#[test]
fn alpha_tournament_lowers_predicted_values() {
    let mut wins = 0;
    for seed in 0..20 {
        let (_, mut alg, e) = fitted_sphere(5, seed);
        let mut twin = alg.snapshot();
        let p = alpha_phase(alg.as_mut(), Some(&e), 30, None, &mut stream(seed, "a")).unwrap();
        let raw = e.predict(&twin.infill().unwrap()).unwrap().0;
        let mean = |v: Vec<f64>| v.iter().sum::<f64>() / v.len() as f64;
        let filtered = mean(p.iter().map(|s| s.f_hat.as_ref().unwrap()[0]).collect());
        let single = mean(raw.iter().map(|f| f[0]).collect());
        if filtered < single {
            wins += 1;
        }
    }
    assert_eq!(wins, 20);
}

#[test]
fn alpha_two_takes_a_strictly_better_challenger() {
    // A two-slot algorithm whose second infill is better in slot 0 only.
    #[derive(Clone)]
    struct Scripted(usize);
    impl Algorithm for Scripted {
        fn name(&self) -> &str {
            "scripted"
        }
        fn infill(&mut self) -> gpsaf::Result<Vec<Vec<f64>>> {
            self.0 += 1;
            Ok(if self.0 == 1 { vec![vec![0.5], vec![0.1]] } else { vec![vec![0.2], vec![0.9]] })
        }
        fn advance(&mut self, _: &[Solution]) -> gpsaf::Result<()> {
            Ok(())
        }
        fn snapshot(&self) -> Box<dyn Algorithm> {
            Box::new(self.clone())
        }
        fn reseed(&mut self, _: u64) {}
        fn population(&self) -> Vec<Solution> {
            Vec::new()
        }
    }
    let p = make_problem("sphere", Some(1)).unwrap();
    let mut archive = Archive::new();
    for i in 0..8 {
        let x = -1.0 + i as f64 * 0.3;
        archive.push(Solution::evaluated(vec![x], vec![x * x], vec![])).unwrap();
    }
    let mut e = SurrogateEnsemble::new(&p, EnsembleOptions::default());
    e.fit(&archive).unwrap();
    let out = alpha_phase(&mut Scripted(0), Some(&e), 2, None, &mut stream(0, "a")).unwrap();
    assert_eq!(out[0].x, vec![0.2]);
    assert_eq!(out[1].x, vec![0.1]);
}

#[test]
fn beta_zero_gives_empty_clusters_and_no_ensemble_needed() {
    let p = make_problem("sphere", Some(2)).unwrap();
    let alg = BaselineKind::Ga.build(&p, 0).unwrap();
    let pts = vec![Solution::new(vec![0.0, 0.0])];
    let u = beta_phase(alg.as_ref(), None, &pts, 0, (p.lower(), p.upper()), &mut stream(0, "b")).unwrap();
    assert_eq!(u, vec![Vec::<Solution>::new()]);
    assert!(matches!(
        beta_phase(alg.as_ref(), None, &pts, 1, (p.lower(), p.upper()), &mut stream(0, "b")),
        Err(Error::State(_))
    ));
}

#[test]
fn beta_partitions_the_trace_and_leaves_baseline_alone() {
    let (p, mut alg, e) = fitted_sphere(4, 7);
    let before = alg.snapshot();
    let pop_before = alg.population();
    let batch = alpha_phase(alg.as_mut(), Some(&e), 1, None, &mut stream(0, "a")).unwrap();
    let mut reference = before.snapshot();
    reference.infill().unwrap();
    let u = beta_phase(alg.as_ref(), Some(&e), &batch, 5, (p.lower(), p.upper()), &mut stream(1, "b")).unwrap();
    assert_eq!(u.len(), 10);
    assert_eq!(u.iter().map(Vec::len).sum::<usize>(), 50);
    assert_eq!(alg.population(), pop_before);
    assert_eq!(alg.infill().unwrap(), reference.infill().unwrap());
}

#[test]
fn nearest_assignment_on_separated_points() {
    let lower = [0.0, 0.0];
    let upper = [10.0, 1.0];
    let refs = vec![vec![1.0, 0.1], vec![9.0, 0.9]];
    for x in [[0.0, 0.0], [2.0, 0.5], [4.9, 0.0]] {
        assert_eq!(nearest(&x, &refs, &lower, &upper), 0);
    }
    assert_eq!(nearest(&[6.0, 0.6], &refs, &lower, &upper), 1);
    // bounds normalization: 1.5 units along the wide axis is nearer than 0.4 along the narrow one
    let refs = vec![vec![5.0, 0.0], vec![3.5, 0.5]];
    assert_eq!(nearest(&[5.0, 0.5], &refs, &lower, &upper), 1);
}

#[test]
fn pkt_contracts_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..1000 {
        let n = rng.gen_range(1..12);
        let k = rng.gen_range(1..8);
        let c: Vec<Solution> = (0..n)
            .map(|i| Solution { x: vec![i as f64], ..predicted(&[rng.gen(), rng.gen()], &[rng.gen::<f64>() - 0.8]) })
            .collect();
        let e = [rng.gen::<f64>() * 0.3, 0.1, 0.0];
        let out = prob_knockout_tournament(&c, &e, k, None, &mut ChaCha8Rng::seed_from_u64(rng.gen())).unwrap();
        assert_eq!(out.len(), k.min(n));
        for (i, s) in out.iter().enumerate() {
            assert!(c.contains(s));
            assert!(!out[..i].contains(s));
        }
    }
    assert!(matches!(prob_knockout_tournament(&[predicted(&[1.0], &[])], &[0.0], 0, None, &mut stream(0, "p")), Err(Error::Configuration(_))));
}

#[test]
fn pkt_dominator_wins_every_bracket() {
    let mut c: Vec<Solution> = vec![
        Solution { x: vec![0.0], ..predicted(&[0.0, 0.0], &[]) },
        Solution { x: vec![1.0], ..predicted(&[1.0, 2.0], &[]) },
        Solution { x: vec![2.0], ..predicted(&[2.0, 1.0], &[]) },
        Solution { x: vec![3.0], ..predicted(&[1.5, 1.5], &[]) },
    ];
    let mut orders = Vec::new();
    permutations(&mut c, 0, &mut orders);
    assert_eq!(orders.len(), 24);
    for (i, order) in orders.iter().enumerate() {
        for seed in 0..5 {
            let out = prob_knockout_tournament(order, &[0.0, 0.0], 1, None, &mut stream(seed, &format!("{i}"))).unwrap();
            assert_eq!(out[0].x, vec![0.0]);
        }
    }
    let single = [predicted(&[3.0], &[])];
    assert_eq!(prob_knockout_tournament(&single, &[0.0], 1, None, &mut stream(0, "p")).unwrap(), single.to_vec());
}

fn permutations(v: &mut Vec<Solution>, k: usize, out: &mut Vec<Vec<Solution>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, out);
        v.swap(k, i);
    }
}

#[test]
fn noiseless_compare_matches_deterministic_compare() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut noise = stream(3, "noise");
    for _ in 0..100_000 {
        let a = predicted(&[rng.gen_range(0..3) as f64, rng.gen()], &[rng.gen::<f64>() - 0.5]);
        let b = predicted(&[rng.gen_range(0..3) as f64, rng.gen()], &[rng.gen::<f64>() - 0.5]);
        let won = compare_noisy(&a, &b, &[0.0; 3], None, &mut noise).unwrap();
        match compare(&a, &b, Values::Predicted).unwrap() {
            Verdict::AWins => assert!(won),
            Verdict::BWins => assert!(!won),
            Verdict::Tie => {}
        }
    }
    assert!(compare_noisy(&predicted(&[0.0], &[]), &predicted(&[1.0], &[]), &[-1.0], None, &mut noise).is_err());
}

#[test]
fn noisy_compare_win_rates() {
    let a = predicted(&[0.0], &[]);
    let b = predicted(&[1.0], &[]);
    let rate = |e: f64| {
        let mut rng = stream(11, "rate");
        (0..10_000).filter(|_| compare_noisy(&a, &b, &[e], None, &mut rng).unwrap()).count() as f64 / 1e4
    };
    assert!((rate(100.0) - 0.5).abs() <= 0.03);
    assert!(rate(0.1) >= 0.999);
    assert_eq!(a.f_hat, Some(vec![0.0]));
}

#[test]
fn replacement_probability_fixtures() {
    assert_eq!(replacement_probabilities(&[4, 1, 0], 0.5), vec![1.0, 0.5, 0.0]);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let sizes: Vec<usize> = (0..6).map(|_| rng.gen_range(0..20)).collect();
        let g1 = rng.gen_range(0.1..3.0);
        let g2 = g1 + rng.gen_range(0.0..3.0);
        let (r1, r2) = (replacement_probabilities(&sizes, g1), replacement_probabilities(&sizes, g2));
        let max = *sizes.iter().max().unwrap();
        for j in 0..6 {
            if sizes[j] > 0 {
                assert!(r1[j] > 0.0 && r1[j] <= 1.0);
                assert!(r2[j] <= r1[j] + 1e-15);
                if sizes[j] == max {
                    assert_eq!(r1[j], 1.0);
                }
            }
            for i in 0..6 {
                if sizes[i] <= sizes[j] {
                    assert!(r1[i] <= r1[j]);
                }
            }
        }
    }
}

#[test]
fn replacement_frequency_matches_rho() {
    let sizes = [4, 1, 0, 2];
    let rho = replacement_probabilities(&sizes, 0.5);
    let winners: Vec<Option<Solution>> = sizes.iter().map(|&s| (s > 0).then(|| Solution::new(vec![1.0]))).collect();
    let mut counts = [0usize; 4];
    let mut rng = stream(8, "replace");
    for _ in 0..10_000 {
        let mut p: Vec<Solution> = (0..4).map(|_| Solution::new(vec![0.0])).collect();
        let replaced = replacement_phase(&mut p, &sizes, &winners, 0.5, &mut rng).unwrap();
        for j in 0..4 {
            assert_eq!(replaced[j], p[j].x == vec![1.0]);
            counts[j] += replaced[j] as usize;
        }
    }
    for j in 0..4 {
        assert!((counts[j] as f64 / 1e4 - rho[j]).abs() <= 0.02, "slot {j}");
    }
    assert_eq!(counts[0], 10_000);
    assert_eq!(counts[2], 0);
}

#[test]
fn gpsaf_runs_are_deterministic() {
    let p = make_problem("zdt1", Some(4)).unwrap();
    let config = GpsafConfig { se_max: 50, seed: 9, ..GpsafConfig::default() };
    let run = || {
        let mut alg = BaselineKind::Nsga2.build(&p, 9).unwrap();
        run_gpsaf(alg.as_mut(), &p, &config).unwrap()
    };
    assert_eq!(run(), run());
}

#[test]
fn custom_algorithm_can_be_wrapped() {
    let p = make_problem("sphere", Some(2)).unwrap();
    let config = GaConfig { pop_size: 10, n_offspring: 4, ..GaConfig::default() };
    let mut alg = Ga::new(p.clone(), config, 4).unwrap();
    let gp = GpsafConfig { se_max: 30, doe_size: 10, alpha: 5, beta: 2, seed: 4, ..GpsafConfig::default() };
    let archive = run_gpsaf(&mut alg, &p, &gp).unwrap();
    assert_eq!(archive.len(), 30);
}
