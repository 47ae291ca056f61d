use gpsaf::baselines::BaselineKind;
use gpsaf::problems::{make_problem, PROBLEM_NAMES};
use gpsaf::{compare, run_baseline, violation, Budget, Solution, Values, Verdict};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const KINDS: [BaselineKind; 4] = [BaselineKind::Ga, BaselineKind::De, BaselineKind::Pso, BaselineKind::Nsga2];

fn problem_for(kind: BaselineKind) -> gpsaf::Problem {
    match kind {
        BaselineKind::Nsga2 => make_problem("zdt1", Some(3)).unwrap(),
        _ => make_problem("sphere", Some(3)).unwrap(),
    }
}

#[test]
fn ga_on_sphere_spends_exact_budget() {
    let p = make_problem("sphere", Some(2)).unwrap();
    let mut alg = BaselineKind::Ga.build(&p, 1).unwrap();
    let mut budget = Budget::new(30);
    let archive = run_baseline(alg.as_mut(), &p, &mut budget).unwrap();
    assert_eq!(archive.len(), 30);
    assert_eq!(budget.used(), 30);
}

#[test]
fn zero_budget_gives_empty_archive() {
    for kind in KINDS {
        let p = problem_for(kind);
        let mut alg = kind.build(&p, 1).unwrap();
        let archive = run_baseline(alg.as_mut(), &p, &mut Budget::new(0)).unwrap();
        assert!(archive.is_empty());
    }
}

#[test]
fn same_seed_gives_identical_archives() {
    for (kind, name) in [(BaselineKind::Ga, "g6"), (BaselineKind::De, "rosenbrock"), (BaselineKind::Pso, "ackley"), (BaselineKind::Nsga2, "zdt1")] {
        let p = make_problem(name, None).unwrap();
        let run = || {
            let mut alg = kind.build(&p, 42).unwrap();
            run_baseline(alg.as_mut(), &p, &mut Budget::new(97)).unwrap()
        };
        let (a, b) = (run(), run());
        assert_eq!(a.len(), 97);
        let bits = |arch: &gpsaf::Archive| -> Vec<u64> {
            arch.iter().flat_map(|s| s.x.iter().chain(s.f.as_ref().unwrap()).map(|v| v.to_bits()).collect::<Vec<_>>()).collect()
        };
        assert_eq!(bits(&a), bits(&b), "{kind:?}");
    }
}

#[test]
fn snapshot_is_independent() {
    for kind in KINDS {
        let p = problem_for(kind);
        let mut alg = kind.build(&p, 5).unwrap();
        run_baseline(alg.as_mut(), &p, &mut Budget::new(40)).unwrap();
        let mut untouched = alg.snapshot();
        let mut shadow = alg.snapshot();
        let designs = shadow.infill().unwrap();
        let fake: Vec<Solution> = designs.into_iter().map(|x| Solution::evaluated(x, vec![-1.0; p.n_obj()], vec![])).collect();
        shadow.advance(&fake).unwrap();
        shadow.reseed(99);
        assert_eq!(alg.infill().unwrap(), untouched.infill().unwrap(), "{kind:?}");
        assert_eq!(alg.population(), untouched.population());
    }
}

#[test]
fn random_samples_never_beat_known_optimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for name in PROBLEM_NAMES {
        let p = make_problem(name, None).unwrap();
        let Some(opt) = p.known_optimum() else { continue };
        let mut x = vec![0.0; p.n_var()];
        for _ in 0..1_000_000 {
            for (i, v) in x.iter_mut().enumerate() {
                *v = rng.gen_range(p.lower()[i]..=p.upper()[i]);
            }
            let e = p.evaluate(&x).unwrap();
            if e.g.iter().all(|g| *g <= 0.0) {
                assert!(e.f[0] >= opt - 1e-9, "{name}: {} at {x:?}", e.f[0]);
            }
        }
    }
}

fn feasible(f: f64) -> Solution {
    Solution::evaluated(vec![0.0], vec![f], vec![-1.0])
}

proptest! {
    #[test]
    fn compare_is_antisymmetric(f in prop::collection::vec(-10.0f64..10.0, 4), g in prop::collection::vec(-1.0f64..1.0, 4)) {
        let a = Solution::evaluated(vec![0.0], f[..2].to_vec(), g[..2].to_vec());
        let b = Solution::evaluated(vec![0.0], f[2..].to_vec(), g[2..].to_vec());
        let ab = compare(&a, &b, Values::True).unwrap();
        let ba = compare(&b, &a, Values::True).unwrap();
        let flipped = match ab { Verdict::AWins => Verdict::BWins, Verdict::BWins => Verdict::AWins, Verdict::Tie => Verdict::Tie };
        prop_assert_eq!(ba, flipped);
        prop_assert_ne!(compare(&a, &a, Values::True).unwrap(), Verdict::AWins);
    }

    #[test]
    fn scalar_wins_are_transitive(a in -10.0f64..10.0, b in -10.0f64..10.0, c in -10.0f64..10.0) {
        let (sa, sb, sc) = (feasible(a), feasible(b), feasible(c));
        if compare(&sa, &sb, Values::True).unwrap() == Verdict::AWins && compare(&sb, &sc, Values::True).unwrap() == Verdict::AWins {
            prop_assert_eq!(compare(&sa, &sc, Values::True).unwrap(), Verdict::AWins);
        }
    }

    #[test]
    fn feasible_beats_infeasible(fa in -10.0f64..10.0, fb in -10.0f64..10.0, gb in 1e-9f64..5.0) {
        let a = feasible(fa);
        let b = Solution::evaluated(vec![0.0], vec![fb], vec![gb]);
        prop_assert!(violation(&b, Values::True).unwrap() > 0.0);
        prop_assert_eq!(compare(&a, &b, Values::True).unwrap(), Verdict::AWins);
    }
}
