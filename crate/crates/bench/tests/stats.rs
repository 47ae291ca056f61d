use gpsaf_bench::{domination_ranks, wilcoxon_ranksum_less};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// P(W <= w) by enumerating every assignment of ranks to the first sample.
fn brute_force_p(x: &[f64], y: &[f64]) -> f64 {
    let mut pooled: Vec<f64> = x.iter().chain(y).copied().collect();
    pooled.sort_by(f64::total_cmp);
    let rank = |v: f64| pooled.iter().position(|p| *p == v).unwrap() + 1;
    let w: usize = x.iter().map(|v| rank(*v)).sum();
    let total = pooled.len();
    let (mut hits, mut all) = (0u64, 0u64);
    for mask in 0u32..(1 << total) {
        if mask.count_ones() as usize != x.len() {
            continue;
        }
        all += 1;
        let s: usize = (0..total).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).sum();
        if s <= w {
            hits += 1;
        }
    }
    hits as f64 / all as f64
}

#[test]
fn exact_p_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..60 {
        let n = rng.gen_range(2..=6);
        let m = rng.gen_range(2..=(12 - n).min(8));
        let mut values: Vec<f64> = (0..n + m).map(|i| i as f64 + rng.gen::<f64>() * 0.5).collect();
        values.shuffle(&mut rng);
        let (x, y) = values.split_at(n);
        let r = wilcoxon_ranksum_less(x, y, 0.05).unwrap();
        assert!(r.exact);
        assert!((r.p - brute_force_p(x, y)).abs() < 1e-12);
    }
}

#[test]
fn approximation_is_close_to_exact_for_ties_free_large_samples() {
    let x: Vec<f64> = (0..15).map(|i| i as f64 * 2.0).collect();
    let y: Vec<f64> = (0..15).map(|i| i as f64 * 2.0 + 3.0).collect();
    let r = wilcoxon_ranksum_less(&x, &y, 0.05).unwrap();
    assert!(!r.exact);
    assert!(r.p > 0.0 && r.p < 0.5);
}

#[test]
fn paper_worked_example() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let around = |c: f64, rng: &mut ChaCha8Rng| -> Vec<f64> { (0..11).map(|_| c + rng.gen::<f64>()).collect() };
    let samples = vec![around(0.0, &mut rng), around(10.0, &mut rng), around(10.0, &mut rng), around(10.0, &mut rng), around(20.0, &mut rng)];
    let row = domination_ranks(&samples, 0.05).unwrap();
    assert_eq!(row.dominated_by, vec![0, 1, 1, 1, 4]);
    assert_eq!(row.ranks, vec![1.0, 3.0, 3.0, 3.0, 5.0]);
}

fn sample_table() -> impl Strategy<Value = Vec<Vec<f64>>> {
    (2usize..7, 2usize..8).prop_flat_map(|(m, runs)| {
        prop::collection::vec(
            (0.0f64..5.0).prop_flat_map(move |shift| prop::collection::vec(0.0f64..3.0, runs).prop_map(move |v| v.iter().map(|x| (x + shift).round()).collect::<Vec<f64>>())),
            m,
        )
    })
}

proptest! {
    #[test]
    fn rank_sum_is_conserved(samples in sample_table()) {
        let m = samples.len() as f64;
        let row = domination_ranks(&samples, 0.05).unwrap();
        prop_assert!((row.ranks.iter().sum::<f64>() - m * (m + 1.0) / 2.0).abs() < 1e-9);
    }

    #[test]
    fn one_sided_tests_never_both_reject(x in prop::collection::vec(-5.0f64..5.0, 2..12), y in prop::collection::vec(-5.0f64..5.0, 2..12)) {
        let a = wilcoxon_ranksum_less(&x, &y, 0.05).unwrap();
        let b = wilcoxon_ranksum_less(&y, &x, 0.05).unwrap();
        prop_assert!(!(a.reject && b.reject));
    }
}
