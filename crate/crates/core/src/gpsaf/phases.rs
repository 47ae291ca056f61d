use rand::seq::SliceRandom;
use rand::Rng as _;
use rand_distr::{Distribution, Normal};

use crate::algorithm::Algorithm;
use crate::error::{Error, Result};
use crate::rng::Rng;
use crate::solution::{compare_scaled, Solution, Values, Verdict};
use crate::surrogates::SurrogateEnsemble;

/// Designs as solutions carrying surrogate predictions.
pub fn predict_solutions(ensemble: &SurrogateEnsemble, designs: Vec<Vec<f64>>) -> Result<Vec<Solution>> {
    let (f, g) = ensemble.predict(&designs)?;
    Ok(designs
        .into_iter()
        .zip(f.into_iter().zip(g))
        .map(|(x, (f, g))| Solution { f_hat: Some(f), g_hat: Some(g), ..Solution::new(x) })
        .collect())
}

/// Tournament pre-filter: `alpha` infill sets compete slot by slot on
/// predicted values. The baseline is never advanced here. With `alpha == 1`
/// no ensemble is needed and the single infill set is returned untouched.
pub fn alpha_phase(
    baseline: &mut dyn Algorithm,
    ensemble: Option<&SurrogateEnsemble>,
    alpha: usize,
    scales: Option<&[f64]>,
    rng: &mut Rng,
) -> Result<Vec<Solution>> {
    if alpha < 1 {
        return Err(Error::Configuration("alpha must be at least 1".into()));
    }
    let first = baseline.infill()?;
    let mut p = match ensemble {
        Some(e) => predict_solutions(e, first)?,
        None if alpha == 1 => return Ok(first.into_iter().map(Solution::new).collect()),
        None => return Err(Error::State("alpha > 1 needs a fitted ensemble".into())),
    };
    let ensemble = ensemble.unwrap();
    for _ in 1..alpha {
        let q = predict_solutions(ensemble, baseline.infill()?)?;
        if q.len() != p.len() {
            return Err(Error::ContractViolation(format!(
                "infill batch size changed from {} to {}",
                p.len(),
                q.len()
            )));
        }
        for (pj, qj) in p.iter_mut().zip(q) {
            let replace = match compare_scaled(pj, &qj, Values::Predicted, scales)? {
                Verdict::BWins => true,
                Verdict::Tie => rng.gen_bool(0.5),
                Verdict::AWins => false,
            };
            if replace {
                *pj = qj;
            }
        }
    }
    Ok(p)
}

fn normalized(x: &[f64], lower: &[f64], upper: &[f64]) -> Vec<f64> {
    x.iter()
        .zip(lower.iter().zip(upper))
        .map(|(v, (l, u))| if u > l { (v - l) / (u - l) } else { 0.0 })
        .collect()
}

/// Index of the nearest reference point in bounds-normalized space; the
/// lowest index wins on equal distance.
pub fn nearest(x: &[f64], refs: &[Vec<f64>], lower: &[f64], upper: &[f64]) -> usize {
    let z = normalized(x, lower, upper);
    let mut best = (0, f64::INFINITY);
    for (j, r) in refs.iter().enumerate() {
        let d: f64 = normalized(r, lower, upper).iter().zip(&z).map(|(a, b)| (a - b) * (a - b)).sum();
        if d < best.1 {
            best = (j, d);
        }
    }
    best.0
}

/// Look-ahead: a snapshot of the baseline runs `beta` iterations on
/// predictions only. Every generated solution joins the cluster of its
/// nearest member of `p`. The baseline itself is untouched.
pub fn beta_phase(
    baseline: &dyn Algorithm,
    ensemble: Option<&SurrogateEnsemble>,
    p: &[Solution],
    beta: usize,
    bounds: (&[f64], &[f64]),
    rng: &mut Rng,
) -> Result<Vec<Vec<Solution>>> {
    let mut clusters = vec![Vec::new(); p.len()];
    if beta == 0 {
        return Ok(clusters);
    }
    let ensemble = ensemble.ok_or_else(|| Error::State("beta > 0 needs a fitted ensemble".into()))?;
    let mut shadow = baseline.snapshot();
    shadow.reseed(rng.gen());
    let refs: Vec<Vec<f64>> = p.iter().map(|s| s.x.clone()).collect();
    for _ in 0..beta {
        let trace = predict_solutions(ensemble, shadow.infill()?)?;
        let as_true = trace.iter().map(|s| s.predicted_as_true()).collect::<Result<Vec<_>>>()?;
        shadow.advance(&as_true)?;
        for s in trace {
            let j = nearest(&s.x, &refs, bounds.0, bounds.1);
            clusters[j].push(s);
        }
    }
    Ok(clusters)
}

/// Compares predictions perturbed by independent `Normal(0, e_i)` noise on
/// every objective and constraint. Returns true when `a` wins; ties are a
/// coin flip.
pub fn compare_noisy(a: &Solution, b: &Solution, e: &[f64], scales: Option<&[f64]>, rng: &mut Rng) -> Result<bool> {
    let noisy = |s: &Solution, rng: &mut Rng| -> Result<Solution> {
        let f = s.objectives(Values::Predicted)?;
        let g = s.constraints(Values::Predicted)?;
        if e.len() != f.len() + g.len() {
            return Err(Error::ContractViolation("error estimate does not match function count".into()));
        }
        let mut values = f.iter().chain(g).zip(e).map(|(v, sd)| {
            let n = Normal::new(0.0, *sd).map_err(|_| Error::ContractViolation(format!("invalid error estimate {sd}")))?;
            Ok(v + n.sample(rng))
        });
        let f_hat = values.by_ref().take(f.len()).collect::<Result<Vec<_>>>()?;
        let g_hat = values.collect::<Result<Vec<_>>>()?;
        Ok(Solution { f_hat: Some(f_hat), g_hat: Some(g_hat), ..Solution::new(Vec::new()) })
    };
    if e.iter().any(|v| *v < 0.0) {
        return Err(Error::ContractViolation("negative error estimate".into()));
    }
    let na = noisy(a, rng)?;
    let nb = noisy(b, rng)?;
    Ok(match compare_scaled(&na, &nb, Values::Predicted, scales)? {
        Verdict::AWins => true,
        Verdict::BWins => false,
        Verdict::Tie => rng.gen_bool(0.5),
    })
}

/// Knockout tournament under noisy comparisons. Returns `min(k, |c|)`
/// distinct members of `c`.
pub fn prob_knockout_tournament(
    c: &[Solution],
    e: &[f64],
    k: usize,
    scales: Option<&[f64]>,
    rng: &mut Rng,
) -> Result<Vec<Solution>> {
    if k < 1 {
        return Err(Error::Configuration("tournament needs k >= 1".into()));
    }
    if c.is_empty() {
        return Err(Error::EmptyInput("tournament over an empty set".into()));
    }
    let target = k.min(c.len());
    let mut current: Vec<usize> = (0..c.len()).collect();
    current.shuffle(rng);
    let mut losers: Vec<usize> = Vec::new();
    while current.len() > target {
        let mut round = current.clone();
        if round.len() % 2 == 1 {
            let again = round[rng.gen_range(0..round.len())];
            round.push(again);
        }
        let mut winners: Vec<usize> = Vec::with_capacity(round.len() / 2);
        for pair in round.chunks(2) {
            let w = if pair[0] == pair[1] || compare_noisy(&c[pair[0]], &c[pair[1]], e, scales, rng)? {
                pair[0]
            } else {
                pair[1]
            };
            if !winners.contains(&w) {
                winners.push(w);
            }
        }
        losers = current.iter().copied().filter(|i| !winners.contains(i)).collect();
        current = winners;
    }
    if current.len() < target {
        losers.shuffle(rng);
        current.extend(losers.into_iter().take(target - current.len()));
    }
    Ok(current.into_iter().map(|i| c[i].clone()).collect())
}

/// `(|U_j| / max |U|)^gamma`, zero for empty clusters.
pub fn replacement_probabilities(sizes: &[usize], gamma: f64) -> Vec<f64> {
    let max = sizes.iter().copied().max().unwrap_or(0);
    sizes
        .iter()
        .map(|&s| if s == 0 { 0.0 } else { (s as f64 / max as f64).powf(gamma) })
        .collect()
}

/// Replaces `p[j]` by `winners[j]` with the cluster's replacement
/// probability. Returns which slots were replaced.
pub fn replacement_phase(
    p: &mut [Solution],
    sizes: &[usize],
    winners: &[Option<Solution>],
    gamma: f64,
    rng: &mut Rng,
) -> Result<Vec<bool>> {
    if sizes.len() != p.len() || winners.len() != p.len() {
        return Err(Error::ContractViolation("clusters do not align with the infill batch".into()));
    }
    let rho = replacement_probabilities(sizes, gamma);
    let mut replaced = vec![false; p.len()];
    for j in 0..p.len() {
        if sizes[j] == 0 {
            continue;
        }
        let v = winners[j]
            .as_ref()
            .ok_or_else(|| Error::ContractViolation("non-empty cluster without a winner".into()))?;
        if rng.gen::<f64>() < rho[j] {
            p[j] = v.clone();
            replaced[j] = true;
        }
    }
    Ok(replaced)
}
