//! Performance indicators for objective-vector sets.

use crate::error::{Error, Result};

fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt()
}

/// Inverted generational distance: mean distance from each reference point
/// to its nearest obtained point.
pub fn igd(obtained: &[Vec<f64>], reference: &[Vec<f64>]) -> Result<f64> {
    if obtained.is_empty() || reference.is_empty() {
        return Err(Error::EmptyInput("IGD needs non-empty point sets".into()));
    }
    let m = reference[0].len();
    if obtained.iter().chain(reference).any(|p| p.len() != m) {
        return Err(Error::ContractViolation("IGD point dimensions differ".into()));
    }
    let total: f64 = reference
        .iter()
        .map(|r| {
            obtained
                .iter()
                .map(|o| distance(o, r))
                .fold(f64::INFINITY, f64::min)
        })
        .sum();
    Ok(total / reference.len() as f64)
}

fn hv2(points: &mut [[f64; 2]], reference: [f64; 2]) -> f64 {
    points.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
    let mut floor = reference[1];
    let mut area = 0.0;
    for p in points.iter() {
        if p[1] < floor {
            area += (reference[0] - p[0]) * (floor - p[1]);
            floor = p[1];
        }
    }
    area
}

/// Exact hypervolume dominated by `points` and bounded by `reference`, for
/// two or three objectives. Points not strictly better than the reference in
/// every objective contribute nothing and are dropped.
pub fn hypervolume(points: &[Vec<f64>], reference: &[f64]) -> Result<f64> {
    let m = reference.len();
    if !(2..=3).contains(&m) {
        return Err(Error::UnsupportedDimension(m));
    }
    if points.iter().any(|p| p.len() != m) {
        return Err(Error::ContractViolation("hypervolume point dimensions differ".into()));
    }
    let inside: Vec<&Vec<f64>> = points
        .iter()
        .filter(|p| p.iter().zip(reference).all(|(v, r)| v < r))
        .collect();
    if inside.is_empty() {
        return Ok(0.0);
    }
    if m == 2 {
        let mut pts: Vec<[f64; 2]> = inside.iter().map(|p| [p[0], p[1]]).collect();
        return Ok(hv2(&mut pts, [reference[0], reference[1]]));
    }
    // sweep along the third objective, integrating 2-D slices
    let mut sorted = inside;
    sorted.sort_by(|a, b| a[2].total_cmp(&b[2]));
    let mut volume = 0.0;
    let mut slice: Vec<[f64; 2]> = Vec::with_capacity(sorted.len());
    for (k, p) in sorted.iter().enumerate() {
        slice.push([p[0], p[1]]);
        let top = sorted.get(k + 1).map_or(reference[2], |q| q[2]);
        let depth = top - p[2];
        if depth > 0.0 {
            let mut s = slice.clone();
            volume += hv2(&mut s, [reference[0], reference[1]]) * depth;
        }
    }
    Ok(volume)
}

/// Non-dominated subset of `points`, first occurrence kept for duplicates.
pub fn non_dominated(points: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = Vec::new();
    for (i, p) in points.iter().enumerate() {
        let beaten = points
            .iter()
            .enumerate()
            .any(|(j, q)| j != i && (crate::solution::dominates(q, p) || (j < i && q == p)));
        if !beaten {
            out.push(p.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn igd_fixtures() {
        let r = vec![vec![0.0, 0.0], vec![1.0, 1.0]];
        assert_eq!(igd(&r, &r).unwrap(), 0.0);
        assert_eq!(igd(&[vec![3.0, 4.0]], &[vec![0.0, 0.0]]).unwrap(), 5.0);
        let v = igd(&[vec![0.0, 0.0]], &r).unwrap();
        assert!((v - 2f64.sqrt() / 2.0).abs() < 1e-15);
        assert!(matches!(igd(&[], &r), Err(Error::EmptyInput(_))));
    }

    #[test]
    fn hypervolume_fixtures() {
        let hv = hypervolume(&[vec![1.0, 2.0], vec![2.0, 1.0]], &[3.0, 3.0]).unwrap();
        assert_eq!(hv, 3.0);
        assert_eq!(hypervolume(&[vec![0.0, 0.0]], &[1.0, 1.0]).unwrap(), 1.0);
        assert_eq!(hypervolume(&[vec![5.0, 0.0]], &[1.0, 1.0]).unwrap(), 0.0);
        assert_eq!(hypervolume(&[], &[1.0, 1.0]).unwrap(), 0.0);
        let cube = hypervolume(&[vec![0.0, 0.0, 0.0]], &[1.0, 2.0, 3.0]).unwrap();
        assert_eq!(cube, 6.0);
        // two boxes of volume 2 overlapping in a unit cube
        let l = hypervolume(&[vec![0.0, 1.0, 1.0], vec![1.0, 0.0, 1.0]], &[2.0, 2.0, 2.0]).unwrap();
        assert_eq!(l, 3.0);
        assert!(matches!(
            hypervolume(&[vec![0.0; 4]], &[1.0; 4]),
            Err(Error::UnsupportedDimension(4))
        ));
    }

    #[test]
    fn non_dominated_filter() {
        let pts = vec![vec![1.0, 2.0], vec![2.0, 2.0], vec![2.0, 1.0], vec![1.0, 2.0]];
        assert_eq!(non_dominated(&pts), vec![vec![1.0, 2.0], vec![2.0, 1.0]]);
    }
}
