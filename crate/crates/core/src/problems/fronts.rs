//! Reference Pareto fronts and their CSV format.

use std::f64::consts::PI;

use super::zdt::{ZDT3_SEGMENTS, ZDT6_F1_MIN};
use super::indicators::non_dominated;
use crate::error::{Error, Result};

const BNH: &str = include_str!("../../data/fronts/BNH.csv");
const SRN: &str = include_str!("../../data/fronts/SRN.csv");
const TNK: &str = include_str!("../../data/fronts/TNK.csv");
const OSY: &str = include_str!("../../data/fronts/OSY.csv");

/// C-style `%.12g`.
pub fn format_g12(v: f64) -> String {
    const P: usize = 12;
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let sci = format!("{:.*e}", P - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent digits");
    let trim = |s: &str| -> String {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s.to_string()
        }
    };
    if exp < -4 || exp >= P as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", trim(mantissa), sign, exp.abs())
    } else {
        let decimals = (P as i32 - 1 - exp) as usize;
        trim(&format!("{:.*}", decimals, v))
    }
}

/// One objective vector per line, comma separated, `%.12g`, no header.
pub fn write_front_csv(points: &[Vec<f64>]) -> String {
    let mut out = String::new();
    for p in points {
        let row: Vec<String> = p.iter().map(|v| format_g12(*v)).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn parse_front_csv(text: &str) -> Result<Vec<Vec<f64>>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<f64>()
                        .map_err(|_| Error::ContractViolation(format!("bad front value `{t}`")))
                })
                .collect()
        })
        .collect()
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

/// Evenly thins `pts` (kept in order) to at most `n` points, endpoints included.
fn thin(pts: Vec<Vec<f64>>, n: usize) -> Vec<Vec<f64>> {
    if pts.len() <= n || n == 0 {
        return pts;
    }
    if n == 1 {
        return vec![pts[0].clone()];
    }
    (0..n)
        .map(|i| {
            let k = (i as f64 * (pts.len() - 1) as f64 / (n - 1) as f64).round() as usize;
            pts[k].clone()
        })
        .collect()
}

/// Deterministic well-spread points on the unit 2-simplex.
fn simplex3(n: usize) -> Vec<[f64; 3]> {
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    (0..n)
        .map(|i| {
            let u = (i as f64 + 0.5) / n as f64;
            let v = (i as f64 * phi).fract();
            let s = u.sqrt();
            [1.0 - s, s * (1.0 - v), s * v]
        })
        .collect()
}

fn zdt3_front(n: usize) -> Vec<Vec<f64>> {
    let total: f64 = ZDT3_SEGMENTS.iter().map(|(a, b)| b - a).sum();
    let mut pts = Vec::with_capacity(n);
    let mut left = n;
    for (k, (a, b)) in ZDT3_SEGMENTS.iter().enumerate() {
        let share = if k == ZDT3_SEGMENTS.len() - 1 {
            left
        } else {
            (((b - a) / total) * n as f64).round().max(1.0) as usize
        }
        .min(left);
        left -= share;
        for f1 in linspace(*a, *b, share) {
            pts.push(vec![f1, 1.0 - f1.sqrt() - f1 * (10.0 * PI * f1).sin()]);
        }
    }
    non_dominated(&pts)
}

fn dtlz7_front(n: usize) -> Vec<Vec<f64>> {
    const REGIONS: [(f64, f64); 2] = [(0.0, 0.251_411_836_0), (0.631_626_530_7, 0.859_400_856_6)];
    let axis: Vec<f64> = REGIONS.iter().flat_map(|(a, b)| linspace(*a, *b, 30)).collect();
    let mut pts = Vec::with_capacity(axis.len() * axis.len());
    for &f1 in &axis {
        for &f2 in &axis {
            let h = 3.0
                - [f1, f2]
                    .iter()
                    .map(|f| f / 2.0 * (1.0 + (3.0 * PI * f).sin()))
                    .sum::<f64>();
            pts.push(vec![f1, f2, 2.0 * h]);
        }
    }
    thin(non_dominated(&pts), n)
}

fn shipped(name: &str) -> Option<&'static str> {
    match name {
        "BNH" => Some(BNH),
        "SRN" => Some(SRN),
        "TNK" => Some(TNK),
        "OSY" => Some(OSY),
        _ => None,
    }
}

/// Names with a reference front.
pub const FRONTS: [&str; 16] = [
    "ZDT1", "ZDT2", "ZDT3", "ZDT4", "ZDT6", "DTLZ1", "DTLZ2", "DTLZ3", "DTLZ4", "DTLZ5", "DTLZ6",
    "DTLZ7", "BNH", "SRN", "TNK", "OSY",
];

/// Up to `n_points` mutually non-dominated points of the true Pareto front.
///
/// Analytic fronts return exactly `n_points`; ZDT3, DTLZ7 and the shipped
/// constrained fronts are filtered samples and may return fewer.
pub fn reference_front(name: &str, n_points: usize) -> Result<Vec<Vec<f64>>> {
    if n_points == 0 {
        return Err(Error::EmptyInput("front needs at least one point".into()));
    }
    let name = super::canonical_name(name).unwrap_or_else(|| name.to_string());
    let n = n_points;
    let pts = match name.as_str() {
        "ZDT1" | "ZDT4" => linspace(0.0, 1.0, n).into_iter().map(|t| vec![t, 1.0 - t.sqrt()]).collect(),
        "ZDT2" => linspace(0.0, 1.0, n).into_iter().map(|t| vec![t, 1.0 - t * t]).collect(),
        "ZDT3" => zdt3_front(n),
        "ZDT6" => linspace(ZDT6_F1_MIN, 1.0, n).into_iter().map(|t| vec![t, 1.0 - t * t]).collect(),
        "DTLZ1" => simplex3(n).iter().map(|p| p.iter().map(|v| 0.5 * v).collect()).collect(),
        "DTLZ2" | "DTLZ3" | "DTLZ4" => simplex3(n)
            .iter()
            .map(|p| {
                let r = p.iter().map(|v| v * v).sum::<f64>().sqrt();
                p.iter().map(|v| v / r).collect()
            })
            .collect(),
        "DTLZ5" | "DTLZ6" => linspace(0.0, 1.0, n)
            .into_iter()
            .map(|t| {
                let c = (PI * t / 2.0).cos() / 2f64.sqrt();
                vec![c, c, (PI * t / 2.0).sin()]
            })
            .collect(),
        "DTLZ7" => dtlz7_front(n),
        other => match shipped(other) {
            Some(text) => {
                let mut pts = parse_front_csv(text)?;
                pts.sort_by(|a, b| a[0].total_cmp(&b[0]));
                thin(pts, n)
            }
            None => return Err(Error::UnsupportedFront(other.to_string())),
        },
    };
    Ok(pts)
}

/// Hypervolume reference point: the front's nadir pushed out by 10% of its
/// magnitude, or a fixed point for problems without a shipped front.
pub fn hv_reference_point(name: &str) -> Result<Vec<f64>> {
    let canon = super::canonical_name(name).unwrap_or_else(|| name.to_string());
    if canon == "C2-DTLZ2" {
        return Ok(vec![1.1; 3]);
    }
    let front = reference_front(&canon, 1000)?;
    let m = front[0].len();
    Ok((0..m)
        .map(|i| {
            let nadir = front.iter().map(|p| p[i]).fold(f64::NEG_INFINITY, f64::max);
            nadir + 0.1 * nadir.abs()
        })
        .collect())
}
