//! Inequality-constrained G-problems. Constraints follow `g <= 0`.

use std::f64::consts::PI;

pub fn g1(x: &[f64]) -> (f64, Vec<f64>) {
    let f = 5.0 * x[..4].iter().sum::<f64>()
        - 5.0 * x[..4].iter().map(|v| v * v).sum::<f64>()
        - x[4..13].iter().sum::<f64>();
    let g = vec![
        2.0 * x[0] + 2.0 * x[1] + x[9] + x[10] - 10.0,
        2.0 * x[0] + 2.0 * x[2] + x[9] + x[11] - 10.0,
        2.0 * x[1] + 2.0 * x[2] + x[10] + x[11] - 10.0,
        -8.0 * x[0] + x[9],
        -8.0 * x[1] + x[10],
        -8.0 * x[2] + x[11],
        -2.0 * x[3] - x[4] + x[9],
        -2.0 * x[5] - x[6] + x[10],
        -2.0 * x[7] - x[8] + x[11],
    ];
    (f, g)
}

pub fn g4(x: &[f64]) -> (f64, Vec<f64>) {
    let f = 5.3578547 * x[2] * x[2] + 0.8356891 * x[0] * x[4] + 37.293239 * x[0] - 40792.141;
    let u = 85.334407 + 0.0056858 * x[1] * x[4] + 0.0006262 * x[0] * x[3] - 0.0022053 * x[2] * x[4];
    let v = 80.51249 + 0.0071317 * x[1] * x[4] + 0.0029955 * x[0] * x[1] + 0.0021813 * x[2] * x[2];
    let w = 9.300961 + 0.0047026 * x[2] * x[4] + 0.0012547 * x[0] * x[2] + 0.0019085 * x[2] * x[3];
    (f, vec![u - 92.0, -u, v - 110.0, -v + 90.0, w - 25.0, -w + 20.0])
}

pub fn g6(x: &[f64]) -> (f64, Vec<f64>) {
    let f = (x[0] - 10.0).powi(3) + (x[1] - 20.0).powi(3);
    let g = vec![
        -(x[0] - 5.0).powi(2) - (x[1] - 5.0).powi(2) + 100.0,
        (x[0] - 6.0).powi(2) + (x[1] - 5.0).powi(2) - 82.81,
    ];
    (f, g)
}

pub fn g7(x: &[f64]) -> (f64, Vec<f64>) {
    let f = x[0] * x[0] + x[1] * x[1] + x[0] * x[1] - 14.0 * x[0] - 16.0 * x[1]
        + (x[2] - 10.0).powi(2)
        + 4.0 * (x[3] - 5.0).powi(2)
        + (x[4] - 3.0).powi(2)
        + 2.0 * (x[5] - 1.0).powi(2)
        + 5.0 * x[6] * x[6]
        + 7.0 * (x[7] - 11.0).powi(2)
        + 2.0 * (x[8] - 10.0).powi(2)
        + (x[9] - 7.0).powi(2)
        + 45.0;
    let g = vec![
        -105.0 + 4.0 * x[0] + 5.0 * x[1] - 3.0 * x[6] + 9.0 * x[7],
        10.0 * x[0] - 8.0 * x[1] - 17.0 * x[6] + 2.0 * x[7],
        -8.0 * x[0] + 2.0 * x[1] + 5.0 * x[8] - 2.0 * x[9] - 12.0,
        3.0 * (x[0] - 2.0).powi(2) + 4.0 * (x[1] - 3.0).powi(2) + 2.0 * x[2] * x[2] - 7.0 * x[3] - 120.0,
        5.0 * x[0] * x[0] + 8.0 * x[1] + (x[2] - 6.0).powi(2) - 2.0 * x[3] - 40.0,
        x[0] * x[0] + 2.0 * (x[1] - 2.0).powi(2) - 2.0 * x[0] * x[1] + 14.0 * x[4] - 6.0 * x[5],
        0.5 * (x[0] - 8.0).powi(2) + 2.0 * (x[1] - 4.0).powi(2) + 3.0 * x[4] * x[4] - x[5] - 30.0,
        -3.0 * x[0] + 6.0 * x[1] + 12.0 * (x[8] - 8.0).powi(2) - 7.0 * x[9],
    ];
    (f, g)
}

/// Maximization problem in its usual statement; negated here.
pub fn g8(x: &[f64]) -> (f64, Vec<f64>) {
    let f = -((2.0 * PI * x[0]).sin().powi(3) * (2.0 * PI * x[1]).sin())
        / (x[0].powi(3) * (x[0] + x[1]));
    let g = vec![x[0] * x[0] - x[1] + 1.0, 1.0 - x[0] + (x[1] - 4.0).powi(2)];
    (f, g)
}

pub fn g9(x: &[f64]) -> (f64, Vec<f64>) {
    let f = (x[0] - 10.0).powi(2)
        + 5.0 * (x[1] - 12.0).powi(2)
        + x[2].powi(4)
        + 3.0 * (x[3] - 11.0).powi(2)
        + 10.0 * x[4].powi(6)
        + 7.0 * x[5] * x[5]
        + x[6].powi(4)
        - 4.0 * x[5] * x[6]
        - 10.0 * x[5]
        - 8.0 * x[6];
    let g = vec![
        -127.0 + 2.0 * x[0] * x[0] + 3.0 * x[1].powi(4) + x[2] + 4.0 * x[3] * x[3] + 5.0 * x[4],
        -282.0 + 7.0 * x[0] + 3.0 * x[1] + 10.0 * x[2] * x[2] + x[3] - x[4],
        -196.0 + 23.0 * x[0] + x[1] * x[1] + 6.0 * x[5] * x[5] - 8.0 * x[6],
        4.0 * x[0] * x[0] + x[1] * x[1] - 3.0 * x[0] * x[1] + 2.0 * x[2] * x[2] + 5.0 * x[5] - 11.0 * x[6],
    ];
    (f, g)
}

pub fn g24(x: &[f64]) -> (f64, Vec<f64>) {
    let f = -x[0] - x[1];
    let g = vec![
        -2.0 * x[0].powi(4) + 8.0 * x[0].powi(3) - 8.0 * x[0] * x[0] + x[1] - 2.0,
        -4.0 * x[0].powi(4) + 32.0 * x[0].powi(3) - 88.0 * x[0] * x[0] + 96.0 * x[0] + x[1] - 36.0,
    ];
    (f, g)
}

/// Published optima: design, objective value.
pub(crate) fn published_optimum(name: &str) -> Option<(Vec<f64>, f64)> {
    Some(match name {
        "G1" => {
            let mut x = vec![1.0; 13];
            x[9] = 3.0;
            x[10] = 3.0;
            x[11] = 3.0;
            (x, -15.0)
        }
        "G4" => (
            vec![78.0, 33.0, 29.995_256_025_681_6, 45.0, 36.775_812_905_788_2],
            -30665.538_671_783_317,
        ),
        "G6" => (vec![14.095, 0.842_960_789_215_479_6], -6961.813_875_580_15),
        "G7" => (
            vec![
                2.171_996_341_426_92,
                2.363_683_041_603_4,
                8.773_925_739_131_57,
                5.095_984_437_451_73,
                0.990_654_756_560_493,
                1.430_573_928_534_63,
                1.321_644_153_643_06,
                9.828_725_765_244_95,
                8.280_091_588_735_6,
                8.375_926_647_734_7,
            ],
            24.306_209_068_18,
        ),
        "G8" => (vec![1.227_971_352_607_526, 4.245_373_366_122_749], -0.095_825_041_418_035_9),
        "G9" => (
            vec![
                2.330_499_351_474_052,
                1.951_372_368_471_146,
                -0.477_541_399_510_615_8,
                4.365_726_249_236_259,
                -0.624_486_959_100_389,
                1.038_130_994_109_622,
                1.594_226_678_067_152,
            ],
            680.630_057_374_402,
        ),
        "G24" => (vec![2.329_520_197_477_62, 3.178_493_074_117_74], -5.508_013_271_595_36),
        _ => return None,
    })
}
