//! Butcher tableaux for the embedded triple and the bootstrap integrator.
//!
//! The main tableau is the 12-stage Dormand–Prince 8(5,3) set: one shared
//! stage matrix with three weight vectors of orders 3 (`b_l`), 5 (`b_h`) and
//! 8 (`b_v`). Coefficients from Hairer, Nørsett & Wanner, "Solving Ordinary
//! Differential Equations I" (DOP853). The order-5 weights are recovered from
//! the published order-8 weights minus the 5th-order error weights; the
//! order-3 weights are the published three-term combination on stages 1, 9
//! and 12 (exact rationals 31/127, 12675/17272, 3/136).
//!
//! The bootstrap integrator uses the order-7 component of the 13-stage
//! Fehlberg 7(8) pair (NASA TR R-287, Table X).
//!
//! Every weight vector and the stage matrix are validated by the order-
//! condition tests at the bottom of this file; transcription errors fail
//! those tests rather than silently degrading convergence order.
#![allow(clippy::excessive_precision)]

/// Number of stages in the 8(5,3) triple.
pub const DP853_STAGES: usize = 12;

/// A shared explicit stage matrix with the triple's three weight vectors.
#[derive(Debug, Clone)]
pub struct ButcherTableau {
    /// Stage count `s`.
    pub stages: usize,
    /// Strictly lower-triangular stage coefficients `a[q][r]`, `r < q`.
    pub a: [[f64; DP853_STAGES]; DP853_STAGES],
    /// Abscissae `c[q]`; stage `q` samples the field at `x + c[q]·h`.
    pub c: [f64; DP853_STAGES],
    /// Order-3 weights; nonzero only at stages 1, 9, 12 (1-based).
    pub b_l: [f64; DP853_STAGES],
    /// Order-5 weights; zero at stages 2–5 (1-based).
    pub b_h: [f64; DP853_STAGES],
    /// Order-8 weights; zero at stages 2–5 (1-based).
    pub b_v: [f64; DP853_STAGES],
}

// Abscissae (c1 = 0 and c12 = 1 are implicit in the published set).
const C2: f64 = 0.526001519587677318785587544488e-01;
const C3: f64 = 0.789002279381515978178381316732e-01;
const C4: f64 = 0.118350341907227396726757197510;
const C5: f64 = 0.281649658092772603273242802490;
const C6: f64 = 0.333333333333333333333333333333;
const C7: f64 = 0.25;
const C8: f64 = 0.307692307692307692307692307692;
const C9: f64 = 0.651282051282051282051282051282;
const C10: f64 = 0.6;
const C11: f64 = 0.857142857142857142857142857142;

// Stage matrix.
const A21: f64 = 5.26001519587677318785587544488e-02;
const A31: f64 = 1.97250569845378994544595329183e-02;
const A32: f64 = 5.91751709536136983633785987549e-02;
const A41: f64 = 2.95875854768068491816892993775e-02;
const A43: f64 = 8.87627564304205475450678981324e-02;
const A51: f64 = 2.41365134159266685502369798665e-01;
const A53: f64 = -8.84549479328286085344864962717e-01;
const A54: f64 = 9.24834003261792003115737966543e-01;
const A61: f64 = 3.70370370370370370370370370370e-02;
const A64: f64 = 1.70828608729473871279604482173e-01;
const A65: f64 = 1.25467687566822425016691814123e-01;
const A71: f64 = 3.71093750000000000000000000000e-02;
const A74: f64 = 1.70252211019544039314978060272e-01;
const A75: f64 = 6.02165389804559606850219397283e-02;
const A76: f64 = -1.75781250000000000000000000000e-02;
const A81: f64 = 3.70920001185047927108779319836e-02;
const A84: f64 = 1.70383925712239993810214054705e-01;
const A85: f64 = 1.07262030446373284651809199168e-01;
const A86: f64 = -1.53194377486244017527936158236e-02;
const A87: f64 = 8.27378916381402288758473766002e-03;
const A91: f64 = 6.24110958716075717114429577812e-01;
const A94: f64 = -3.36089262944694129406857109825e+00;
const A95: f64 = -8.68219346841726006818189891453e-01;
const A96: f64 = 2.75920996994467083049415600797e+01;
const A97: f64 = 2.01540675504778934086186788979e+01;
const A98: f64 = -4.34898841810699588477366255144e+01;
const A101: f64 = 4.77662536438264365890433908527e-01;
const A104: f64 = -2.48811461997166764192642586468e+00;
const A105: f64 = -5.90290826836842996371446475743e-01;
const A106: f64 = 2.12300514481811942347288949897e+01;
const A107: f64 = 1.52792336328824235832596922938e+01;
const A108: f64 = -3.32882109689848629194453265587e+01;
const A109: f64 = -2.03312017085086261358222928593e-02;
const A111: f64 = -9.37142430085987325717040528057e-01;
const A114: f64 = 5.18637242884406370830023853209e+00;
const A115: f64 = 1.09143734899672957818500254654e+00;
const A116: f64 = -8.14978701074692612513997267357e+00;
const A117: f64 = -1.85200656599969598641566180701e+01;
const A118: f64 = 2.27394870993505042818970056734e+01;
const A119: f64 = 2.49360555267965238987089396762e+00;
const A1110: f64 = -3.01726999341168153929447817486e+00;
const A121: f64 = 2.27331014751653820792359768449e+00;
const A124: f64 = -1.05344954667372501984066689879e+01;
const A125: f64 = -2.00087205822486249909675718444e+00;
const A126: f64 = -1.79589318631187989172765950534e+01;
const A127: f64 = 2.79488845294199600508499808837e+01;
const A128: f64 = -2.85899827713502369474065508674e+00;
const A129: f64 = -8.87285693353062954433549289258e+00;
const A1210: f64 = 1.23605671757943030647266201528e+01;
const A1211: f64 = 6.43392746015763530355970484046e-01;

// Order-8 weights.
const B1: f64 = 5.42937341165687622380535766363e-02;
const B6: f64 = 4.45031289275240888144113950566e+00;
const B7: f64 = 1.89151789931450038304281599044e+00;
const B8: f64 = -5.80120396001058478146721142270e+00;
const B9: f64 = 3.11168072561590417690755489127e-01;
const B10: f64 = -1.52160949662516078556178806805e-01;
const B11: f64 = 2.01365400804030348374776537501e-01;
const B12: f64 = 4.47106157277725905176885569043e-02;

// 5th-order error weights er_q = b_v[q] − b_h[q]; the order-5 weight vector
// is reconstructed below as b_h = b_v − er.
const ER1: f64 = 0.1312004499419488073250102996e-01;
const ER6: f64 = -0.1225156446376204440720569753e+01;
const ER7: f64 = -0.4957589496572501915214079952e+00;
const ER8: f64 = 0.1664377182454986536961530415e+01;
const ER9: f64 = -0.3503288487499736816886487290e+00;
const ER10: f64 = 0.3341791187130174790297318841e+00;
const ER11: f64 = 0.8192320648511571246570742613e-01;
const ER12: f64 = -0.2235530786388629525884427845e-01;

// Order-3 weights on stages 1, 9, 12 (31/127, 12675/17272, 3/136).
const BL1: f64 = 0.244094488188976377952755905512e+00;
const BL9: f64 = 0.733846688281611857341361741547e+00;
const BL12: f64 = 0.220588235294117647058823529412e-01;

static DP853: ButcherTableau = ButcherTableau {
    stages: DP853_STAGES,
    a: [
        [0.0; 12],
        [A21, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [A31, A32, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [A41, 0.0, A43, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [A51, 0.0, A53, A54, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [A61, 0.0, 0.0, A64, A65, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [A71, 0.0, 0.0, A74, A75, A76, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [A81, 0.0, 0.0, A84, A85, A86, A87, 0.0, 0.0, 0.0, 0.0, 0.0],
        [A91, 0.0, 0.0, A94, A95, A96, A97, A98, 0.0, 0.0, 0.0, 0.0],
        [A101, 0.0, 0.0, A104, A105, A106, A107, A108, A109, 0.0, 0.0, 0.0],
        [A111, 0.0, 0.0, A114, A115, A116, A117, A118, A119, A1110, 0.0, 0.0],
        [A121, 0.0, 0.0, A124, A125, A126, A127, A128, A129, A1210, A1211, 0.0],
    ],
    c: [0.0, C2, C3, C4, C5, C6, C7, C8, C9, C10, C11, 1.0],
    b_l: [BL1, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, BL9, 0.0, 0.0, BL12],
    b_h: [
        B1 - ER1,
        0.0,
        0.0,
        0.0,
        0.0,
        B6 - ER6,
        B7 - ER7,
        B8 - ER8,
        B9 - ER9,
        B10 - ER10,
        B11 - ER11,
        B12 - ER12,
    ],
    b_v: [B1, 0.0, 0.0, 0.0, 0.0, B6, B7, B8, B9, B10, B11, B12],
};

/// The embedded 8(5,3) triple used by the auxiliary-equation integrator.
pub fn dp853_tableau() -> &'static ButcherTableau {
    &DP853
}

/// Checks the triple's exact zero patterns: `b_h` and `b_v` vanish at stages
/// 2–5, and `b_l` vanishes everywhere except stages 1, 9, 12 (1-based).
pub fn dp853_sparsity_check(t: &ButcherTableau) -> bool {
    let hv_zero = [1, 2, 3, 4]; // 0-based stages 2..5
    let l_nonzero = [0, 8, 11]; // 0-based stages 1, 9, 12
    for q in hv_zero {
        if t.b_h[q] != 0.0 || t.b_v[q] != 0.0 {
            return false;
        }
    }
    for q in 0..t.stages {
        if !l_nonzero.contains(&q) && t.b_l[q] != 0.0 {
            return false;
        }
    }
    true
}

/// Stage count of the Fehlberg 7(8) pair.
pub const RK78_STAGES: usize = 13;

/// Abscissae of the Fehlberg 7(8) pair.
pub const RK78_C: [f64; RK78_STAGES] = [
    0.0,
    2.0 / 27.0,
    1.0 / 9.0,
    1.0 / 6.0,
    5.0 / 12.0,
    0.5,
    5.0 / 6.0,
    1.0 / 6.0,
    2.0 / 3.0,
    1.0 / 3.0,
    1.0,
    0.0,
    1.0,
];

/// Stage matrix of the Fehlberg 7(8) pair.
pub const RK78_A: [[f64; RK78_STAGES - 1]; RK78_STAGES] = [
    [0.0; 12],
    [2.0 / 27.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [1.0 / 36.0, 1.0 / 12.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [1.0 / 24.0, 0.0, 1.0 / 8.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [5.0 / 12.0, 0.0, -25.0 / 16.0, 25.0 / 16.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [1.0 / 20.0, 0.0, 0.0, 1.0 / 4.0, 1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [
        -25.0 / 108.0,
        0.0,
        0.0,
        125.0 / 108.0,
        -65.0 / 27.0,
        125.0 / 54.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
    ],
    [31.0 / 300.0, 0.0, 0.0, 0.0, 61.0 / 225.0, -2.0 / 9.0, 13.0 / 900.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [2.0, 0.0, 0.0, -53.0 / 6.0, 704.0 / 45.0, -107.0 / 9.0, 67.0 / 90.0, 3.0, 0.0, 0.0, 0.0, 0.0],
    [
        -91.0 / 108.0,
        0.0,
        0.0,
        23.0 / 108.0,
        -976.0 / 135.0,
        311.0 / 54.0,
        -19.0 / 60.0,
        17.0 / 6.0,
        -1.0 / 12.0,
        0.0,
        0.0,
        0.0,
    ],
    [
        2383.0 / 4100.0,
        0.0,
        0.0,
        -341.0 / 164.0,
        4496.0 / 1025.0,
        -301.0 / 82.0,
        2133.0 / 4100.0,
        45.0 / 82.0,
        45.0 / 164.0,
        18.0 / 41.0,
        0.0,
        0.0,
    ],
    [
        3.0 / 205.0,
        0.0,
        0.0,
        0.0,
        0.0,
        -6.0 / 41.0,
        -3.0 / 205.0,
        -3.0 / 41.0,
        3.0 / 41.0,
        6.0 / 41.0,
        0.0,
        0.0,
    ],
    [
        -1777.0 / 4100.0,
        0.0,
        0.0,
        -341.0 / 164.0,
        4496.0 / 1025.0,
        -289.0 / 82.0,
        2193.0 / 4100.0,
        51.0 / 82.0,
        33.0 / 164.0,
        12.0 / 41.0,
        0.0,
        1.0,
    ],
];

/// Order-7 weights of the Fehlberg 7(8) pair. Stages 12 and 13 carry zero
/// weight here (they only serve the embedded order-8 error estimate), so the
/// order-7 step evaluates stages 1–11.
pub const RK78_B7: [f64; RK78_STAGES] = [
    41.0 / 840.0,
    0.0,
    0.0,
    0.0,
    0.0,
    34.0 / 105.0,
    9.0 / 35.0,
    9.0 / 35.0,
    9.0 / 280.0,
    9.0 / 280.0,
    41.0 / 840.0,
    0.0,
    0.0,
];

#[cfg(test)]
mod tests {
    use super::*;

    // Sums of ~12 coefficients of mixed sign; 1e-13 covers the roundoff.
    const SUM_TOL: f64 = 1e-13;
    // Quadrature/order conditions involve larger cancellations.
    const ORDER_TOL: f64 = 1e-12;

    fn weight_sum(b: &[f64]) -> f64 {
        b.iter().sum()
    }

    fn moment(b: &[f64], c: &[f64], k: u32) -> f64 {
        b.iter().zip(c).map(|(bq, cq)| bq * cq.powi(k as i32)).sum()
    }

    #[test]
    fn triple_weights_sum_to_one() {
        let t = dp853_tableau();
        for (name, b) in [("b_l", &t.b_l), ("b_h", &t.b_h), ("b_v", &t.b_v)] {
            let s = weight_sum(b);
            assert!((s - 1.0).abs() < SUM_TOL, "{name} sums to {s}");
        }
    }

    #[test]
    fn triple_row_sums_match_abscissae() {
        let t = dp853_tableau();
        for q in 0..t.stages {
            let row: f64 = t.a[q].iter().sum();
            assert!(
                (row - t.c[q]).abs() < SUM_TOL,
                "row {q} sums to {row}, expected c = {}",
                t.c[q]
            );
        }
    }

    #[test]
    fn triple_quadrature_conditions() {
        // Quadrature conditions Σ b c^(k-1) = 1/k up to each claimed order.
        let t = dp853_tableau();
        for (name, b, order) in [
            ("b_l", &t.b_l, 3u32),
            ("b_h", &t.b_h, 5),
            ("b_v", &t.b_v, 8),
        ] {
            for k in 1..=order {
                let m = moment(b, &t.c, k - 1);
                let want = 1.0 / k as f64;
                assert!(
                    (m - want).abs() < ORDER_TOL,
                    "{name}: Σ b c^{} = {m}, expected {want}",
                    k - 1
                );
            }
        }
    }

    #[test]
    fn triple_stage_order_conditions() {
        // The non-quadrature conditions through order 3 for every weight
        // vector: Σ_q b_q Σ_r a_qr c_r = 1/6.
        let t = dp853_tableau();
        for (name, b) in [("b_l", &t.b_l), ("b_h", &t.b_h), ("b_v", &t.b_v)] {
            let bac: f64 = (0..t.stages)
                .map(|q| b[q] * (0..q).map(|r| t.a[q][r] * t.c[r]).sum::<f64>())
                .sum();
            assert!(
                (bac - 1.0 / 6.0).abs() < ORDER_TOL,
                "{name}: Σ b a c = {bac}, expected 1/6"
            );
        }
    }

    #[test]
    fn triple_order5_tree_conditions() {
        // Remaining rooted-tree conditions at orders 4 and 5 for the order-5
        // and order-8 weight vectors.
        let t = dp853_tableau();
        let s = t.stages;
        let ac = |q: usize| -> f64 { (0..q).map(|r| t.a[q][r] * t.c[r]).sum() };
        let ac2 = |q: usize| -> f64 { (0..q).map(|r| t.a[q][r] * t.c[r] * t.c[r]).sum() };
        let aac = |q: usize| -> f64 { (0..q).map(|r| t.a[q][r] * ac(r)).sum() };
        for (name, b) in [("b_h", &t.b_h), ("b_v", &t.b_v)] {
            let checks: [(&str, f64, f64); 7] = [
                ("b c a c", (0..s).map(|q| b[q] * t.c[q] * ac(q)).sum(), 1.0 / 8.0),
                ("b a c^2", (0..s).map(|q| b[q] * ac2(q)).sum(), 1.0 / 12.0),
                ("b a a c", (0..s).map(|q| b[q] * aac(q)).sum(), 1.0 / 24.0),
                ("b c^2 a c", (0..s).map(|q| b[q] * t.c[q] * t.c[q] * ac(q)).sum(), 1.0 / 10.0),
                ("b (a c)^2", (0..s).map(|q| b[q] * ac(q) * ac(q)).sum(), 1.0 / 20.0),
                ("b c a a c", (0..s).map(|q| b[q] * t.c[q] * aac(q)).sum(), 1.0 / 30.0),
                (
                    "b a a a c",
                    (0..s).map(|q| b[q] * (0..q).map(|r| t.a[q][r] * aac(r)).sum::<f64>()).sum(),
                    1.0 / 120.0,
                ),
            ];
            for (label, got, want) in checks {
                assert!(
                    (got - want).abs() < ORDER_TOL,
                    "{name}: {label} = {got}, expected {want}"
                );
            }
        }
    }

    #[test]
    fn sparsity_pattern_holds() {
        assert!(dp853_sparsity_check(dp853_tableau()));
    }

    #[test]
    fn sparsity_check_rejects_perturbations() {
        let mut t = dp853_tableau().clone();
        t.b_v[1] = 1e-9;
        assert!(!dp853_sparsity_check(&t));

        let mut t = dp853_tableau().clone();
        t.b_l[4] = 1e-300;
        assert!(!dp853_sparsity_check(&t));
    }

    #[test]
    fn rk78_row_sums_match_abscissae() {
        for q in 0..RK78_STAGES {
            let row: f64 = RK78_A[q].iter().sum();
            assert!(
                (row - RK78_C[q]).abs() < SUM_TOL,
                "row {q} sums to {row}, expected {}",
                RK78_C[q]
            );
        }
    }

    #[test]
    fn rk78_order7_weights_consistent() {
        assert!((weight_sum(&RK78_B7) - 1.0).abs() < SUM_TOL);
        // Quadrature conditions through order 7.
        for k in 1..=7u32 {
            let m = moment(&RK78_B7, &RK78_C, k - 1);
            let want = 1.0 / k as f64;
            assert!(
                (m - want).abs() < ORDER_TOL,
                "Σ b c^{} = {m}, expected {want}",
                k - 1
            );
        }
    }
}
