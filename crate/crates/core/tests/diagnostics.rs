mod common;

use common::oracle;

use randmeasure::diagnostics::{
    chebyshev_bound_nigp, chebyshev_bound_pdp, cdf_paths, empirical_order_prob, error_report,
    lemma1_prob, lemma1_prob_fixed, lemma1_prob_mc, nigp_moments,
};
use randmeasure::measures::{BaseMeasure, PdpParams, Process};
use randmeasure::RngStream;

// 0.25 / xi(1) with xi(1) = 3.353750056357402 from the quadrature oracle.
const NIGP_VAR_HALF_THETA_1: f64 = 0.074_543_420_290_399_25;

pub const TABLE_ONE: [(usize, f64, f64, f64); 18] = [
    (1, 0.1, 1.0, 0.672),
    (10, 0.1, 1.0, 0.607),
    (100, 0.1, 1.0, 0.521),
    (1, 0.5, 1.0, 0.598),
    (10, 0.5, 1.0, 0.526),
    (100, 0.5, 1.0, 0.503),
    (1, 0.9, 1.0, 0.5230),
    (10, 0.9, 1.0, 0.504),
    (100, 0.9, 1.0, 0.500),
    (1, 0.1, 10.0, 0.523),
    (10, 0.1, 10.0, 0.521),
    (100, 0.1, 10.0, 0.511),
    (1, 0.5, 10.0, 0.515),
    (10, 0.5, 10.0, 0.511),
    (100, 0.5, 10.0, 0.503),
    (1, 0.9, 10.0, 0.504),
    (10, 0.9, 10.0, 0.502),
    (100, 0.9, 10.0, 0.500),
];

#[test]
fn ordering_probabilities_match_table() {
    for (i, alpha, theta, want) in TABLE_ONE {
        let p = lemma1_prob(i, alpha, theta).unwrap();
        assert!((p - want).abs() <= 0.002, "({i}, {alpha}, {theta}): {p} vs {want}");
        assert!(p >= 0.5 - 1e-6 && p <= 1.0);
    }
}

#[test]
fn ordering_probability_examples() {
    assert!((lemma1_prob(1, 0.1, 1.0).unwrap() - 0.672).abs() < 0.001);
    assert!((lemma1_prob(10, 0.5, 1.0).unwrap() - 0.526).abs() < 0.001);
    assert!((lemma1_prob(100, 0.9, 10.0).unwrap() - 0.500).abs() < 0.001);
}

#[test]
fn mesh_doubling_is_stable() {
    for (i, alpha, theta, _) in TABLE_ONE {
        let coarse = lemma1_prob_fixed(i, alpha, theta, 32).unwrap();
        let fine = lemma1_prob_fixed(i, alpha, theta, 64).unwrap();
        assert!((coarse - fine).abs() < 1e-6, "({i}, {alpha}, {theta})");
    }
}

#[test]
fn ordering_probability_against_independent_integral() {
    // Direct Simpson integration of the Beta density against the clipped
    // Beta CDF, with the oracle's own incomplete beta. b_next >= 1 here.
    for (i, alpha, theta) in [(1usize, 0.1, 1.0), (10, 0.5, 10.0), (3, 0.0, 2.0)] {
        let a = 1.0 - alpha;
        let b_i = theta + i as f64 * alpha;
        let b_next = b_i + alpha;
        let norm = a * oracle::beta_fn(a, b_i);
        let norm_next = oracle::beta_fn(a, b_next);
        // u = b^a removes the density singularity at zero; above b = 1/2 the
        // clipped CDF is 1
        let f = |u: f64| {
            let b = u.powf(1.0 / a);
            (1.0 - b).powf(b_i - 1.0) / norm * oracle::beta_partial_tol(a, b_next, (b / (1.0 - b)).min(1.0), 1e-11) / norm_next
        };
        let upper = 1.0 - oracle::beta_partial(a, b_i, 0.5) / oracle::beta_fn(a, b_i);
        let want = oracle::simpson(f, 0.0, 0.5f64.powf(a), 1e-9) + upper;
        let got = lemma1_prob(i, alpha, theta).unwrap();
        assert!((got - want).abs() < 1e-6, "({i}, {alpha}, {theta}): {got} vs {want}");
    }
}

#[test]
fn monte_carlo_uniform_case() {
    let e = lemma1_prob_mc(1, 0.0, 1.0, 400_000, &mut RngStream::new(301, 0)).unwrap();
    assert!((e.prob - std::f64::consts::LN_2).abs() < 4.0 * e.se, "{e:?}");
}

#[test]
fn monte_carlo_se_halves_with_four_times_reps() {
    let a = lemma1_prob_mc(1, 0.1, 1.0, 10_000, &mut RngStream::new(302, 0)).unwrap();
    let b = lemma1_prob_mc(1, 0.1, 1.0, 40_000, &mut RngStream::new(302, 1)).unwrap();
    assert!((a.se / b.se - 2.0).abs() < 0.05);
}

#[test]
fn nigp_moment_goldens() {
    let m = nigp_moments(1.0, 0.5).unwrap();
    assert!((m.variance - NIGP_VAR_HALF_THETA_1).abs() < 1e-12);
    assert_eq!(chebyshev_bound_nigp(1.0, 0.5, 0.2).unwrap(), 1.0);
    let b = chebyshev_bound_nigp(1.0, 0.5, 0.5).unwrap();
    assert!((b - NIGP_VAR_HALF_THETA_1 / 0.25).abs() < 1e-12);
    assert!((nigp_moments(1000.0, 0.5).unwrap().variance / 0.00025 - 1.0).abs() < 0.01);
}

#[test]
fn chebyshev_envelope_holds_empirically() {
    let grid: Vec<f64> = (1..=9).map(|k| k as f64 / 10.0).collect();
    let h = BaseMeasure::default();
    let paths = 1000;
    let params = PdpParams::new(0.5, 10.0).unwrap();
    let cases = [
        (Process::PdpNew { n: 50, m: 100, params }, 0.1),
        (Process::NigpNew { n: 100, theta: 5.0 }, 0.1),
        (Process::DpNew { n: 100, theta: 2.0 }, 0.2),
    ];
    for (p, eps) in cases {
        let cdfs = cdf_paths(&p, paths, &grid, &h, 303, 0).unwrap();
        for (k, &x) in grid.iter().enumerate() {
            let freq = cdfs.iter().filter(|c| (c.values[k] - x).abs() > eps).count() as f64 / paths as f64;
            let bound = match p {
                Process::NigpNew { theta, .. } => chebyshev_bound_nigp(theta, x, eps).unwrap(),
                Process::PdpNew { params, .. } => chebyshev_bound_pdp(params, x, eps).unwrap(),
                Process::DpNew { theta, .. } => chebyshev_bound_pdp(PdpParams::new(0.0, theta).unwrap(), x, eps).unwrap(),
                _ => unreachable!(),
            };
            let se = (bound * (1.0 - bound) / paths as f64).sqrt();
            assert!(freq <= bound + 3.0 * se, "{} x={x}: {freq} > {bound}", p.name());
        }
    }
}

#[test]
fn reports_are_reproducible() {
    let grid: Vec<f64> = (1..=10).map(|k| k as f64 / 10.0).collect();
    let p = Process::PdpNew { n: 20, m: 50, params: PdpParams::new(0.5, 1.0).unwrap() };
    let h = BaseMeasure::default();
    let a = error_report(&p, 50, &grid, &h, 304, 0).unwrap();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(3).build().unwrap();
    let b = pool.install(|| error_report(&p, 50, &grid, &h, 304, 0)).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert!(a.max_mean_error.unwrap() >= 0.0);
    assert_eq!(a.empirical_mean[9], 1.0);
}

#[test]
fn order_probability_for_monotone_constructions() {
    let h = BaseMeasure::default();
    for p in [Process::DpNew { n: 50, theta: 1.0 }, Process::NigpNew { n: 50, theta: 1.0 }] {
        for i in [1, 25, 49] {
            assert_eq!(empirical_order_prob(&p, i, 200, &h, 305, 0).unwrap().prob, 1.0);
        }
    }
    assert!(empirical_order_prob(&Process::DpNew { n: 50, theta: 1.0 }, 50, 10, &h, 305, 0).is_err());
}
