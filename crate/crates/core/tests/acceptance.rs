//! Acceptance suite. Each test prints one `[PASS]`/`[FAIL]` line per
//! criterion before asserting it. Run with `--nocapture` to see them.

mod common;

use std::time::{Duration, Instant};

use common::*;
use nurbs_limit::convergence::default_schedule;
use nurbs_limit::limit::{dominant_rational_deviation, DEFAULT_THRESHOLD_GRID};
use nurbs_limit::sampling::closed_grid;
use nurbs_limit::{
    check_uniform_conditions, omega_threshold, path_dependence_demo, pointwise_limit, Analysis,
    AnalysisSettings, LimitReference, Point, WeightPath,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

fn verdict(id: &str, ok: bool, detail: String) {
    println!("[{}] {id}: {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "{id} failed: {detail}");
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

#[test]
fn ac1_linear_coupling_reproduces_first_case_table() {
    let start = Instant::now();
    let cfg = bezier_example(&parabola_points());
    let path = linear_coupling(2.0);
    let w = path.normalized_weights_at(1e8).unwrap();
    let interior: Vec<f64> = closed_grid(0.0, 1.0, 103).skip(1).take(101).collect();
    assert_eq!(interior.len(), 101);
    let mut worst = 0.0f64;
    for &u in &interior {
        let c = cfg.eval_nurbs(&w, u).unwrap();
        let lim = pointwise_limit(&cfg, &path, u).unwrap();
        worst = worst.max(c.max_abs_diff(&lim));
    }
    let p0 = Point::from([0.0, 0.0]);
    let p3 = Point::from([3.0, 9.0]);
    let mut endpoints_exact = true;
    for t in default_schedule() {
        let w = path.normalized_weights_at(t).unwrap();
        endpoints_exact &= cfg.eval_nurbs(&w, 0.0).unwrap() == p0;
        endpoints_exact &= cfg.eval_nurbs(&w, 1.0).unwrap() == p3;
        let raw = path.weights_at(t).unwrap();
        endpoints_exact &= cfg.eval_nurbs(&raw, 0.0).unwrap() == p0;
        endpoints_exact &= cfg.eval_nurbs(&raw, 1.0).unwrap() == p3;
    }
    let elapsed = start.elapsed();
    verdict(
        "AC1",
        worst <= 1e-6 && endpoints_exact && elapsed < Duration::from_secs(1),
        format!(
            "max interior deviation at t=1e8 {worst:.3e} (<= 1e-6), endpoints exact {endpoints_exact}, {elapsed:?} (< 1 s)"
        ),
    );
}

#[test]
fn ac2_quadratic_coupling_reproduces_second_case_table() {
    let cfg = bezier_example(&unit_box_points());
    let path = quadratic_coupling();
    let p2 = Point::from([1.0, 1.0]);
    let open_span_exact = closed_grid(0.0, 1.0, 1001)
        .filter(|u| *u > 0.0 && *u < 1.0)
        .all(|u| pointwise_limit(&cfg, &path, u).unwrap() == p2);
    let w = path.normalized_weights_at(1e6).unwrap();
    let dev = cfg.eval_nurbs(&w, 0.5).unwrap().max_abs_diff(&p2);
    verdict(
        "AC2",
        open_span_exact && dev <= 1e-4,
        format!("limit identically p_2 on open span {open_span_exact}, |C(0.5; 1e6) - p_2| = {dev:.3e} (<= 1e-4)"),
    );
}

#[test]
fn ac3_path_dependence_separation() {
    let cfg = bezier_example(&parabola_points());
    let a = WeightPath::from_pairs(&[(1., 0.), (1., 1.), (1., 1.), (1., 0.)]).unwrap();
    let b = quadratic_coupling();
    let r = path_dependence_demo(&cfg, &a, &b, 0.5).unwrap();
    let closed_form = 2.5f64.sqrt();
    // brute force: evaluate both paths at t = 1e10
    let ca = cfg
        .eval_nurbs(&a.normalized_weights_at(1e10).unwrap(), 0.5)
        .unwrap();
    let cb = cfg
        .eval_nurbs(&b.normalized_weights_at(1e10).unwrap(), 0.5)
        .unwrap();
    let brute = ca.distance(&cb);
    let ok = (r.separation - closed_form).abs() <= 1e-6 && (brute - closed_form).abs() <= 1e-6;
    verdict(
        "AC3",
        ok,
        format!(
            "separation {:.10} vs sqrt(2.5) = {closed_form:.10}, brute force at t=1e10 {brute:.10} (tol 1e-6)",
            r.separation
        ),
    );
}

#[test]
fn ac4_uniform_case_rate_and_threshold() {
    let start = Instant::now();
    let cfg = strict_cubic();
    let path = WeightPath::from_pairs(&[(1., 0.), (1., 0.), (1., 1.), (1., 0.)]).unwrap();
    assert!(check_uniform_conditions(&cfg, &path).unwrap().holds);
    let analysis = Analysis::new(&cfg, &path, AnalysisSettings::default()).unwrap();
    let schedule: Vec<f64> = (2..=7).map(|k| 10f64.powi(k)).collect();
    let report = analysis.sweep(&schedule).unwrap();
    let slope = report.sup_slope(1e2).unwrap();
    let eps = 1e-3;
    let threshold = omega_threshold(&cfg, 2, eps, DEFAULT_THRESHOLD_GRID).unwrap();
    let dev =
        dominant_rational_deviation(&cfg, 2, 1.01 * threshold, DEFAULT_THRESHOLD_GRID).unwrap();
    let elapsed = start.elapsed();
    verdict(
        "AC4",
        (-1.2..=-0.8).contains(&slope) && dev < eps && elapsed < Duration::from_secs(5),
        format!(
            "sup-error slope {slope:.4} in [-1.2, -0.8], threshold {threshold:.4e}, max |R_2 - 1| at 1.01x = {dev:.3e} (< 1e-3), {elapsed:?} (< 5 s)"
        ),
    );
}

#[test]
fn ac5_l1_convergence_without_uniform_convergence() {
    let start = Instant::now();
    let cfg = bezier_example(&unit_box_points());
    let path = quadratic_coupling();
    let settings = AnalysisSettings {
        reference: LimitReference::Interior,
        subdivisions: 64,
        ..AnalysisSettings::default()
    };
    let analysis = Analysis::new(&cfg, &path, settings).unwrap();
    assert_eq!(
        analysis.limit().evaluate(0.0).unwrap(),
        Point::from([1.0, 1.0])
    );
    let jump = 2f64.sqrt();
    let sup = analysis.sup_error(1e8).unwrap();
    let l1 = analysis.l1_error(1e8).unwrap();
    let elapsed = start.elapsed();
    verdict(
        "AC5",
        (sup - jump).abs() <= 0.01 * jump && l1 < 1e-3 && elapsed < Duration::from_secs(5),
        format!(
            "sup error at t=1e8 {sup:.6} vs |p_0 - p_2| = {jump:.6} (within 1%), L1 error {l1:.3e} (< 1e-3), {elapsed:?} (< 5 s)"
        ),
    );
}

#[test]
fn ac6_property_suites() {
    let mut failures = Vec::new();

    let mut r = runner(10_000);
    let basis = r.run(&knots_and_parameter(), |(kv, u)| {
        let span = kv.find_span(u).unwrap();
        let b = kv.basis_functions(span, u).unwrap();
        prop_assert!(b.values.iter().all(|v| *v >= 0.0));
        prop_assert!((b.values.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
        // rational basis on the same sample with spread-out weights
        let n = kv.basis_count();
        let w: Vec<f64> = (0..n)
            .map(|j| 10f64.powi((j as i32 * 7) % 13 - 6))
            .collect();
        let first = span - kv.degree();
        let num: Vec<f64> = b
            .values
            .iter()
            .zip(&w[first..=span])
            .map(|(a, c)| a * c)
            .collect();
        let den: f64 = num.iter().sum();
        let rat: Vec<f64> = num.iter().map(|x| x / den).collect();
        prop_assert!(rat.iter().all(|v| *v >= 0.0));
        prop_assert!((rat.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
        Ok(())
    });
    if let Err(e) = &basis {
        failures.push(format!("basis: {e}"));
    }

    let mut r = runner(10_000);
    let rational = r.run(
        &curve_config().prop_flat_map(|cfg| {
            let n = cfg.control_count();
            let u = span_parameter(&cfg);
            (Just(cfg), u, weights(n))
        }),
        |(cfg, u, w)| {
            let rb = cfg.rational_basis(&w, u).unwrap();
            prop_assert!(rb.iter().all(|v| *v >= 0.0));
            prop_assert!((rb.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
            Ok(())
        },
    );
    if let Err(e) = &rational {
        failures.push(format!("rational basis: {e}"));
    }

    let mut r = runner(1_000);
    let hull = r.run(
        &curve_config().prop_flat_map(|cfg| {
            let n = cfg.control_count();
            (Just(cfg), weights(n), weight_path(n, &[0.0, 1.0, 2.0, 3.0]))
        }),
        |(cfg, w, path)| {
            let (lo, hi) = cfg.span_bounds();
            for u in closed_grid(lo, hi, 11) {
                let c = cfg.eval_nurbs(&w, u).unwrap();
                prop_assert!(within_active_hull(&cfg, &c, 1e-12));
                let lim = pointwise_limit(&cfg, &path, u).unwrap();
                prop_assert!(within_active_hull(&cfg, &lim, 1e-12));
            }
            Ok(())
        },
    );
    if let Err(e) = &hull {
        failures.push(format!("convex hull: {e}"));
    }

    // every row of the example sweeps
    let mut rows = 0usize;
    let mut bound_ok = true;
    let strict_path = WeightPath::from_pairs(&[(1., 0.), (1., 0.), (1., 1.), (1., 0.)]).unwrap();
    let cases = [
        (bezier_example(&parabola_points()), linear_coupling(2.0)),
        (bezier_example(&unit_box_points()), quadratic_coupling()),
        (strict_cubic(), strict_path),
    ];
    for (cfg, path) in &cases {
        for reference in [LimitReference::Pointwise, LimitReference::Interior] {
            let settings = AnalysisSettings {
                reference,
                ..AnalysisSettings::default()
            };
            let report = Analysis::new(cfg, path, settings)
                .unwrap()
                .sweep(&default_schedule())
                .unwrap();
            let (lo, hi) = cfg.span_bounds();
            for row in &report.rows {
                rows += 1;
                bound_ok &= row.l1_error <= row.sup_error * (hi - lo);
            }
        }
    }
    if !bound_ok {
        failures.push("l1 <= sup * length violated".to_string());
    }

    verdict(
        "AC6",
        failures.is_empty(),
        format!(
            "10^4 basis cases, 10^4 rational-basis cases, 10^3 hull configs, {rows} sweep rows; failures: {failures:?}"
        ),
    );
}
