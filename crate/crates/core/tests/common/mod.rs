#![allow(dead_code)]

use nurbs_limit::{KnotVector, NurbsCurveConfig, PathEntry, Point, WeightPath};
use proptest::prelude::*;

/// Degree 1..=5, random multiplicities, optionally clamped.
pub fn knot_vector() -> impl Strategy<Value = KnotVector> {
    (1usize..=5, 0usize..=6, any::<bool>())
        .prop_flat_map(|(p, extra, clamped)| {
            let count = 2 * (p + 1) + extra;
            let incs =
                prop::collection::vec(prop_oneof![1 => Just(0.0), 3 => 0.05f64..2.0], count - 1);
            (Just(p), Just(clamped), -5.0f64..5.0, incs)
        })
        .prop_filter_map("empty parameter domain", |(p, clamped, start, mut incs)| {
            if clamped {
                let n = incs.len();
                incs[..p].fill(0.0);
                incs[n - p..].fill(0.0);
            }
            let mut knots = Vec::with_capacity(incs.len() + 1);
            knots.push(start);
            for inc in incs {
                let last = *knots.last().unwrap();
                knots.push(last + inc);
            }
            KnotVector::new(knots, p).ok()
        })
}

/// A parameter in the domain; a quarter of the time exactly on a knot.
pub fn knots_and_parameter() -> impl Strategy<Value = (KnotVector, f64)> {
    knot_vector().prop_flat_map(|kv| {
        let (lo, hi) = kv.domain();
        let on_knot = {
            let inside: Vec<f64> = kv
                .knots()
                .iter()
                .copied()
                .filter(|k| (lo..=hi).contains(k))
                .collect();
            prop::sample::select(inside)
        };
        let free = (0.0f64..=1.0).prop_map(move |f| (lo + f * (hi - lo)).min(hi));
        (Just(kv), prop_oneof![3 => free, 1 => on_knot])
    })
}

/// Random curve on a random non-degenerate span, dimension 1..=3.
pub fn curve_config() -> impl Strategy<Value = NurbsCurveConfig> {
    (knot_vector(), 1usize..=3).prop_flat_map(|(kv, dim)| {
        let n = kv.basis_count();
        let spans: Vec<usize> = (kv.degree()..n).filter(|&i| kv.is_valid_span(i)).collect();
        let points = prop::collection::vec(prop::collection::vec(-10.0f64..10.0, dim), n);
        let weights = prop::collection::vec(0.1f64..10.0, n);
        (Just(kv), points, weights, prop::sample::select(spans)).prop_map(
            |(kv, points, weights, span)| {
                let points = points.into_iter().map(Point::new).collect();
                NurbsCurveConfig::new(kv, points, weights, span).unwrap()
            },
        )
    })
}

/// Parameter in the closed active span; endpoints a fifth of the time each.
pub fn span_parameter(cfg: &NurbsCurveConfig) -> impl Strategy<Value = f64> {
    let (lo, hi) = cfg.span_bounds();
    prop_oneof![
        1 => Just(lo),
        1 => Just(hi),
        3 => (0.0f64..=1.0).prop_map(move |f| (lo + f * (hi - lo)).min(hi)),
    ]
}

/// Weights spread over twelve orders of magnitude.
pub fn weights(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec((-6.0f64..6.0, 1.0f64..10.0), n)
        .prop_map(|v| v.into_iter().map(|(e, m)| m * 10f64.powf(e)).collect())
}

/// Power-law path whose exponents are drawn from `exponents`.
pub fn weight_path(n: usize, exponents: &'static [f64]) -> impl Strategy<Value = WeightPath> {
    prop::collection::vec((0.1f64..10.0, prop::sample::select(exponents)), n).prop_filter_map(
        "needs a growing weight",
        |entries| {
            WeightPath::new(
                entries
                    .into_iter()
                    .map(|(coefficient, exponent)| PathEntry {
                        coefficient,
                        exponent,
                    })
                    .collect(),
            )
            .ok()
        },
    )
}

pub fn within_active_hull(cfg: &NurbsCurveConfig, pt: &Point, tol: f64) -> bool {
    let (lo, hi) = cfg.active_bounding_box();
    pt.coords()
        .iter()
        .enumerate()
        .all(|(d, c)| *c >= lo[d] - tol && *c <= hi[d] + tol)
}

pub fn bezier_example(points: &[[f64; 2]; 4]) -> NurbsCurveConfig {
    let kv = KnotVector::bezier(3, 0.0, 1.0).unwrap();
    let pts = points.iter().map(|p| Point::from(*p)).collect();
    NurbsCurveConfig::new(kv, pts, vec![1.0; 4], 3).unwrap()
}

/// `p_j = (j, j^2)`.
pub fn parabola_points() -> [[f64; 2]; 4] {
    [[0.0, 0.0], [1.0, 1.0], [2.0, 4.0], [3.0, 9.0]]
}

/// Corners of the unit square.
pub fn unit_box_points() -> [[f64; 2]; 4] {
    [[0.0, 0.0], [0.0, 1.0], [1.0, 1.0], [1.0, 0.0]]
}

pub fn linear_coupling(k: f64) -> WeightPath {
    WeightPath::from_pairs(&[(1., 0.), (1., 1.), (k, 1.), (1., 0.)]).unwrap()
}

pub fn quadratic_coupling() -> WeightPath {
    WeightPath::from_pairs(&[(1., 0.), (1., 1.), (1., 2.), (1., 0.)]).unwrap()
}

/// Knots `{0, 1, ..., 7}`, cubic, span 3, unit base weights.
pub fn strict_cubic() -> NurbsCurveConfig {
    let kv = KnotVector::new((0..8).map(f64::from).collect(), 3).unwrap();
    let pts = [[0.0, 0.0], [1.0, 2.0], [3.0, 2.5], [4.0, 0.0]]
        .iter()
        .map(|p| Point::from(*p))
        .collect();
    NurbsCurveConfig::new(kv, pts, vec![1.0; 4], 3).unwrap()
}
