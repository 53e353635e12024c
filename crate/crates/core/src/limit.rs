//! Limits of a NURBS curve as its weights follow a [`WeightPath`] to
//! infinity.
//!
//! On the open span the limit is the basis-weighted average of the
//! dominant group's control points, with the path coefficients `k_j` as
//! weights. At a span endpoint, members whose basis vanishes there drop
//! out; if that empties the group the next group down takes over. This is
//! how a clamped end keeps interpolating its end control point no matter
//! how large the interior weights become.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::curve::validate_weights;
use crate::knots::{BasisValues, Side};
use crate::path::DominanceGroups;
use crate::sampling::closed_grid;
use crate::{Error, NurbsCurveConfig, Point, Result, WeightPath};

/// Default sample count for the extrema in [`omega_threshold`].
pub const DEFAULT_THRESHOLD_GRID: usize = 2001;

/// The control indices that determine a limit point, and their exponent.
#[derive(Debug, Clone, PartialEq)]
pub struct EffectiveGroup {
    pub exponent: f64,
    pub members: Vec<usize>,
}

impl fmt::Display for EffectiveGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, j) in self.members.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{j}")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LimitPoint {
    pub point: Point,
    pub group: EffectiveGroup,
}

pub(crate) fn check_path(cfg: &NurbsCurveConfig, path: &WeightPath) -> Result<()> {
    if path.len() != cfg.control_count() {
        return Err(Error::PathLengthMismatch {
            expected: cfg.control_count(),
            found: path.len(),
        });
    }
    Ok(())
}

/// Weighted average of control points; `weighted` holds `(index, weight)`
/// with positive weights.
fn weighted_point(cfg: &NurbsCurveConfig, weighted: &[(usize, f64)]) -> Point {
    let denom: f64 = weighted.iter().map(|&(_, w)| w).sum();
    let pts = cfg.control_points();
    let mut out = Point::zeros(cfg.dim());
    for &(j, w) in weighted {
        out.add_scaled(w / denom, &pts[j]);
    }
    out
}

/// First group (by decreasing exponent) with a member whose basis value is
/// positive at the sample described by `basis`.
fn select_group(
    cfg: &NurbsCurveConfig,
    groups: &DominanceGroups,
    basis: &BasisValues,
) -> Result<LimitPoint> {
    for g in groups {
        let weighted: Vec<(usize, f64)> = g
            .members
            .iter()
            .filter_map(|&(j, k)| {
                let n = basis.get(j);
                (n > 0.0).then_some((j, n * k))
            })
            .collect();
        if weighted.is_empty() {
            continue;
        }
        return Ok(LimitPoint {
            point: weighted_point(cfg, &weighted),
            group: EffectiveGroup {
                exponent: g.exponent,
                members: weighted.iter().map(|&(j, _)| j).collect(),
            },
        });
    }
    Err(Error::Internal(
        "no dominance group has a non-vanishing basis",
    ))
}

/// Limit of `C(u; t)` as `t -> infinity` along `path`, for `u` in the
/// closed active span.
pub fn pointwise_limit(cfg: &NurbsCurveConfig, path: &WeightPath, u: f64) -> Result<Point> {
    pointwise_limit_with_group(cfg, path, u).map(|lp| lp.point)
}

/// [`pointwise_limit`] together with the group of indices that produced it.
pub fn pointwise_limit_with_group(
    cfg: &NurbsCurveConfig,
    path: &WeightPath,
    u: f64,
) -> Result<LimitPoint> {
    check_path(cfg, path)?;
    let basis = cfg.basis(u)?;
    select_group(cfg, &path.dominance_groups(), &basis)
}

/// The dominant group restricted to indices active on the span: the first
/// group, by decreasing exponent, with a member in `i-p..=i`. Every active
/// basis function is positive on the open span, so this group decides the
/// limit everywhere strictly inside it.
fn interior_group(
    cfg: &NurbsCurveConfig,
    groups: &DominanceGroups,
) -> Result<(f64, Vec<(usize, f64)>)> {
    let active = cfg.active_range();
    groups
        .iter()
        .find_map(|g| {
            let members: Vec<(usize, f64)> = g
                .members
                .iter()
                .copied()
                .filter(|(j, _)| active.contains(j))
                .collect();
            (!members.is_empty()).then_some((g.exponent, members))
        })
        .ok_or(Error::Internal("no group intersects the active span"))
}

/// How a [`LimitCurve`] treats the endpoints of the span.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitKind {
    /// Endpoints follow the pointwise rule (vanishing members drop out).
    Pointwise,
    /// One formula on the closed span; the uniform-convergence conditions
    /// hold.
    Uniform,
    /// The interior formula extended to the endpoints by continuity, even
    /// where that differs from the pointwise limit.
    InteriorExtension,
}

/// Evaluator for the limit curve on the closed active span.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitCurve {
    cfg: NurbsCurveConfig,
    kind: LimitKind,
    interior: EffectiveGroup,
    coefficients: Vec<(usize, f64)>,
    lower: LimitPoint,
    upper: LimitPoint,
}

impl LimitCurve {
    /// The pointwise limit as a curve; agrees with [`pointwise_limit`]
    /// everywhere on the span.
    pub fn pointwise(cfg: &NurbsCurveConfig, path: &WeightPath) -> Result<Self> {
        check_path(cfg, path)?;
        let groups = path.dominance_groups();
        let (exponent, coefficients) = interior_group(cfg, &groups)?;
        let (lo, hi) = cfg.span_bounds();
        let lower = select_group(cfg, &groups, &cfg.basis(lo)?)?;
        let upper = select_group(cfg, &groups, &cfg.basis(hi)?)?;
        Ok(LimitCurve {
            cfg: cfg.clone(),
            kind: LimitKind::Pointwise,
            interior: EffectiveGroup {
                exponent,
                members: coefficients.iter().map(|&(j, _)| j).collect(),
            },
            coefficients,
            lower,
            upper,
        })
    }

    /// The interior limit formula, continuously extended to both endpoints.
    ///
    /// Where every interior member's basis vanishes at an endpoint, the
    /// extension weights the members of lowest vanishing order by their
    /// leading coefficients.
    pub fn interior_extension(cfg: &NurbsCurveConfig, path: &WeightPath) -> Result<Self> {
        check_path(cfg, path)?;
        let groups = path.dominance_groups();
        let (exponent, coefficients) = interior_group(cfg, &groups)?;
        let (lo, hi) = cfg.span_bounds();
        let lower = extend(cfg, exponent, &coefficients, lo, Side::FromAbove)?;
        let upper = extend(cfg, exponent, &coefficients, hi, Side::FromBelow)?;
        Ok(LimitCurve {
            cfg: cfg.clone(),
            kind: LimitKind::InteriorExtension,
            interior: EffectiveGroup {
                exponent,
                members: coefficients.iter().map(|&(j, _)| j).collect(),
            },
            coefficients,
            lower,
            upper,
        })
    }

    pub fn kind(&self) -> LimitKind {
        self.kind
    }

    /// Dominant group on the open span.
    pub fn interior_group(&self) -> &EffectiveGroup {
        &self.interior
    }

    pub fn span_bounds(&self) -> (f64, f64) {
        self.cfg.span_bounds()
    }

    pub fn evaluate(&self, u: f64) -> Result<Point> {
        self.evaluate_with_group(u).map(|lp| lp.point)
    }

    pub fn evaluate_with_group(&self, u: f64) -> Result<LimitPoint> {
        let (lo, hi) = self.cfg.span_bounds();
        if u == lo {
            return Ok(self.lower.clone());
        }
        if u == hi {
            return Ok(self.upper.clone());
        }
        let basis = self.cfg.basis(u)?;
        let weighted: Vec<(usize, f64)> = self
            .coefficients
            .iter()
            .map(|&(j, k)| (j, basis.get(j) * k))
            .collect();
        let denom: f64 = weighted.iter().map(|&(_, w)| w).sum();
        if denom.is_nan() || denom <= 0.0 {
            return Err(Error::DegenerateDenominator { u });
        }
        Ok(LimitPoint {
            point: weighted_point(&self.cfg, &weighted),
            group: self.interior.clone(),
        })
    }
}

fn extend(
    cfg: &NurbsCurveConfig,
    exponent: f64,
    coefficients: &[(usize, f64)],
    x: f64,
    side: Side,
) -> Result<LimitPoint> {
    let basis = cfg.basis(x)?;
    let mut weighted: Vec<(usize, f64)> = coefficients
        .iter()
        .map(|&(j, k)| (j, basis.get(j) * k))
        .filter(|&(_, w)| w > 0.0)
        .collect();
    if weighted.is_empty() {
        let terms = cfg.knots().leading_terms(cfg.span(), side)?;
        let first = cfg.span() - cfg.degree();
        let lead: Vec<(usize, u32, f64)> = coefficients
            .iter()
            .filter_map(|&(j, k)| terms[j - first].map(|t| (j, t.order, t.coefficient * k)))
            .collect();
        let min_order = lead
            .iter()
            .map(|&(_, o, _)| o)
            .min()
            .ok_or(Error::Internal("interior group vanishes identically"))?;
        weighted = lead
            .into_iter()
            .filter(|&(_, o, _)| o == min_order)
            .map(|(j, _, w)| (j, w))
            .collect();
    }
    Ok(LimitPoint {
        point: weighted_point(cfg, &weighted),
        group: EffectiveGroup {
            exponent,
            members: weighted.iter().map(|&(j, _)| j).collect(),
        },
    })
}

/// A hypothesis of the uniform-convergence result that fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UniformViolation {
    /// Knots near the span are not strictly increasing.
    NonStrictKnots,
    /// `i - p` belongs to the dominant group.
    FirstIndexDominant,
    /// `i` belongs to the dominant group.
    SpanIndexDominant,
}

impl fmt::Display for UniformViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UniformViolation::NonStrictKnots => "non-strict knots",
            UniformViolation::FirstIndexDominant => "i−p ∈ j₀",
            UniformViolation::SpanIndexDominant => "i ∈ j₀",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct UniformConditionReport {
    pub holds: bool,
    pub reasons: Vec<UniformViolation>,
}

impl fmt::Display for UniformConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds {
            return f.write_str("all conditions hold");
        }
        for (n, r) in self.reasons.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Checks that the knots around the span are strictly increasing and that
/// the dominant group avoids the boundary indices `i - p` and `i`, whose
/// basis functions vanish at one end of the span.
pub fn check_uniform_conditions(
    cfg: &NurbsCurveConfig,
    path: &WeightPath,
) -> Result<UniformConditionReport> {
    check_path(cfg, path)?;
    let (_, dominant) = interior_group(cfg, &path.dominance_groups())?;
    let i = cfg.span();
    let p = cfg.degree();
    let mut reasons = Vec::new();
    if !cfg.knots().is_strict_around(i) {
        reasons.push(UniformViolation::NonStrictKnots);
    }
    if dominant.iter().any(|&(j, _)| j == i - p) {
        reasons.push(UniformViolation::FirstIndexDominant);
    }
    if dominant.iter().any(|&(j, _)| j == i) {
        reasons.push(UniformViolation::SpanIndexDominant);
    }
    Ok(UniformConditionReport {
        holds: reasons.is_empty(),
        reasons,
    })
}

/// The single-formula limit on the closed span. Fails with
/// [`Error::UniformConditionsViolated`] unless
/// [`check_uniform_conditions`] holds.
pub fn uniform_limit_curve(cfg: &NurbsCurveConfig, path: &WeightPath) -> Result<LimitCurve> {
    let report = check_uniform_conditions(cfg, path)?;
    if !report.holds {
        return Err(Error::UniformConditionsViolated(report));
    }
    let mut curve = LimitCurve::interior_extension(cfg, path)?;
    curve.kind = LimitKind::Uniform;
    Ok(curve)
}

/// Weight above which the rational basis of `dominant_index` is within
/// `epsilon` of 1 on the whole span, with every other weight held at its
/// base value.
///
/// Returns `M / (epsilon * m)` where `M` is the maximum of
/// `sum_{j != k} N_j(u) w_j` and `m` the minimum of `N_k(u)`, both taken
/// over `grid_size` uniform samples of the closed span. The extrema are of
/// piecewise polynomials of degree at most `p`; raise `grid_size` to tighten
/// them.
pub fn omega_threshold(
    cfg: &NurbsCurveConfig,
    dominant_index: usize,
    epsilon: f64,
    grid_size: usize,
) -> Result<f64> {
    if epsilon.is_nan() || epsilon <= 0.0 {
        return Err(Error::InvalidArgument {
            name: "epsilon",
            value: epsilon,
        });
    }
    if grid_size < 2 {
        return Err(Error::InvalidCount {
            name: "grid_size",
            value: grid_size,
        });
    }
    let i = cfg.span();
    let p = cfg.degree();
    if dominant_index + p <= i || dominant_index >= i {
        return Err(Error::Precondition(alloc::format!(
            "dominant index {dominant_index} must lie strictly between {} and {i}",
            i - p
        )));
    }
    if !cfg.knots().is_strict_around(i) {
        return Err(Error::Precondition(String::from(
            "knots around the span must be strictly increasing",
        )));
    }
    let weights = cfg.base_weights();
    let (lo, hi) = cfg.span_bounds();
    let mut big_m = 0.0f64;
    let mut small_m = f64::INFINITY;
    for u in closed_grid(lo, hi, grid_size) {
        let basis = cfg.basis(u)?;
        let first = basis.first_index();
        let rest: f64 = basis
            .values
            .iter()
            .enumerate()
            .filter(|&(r, _)| first + r != dominant_index)
            .map(|(r, n)| n * weights[first + r])
            .sum();
        big_m = big_m.max(rest);
        small_m = small_m.min(basis.get(dominant_index));
    }
    if small_m.is_nan() || small_m <= 0.0 {
        return Err(Error::Precondition(String::from(
            "basis of the dominant index vanishes on the span",
        )));
    }
    Ok(big_m / (epsilon * small_m))
}

/// Largest `|R_k(u) - 1|` over a uniform grid when the weight of
/// `dominant_index` is set to `omega` and the rest keep their base values.
pub fn dominant_rational_deviation(
    cfg: &NurbsCurveConfig,
    dominant_index: usize,
    omega: f64,
    grid_size: usize,
) -> Result<f64> {
    if !cfg.active_range().contains(&dominant_index) {
        return Err(Error::Precondition(alloc::format!(
            "index {dominant_index} is not active on the span"
        )));
    }
    let mut weights = cfg.base_weights().to_vec();
    weights[dominant_index] = omega;
    validate_weights(&weights, cfg.control_count())?;
    let (lo, hi) = cfg.span_bounds();
    let r = dominant_index + cfg.degree() - cfg.span();
    let mut worst = 0.0f64;
    for u in closed_grid(lo, hi, grid_size) {
        let rational = cfg.rational_basis(&weights, u)?;
        worst = worst.max((rational[r] - 1.0).abs());
    }
    Ok(worst)
}
