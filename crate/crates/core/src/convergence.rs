//! Empirical convergence of `C(u; t)` to its limit: pointwise, sup-norm
//! and L¹ errors, t-sweeps, log-log rate fits, and the separation between
//! limits taken along different weight paths.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::limit::{check_path, LimitCurve};
use crate::sampling::closed_grid;
use crate::{Error, GaussLegendre, NurbsCurveConfig, Point, Result, WeightPath};

/// Which limit curve errors are measured against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LimitReference {
    /// The pointwise limit, endpoint rules included.
    #[default]
    Pointwise,
    /// The interior formula extended to the closed span by continuity.
    /// Differs from the pointwise limit exactly where convergence is not
    /// uniform.
    Interior,
}

impl LimitReference {
    pub fn name(&self) -> &'static str {
        match self {
            LimitReference::Pointwise => "pointwise",
            LimitReference::Interior => "interior",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalysisSettings {
    /// Closed-grid samples for the sup norm (an under-estimate of the true
    /// supremum).
    pub grid_size: usize,
    /// Composite quadrature pieces for the L¹ norm.
    pub subdivisions: usize,
    /// Gauss–Legendre nodes per piece.
    pub nodes: usize,
    pub reference: LimitReference,
}

impl Default for AnalysisSettings {
    fn default() -> Self {
        AnalysisSettings {
            grid_size: 2001,
            subdivisions: 64,
            nodes: GaussLegendre::DEFAULT_NODES,
            reference: LimitReference::Pointwise,
        }
    }
}

/// Default t schedule: `10^1, 10^2, ..., 10^8`.
pub fn default_schedule() -> Vec<f64> {
    (1..=8).map(|k| libm::pow(10.0, k as f64)).collect()
}

/// One curve, one path and one reference limit, prepared for repeated
/// error measurements.
#[derive(Debug, Clone)]
pub struct Analysis {
    cfg: NurbsCurveConfig,
    path: WeightPath,
    limit: LimitCurve,
    rule: GaussLegendre,
    settings: AnalysisSettings,
}

impl Analysis {
    pub fn new(
        cfg: &NurbsCurveConfig,
        path: &WeightPath,
        settings: AnalysisSettings,
    ) -> Result<Self> {
        check_path(cfg, path)?;
        if settings.grid_size < 2 {
            return Err(Error::InvalidCount {
                name: "grid_size",
                value: settings.grid_size,
            });
        }
        if settings.subdivisions < 1 {
            return Err(Error::InvalidCount {
                name: "subdivisions",
                value: settings.subdivisions,
            });
        }
        if settings.nodes < 1 {
            return Err(Error::InvalidCount {
                name: "nodes",
                value: settings.nodes,
            });
        }
        let limit = match settings.reference {
            LimitReference::Pointwise => LimitCurve::pointwise(cfg, path)?,
            LimitReference::Interior => LimitCurve::interior_extension(cfg, path)?,
        };
        Ok(Analysis {
            cfg: cfg.clone(),
            path: path.clone(),
            limit,
            rule: GaussLegendre::new(settings.nodes),
            settings,
        })
    }

    pub fn settings(&self) -> &AnalysisSettings {
        &self.settings
    }

    pub fn limit(&self) -> &LimitCurve {
        &self.limit
    }

    /// `C(u; t)` with normalized weights.
    pub fn curve_at(&self, t: f64, u: f64) -> Result<Point> {
        let w = self.path.normalized_weights_at(t)?;
        self.cfg.eval_nurbs(&w, u)
    }

    fn error_with(&self, weights: &[f64], u: f64) -> Result<f64> {
        let c = self.cfg.eval_nurbs(weights, u)?;
        Ok(c.distance(&self.limit.evaluate(u)?))
    }

    pub fn pointwise_error(&self, t: f64, u: f64) -> Result<f64> {
        let w = self.path.normalized_weights_at(t)?;
        self.error_with(&w, u)
    }

    /// Largest pointwise error over the closed grid.
    pub fn sup_error(&self, t: f64) -> Result<f64> {
        let w = self.path.normalized_weights_at(t)?;
        let (lo, hi) = self.cfg.span_bounds();
        closed_grid(lo, hi, self.settings.grid_size)
            .try_fold(0.0f64, |acc, u| Ok(acc.max(self.error_with(&w, u)?)))
    }

    /// `∫ |C(u; t) - L(u)| du` over the span by composite Gauss–Legendre.
    pub fn l1_error(&self, t: f64) -> Result<f64> {
        let w = self.path.normalized_weights_at(t)?;
        let (lo, hi) = self.cfg.span_bounds();
        self.rule
            .try_integrate_composite(lo, hi, self.settings.subdivisions, |u| {
                self.error_with(&w, u)
            })
    }

    pub fn row(&self, t: f64) -> Result<ReportRow> {
        Ok(ReportRow {
            t,
            sup_error: self.sup_error(t)?,
            l1_error: self.l1_error(t)?,
        })
    }

    /// Computes one row per `t`, in schedule order.
    pub fn sweep(&self, schedule: &[f64]) -> Result<ConvergenceReport> {
        validate_schedule(schedule)?;
        let rows = schedule
            .iter()
            .map(|&t| self.row(t))
            .collect::<Result<Vec<_>>>()?;
        self.report(rows)
    }

    /// Assembles a report from rows computed elsewhere (e.g. in parallel).
    /// Rows must already be in schedule order.
    pub fn report(&self, rows: Vec<ReportRow>) -> Result<ConvergenceReport> {
        let schedule: Vec<f64> = rows.iter().map(|r| r.t).collect();
        validate_schedule(&schedule)?;
        Ok(ConvergenceReport {
            schedule,
            rows,
            grid_size: self.settings.grid_size,
            subdivisions: self.settings.subdivisions,
            nodes_per_subdivision: self.settings.nodes,
            reference: self.settings.reference,
            path_description: describe_path(&self.path),
        })
    }
}

/// Non-empty, strictly increasing, positive and finite.
pub fn validate_schedule(schedule: &[f64]) -> Result<()> {
    if schedule.is_empty() {
        return Err(Error::InvalidSchedule("schedule is empty"));
    }
    if schedule.iter().any(|t| !(*t > 0.0 && t.is_finite())) {
        return Err(Error::InvalidSchedule(
            "every t must be positive and finite",
        ));
    }
    if schedule.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidSchedule(
            "schedule must be strictly increasing",
        ));
    }
    Ok(())
}

fn describe_path(path: &WeightPath) -> String {
    let mut s = String::new();
    for (j, e) in path.entries().iter().enumerate() {
        if j > 0 {
            s.push(' ');
        }
        let _ = write!(s, "w{j}={}*t^{}", e.coefficient, e.exponent);
    }
    s
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReportRow {
    pub t: f64,
    pub sup_error: f64,
    pub l1_error: f64,
}

/// Sup and L¹ errors over a t schedule.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub schedule: Vec<f64>,
    pub rows: Vec<ReportRow>,
    pub grid_size: usize,
    pub subdivisions: usize,
    pub nodes_per_subdivision: usize,
    pub reference: LimitReference,
    pub path_description: String,
}

impl ConvergenceReport {
    /// Log-log least-squares slope of sup error against `t`, over rows with
    /// `t >= min_t`.
    pub fn sup_slope(&self, min_t: f64) -> Option<f64> {
        let pts: Vec<(f64, f64)> = self
            .rows
            .iter()
            .filter(|r| r.t >= min_t)
            .map(|r| (r.t, r.sup_error))
            .collect();
        fit_loglog_slope(&pts)
    }

    pub fn l1_slope(&self, min_t: f64) -> Option<f64> {
        let pts: Vec<(f64, f64)> = self
            .rows
            .iter()
            .filter(|r| r.t >= min_t)
            .map(|r| (r.t, r.l1_error))
            .collect();
        fit_loglog_slope(&pts)
    }
}

/// Least-squares slope of `ln y` against `ln x`. Points with a
/// non-positive coordinate are skipped; `None` if fewer than two remain or
/// all `x` coincide.
pub fn fit_loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    let logs: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|&(x, y)| (libm::log(x), libm::log(y)))
        .collect();
    if logs.len() < 2 {
        return None;
    }
    let n = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Distance between `C(u; t)` and the pointwise limit.
pub fn pointwise_error(cfg: &NurbsCurveConfig, path: &WeightPath, t: f64, u: f64) -> Result<f64> {
    let w = path.normalized_weights_at(t)?;
    check_path(cfg, path)?;
    let c = cfg.eval_nurbs(&w, u)?;
    Ok(c.distance(&crate::pointwise_limit(cfg, path, u)?))
}

/// Sup-norm error against the pointwise limit on a closed grid.
pub fn sup_error(
    cfg: &NurbsCurveConfig,
    path: &WeightPath,
    t: f64,
    grid_size: usize,
) -> Result<f64> {
    let settings = AnalysisSettings {
        grid_size,
        ..AnalysisSettings::default()
    };
    Analysis::new(cfg, path, settings)?.sup_error(t)
}

/// L¹ error against the pointwise limit, 16 nodes per subdivision.
pub fn l1_error(
    cfg: &NurbsCurveConfig,
    path: &WeightPath,
    t: f64,
    subdivisions: usize,
) -> Result<f64> {
    let settings = AnalysisSettings {
        subdivisions,
        ..AnalysisSettings::default()
    };
    Analysis::new(cfg, path, settings)?.l1_error(t)
}

/// Sweep with default settings against the pointwise limit.
pub fn convergence_sweep(
    cfg: &NurbsCurveConfig,
    path: &WeightPath,
    schedule: &[f64],
) -> Result<ConvergenceReport> {
    validate_schedule(schedule)?;
    Analysis::new(cfg, path, AnalysisSettings::default())?.sweep(schedule)
}

/// Limits at one parameter along two weight paths.
#[derive(Debug, Clone, PartialEq)]
pub struct PathDependenceResult {
    pub u: f64,
    pub limit_a: Point,
    pub limit_b: Point,
    /// Euclidean distance between the two limits.
    pub separation: f64,
}

/// Compares the limits along two paths at an interior `u`. A positive
/// separation shows the curve has no limit when the weights grow
/// independently.
pub fn path_dependence_demo(
    cfg: &NurbsCurveConfig,
    path_a: &WeightPath,
    path_b: &WeightPath,
    u: f64,
) -> Result<PathDependenceResult> {
    let (lo, hi) = cfg.span_bounds();
    if !(u > lo && u < hi) {
        return Err(Error::ParameterOutOfSpan { u, lo, hi });
    }
    let limit_a = crate::pointwise_limit(cfg, path_a, u)?;
    let limit_b = crate::pointwise_limit(cfg, path_b, u)?;
    let separation = limit_a.distance(&limit_b);
    Ok(PathDependenceResult {
        u,
        limit_a,
        limit_b,
        separation,
    })
}
