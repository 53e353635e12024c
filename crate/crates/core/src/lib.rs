//! Evaluation of NURBS curves and analysis of their limits as weights grow
//! without bound along power-law paths.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function of its inputs, so values can be shared freely across threads.
//!
//! ```
//! use nurbs_limit::{KnotVector, NurbsCurveConfig, Point, WeightPath, pointwise_limit};
//!
//! let knots = KnotVector::new(vec![0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0], 3).unwrap();
//! let points = (0..4).map(|j| Point::new(vec![j as f64, (j * j) as f64])).collect();
//! let cfg = NurbsCurveConfig::new(knots, points, vec![1.0; 4], 3).unwrap();
//!
//! // weights (1, t, t^2, 1): the quadratic weight dominates inside the span
//! let path = WeightPath::from_pairs(&[(1.0, 0.0), (1.0, 1.0), (1.0, 2.0), (1.0, 0.0)]).unwrap();
//! let limit = pointwise_limit(&cfg, &path, 0.5).unwrap();
//! assert_eq!(limit.coords(), &[2.0, 4.0]);
//! ```
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
mod point;

pub mod convergence;
pub mod curve;
pub mod knots;
pub mod limit;
pub mod path;
pub mod quadrature;
pub mod sampling;

pub use convergence::{
    convergence_sweep, fit_loglog_slope, l1_error, path_dependence_demo, pointwise_error,
    sup_error, Analysis, AnalysisSettings, ConvergenceReport, LimitReference, PathDependenceResult,
    ReportRow,
};
pub use curve::NurbsCurveConfig;
pub use error::{Error, Result};
pub use knots::{BasisValues, KnotVector, LeadingTerm, Side};
pub use limit::{
    check_uniform_conditions, omega_threshold, pointwise_limit, pointwise_limit_with_group,
    uniform_limit_curve, EffectiveGroup, LimitCurve, LimitPoint, UniformConditionReport,
    UniformViolation,
};
pub use path::{DominanceGroup, DominanceGroups, PathEntry, WeightPath};
pub use point::Point;
pub use quadrature::GaussLegendre;
