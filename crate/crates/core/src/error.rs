use alloc::string::String;
use core::fmt;

use crate::limit::UniformConditionReport;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
#[non_exhaustive]
pub enum Error {
    /// Fewer knots than `2 * (degree + 1)`.
    TooFewKnots {
        len: usize,
        degree: usize,
    },
    NonFiniteKnot {
        index: usize,
    },
    /// `knots[index] > knots[index + 1]`.
    KnotsDecreasing {
        index: usize,
    },
    /// The parameter domain `[u_p, u_{m-p}]` has zero length.
    EmptyDomain,
    ParameterOutOfDomain {
        u: f64,
        lo: f64,
        hi: f64,
    },
    InvalidSpan {
        span: usize,
    },
    ParameterOutOfSpan {
        u: f64,
        lo: f64,
        hi: f64,
    },
    ControlCountMismatch {
        expected: usize,
        found: usize,
    },
    WeightCountMismatch {
        expected: usize,
        found: usize,
    },
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    EmptyPoint,
    NonFiniteCoordinate {
        index: usize,
    },
    NonPositiveWeight {
        index: usize,
        value: f64,
    },
    InvalidPathEntry {
        index: usize,
        reason: &'static str,
    },
    PathWithoutGrowth,
    PathLengthMismatch {
        expected: usize,
        found: usize,
    },
    /// A scalar argument (`t`, `epsilon`, ...) outside its valid range.
    InvalidArgument {
        name: &'static str,
        value: f64,
    },
    InvalidCount {
        name: &'static str,
        value: usize,
    },
    InvalidSchedule(&'static str),
    UniformConditionsViolated(UniformConditionReport),
    Precondition(String),
    /// A rational denominator vanished or overflowed.
    DegenerateDenominator {
        u: f64,
    },
    Internal(&'static str),
}

impl Error {
    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::Internal(_) | Error::DegenerateDenominator { .. }
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TooFewKnots { len, degree } => write!(
                f,
                "knot vector of length {len} is too short for degree {degree} (need at least {})",
                2 * (degree + 1)
            ),
            Error::NonFiniteKnot { index } => write!(f, "knot at index {index} is not finite"),
            Error::KnotsDecreasing { index } => {
                write!(f, "knots not non-decreasing at index {index}")
            }
            Error::EmptyDomain => f.write_str("knot vector has an empty parameter domain"),
            Error::ParameterOutOfDomain { u, lo, hi } => {
                write!(f, "parameter {u} outside the domain [{lo}, {hi}]")
            }
            Error::InvalidSpan { span } => {
                write!(f, "span index {span} is not a non-degenerate knot span")
            }
            Error::ParameterOutOfSpan { u, lo, hi } => {
                write!(f, "parameter {u} outside the span [{lo}, {hi}]")
            }
            Error::ControlCountMismatch { expected, found } => write!(
                f,
                "expected {expected} control points for this knot vector, found {found}"
            ),
            Error::WeightCountMismatch { expected, found } => {
                write!(f, "expected {expected} weights, found {found}")
            }
            Error::DimensionMismatch {
                index,
                expected,
                found,
            } => write!(
                f,
                "control point {index} has dimension {found}, expected {expected}"
            ),
            Error::EmptyPoint => f.write_str("points must have at least one coordinate"),
            Error::NonFiniteCoordinate { index } => {
                write!(f, "control point {index} has a non-finite coordinate")
            }
            Error::NonPositiveWeight { index, value } => {
                write!(
                    f,
                    "weight {index} is {value}, weights must be positive and finite"
                )
            }
            Error::InvalidPathEntry { index, reason } => {
                write!(f, "weight path entry {index}: {reason}")
            }
            Error::PathWithoutGrowth => {
                f.write_str("weight path needs at least one positive exponent")
            }
            Error::PathLengthMismatch { expected, found } => write!(
                f,
                "weight path has {found} entries, the curve has {expected} control points"
            ),
            Error::InvalidArgument { name, value } => write!(f, "invalid {name}: {value}"),
            Error::InvalidCount { name, value } => write!(f, "invalid {name}: {value}"),
            Error::InvalidSchedule(reason) => write!(f, "invalid t schedule: {reason}"),
            Error::UniformConditionsViolated(report) => {
                write!(f, "uniform convergence conditions violated: {report}")
            }
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::DegenerateDenominator { u } => {
                write!(f, "rational denominator degenerate at u = {u}")
            }
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
