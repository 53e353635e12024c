//! NURBS curves restricted to one active knot span.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use crate::knots::{BasisValues, KnotVector};
use crate::{Error, Point, Result};

/// Knots, control points and base weights of a NURBS curve, together with
/// the span `[u_i, u_{i+1}]` under study.
#[derive(Debug, Clone, PartialEq)]
pub struct NurbsCurveConfig {
    knots: KnotVector,
    control_points: Vec<Point>,
    base_weights: Vec<f64>,
    span: usize,
}

impl NurbsCurveConfig {
    pub fn new(
        knots: KnotVector,
        control_points: Vec<Point>,
        base_weights: Vec<f64>,
        span: usize,
    ) -> Result<Self> {
        let expected = knots.basis_count();
        if control_points.len() != expected {
            return Err(Error::ControlCountMismatch {
                expected,
                found: control_points.len(),
            });
        }
        let dim = control_points[0].dim();
        if dim == 0 {
            return Err(Error::EmptyPoint);
        }
        for (index, pt) in control_points.iter().enumerate() {
            if pt.dim() != dim {
                return Err(Error::DimensionMismatch {
                    index,
                    expected: dim,
                    found: pt.dim(),
                });
            }
            if pt.coords().iter().any(|c| !c.is_finite()) {
                return Err(Error::NonFiniteCoordinate { index });
            }
        }
        validate_weights(&base_weights, expected)?;
        if !knots.is_valid_span(span) {
            return Err(Error::InvalidSpan { span });
        }
        Ok(NurbsCurveConfig {
            knots,
            control_points,
            base_weights,
            span,
        })
    }

    pub fn knots(&self) -> &KnotVector {
        &self.knots
    }

    pub fn degree(&self) -> usize {
        self.knots.degree()
    }

    pub fn control_points(&self) -> &[Point] {
        &self.control_points
    }

    pub fn base_weights(&self) -> &[f64] {
        &self.base_weights
    }

    pub fn span(&self) -> usize {
        self.span
    }

    pub fn dim(&self) -> usize {
        self.control_points[0].dim()
    }

    pub fn control_count(&self) -> usize {
        self.control_points.len()
    }

    /// `(u_i, u_{i+1})` of the active span.
    pub fn span_bounds(&self) -> (f64, f64) {
        let k = self.knots.knots();
        (k[self.span], k[self.span + 1])
    }

    /// Control indices `i - p ..= i` whose basis functions live on the span.
    pub fn active_range(&self) -> RangeInclusive<usize> {
        self.span - self.degree()..=self.span
    }

    /// Basis values on the active span; `u` must lie in its closed interval.
    pub fn basis(&self, u: f64) -> Result<BasisValues> {
        self.knots.basis_functions(self.span, u)
    }

    /// Rational basis `R_j = N_j w_j / sum_r N_r w_r` for the active indices.
    pub fn rational_basis(&self, weights: &[f64], u: f64) -> Result<Vec<f64>> {
        validate_weights(weights, self.control_count())?;
        let basis = self.basis(u)?;
        self.rational_from_basis(&basis, weights, u)
    }

    /// Evaluates `sum N_j w_j p_j / sum N_j w_j` over the active indices.
    pub fn eval_nurbs(&self, weights: &[f64], u: f64) -> Result<Point> {
        let rational = self.rational_basis(weights, u)?;
        Ok(self.combine(&rational))
    }

    pub(crate) fn rational_from_basis(
        &self,
        basis: &BasisValues,
        weights: &[f64],
        u: f64,
    ) -> Result<Vec<f64>> {
        let first = basis.first_index();
        let mut out: Vec<f64> = basis
            .values
            .iter()
            .zip(&weights[first..=self.span])
            .map(|(n, w)| n * w)
            .collect();
        let denom: f64 = out.iter().sum();
        if !(denom > 0.0 && denom.is_finite()) {
            return Err(Error::DegenerateDenominator { u });
        }
        for r in &mut out {
            *r /= denom;
        }
        Ok(out)
    }

    /// `sum_r coeffs[r] * p_{i-p+r}`.
    pub(crate) fn combine(&self, coeffs: &[f64]) -> Point {
        let first = self.span - self.degree();
        let mut pt = Point::zeros(self.dim());
        for (c, p) in coeffs.iter().zip(&self.control_points[first..=self.span]) {
            pt.add_scaled(*c, p);
        }
        pt
    }

    /// Per-coordinate `[min, max]` over the active control points.
    pub fn active_bounding_box(&self) -> (Vec<f64>, Vec<f64>) {
        let mut lo = vec![f64::INFINITY; self.dim()];
        let mut hi = vec![f64::NEG_INFINITY; self.dim()];
        for p in &self.control_points[self.active_range()] {
            for (d, c) in p.coords().iter().enumerate() {
                lo[d] = lo[d].min(*c);
                hi[d] = hi[d].max(*c);
            }
        }
        (lo, hi)
    }
}

pub(crate) fn validate_weights(weights: &[f64], expected: usize) -> Result<()> {
    if weights.len() != expected {
        return Err(Error::WeightCountMismatch {
            expected,
            found: weights.len(),
        });
    }
    match weights.iter().position(|w| !(*w > 0.0 && w.is_finite())) {
        Some(index) => Err(Error::NonPositiveWeight {
            index,
            value: weights[index],
        }),
        None => Ok(()),
    }
}
