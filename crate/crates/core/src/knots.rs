//! Knot vectors and B-spline basis evaluation.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// A non-decreasing knot sequence `u_0..u_m` together with the degree `p`
/// of the spline space it defines.
#[derive(Debug, Clone, PartialEq)]
pub struct KnotVector {
    knots: Vec<f64>,
    degree: usize,
}

/// The `p + 1` basis functions that may be non-zero on one knot span.
///
/// `values[r]` is `N_{span - p + r, p}(u)`; every other basis function is
/// zero at `u`.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisValues {
    pub span: usize,
    pub values: Vec<f64>,
}

impl BasisValues {
    /// Index of the first basis function covered by `values`.
    pub fn first_index(&self) -> usize {
        self.span + 1 - self.values.len()
    }

    /// `N_{j,p}(u)`, zero for indices outside the active range.
    pub fn get(&self, j: usize) -> f64 {
        let first = self.first_index();
        if j < first {
            return 0.0;
        }
        self.values.get(j - first).copied().unwrap_or(0.0)
    }
}

/// Which side of a knot a one-sided limit approaches from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `u -> x` with `u > x`.
    FromAbove,
    /// `u -> x` with `u < x`.
    FromBelow,
}

/// Lowest-order term of a basis function near a knot: with `s = |u - x|`,
/// `N(u) = coefficient * s^order + O(s^(order + 1))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LeadingTerm {
    pub order: u32,
    pub coefficient: f64,
}

impl KnotVector {
    pub fn new(knots: Vec<f64>, degree: usize) -> Result<Self> {
        if knots.len() < 2 * (degree + 1) {
            return Err(Error::TooFewKnots {
                len: knots.len(),
                degree,
            });
        }
        if let Some(index) = knots.iter().position(|k| !k.is_finite()) {
            return Err(Error::NonFiniteKnot { index });
        }
        if let Some(index) = knots.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::KnotsDecreasing { index });
        }
        let kv = KnotVector { knots, degree };
        let (lo, hi) = kv.domain();
        if lo >= hi {
            return Err(Error::EmptyDomain);
        }
        Ok(kv)
    }

    /// Clamped knots `{a,..,a, b,..,b}` with multiplicity `degree + 1`,
    /// whose basis is the Bernstein basis on `[a, b]`.
    pub fn bezier(degree: usize, a: f64, b: f64) -> Result<Self> {
        let mut knots = vec![a; degree + 1];
        knots.extend(core::iter::repeat_n(b, degree + 1));
        KnotVector::new(knots, degree)
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Index of the last knot, `m`.
    pub fn last_index(&self) -> usize {
        self.knots.len() - 1
    }

    /// Number of basis functions (and control points), `m - p`.
    pub fn basis_count(&self) -> usize {
        self.knots.len() - self.degree - 1
    }

    /// The valid parameter range `[u_p, u_{m-p}]`.
    pub fn domain(&self) -> (f64, f64) {
        let m = self.last_index();
        (self.knots[self.degree], self.knots[m - self.degree])
    }

    /// True iff every knot is strictly greater than its predecessor.
    pub fn is_strict(&self) -> bool {
        self.knots.windows(2).all(|w| w[0] < w[1])
    }

    /// Strictness restricted to `u_{span-p} .. u_{span+p+1}`, the knots that
    /// define the basis functions active on `span`.
    pub fn is_strict_around(&self, span: usize) -> bool {
        let lo = span.saturating_sub(self.degree);
        let hi = (span + self.degree + 1).min(self.last_index());
        self.knots[lo..=hi].windows(2).all(|w| w[0] < w[1])
    }

    /// Whether `span` indexes a non-degenerate interval inside the domain.
    pub fn is_valid_span(&self, span: usize) -> bool {
        let p = self.degree;
        let m = self.last_index();
        span >= p && span + p < m && self.knots[span] < self.knots[span + 1]
    }

    pub fn span_bounds(&self, span: usize) -> Result<(f64, f64)> {
        if !self.is_valid_span(span) {
            return Err(Error::InvalidSpan { span });
        }
        Ok((self.knots[span], self.knots[span + 1]))
    }

    /// Finds `i` with `u_i <= u < u_{i+1}`.
    ///
    /// The right end of the domain belongs to the last non-degenerate span.
    pub fn find_span(&self, u: f64) -> Result<usize> {
        let p = self.degree;
        let m = self.last_index();
        let (lo, hi) = self.domain();
        if !(lo..=hi).contains(&u) {
            return Err(Error::ParameterOutOfDomain { u, lo, hi });
        }
        if u == hi {
            return (p..m - p)
                .rev()
                .find(|&i| self.knots[i] < self.knots[i + 1])
                .ok_or(Error::Internal("domain without a non-degenerate span"));
        }
        // largest i <= m - p - 1 with u_i <= u; u >= u_p keeps it >= p
        Ok(self.knots[..m - p].partition_point(|&k| k <= u) - 1)
    }

    /// The `p + 1` basis functions that can be non-zero on `span`, evaluated
    /// at `u` in the closed span `[u_span, u_{span+1}]`.
    ///
    /// At a span endpoint this is the value of the polynomial piece that
    /// lives on `span`.
    pub fn basis_functions(&self, span: usize, u: f64) -> Result<BasisValues> {
        let (lo, hi) = self.span_bounds(span)?;
        if !(lo..=hi).contains(&u) {
            return Err(Error::ParameterOutOfSpan { u, lo, hi });
        }
        let mut values = vec![0.0; self.degree + 1];
        self.fill_basis(span, u, &mut values);
        Ok(BasisValues { span, values })
    }

    /// Triangular Cox–de Boor recursion. Caller guarantees a valid span and
    /// `out.len() == p + 1`.
    pub(crate) fn fill_basis(&self, span: usize, u: f64, out: &mut [f64]) {
        let p = self.degree;
        let knots = &self.knots;
        let mut left = vec![0.0; p + 1];
        let mut right = vec![0.0; p + 1];
        out[0] = 1.0;
        for j in 1..=p {
            left[j] = u - knots[span + 1 - j];
            right[j] = knots[span + j] - u;
            let mut saved = 0.0;
            for r in 0..j {
                let denom = right[r + 1] + left[j - r];
                // 0/0 := 0
                let temp = if denom == 0.0 { 0.0 } else { out[r] / denom };
                out[r] = saved + right[r + 1] * temp;
                saved = left[j - r] * temp;
            }
            out[j] = saved;
        }
    }

    /// One-sided leading terms of `N_{span-p..=span, p}` at an endpoint of
    /// `span`: the lower knot for [`Side::FromAbove`], the upper knot for
    /// [`Side::FromBelow`].
    ///
    /// `None` marks a function that is identically zero on that side. The
    /// recursion only ever adds non-negative contributions, so the orders
    /// are decided by exact knot equalities and never by a tolerance.
    pub fn leading_terms(&self, span: usize, side: Side) -> Result<Vec<Option<LeadingTerm>>> {
        let (lo, hi) = self.span_bounds(span)?;
        let p = self.degree;
        let knots = &self.knots;
        let x = match side {
            Side::FromAbove => lo,
            Side::FromBelow => hi,
        };
        let first = span - p;
        // level q holds N_{j,q} for j in first..=span + p - q
        let mut level: Vec<Option<LeadingTerm>> = (first..=span + p)
            .map(|j| {
                (j == span).then_some(LeadingTerm {
                    order: 0,
                    coefficient: 1.0,
                })
            })
            .collect();
        for q in 1..=p {
            let next_len = level.len() - 1;
            let mut next = Vec::with_capacity(next_len);
            for r in 0..next_len {
                let j = first + r;
                // (u - u_j) / (u_{j+q} - u_j) * N_{j,q-1}
                let a = factor(
                    level[r],
                    knots[j + q] - knots[j],
                    x - knots[j],
                    side == Side::FromAbove,
                );
                // (u_{j+q+1} - u) / (u_{j+q+1} - u_{j+1}) * N_{j+1,q-1}
                let b = factor(
                    level[r + 1],
                    knots[j + q + 1] - knots[j + 1],
                    knots[j + q + 1] - x,
                    side == Side::FromBelow,
                );
                next.push(combine(a, b));
            }
            level = next;
        }
        Ok(level)
    }
}

/// Multiplies a leading term by the linear factor `(c0 ± s) / denom`.
///
/// `grows_with_s` says whether the factor vanishes at `s = 0` when
/// `c0 == 0` (the `s` term then raises the order). A non-zero lower-order
/// function always sits on the side where `c0 >= 0`.
fn factor(
    term: Option<LeadingTerm>,
    denom: f64,
    c0: f64,
    grows_with_s: bool,
) -> Option<LeadingTerm> {
    let term = term?;
    if denom == 0.0 {
        return None;
    }
    if c0 == 0.0 {
        if !grows_with_s {
            return None;
        }
        return Some(LeadingTerm {
            order: term.order + 1,
            coefficient: term.coefficient / denom,
        });
    }
    debug_assert!(c0 > 0.0);
    Some(LeadingTerm {
        order: term.order,
        coefficient: term.coefficient * c0 / denom,
    })
}

fn combine(a: Option<LeadingTerm>, b: Option<LeadingTerm>) -> Option<LeadingTerm> {
    match (a, b) {
        (None, t) | (t, None) => t,
        (Some(a), Some(b)) => Some(match a.order.cmp(&b.order) {
            core::cmp::Ordering::Less => a,
            core::cmp::Ordering::Greater => b,
            core::cmp::Ordering::Equal => LeadingTerm {
                order: a.order,
                coefficient: a.coefficient + b.coefficient,
            },
        }),
    }
}
