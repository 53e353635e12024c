//! Gauss–Legendre quadrature, plain and composite.

use alloc::vec::Vec;
use core::f64::consts::PI;

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Default node count per subdivision for L¹ integrals.
    pub const DEFAULT_NODES: usize = 16;

    /// Builds the rule by Newton iteration on `P_n`.
    ///
    /// # Panics
    ///
    /// If `n == 0`.
    pub fn new(n: usize) -> Self {
        assert!(n > 0, "Gauss-Legendre rule needs at least one node");
        let mut nodes = alloc::vec![0.0; n];
        let mut weights = alloc::vec![0.0; n];
        let nf = n as f64;
        // roots are symmetric; solve for the positive half
        for i in 0..n.div_ceil(2) {
            let mut x = libm::cos(PI * (i as f64 + 0.75) / (nf + 0.5));
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() <= 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            dp = if d != 0.0 { d } else { dp };
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        GaussLegendre { nodes, weights }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `∫_a^b f`.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        half * self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| w * f(mid + half * x))
            .sum::<f64>()
    }

    /// `∫_a^b f` with the rule applied on `subdivisions` equal pieces.
    pub fn integrate_composite<F: FnMut(f64) -> f64>(
        &self,
        a: f64,
        b: f64,
        subdivisions: usize,
        mut f: F,
    ) -> f64 {
        let h = (b - a) / subdivisions as f64;
        (0..subdivisions)
            .map(|s| {
                let lo = a + h * s as f64;
                let hi = if s + 1 == subdivisions { b } else { lo + h };
                self.integrate(lo, hi, &mut f)
            })
            .sum()
    }

    /// Like [`integrate_composite`](Self::integrate_composite) for an
    /// integrand that can fail; stops at the first error.
    pub fn try_integrate_composite<E, F: FnMut(f64) -> Result<f64, E>>(
        &self,
        a: f64,
        b: f64,
        subdivisions: usize,
        mut f: F,
    ) -> Result<f64, E> {
        let h = (b - a) / subdivisions as f64;
        let mut total = 0.0;
        for s in 0..subdivisions {
            let lo = a + h * s as f64;
            let hi = if s + 1 == subdivisions { b } else { lo + h };
            let half = 0.5 * (hi - lo);
            let mid = 0.5 * (lo + hi);
            let mut piece = 0.0;
            for (x, w) in self.nodes.iter().zip(&self.weights) {
                piece += w * f(mid + half * x)?;
            }
            total += half * piece;
        }
        Ok(total)
    }
}

/// `(P_n(x), P_n'(x))` via the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let p = if n == 0 { 1.0 } else { p1 };
    let nf = n as f64;
    let d = nf * (x * p - p0) / (x * x - 1.0);
    (p, d)
}
