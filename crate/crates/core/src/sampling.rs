//! Uniform parameter grids.

/// `n` equally spaced samples on `[lo, hi]`, both endpoints included exactly.
///
/// `n == 1` yields just `lo`.
pub fn closed_grid(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> + Clone {
    let last = n.saturating_sub(1);
    (0..n).map(move |r| {
        if r == 0 {
            lo
        } else if r == last {
            hi
        } else {
            lo + (hi - lo) * (r as f64 / last as f64)
        }
    })
}
