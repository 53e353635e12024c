//! Power-law weight paths `w_j(t) = k_j * t^{e_j}` and the dominance
//! structure they induce as `t -> infinity`.

use alloc::vec::Vec;

use crate::{Error, Result};

/// Two exponents closer than this are treated as equal.
pub const EXPONENT_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathEntry {
    /// `k_j > 0`.
    pub coefficient: f64,
    /// `e_j >= 0`; zero marks a weight that stays finite.
    pub exponent: f64,
}

/// One power law per control index.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightPath {
    entries: Vec<PathEntry>,
}

impl WeightPath {
    pub fn new(entries: Vec<PathEntry>) -> Result<Self> {
        for (index, e) in entries.iter().enumerate() {
            if !(e.coefficient > 0.0 && e.coefficient.is_finite()) {
                return Err(Error::InvalidPathEntry {
                    index,
                    reason: "coefficient must be positive and finite",
                });
            }
            if !(e.exponent >= 0.0 && e.exponent.is_finite()) {
                return Err(Error::InvalidPathEntry {
                    index,
                    reason: "exponent must be non-negative and finite",
                });
            }
        }
        if !entries.iter().any(|e| e.exponent > 0.0) {
            return Err(Error::PathWithoutGrowth);
        }
        Ok(WeightPath { entries })
    }

    /// Builds a path from `(coefficient, exponent)` pairs.
    pub fn from_pairs(pairs: &[(f64, f64)]) -> Result<Self> {
        WeightPath::new(
            pairs
                .iter()
                .map(|&(coefficient, exponent)| PathEntry {
                    coefficient,
                    exponent,
                })
                .collect(),
        )
    }

    pub fn entries(&self) -> &[PathEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn coefficients(&self) -> impl Iterator<Item = f64> + '_ {
        self.entries.iter().map(|e| e.coefficient)
    }

    pub fn max_exponent(&self) -> f64 {
        self.entries.iter().map(|e| e.exponent).fold(0.0, f64::max)
    }

    /// `(k_j t^{e_j})_j`.
    pub fn weights_at(&self, t: f64) -> Result<Vec<f64>> {
        check_t(t)?;
        Ok(self
            .entries
            .iter()
            .map(|e| e.coefficient * libm::pow(t, e.exponent))
            .collect())
    }

    /// [`weights_at`](Self::weights_at) divided by `t^{max e}`. The rational
    /// curve is invariant under this common scaling and the values stay
    /// bounded by the largest coefficient, so this is the form to use for
    /// large `t`.
    pub fn normalized_weights_at(&self, t: f64) -> Result<Vec<f64>> {
        check_t(t)?;
        let top = self.max_exponent();
        Ok(self
            .entries
            .iter()
            .map(|e| e.coefficient * libm::pow(t, e.exponent - top))
            .collect())
    }

    /// Partitions the indices by exponent, largest exponent first.
    pub fn dominance_groups(&self) -> DominanceGroups {
        let mut order: Vec<usize> = (0..self.entries.len()).collect();
        order.sort_by(|&a, &b| {
            self.entries[b]
                .exponent
                .total_cmp(&self.entries[a].exponent)
                .then(a.cmp(&b))
        });
        let mut groups: Vec<DominanceGroup> = Vec::new();
        for j in order {
            let e = self.entries[j];
            match groups.last_mut() {
                Some(g) if (g.exponent - e.exponent).abs() <= EXPONENT_TOLERANCE => {
                    g.members.push((j, e.coefficient));
                }
                _ => groups.push(DominanceGroup {
                    exponent: e.exponent,
                    members: alloc::vec![(j, e.coefficient)],
                }),
            }
        }
        for g in &mut groups {
            g.members.sort_by_key(|&(j, _)| j);
        }
        DominanceGroups { groups }
    }
}

fn check_t(t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument {
            name: "t",
            value: t,
        })
    }
}

/// Indices sharing one growth exponent, with their coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct DominanceGroup {
    pub exponent: f64,
    /// `(index, k_index)`, sorted by index.
    pub members: Vec<(usize, f64)>,
}

impl DominanceGroup {
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().map(|&(j, _)| j)
    }

    pub fn contains(&self, j: usize) -> bool {
        self.members.iter().any(|&(i, _)| i == j)
    }
}

/// Groups ordered by strictly decreasing exponent. Every later group is
/// negligible relative to every earlier one as `t` grows.
#[derive(Debug, Clone, PartialEq)]
pub struct DominanceGroups {
    groups: Vec<DominanceGroup>,
}

impl DominanceGroups {
    pub fn groups(&self) -> &[DominanceGroup] {
        &self.groups
    }

    /// The group with the largest exponent.
    pub fn dominant(&self) -> &DominanceGroup {
        &self.groups[0]
    }

    pub fn iter(&self) -> core::slice::Iter<'_, DominanceGroup> {
        self.groups.iter()
    }
}

impl<'a> IntoIterator for &'a DominanceGroups {
    type Item = &'a DominanceGroup;
    type IntoIter = core::slice::Iter<'a, DominanceGroup>;

    fn into_iter(self) -> Self::IntoIter {
        self.groups.iter()
    }
}
