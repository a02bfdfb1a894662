//! Multi-splits of hypersimplices.
//!
//! A `k`-split of `Δ(d, n)` is encoded by a loop- and coloop-free ranked
//! partition `(C₁, d₁), …, (C_k, d_k)` whose block order is read cyclically.
//! The common cell is the partition matroid polytope; the maximal cells are
//! the nested matroids of the cumulative chains of the `k` rotations.

mod count;
mod enumerate;
mod product;

pub use count::{count_multisplits_formula, count_product_multisplits_formula, mu};
pub use enumerate::{
    enumerate_multisplits, first_block_count, for_each_multisplit, for_each_multisplit_in, symmetry_classes,
    SymmetryClass, DEFAULT_MAX_N,
};
pub use product::{enumerate_product_multisplits, ProductSplit};

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::matroid::{Matroid, RankedPartition};
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiSplit {
    partition: RankedPartition,
    canonical_rotation_applied: bool,
}

/// The common cell and the `k` maximal cells of a multi-split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiSplitCells {
    pub common: Matroid,
    /// `maximal[t]` is the nested matroid of the rotation starting at block `t`.
    pub maximal: Vec<Matroid>,
}

impl MultiSplit {
    /// Keep the given block order.
    pub fn new(partition: RankedPartition) -> Result<Self> {
        if partition.k() < 2 {
            return Err(Error::Partition(format!(
                "a multi-split needs at least 2 blocks, got {}",
                partition.k()
            )));
        }
        let canonical_rotation_applied = canonical_shift(&partition) == 0;
        Ok(MultiSplit {
            partition,
            canonical_rotation_applied,
        })
    }

    /// Rotate the blocks to the canonical representative of the cyclic class.
    pub fn canonical(partition: RankedPartition) -> Result<Self> {
        Ok(MultiSplit::new(partition)?.canonicalized())
    }

    pub fn canonicalized(&self) -> MultiSplit {
        let shift = canonical_shift(&self.partition);
        MultiSplit {
            partition: self.partition.rotated(shift),
            canonical_rotation_applied: true,
        }
    }

    /// Whether the block sequence is its own canonical rotation.
    pub fn canonical_rotation_applied(&self) -> bool {
        self.canonical_rotation_applied
    }

    pub fn rotated(&self, t: usize) -> MultiSplit {
        MultiSplit::new(self.partition.rotated(t % self.k())).expect("rotation keeps validity")
    }

    pub fn partition(&self) -> &RankedPartition {
        &self.partition
    }

    pub fn n(&self) -> usize {
        self.partition.n()
    }

    pub fn d(&self) -> usize {
        self.partition.d()
    }

    pub fn k(&self) -> usize {
        self.partition.k()
    }

    pub fn common_cell(&self) -> Matroid {
        Matroid::partition(&self.partition)
    }

    pub fn maximal_cells(&self) -> Vec<Matroid> {
        (0..self.k())
            .map(|t| Matroid::nested(&self.partition.rotated(t).cumulative_chain()))
            .collect()
    }

    pub fn cells(&self) -> MultiSplitCells {
        MultiSplitCells {
            common: self.common_cell(),
            maximal: self.maximal_cells(),
        }
    }

    /// The cyclic sequence of `(|C_ℓ|, d_ℓ)` at its lexicographically least rotation;
    /// a complete invariant of the `S_n`-orbit.
    pub fn shape_signature(&self) -> Vec<(usize, usize)> {
        let seq: Vec<(usize, usize)> = self
            .partition
            .blocks()
            .iter()
            .zip(self.partition.ranks())
            .map(|(c, &r)| (c.len(), r))
            .collect();
        least_rotation(&seq)
    }

    /// Apply a permutation of `[n]` (0-based image table).
    pub fn permuted(&self, perm: &[usize]) -> MultiSplit {
        let blocks = self.partition.blocks().iter().map(|b| b.permute(perm)).collect();
        let p = RankedPartition::new(self.n(), blocks, self.partition.ranks().to_vec())
            .expect("permutation keeps a valid partition");
        MultiSplit::new(p).expect("permutation keeps block count")
    }
}

/// Maximal cell from the cumulative inequalities
/// `Σ_{ℓ ≤ h} |S ∩ C_ℓ| ≤ Σ_{ℓ ≤ h} d_ℓ` for `h < k`, over `d`-sets `S`.
pub fn cells_from_inequalities(p: &RankedPartition) -> Matroid {
    let d = p.d();
    let k = p.k();
    let bases = Subset::k_subsets(p.n(), d)
        .filter(|s| {
            let mut lhs = 0;
            let mut rhs = 0;
            p.blocks()
                .iter()
                .zip(p.ranks())
                .take(k - 1)
                .all(|(c, &r)| {
                    lhs += s.intersection(*c).len();
                    rhs += r;
                    lhs <= rhs
                })
        })
        .collect();
    Matroid::from_sorted_unchecked(p.n(), d, bases)
}

fn block_key(p: &RankedPartition, i: usize) -> (Vec<usize>, usize) {
    (p.blocks()[i].to_vec(), p.ranks()[i])
}

fn canonical_shift(p: &RankedPartition) -> usize {
    let k = p.k();
    let keys: Vec<_> = (0..k).map(|i| block_key(p, i)).collect();
    (0..k)
        .min_by(|&a, &b| compare_rotations(&keys, a, b))
        .unwrap_or(0)
}

fn compare_rotations<K: Ord>(seq: &[K], a: usize, b: usize) -> Ordering {
    let k = seq.len();
    (0..k)
        .map(|i| seq[(a + i) % k].cmp(&seq[(b + i) % k]))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

pub(crate) fn least_rotation<K: Ord + Clone>(seq: &[K]) -> Vec<K> {
    let k = seq.len();
    let best = (0..k).min_by(|&a, &b| compare_rotations(seq, a, b)).unwrap_or(0);
    (0..k).map(|i| seq[(best + i) % k].clone()).collect()
}
