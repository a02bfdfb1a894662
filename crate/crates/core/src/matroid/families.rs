use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_GROUND};

use super::Matroid;

/// A chain `F₁ ⊊ … ⊊ F_k` with ranks `r₁ < … < r_k`, `r_ℓ < |F_ℓ|`; the data of a nested matroid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankedChain {
    n: usize,
    flats: Vec<Subset>,
    ranks: Vec<usize>,
}

impl RankedChain {
    pub fn new(n: usize, flats: Vec<Subset>, ranks: Vec<usize>) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::Range(format!("ground set size {n} exceeds {MAX_GROUND}")));
        }
        if flats.is_empty() {
            return Err(Error::Chain("chain must have at least one flat".into()));
        }
        if flats.len() != ranks.len() {
            return Err(Error::Chain(format!("{} flats but {} ranks", flats.len(), ranks.len())));
        }
        if let Some(f) = flats.iter().find(|f| f.ground() != n) {
            return Err(Error::Chain(format!("flat {f} is not over [{n}]")));
        }
        if flats[0].is_empty() {
            return Err(Error::Chain("first flat must be non-empty".into()));
        }
        for w in flats.windows(2) {
            if !(w[0].is_subset_of(w[1]) && w[0] != w[1]) {
                return Err(Error::Chain(format!("{} is not a proper subset of {}", w[0], w[1])));
            }
        }
        for w in ranks.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::Chain(format!("ranks {} and {} not increasing", w[0], w[1])));
            }
        }
        for (f, &r) in flats.iter().zip(&ranks) {
            if r >= f.len() {
                return Err(Error::Chain(format!("rank {r} of {f} must be below its size {}", f.len())));
            }
        }
        Ok(RankedChain { n, flats, ranks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn flats(&self) -> &[Subset] {
        &self.flats
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// `r_k + |[n] − F_k|`
    pub fn matroid_rank(&self) -> usize {
        let top = *self.flats.last().unwrap();
        self.ranks.last().unwrap() + (self.n - top.len())
    }
}

/// Blocks `C₁, …, C_k` partitioning `[n]` with ranks `0 < d_ℓ < |C_ℓ|`.
///
/// Block order is preserved; it carries meaning for multi-splits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankedPartition {
    n: usize,
    blocks: Vec<Subset>,
    ranks: Vec<usize>,
}

impl RankedPartition {
    pub fn new(n: usize, blocks: Vec<Subset>, ranks: Vec<usize>) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::Range(format!("ground set size {n} exceeds {MAX_GROUND}")));
        }
        if blocks.is_empty() {
            return Err(Error::Partition("no blocks".into()));
        }
        if blocks.len() != ranks.len() {
            return Err(Error::Partition(format!("{} blocks but {} ranks", blocks.len(), ranks.len())));
        }
        let mut seen = Subset::empty(n);
        for (idx, (&c, &r)) in blocks.iter().zip(&ranks).enumerate() {
            if c.ground() != n {
                return Err(Error::Partition(format!("block {} is not over [{n}]", idx + 1)));
            }
            if !c.intersection(seen).is_empty() {
                return Err(Error::Partition(format!("block {} = {c} overlaps an earlier block", idx + 1)));
            }
            if r == 0 || r >= c.len() {
                return Err(Error::Partition(format!(
                    "rank bound violated: block {} = {c} has rank {r}, needs 0 < rank < {}",
                    idx + 1,
                    c.len()
                )));
            }
            seen = seen.union(c);
        }
        if seen != Subset::full(n) {
            return Err(Error::Partition(format!(
                "blocks miss elements {}",
                Subset::full(n).difference(seen)
            )));
        }
        Ok(RankedPartition { n, blocks, ranks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.ranks.iter().sum()
    }

    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// The same blocks starting at block `t` (cyclically).
    pub fn rotated(&self, t: usize) -> RankedPartition {
        let k = self.k();
        RankedPartition {
            n: self.n,
            blocks: (0..k).map(|i| self.blocks[(t + i) % k]).collect(),
            ranks: (0..k).map(|i| self.ranks[(t + i) % k]).collect(),
        }
    }

    /// Cumulative unions `C₁ ∪ … ∪ C_h` with cumulative ranks.
    pub fn cumulative_chain(&self) -> RankedChain {
        let mut flats = Vec::with_capacity(self.k());
        let mut ranks = Vec::with_capacity(self.k());
        let mut acc = Subset::empty(self.n);
        let mut r = 0;
        for (&c, &d) in self.blocks.iter().zip(&self.ranks) {
            acc = acc.union(c);
            r += d;
            flats.push(acc);
            ranks.push(r);
        }
        RankedChain::new(self.n, flats, ranks).expect("cumulative chain of a valid partition")
    }
}

impl Matroid {
    /// Bases are the `d`-sets meeting every block `C_ℓ` in exactly `d_ℓ` elements.
    pub fn partition(p: &RankedPartition) -> Matroid {
        let d = p.d();
        let bases = Subset::k_subsets(p.n, d)
            .filter(|s| p.blocks.iter().zip(&p.ranks).all(|(&c, &r)| s.intersection(c).len() == r))
            .collect();
        Matroid::from_sorted_unchecked(p.n, d, bases)
    }

    /// Bases are the `d`-sets with `|S ∩ F_ℓ| ≤ r_ℓ` for every flat of the chain.
    pub fn nested(c: &RankedChain) -> Matroid {
        let d = c.matroid_rank();
        let bases = Subset::k_subsets(c.n, d)
            .filter(|s| c.flats.iter().zip(&c.ranks).all(|(&f, &r)| s.intersection(f).len() <= r))
            .collect();
        Matroid::from_sorted_unchecked(c.n, d, bases)
    }
}
