//! Finite matroids given by an explicit, canonically sorted list of bases.
//!
//! Ground sets are `{1, …, n}` with `n ≤ 16`. Ranks are computed by scanning
//! the basis list; exhaustive queries (circuits, cyclic flats) build a full
//! rank table over all `2^n` subsets.

mod families;
mod structure;

pub use families::{RankedChain, RankedPartition};
pub use structure::Components;

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_GROUND};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matroid {
    n: usize,
    d: usize,
    bases: Vec<Subset>,
}

impl Matroid {
    /// Validate and canonicalize an explicit basis list.
    pub fn new(n: usize, d: usize, bases: impl IntoIterator<Item = Subset>) -> Result<Self> {
        let bases = canonical_family(n, d, bases)?;
        if let Some((b1, b2, i)) = exchange_violation(&bases) {
            return Err(Error::NotMatroid(format!(
                "no exchange for {b1} -> {b2} removing {i}"
            )));
        }
        Ok(Matroid { n, d, bases })
    }

    /// Callers guarantee a sorted, duplicate-free, non-empty family satisfying exchange.
    pub(crate) fn from_sorted_unchecked(n: usize, d: usize, bases: Vec<Subset>) -> Self {
        debug_assert!(!bases.is_empty());
        debug_assert!(bases.windows(2).all(|w| w[0] < w[1]));
        Matroid { n, d, bases }
    }

    pub fn uniform(d: usize, n: usize) -> Result<Self> {
        if n > MAX_GROUND || d > n {
            return Err(Error::Range(format!("uniform({d}, {n}) needs 0 <= d <= n <= {MAX_GROUND}")));
        }
        Ok(Matroid::from_sorted_unchecked(n, d, Subset::k_subsets(n, d).collect()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn is_basis(&self, s: Subset) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    /// `max |B ∩ s|` over all bases.
    pub fn rank(&self, s: Subset) -> usize {
        let mut best = 0;
        for b in &self.bases {
            let r = (b.bits() & s.bits()).count_ones() as usize;
            if r > best {
                best = r;
                if best == self.d.min(s.len()) {
                    break;
                }
            }
        }
        best
    }

    /// `d - rank(S)` for every `d`-subset `S`, in colexicographic order.
    pub fn corank_vector(&self) -> Vec<usize> {
        Subset::k_subsets(self.n, self.d)
            .map(|s| self.d - self.rank(s))
            .collect()
    }

    /// Elements contained in no basis.
    pub fn loops(&self) -> Subset {
        let union = self.bases.iter().fold(0u32, |acc, b| acc | b.bits());
        Subset::full(self.n).difference(Subset::from_bits(self.n, union).unwrap())
    }

    /// Elements contained in every basis.
    pub fn coloops(&self) -> Subset {
        let inter = self.bases.iter().fold(Subset::full(self.n).bits(), |acc, b| acc & b.bits());
        Subset::from_bits(self.n, inter).unwrap()
    }
}

/// Whether `subsets` (all of cardinality `d` over `[n]`) are the bases of a matroid.
pub fn is_matroid(n: usize, d: usize, subsets: &[Subset]) -> Result<bool> {
    let family = match canonical_family(n, d, subsets.iter().copied()) {
        Ok(f) => f,
        Err(Error::NotMatroid(_)) => return Ok(false),
        Err(e) => return Err(e),
    };
    Ok(exchange_violation(&family).is_none())
}

fn canonical_family(n: usize, d: usize, sets: impl IntoIterator<Item = Subset>) -> Result<Vec<Subset>> {
    if n > MAX_GROUND || d > n {
        return Err(Error::Range(format!("(d, n) = ({d}, {n}) out of range")));
    }
    let mut out: Vec<Subset> = Vec::new();
    for s in sets {
        if s.ground() != n {
            return Err(Error::SizeMismatch(format!("{s} is over [{}], expected [{n}]", s.ground())));
        }
        if s.len() != d {
            return Err(Error::SizeMismatch(format!("{s} has size {}, expected {d}", s.len())));
        }
        out.push(s);
    }
    out.sort_unstable();
    out.dedup();
    if out.is_empty() {
        return Err(Error::NotMatroid("empty basis family".into()));
    }
    Ok(out)
}

/// First violation `(B1, B2, i)` of the symmetric-difference exchange axiom.
fn exchange_violation(sorted: &[Subset]) -> Option<(Subset, Subset, usize)> {
    for &b1 in sorted {
        for &b2 in sorted {
            for i in b1.difference(b2).elements() {
                let base = b1.without(i);
                let ok = b2
                    .difference(b1)
                    .elements()
                    .any(|j| sorted.binary_search(&base.with(j)).is_ok());
                if !ok {
                    return Some((b1, b2, i));
                }
            }
        }
    }
    None
}
