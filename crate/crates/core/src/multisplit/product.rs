use crate::error::{Error, Result};
use crate::matroid::RankedPartition;
use crate::subset::{Subset, MAX_GROUND};

use super::MultiSplit;

/// A `k`-split of `Δ_{d−1} × Δ_{ℓ−1}`: ordered partitions `A₁…A_k` of `[d]` and
/// `B₁…B_k` of `[ℓ]` into non-empty blocks, modulo simultaneous rotation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProductSplit {
    d: usize,
    l: usize,
    a: Vec<Subset>,
    b: Vec<Subset>,
}

impl ProductSplit {
    /// Validates both partitions and stores the canonical rotation.
    pub fn new(d: usize, l: usize, a: Vec<Subset>, b: Vec<Subset>) -> Result<Self> {
        if d + l > MAX_GROUND {
            return Err(Error::Range(format!("d + ℓ = {} exceeds {MAX_GROUND}", d + l)));
        }
        if a.len() != b.len() || a.len() < 2 {
            return Err(Error::Partition(format!(
                "need k ≥ 2 matching blocks, got {} and {}",
                a.len(),
                b.len()
            )));
        }
        check_partition(d, &a)?;
        check_partition(l, &b)?;
        let k = a.len();
        let key = |t: usize| -> Vec<(Vec<usize>, Vec<usize>)> {
            (0..k).map(|i| (a[(t + i) % k].to_vec(), b[(t + i) % k].to_vec())).collect()
        };
        let t = (0..k).min_by_key(|&t| key(t)).unwrap_or(0);
        Ok(ProductSplit {
            d,
            l,
            a: (0..k).map(|i| a[(t + i) % k]).collect(),
            b: (0..k).map(|i| b[(t + i) % k]).collect(),
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn k(&self) -> usize {
        self.a.len()
    }

    pub fn a_blocks(&self) -> &[Subset] {
        &self.a
    }

    pub fn b_blocks(&self) -> &[Subset] {
        &self.b
    }

    /// The multi-split of `Δ(d, d + ℓ)` with `C_j = A_j ∪ (d + B_j)` and `d_j = |A_j|`.
    pub fn to_multisplit(&self) -> MultiSplit {
        let n = self.d + self.l;
        let blocks = self
            .a
            .iter()
            .zip(&self.b)
            .map(|(a, b)| Subset::from_bits(n, a.bits() | (b.bits() << self.d)).expect("fits in d + ℓ"))
            .collect();
        let ranks = self.a.iter().map(|a| a.len()).collect();
        let p = RankedPartition::new(n, blocks, ranks).expect("non-empty B blocks keep ranks below sizes");
        MultiSplit::new(p).expect("k ≥ 2")
    }
}

fn check_partition(m: usize, blocks: &[Subset]) -> Result<()> {
    let mut seen = Subset::empty(m);
    for b in blocks {
        if b.ground() != m || b.is_empty() || !b.intersection(seen).is_empty() {
            return Err(Error::Partition(format!("blocks do not partition [{m}] into non-empty parts")));
        }
        seen = seen.union(*b);
    }
    if seen != Subset::full(m) {
        return Err(Error::Partition(format!("blocks do not cover [{m}]")));
    }
    Ok(())
}

/// Ordered partitions of `[m]` into `k` non-empty blocks, first block containing `1` if `anchored`.
fn ordered_partitions(m: usize, k: usize, anchored: bool) -> Vec<Vec<Subset>> {
    fn go(m: usize, k: usize, remaining: u32, anchored: bool, acc: &mut Vec<Subset>, out: &mut Vec<Vec<Subset>>) {
        if acc.len() + 1 == k {
            if remaining != 0 {
                acc.push(Subset::from_bits(m, remaining).expect("within ground"));
                out.push(acc.clone());
                acc.pop();
            }
            return;
        }
        let left = k - acc.len() - 1;
        let mut s = 0u32;
        loop {
            s = s.wrapping_sub(remaining) & remaining;
            if s == 0 {
                break;
            }
            if anchored && acc.is_empty() && s & 1 == 0 {
                continue;
            }
            if ((remaining & !s).count_ones() as usize) < left {
                continue;
            }
            acc.push(Subset::from_bits(m, s).expect("within ground"));
            go(m, k, remaining & !s, anchored, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(m, k, Subset::full(m).bits(), anchored, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Canonical `k`-splits of `Δ_{d−1} × Δ_{ℓ−1}`; empty when `k > min(d, ℓ)`.
pub fn enumerate_product_multisplits(d: usize, l: usize, k: usize) -> Result<Vec<ProductSplit>> {
    if d + l > MAX_GROUND {
        return Err(Error::Range(format!("d + ℓ = {} exceeds {MAX_GROUND}", d + l)));
    }
    if k < 2 {
        return Err(Error::Range(format!("k = {k} below 2")));
    }
    if k > d.min(l) {
        return Ok(Vec::new());
    }
    let left = ordered_partitions(d, k, true);
    let right = ordered_partitions(l, k, false);
    let mut out = Vec::with_capacity(left.len() * right.len());
    for a in &left {
        for b in &right {
            out.push(ProductSplit::new(d, l, a.clone(), b.clone())?);
        }
    }
    Ok(out)
}
