use std::collections::HashMap;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::matroid::RankedPartition;
use crate::subset::{Subset, MAX_GROUND};

use super::MultiSplit;

/// Default bound on `n` for enumeration; larger values need an explicit limit.
pub const DEFAULT_MAX_N: usize = 10;

fn check(d: usize, n: usize, k: usize, max_n: usize) -> Result<()> {
    if n > max_n.min(MAX_GROUND) {
        return Err(Error::Range(format!(
            "n = {n} exceeds the enumeration limit {}",
            max_n.min(MAX_GROUND)
        )));
    }
    if d > n || k < 2 || k > d.min(n - d) {
        return Err(Error::Range(format!(
            "need 2 ≤ k ≤ min(d, n − d), got (d, n, k) = ({d}, {n}, {k})"
        )));
    }
    Ok(())
}

/// Submasks of `mask` in increasing numeric order.
fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    let mut s = Some(0u32);
    std::iter::from_fn(move || {
        let cur = s?;
        let next = cur.wrapping_sub(mask) & mask;
        s = if next == 0 { None } else { Some(next) };
        Some(cur)
    })
}

/// Candidate first blocks: sets containing element 1 that leave room for
/// `k − 1` further blocks of size at least 2.
fn first_blocks(n: usize, k: usize) -> Vec<u32> {
    let full = Subset::full(n).bits();
    submasks(full & !1)
        .map(|s| s | 1)
        .filter(|b| b.count_ones() >= 2 && (n - b.count_ones() as usize) >= 2 * (k - 1))
        .collect()
}

/// Number of first-block choices; shards for [`for_each_multisplit_in`] index into this range.
pub fn first_block_count(d: usize, n: usize, k: usize, max_n: usize) -> Result<usize> {
    check(d, n, k, max_n)?;
    Ok(first_blocks(n, k).len())
}

/// Visit every canonical `k`-split of `Δ(d, n)` once, in a deterministic order.
pub fn for_each_multisplit(d: usize, n: usize, k: usize, max_n: usize, f: impl FnMut(MultiSplit)) -> Result<()> {
    let total = first_block_count(d, n, k, max_n)?;
    for_each_multisplit_in(d, n, k, max_n, 0..total, f)
}

/// The part of [`for_each_multisplit`] whose first block has index in `shard`.
/// Concatenating consecutive shards reproduces the full order.
pub fn for_each_multisplit_in(
    d: usize,
    n: usize,
    k: usize,
    max_n: usize,
    shard: Range<usize>,
    mut f: impl FnMut(MultiSplit),
) -> Result<()> {
    check(d, n, k, max_n)?;
    let full = Subset::full(n).bits();
    let firsts = first_blocks(n, k);
    let shard = shard.start.min(firsts.len())..shard.end.min(firsts.len());
    let mut blocks = Vec::with_capacity(k);
    for &b in &firsts[shard] {
        blocks.push(b);
        rest_blocks(d, n, k, full & !b, &mut blocks, &mut f);
        blocks.pop();
    }
    Ok(())
}

fn rest_blocks(d: usize, n: usize, k: usize, remaining: u32, blocks: &mut Vec<u32>, f: &mut impl FnMut(MultiSplit)) {
    let left = k - blocks.len();
    if left == 1 {
        blocks.push(remaining);
        let sizes: Vec<usize> = blocks.iter().map(|b| b.count_ones() as usize).collect();
        let mut ranks = Vec::with_capacity(k);
        rank_vectors(d, &sizes, &mut ranks, &mut |r| {
            let p = RankedPartition::new(
                n,
                blocks.iter().map(|&b| Subset::from_bits(n, b).expect("mask within ground")).collect(),
                r.to_vec(),
            )
            .expect("enumerated partition is valid");
            f(MultiSplit::new(p).expect("k ≥ 2"));
        });
        blocks.pop();
        return;
    }
    let rest = remaining.count_ones() as usize;
    for s in submasks(remaining) {
        let m = s.count_ones() as usize;
        if m < 2 || rest - m < 2 * (left - 1) {
            continue;
        }
        blocks.push(s);
        rest_blocks(d, n, k, remaining & !s, blocks, f);
        blocks.pop();
    }
}

/// Rank vectors `0 < r_j < sizes[j]` summing to `d`, in lexicographic order.
fn rank_vectors(d: usize, sizes: &[usize], acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    let j = acc.len();
    if j == sizes.len() {
        if d == 0 {
            f(acc);
        }
        return;
    }
    let later_min = sizes.len() - j - 1;
    let later_max: usize = sizes[j + 1..].iter().map(|s| s - 1).sum();
    for r in 1..sizes[j] {
        if r + later_min > d {
            break;
        }
        if r + later_max < d {
            continue;
        }
        acc.push(r);
        rank_vectors(d - r, sizes, acc, f);
        acc.pop();
    }
}

/// All canonical `k`-splits of `Δ(d, n)`, `n ≤ max_n`.
pub fn enumerate_multisplits(d: usize, n: usize, k: usize, max_n: usize) -> Result<Vec<MultiSplit>> {
    let mut out = Vec::new();
    for_each_multisplit(d, n, k, max_n, |m| out.push(m))?;
    Ok(out)
}

/// One `S_n`-orbit of `k`-splits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryClass {
    /// First member in enumeration order.
    pub representative: MultiSplit,
    pub orbit_size: usize,
    /// Cyclic `(|C_ℓ|, d_ℓ)` sequence at its least rotation.
    pub signature: Vec<(usize, usize)>,
}

/// Orbits of the `S_n` action, in order of first appearance.
///
/// Two multi-splits are equivalent iff their `(|C_ℓ|, d_ℓ)` sequences agree up
/// to rotation; reversed cyclic orders count as distinct.
pub fn symmetry_classes(d: usize, n: usize, k: usize, max_n: usize) -> Result<Vec<SymmetryClass>> {
    let mut classes: Vec<SymmetryClass> = Vec::new();
    let mut index: HashMap<Vec<(usize, usize)>, usize> = HashMap::new();
    for_each_multisplit(d, n, k, max_n, |m| {
        let sig = m.shape_signature();
        match index.get(&sig) {
            Some(&i) => classes[i].orbit_size += 1,
            None => {
                index.insert(sig.clone(), classes.len());
                classes.push(SymmetryClass {
                    representative: m,
                    orbit_size: 1,
                    signature: sig,
                });
            }
        }
    })?;
    Ok(classes)
}
