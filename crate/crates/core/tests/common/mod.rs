#![allow(dead_code)]

use multisplit::{Matroid, RankedChain, Rational, Subset, Weight};

/// `(d, n, k)` with `2 ≤ k ≤ min(d, n − d)` and `4 ≤ n ≤ max_n`.
pub fn valid_triples(max_n: usize) -> Vec<(usize, usize, usize)> {
    let mut v = Vec::new();
    for n in 4..=max_n {
        for d in 2..n - 1 {
            for k in 2..=d.min(n - d) {
                v.push((d, n, k));
            }
        }
    }
    v
}

/// Every nested matroid on `[n]` with at least one non-coloop, once each: loops
/// `L`, then layers `D₁, D₂, …` (each of size ≥ 2) with rank increments
/// `0 < δ < |D|`, the rest coloops. These chains are exactly the cyclic-flat
/// lattices, so no matroid repeats.
pub fn labeled_nested_chains(n: usize) -> Vec<RankedChain> {
    fn go(n: usize, free: u32, flats: &mut Vec<Subset>, ranks: &mut Vec<usize>, out: &mut Vec<RankedChain>) {
        if !flats.is_empty() {
            out.push(RankedChain::new(n, flats.clone(), ranks.clone()).unwrap());
        }
        let acc = flats.last().map_or(0, |f| f.bits());
        let r0 = ranks.last().copied().unwrap_or(0);
        let mut s = 0u32;
        loop {
            s = s.wrapping_sub(free) & free;
            if s == 0 {
                break;
            }
            let m = s.count_ones() as usize;
            if m < 2 {
                continue;
            }
            for delta in 1..m {
                flats.push(Subset::from_bits(n, acc | s).unwrap());
                ranks.push(r0 + delta);
                go(n, free & !s, flats, ranks, out);
                flats.pop();
                ranks.pop();
            }
        }
    }
    let full = Subset::full(n).bits();
    let mut out = Vec::new();
    let mut l = 0u32;
    loop {
        let (mut flats, mut ranks) = if l == 0 {
            (vec![], vec![])
        } else {
            (vec![Subset::from_bits(n, l).unwrap()], vec![0])
        };
        go(n, full & !l, &mut flats, &mut ranks, &mut out);
        l = l.wrapping_sub(full) & full;
        if l == 0 {
            break;
        }
    }
    out
}

/// One nested matroid per isomorphism class: the chains above whose loops and
/// layers are consecutive initial segments of `[n]`.
pub fn nested_chain_classes(n: usize) -> Vec<RankedChain> {
    labeled_nested_chains(n)
        .into_iter()
        .filter(|c| c.flats().iter().all(|f| f.bits() == (1u32 << f.len()) - 1))
        .collect()
}

/// All set partitions of `[n]` as lists of blocks.
pub fn set_partitions(n: usize) -> Vec<Vec<Subset>> {
    fn go(n: usize, e: usize, blocks: &mut Vec<u32>, out: &mut Vec<Vec<Subset>>) {
        if e > n {
            out.push(blocks.iter().map(|&b| Subset::from_bits(n, b).unwrap()).collect());
            return;
        }
        let bit = 1u32 << (e - 1);
        for i in 0..blocks.len() {
            blocks[i] |= bit;
            go(n, e + 1, blocks, out);
            blocks[i] &= !bit;
        }
        blocks.push(bit);
        go(n, e + 1, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(n, 1, &mut Vec::new(), &mut out);
    out
}

/// Partition matroids with arbitrary ranks `0 ≤ r ≤ |C|` per block, built
/// directly from the defining intersection condition.
pub fn general_partition_matroids(n: usize) -> Vec<Matroid> {
    let mut out = Vec::new();
    for blocks in set_partitions(n) {
        let mut ranks = vec![0usize; blocks.len()];
        loop {
            let d: usize = ranks.iter().sum();
            let bases: Vec<Subset> = Subset::k_subsets(n, d)
                .filter(|s| blocks.iter().zip(&ranks).all(|(b, &r)| s.intersection(*b).len() == r))
                .collect();
            out.push(Matroid::new(n, d, bases).unwrap());
            let mut j = 0;
            while j < ranks.len() {
                ranks[j] += 1;
                if ranks[j] <= blocks[j].len() {
                    break;
                }
                ranks[j] = 0;
                j += 1;
            }
            if j == ranks.len() {
                break;
            }
        }
    }
    out
}

pub fn q(v: i64) -> Rational {
    Rational::from_i64(v)
}

/// Points `0=(0,0) 1=(3,0) 2=(0,3) 3=(3,3) 4=(1,1)`.
pub fn five_points() -> Vec<Vec<Rational>> {
    [(0, 0), (3, 0), (0, 3), (3, 3), (1, 1)]
        .iter()
        .map(|&(x, y)| vec![q(x), q(y)])
        .collect()
}

pub struct FivePointCase {
    pub name: &'static str,
    pub heights: [i64; 5],
    pub cells: &'static [&'static [usize]],
    /// The interior point lies in some cell without being a vertex of it.
    pub negligible: bool,
}

/// The nine subdivisions of the five-point configuration, each with a
/// designated lifting and hand-derived cells.
pub const FIVE_POINT_CASES: [FivePointCase; 9] = [
    FivePointCase { name: "1-split", heights: [0, 0, 0, 0, 1], cells: &[&[0, 1, 2, 3]], negligible: false },
    FivePointCase { name: "diagonal 0-3, interior point lifted", heights: [0, 1, 1, 0, 5], cells: &[&[0, 1, 3], &[0, 2, 3]], negligible: false },
    FivePointCase { name: "diagonal 1-2, interior point lifted", heights: [1, 0, 0, 1, 5], cells: &[&[0, 1, 2], &[1, 2, 3]], negligible: false },
    FivePointCase { name: "trivial", heights: [0, 0, 0, 0, 0], cells: &[&[0, 1, 2, 3, 4]], negligible: true },
    FivePointCase { name: "2-split along 0-3", heights: [0, 1, 1, 0, 0], cells: &[&[0, 1, 3, 4], &[0, 2, 3, 4]], negligible: true },
    FivePointCase { name: "2-split along 1-2", heights: [3, 0, 0, 3, 1], cells: &[&[0, 1, 2, 4], &[1, 2, 3]], negligible: true },
    FivePointCase { name: "3-split", heights: [0, 0, 0, 3, -1], cells: &[&[0, 1, 4], &[0, 2, 4], &[1, 2, 3, 4]], negligible: false },
    FivePointCase { name: "star triangulation", heights: [0, 1, 1, 0, -1], cells: &[&[0, 1, 4], &[0, 2, 4], &[1, 3, 4], &[2, 3, 4]], negligible: false },
    FivePointCase { name: "triangulation with diagonal 1-2", heights: [1, 0, 0, 5, -1], cells: &[&[0, 1, 4], &[0, 2, 4], &[1, 2, 3], &[1, 2, 4]], negligible: false },
];

/// Whether `p` lies in the convex hull of `others` (plane points), by checking
/// every segment and triangle.
pub fn in_hull_2d(p: &[Rational], others: &[&Vec<Rational>]) -> bool {
    let zero = q(0);
    let sub = |a: &[Rational], b: &[Rational]| [a[0].clone() - b[0].clone(), a[1].clone() - b[1].clone()];
    let cross = |u: &[Rational; 2], v: &[Rational; 2]| u[0].clone() * v[1].clone() - u[1].clone() * v[0].clone();
    let on_segment = |a: &Vec<Rational>, b: &Vec<Rational>| {
        let (u, v) = (sub(b, a), sub(p, a));
        cross(&u, &v) == zero
            && (0..2).all(|i| p[i] >= a[i].clone().min(b[i].clone()) && p[i] <= a[i].clone().max(b[i].clone()))
    };
    for (i, a) in others.iter().enumerate() {
        if a.as_slice() == p {
            return true;
        }
        for (j, b) in others.iter().enumerate().skip(i + 1) {
            if on_segment(a, b) {
                return true;
            }
            for c in others.iter().skip(j + 1) {
                if cross(&sub(b, a), &sub(c, a)) == zero {
                    continue;
                }
                let s1 = cross(&sub(b, a), &sub(p, a));
                let s2 = cross(&sub(c, b), &sub(p, b));
                let s3 = cross(&sub(a, c), &sub(p, c));
                let all_nonneg = s1 >= zero && s2 >= zero && s3 >= zero;
                let all_nonpos = s1 <= zero && s2 <= zero && s3 <= zero;
                if all_nonneg || all_nonpos {
                    return true;
                }
            }
        }
    }
    false
}
