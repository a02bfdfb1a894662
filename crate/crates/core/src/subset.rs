//! Subsets of a ground set `{1, …, n}` with `n ≤ 16`, stored as bitmasks.
//!
//! Element `i` (1-based) is bit `i - 1`. For a fixed cardinality the numeric
//! order of the mask coincides with the colexicographic order of the sets,
//! which is the canonical order used for hypersimplex vertices everywhere.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_GROUND: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    bits: u32,
    n: u8,
}

impl Subset {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_GROUND, "ground set larger than {MAX_GROUND}");
        Subset { bits: 0, n: n as u8 }
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_GROUND, "ground set larger than {MAX_GROUND}");
        Subset {
            bits: (1u32 << n) - 1,
            n: n as u8,
        }
    }

    pub fn from_bits(n: usize, bits: u32) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::Range(format!("ground set size {n} exceeds {MAX_GROUND}")));
        }
        if bits >> n != 0 {
            return Err(Error::Subset(format!("mask {bits:#b} has elements outside [{n}]")));
        }
        Ok(Subset { bits, n: n as u8 })
    }

    /// Build from 1-based elements. Duplicates are rejected.
    pub fn from_elements(n: usize, elements: &[usize]) -> Result<Self> {
        let mut s = Subset::from_bits(n, 0)?;
        for &e in elements {
            if e == 0 || e > n {
                return Err(Error::Subset(format!("element {e} outside [{n}]")));
            }
            if s.contains(e) {
                return Err(Error::Subset(format!("element {e} repeated")));
            }
            s.bits |= 1 << (e - 1);
        }
        Ok(s)
    }

    pub fn singleton(n: usize, e: usize) -> Self {
        Subset::from_elements(n, &[e]).expect("element in range")
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn ground(self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        e >= 1 && e <= self.ground() && self.bits & (1 << (e - 1)) != 0
    }

    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        debug_assert_eq!(self.n, other.n);
        Subset { bits: self.bits | other.bits, n: self.n }
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        debug_assert_eq!(self.n, other.n);
        Subset { bits: self.bits & other.bits, n: self.n }
    }

    #[inline]
    pub fn difference(self, other: Subset) -> Subset {
        debug_assert_eq!(self.n, other.n);
        Subset { bits: self.bits & !other.bits, n: self.n }
    }

    #[inline]
    pub fn complement(self) -> Subset {
        Subset::full(self.ground()).difference(self)
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn with(self, e: usize) -> Subset {
        self.union(Subset::singleton(self.ground(), e))
    }

    pub fn without(self, e: usize) -> Subset {
        self.difference(Subset::singleton(self.ground(), e))
    }

    /// Elements in increasing order, 1-based.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.elements().collect()
    }

    /// The smallest element, if any.
    pub fn min_element(self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize + 1)
    }

    /// Relabel onto `{1, …, |support|}` preserving order; `self` must lie in `support`.
    pub fn compress(self, support: Subset) -> Subset {
        debug_assert!(self.is_subset_of(support));
        let mut out = 0u32;
        for (idx, e) in support.elements().enumerate() {
            if self.contains(e) {
                out |= 1 << idx;
            }
        }
        Subset { bits: out, n: support.len() as u8 }
    }

    /// Inverse of [`Subset::compress`].
    pub fn expand(self, support: Subset) -> Subset {
        debug_assert_eq!(self.ground(), support.len());
        let mut out = 0u32;
        for (idx, e) in support.elements().enumerate() {
            if self.bits & (1 << idx) != 0 {
                out |= 1 << (e - 1);
            }
        }
        Subset { bits: out, n: support.n }
    }

    /// Apply a permutation given as a 0-based image table of length `n`.
    pub fn permute(self, perm: &[usize]) -> Subset {
        debug_assert_eq!(perm.len(), self.ground());
        let mut out = 0u32;
        for e in self.elements() {
            out |= 1 << perm[e - 1];
        }
        Subset { bits: out, n: self.n }
    }

    /// All subsets of `[n]` of cardinality `k`, in colexicographic order.
    pub fn k_subsets(n: usize, k: usize) -> KSubsets {
        assert!(n <= MAX_GROUND);
        KSubsets {
            n,
            next: if k <= n { Some(if k == 0 { 0 } else { (1u32 << k) - 1 }) } else { None },
        }
    }

    /// All subsets of `[n]` in numeric mask order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        assert!(n <= MAX_GROUND);
        (0u32..(1u32 << n)).map(move |bits| Subset { bits, n: n as u8 })
    }

    /// Position of this set among the `|self|`-subsets of `[n]` in colex order.
    pub fn colex_rank(self) -> usize {
        let mut rank = 0usize;
        for (i, e) in self.elements().enumerate() {
            rank += binomial(e - 1, i + 1);
        }
        rank
    }
}

/// Iterator over fixed-cardinality masks (Gosper's hack); colex order.
pub struct KSubsets {
    n: usize,
    next: Option<u32>,
}

impl Iterator for KSubsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        if cur >> self.n != 0 {
            self.next = None;
            return None;
        }
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(Subset { bits: cur, n: self.n as u8 })
    }
}

/// `C(n, k)` as a machine integer; `0` when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}
