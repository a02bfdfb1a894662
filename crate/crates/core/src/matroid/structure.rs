use crate::error::{Error, Result};
use crate::linalg::RowSpace;
use crate::subset::Subset;
use crate::Rational;

use super::Matroid;

/// Connected components together with loop/coloop flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    /// Finest separator partition of `[n]`, ordered by smallest element.
    pub blocks: Vec<Subset>,
    pub loops: Subset,
    pub coloops: Subset,
}

/// Rank of every subset of `[n]`, indexed by mask.
pub(crate) struct RankTable {
    n: usize,
    ranks: Vec<u8>,
}

impl RankTable {
    pub(crate) fn new(m: &Matroid) -> Self {
        let n = m.n();
        let size = 1usize << n;
        let mut independent = vec![false; size];
        for b in m.bases() {
            independent[b.bits() as usize] = true;
        }
        // subsets of a mask are numerically smaller
        for mask in (0..size).rev() {
            if !independent[mask] {
                continue;
            }
            let mut rest = mask;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                independent[mask ^ bit] = true;
                rest ^= bit;
            }
        }
        let mut ranks = vec![0u8; size];
        for mask in 1..size {
            ranks[mask] = if independent[mask] {
                mask.count_ones() as u8
            } else {
                let mut best = 0;
                let mut rest = mask;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    best = best.max(ranks[mask ^ bit]);
                    rest ^= bit;
                }
                best
            };
        }
        RankTable { n, ranks }
    }

    #[inline]
    pub(crate) fn rank(&self, s: Subset) -> usize {
        self.ranks[s.bits() as usize] as usize
    }

    pub(crate) fn is_independent(&self, s: Subset) -> bool {
        self.rank(s) == s.len()
    }

    /// All minimal dependent sets.
    pub(crate) fn circuits(&self) -> Vec<Subset> {
        Subset::all(self.n)
            .filter(|&s| !self.is_independent(s) && s.elements().all(|e| self.is_independent(s.without(e))))
            .collect()
    }
}

impl Matroid {
    /// `dim P(M)`: the rank of the differences `χ_B − χ_{B₀}`.
    pub fn polytope_dim(&self) -> usize {
        let b0 = self.bases[0];
        let mut space = RowSpace::<Rational>::new(self.n);
        for b in &self.bases[1..] {
            let row = (1..=self.n)
                .map(|e| Rational::from_integer((b.contains(e) as i64 - b0.contains(e) as i64).into()))
                .collect();
            space.insert(row);
            if space.dim() + 1 == self.n {
                break;
            }
        }
        space.dim()
    }

    /// Components from the "share a circuit" relation, cross-checked against
    /// `n − dim P(M)`.
    pub fn connected_components(&self) -> Result<Components> {
        let table = RankTable::new(self);
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut x = x;
            while parent[x] != r {
                let next = parent[x];
                parent[x] = r;
                x = next;
            }
            r
        }
        for c in table.circuits() {
            let mut elems = c.elements();
            let first = elems.next().unwrap() - 1;
            for e in elems {
                let (a, b) = (find(&mut parent, first), find(&mut parent, e - 1));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut blocks: Vec<Subset> = Vec::new();
        let mut root_block: Vec<Option<usize>> = vec![None; self.n];
        for e in 0..self.n {
            let r = find(&mut parent, e);
            match root_block[r] {
                Some(i) => blocks[i] = blocks[i].with(e + 1),
                None => {
                    root_block[r] = Some(blocks.len());
                    blocks.push(Subset::singleton(self.n, e + 1));
                }
            }
        }
        let expected = self.n - self.polytope_dim();
        if blocks.len() != expected {
            return Err(Error::Inconsistent(format!(
                "circuit closure gives {} components but n - dim P(M) = {expected}",
                blocks.len()
            )));
        }
        Ok(Components {
            blocks,
            loops: self.loops(),
            coloops: self.coloops(),
        })
    }

    pub fn is_connected(&self) -> Result<bool> {
        Ok(self.connected_components()?.blocks.len() == 1)
    }

    /// The minor `(M | restrict_to) / contract`, relabeled onto
    /// `{1, …, |restrict_to − contract|}` in increasing element order.
    pub fn minor(&self, restrict_to: Subset, contract: Subset) -> Result<Matroid> {
        if restrict_to.ground() != self.n || contract.ground() != self.n {
            return Err(Error::Subset(format!("minor sets must be over [{}]", self.n)));
        }
        if !contract.is_subset_of(restrict_to) {
            return Err(Error::Subset(format!("{contract} is not contained in {restrict_to}")));
        }
        let support = restrict_to.difference(contract);
        let r_top = self.rank(restrict_to);
        let r_con = self.rank(contract);
        let rank = r_top - r_con;
        let mut bases: Vec<Subset> = Subset::k_subsets(support.len(), rank)
            .filter(|s| self.rank(s.expand(support).union(contract)) == r_top)
            .collect();
        bases.sort_unstable();
        if bases.is_empty() {
            return Err(Error::Inconsistent("minor has no bases".into()));
        }
        Ok(Matroid::from_sorted_unchecked(support.len(), rank, bases))
    }

    /// Flats whose restriction has no coloops, with ranks; sorted by size, then mask.
    pub fn cyclic_flats(&self) -> Vec<(Subset, usize)> {
        let table = RankTable::new(self);
        let full = Subset::full(self.n);
        let mut out: Vec<(Subset, usize)> = Subset::all(self.n)
            .filter(|&f| {
                let r = table.rank(f);
                full.difference(f).elements().all(|e| table.rank(f.with(e)) > r)
                    && f.elements().all(|e| table.rank(f.without(e)) == r)
            })
            .map(|f| (f, table.rank(f)))
            .collect();
        out.sort_by_key(|(f, _)| (f.len(), f.bits()));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{is_matroid, RankedChain, RankedPartition};

    fn set(n: usize, e: &[usize]) -> Subset {
        Subset::from_elements(n, e).unwrap()
    }

    fn pyramid() -> Matroid {
        Matroid::nested(&RankedChain::new(4, vec![set(4, &[1, 2]), Subset::full(4)], vec![1, 2]).unwrap())
    }

    fn square() -> Matroid {
        Matroid::partition(&RankedPartition::new(4, vec![set(4, &[1, 2]), set(4, &[3, 4])], vec![1, 1]).unwrap())
    }

    #[test]
    fn rank_table_agrees_with_scan() {
        let m = pyramid();
        let t = RankTable::new(&m);
        for s in Subset::all(4) {
            assert_eq!(t.rank(s), m.rank(s), "{s}");
        }
    }

    #[test]
    fn components_of_examples() {
        let c = square().connected_components().unwrap();
        assert_eq!(c.blocks, vec![set(4, &[1, 2]), set(4, &[3, 4])]);
        assert!(c.loops.is_empty() && c.coloops.is_empty());

        let u = Matroid::uniform(3, 6).unwrap().connected_components().unwrap();
        assert_eq!(u.blocks, vec![Subset::full(6)]);
        assert!(pyramid().is_connected().unwrap());
    }

    #[test]
    fn loops_are_singleton_components() {
        let m = Matroid::new(4, 2, [set(4, &[1, 2]), set(4, &[1, 3])]).unwrap();
        let c = m.connected_components().unwrap();
        assert_eq!(c.blocks, vec![set(4, &[1]), set(4, &[2, 3]), set(4, &[4])]);
        assert_eq!(c.loops, set(4, &[4]));
        assert_eq!(c.coloops, set(4, &[1]));
    }

    #[test]
    fn minors() {
        let u = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u.minor(set(4, &[1, 2, 3]), Subset::empty(4)).unwrap(), Matroid::uniform(2, 3).unwrap());

        let c = pyramid().minor(Subset::full(4), set(4, &[3])).unwrap();
        // ground {1,2,4} relabeled to {1,2,3}
        assert_eq!(c.d(), 1);
        assert_eq!(c, Matroid::uniform(1, 3).unwrap());

        let p = RankedPartition::new(
            6,
            vec![set(6, &[1, 4, 5]), set(6, &[2, 3, 6])],
            vec![2, 1],
        )
        .unwrap();
        let r = Matroid::partition(&p).minor(set(6, &[1, 4, 5]), Subset::empty(6)).unwrap();
        assert_eq!(r, Matroid::uniform(2, 3).unwrap());

        assert!(u.minor(set(4, &[1]), set(4, &[2])).is_err());
    }

    #[test]
    fn cyclic_flats_of_examples() {
        let got = pyramid().cyclic_flats();
        assert_eq!(got, vec![(Subset::empty(4), 0), (set(4, &[1, 2]), 1), (Subset::full(4), 2)]);

        let u = Matroid::uniform(2, 5).unwrap().cyclic_flats();
        assert_eq!(u, vec![(Subset::empty(5), 0), (Subset::full(5), 2)]);

        let sq = square().cyclic_flats();
        assert_eq!(
            sq,
            vec![(Subset::empty(4), 0), (set(4, &[1, 2]), 1), (set(4, &[3, 4]), 1), (Subset::full(4), 2)]
        );
    }

    #[test]
    fn nested_with_zero_first_rank_has_loops() {
        let c = RankedChain::new(4, vec![set(4, &[1]), Subset::full(4)], vec![0, 2]).unwrap();
        let m = Matroid::nested(&c);
        assert!(is_matroid(4, 2, m.bases()).unwrap());
        assert_eq!(m.loops(), set(4, &[1]));
        let flats = m.cyclic_flats();
        assert_eq!(flats.first().unwrap(), &(set(4, &[1]), 0));
    }

    #[test]
    fn polytope_dimension() {
        assert_eq!(Matroid::uniform(2, 4).unwrap().polytope_dim(), 3);
        assert_eq!(square().polytope_dim(), 2);
        assert_eq!(Matroid::uniform(0, 3).unwrap().polytope_dim(), 0);
    }
}
