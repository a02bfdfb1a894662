//! The tropical Stiefel map from liftings of `Δ_{d−1} × Δ_{n−d−1}` to liftings
//! of `Δ(d, n)`, its restriction back, and the 0/1-lifting search.

mod assignment;

pub use assignment::{assignment_min, assignment_min_exhaustive, assignment_min_hungarian};

use crate::engine::{regular_subdivision, Lifting, PointConfiguration, Subdivision};
use crate::error::{Error, Result};
use crate::multisplit::MultiSplit;
use crate::scalar::{Field, Weight};
use crate::subset::{binomial, Subset, MAX_GROUND};
use crate::Rational;

/// Heights `λ(i, j)` for `i ∈ I`, `j ∈ [n] − I`, stored row-major with both
/// index sets in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProductLifting<T> {
    n: usize,
    base: Subset,
    lambda: Vec<T>,
}

impl<T: Weight> ProductLifting<T> {
    pub fn new(base: Subset, lambda: Vec<T>) -> Result<Self> {
        let n = base.ground();
        let d = base.len();
        if lambda.len() != d * (n - d) {
            return Err(Error::SizeMismatch(format!(
                "{} heights for a {d} × {} table",
                lambda.len(),
                n - d
            )));
        }
        Ok(ProductLifting { n, base, lambda })
    }

    pub fn zero(base: Subset) -> Self {
        let d = base.len();
        ProductLifting {
            n: base.ground(),
            base,
            lambda: vec![T::zero(); d * (base.ground() - d)],
        }
    }

    /// `λ(i, j) = f(i, j)` with 1-based elements.
    pub fn from_fn(base: Subset, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let rest = base.complement();
        let lambda = base
            .elements()
            .flat_map(|i| rest.elements().map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        ProductLifting {
            n: base.ground(),
            base,
            lambda,
        }
    }

    /// Every pair `(i, j) ∈ I × ([n] − I)` must appear exactly once.
    pub fn from_entries(base: Subset, entries: impl IntoIterator<Item = (usize, usize, T)>) -> Result<Self> {
        let d = base.len();
        let cols = base.ground() - d;
        let mut slots: Vec<Option<T>> = vec![None; d * cols];
        let pl = ProductLifting::<T>::zero(base);
        for (i, j, h) in entries {
            let idx = pl.index(i, j).ok_or_else(|| {
                Error::SizeMismatch(format!("({i}, {j}) is not in {base} × its complement"))
            })?;
            if slots[idx].replace(h).is_some() {
                return Err(Error::SizeMismatch(format!("entry ({i}, {j}) given twice")));
            }
        }
        let lambda = slots
            .into_iter()
            .enumerate()
            .map(|(idx, h)| {
                h.ok_or_else(|| {
                    let (i, j) = pl.pair(idx);
                    Error::SizeMismatch(format!("entry ({i}, {j}) missing"))
                })
            })
            .collect::<Result<_>>()?;
        Ok(ProductLifting {
            n: base.ground(),
            base,
            lambda,
        })
    }

    /// Heights on `Δ_{d−1} × Δ_{l−1}` in its row-major vertex order, read with
    /// `I = {1, …, d}` and `[n] − I = {d+1, …, d+l}`.
    pub fn from_product_heights(d: usize, l: usize, heights: Vec<T>) -> Result<Self> {
        if d + l > MAX_GROUND {
            return Err(Error::Range(format!("d + ℓ = {} exceeds {MAX_GROUND}", d + l)));
        }
        let base = Subset::from_bits(d + l, (1u32 << d) - 1)?;
        ProductLifting::new(base, heights)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.base.len()
    }

    pub fn base(&self) -> Subset {
        self.base
    }

    /// Row-major table; also the heights on the product configuration.
    pub fn table(&self) -> &[T] {
        &self.lambda
    }

    fn index(&self, i: usize, j: usize) -> Option<usize> {
        if !(1..=self.n).contains(&i) || !(1..=self.n).contains(&j) {
            return None;
        }
        if !self.base.contains(i) || self.base.contains(j) {
            return None;
        }
        let below = |s: Subset, e: usize| s.elements().take_while(|&x| x < e).count();
        Some(below(self.base, i) * (self.n - self.d()) + below(self.base.complement(), j))
    }

    fn pair(&self, idx: usize) -> (usize, usize) {
        let cols = self.n - self.d();
        let i = self.base.elements().nth(idx / cols).expect("row in range");
        let j = self.base.complement().elements().nth(idx % cols).expect("column in range");
        (i, j)
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&T> {
        self.index(i, j).map(|idx| &self.lambda[idx])
    }

    /// `(i, j, λ(i, j))` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> + '_ {
        self.lambda.iter().enumerate().map(move |(idx, h)| {
            let (i, j) = self.pair(idx);
            (i, j, h)
        })
    }

    /// `λ + c` entrywise.
    pub fn shifted(&self, c: &T) -> Self {
        ProductLifting {
            n: self.n,
            base: self.base,
            lambda: self.lambda.iter().map(|h| h.clone() + c.clone()).collect(),
        }
    }
}

/// `p(J) = min_ω Σ_{i ∈ I−J} λ(i, ω(i))` over bijections `ω: I − J → J − I`,
/// for every `d`-set `J` in colex order.
pub fn stiefel_lift<T: Weight>(pl: &ProductLifting<T>) -> Lifting<T> {
    let heights = Subset::k_subsets(pl.n, pl.d())
        .map(|j_set| {
            let rows: Vec<usize> = pl.base.difference(j_set).to_vec();
            let cols: Vec<usize> = j_set.difference(pl.base).to_vec();
            let w: Vec<Vec<T>> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| pl.get(i, j).expect("i ∈ I, j ∉ I").clone()).collect())
                .collect();
            assignment_min(&w).expect("square by construction")
        })
        .collect();
    Lifting::new(heights)
}

/// `λ(i, j) = p(I − i + j) − p(I)`.
pub fn induced_product_lifting<T: Weight>(p: &Lifting<T>, base: Subset) -> Result<ProductLifting<T>> {
    let (n, d) = (base.ground(), base.len());
    if p.len() != binomial(n, d) {
        return Err(Error::SizeMismatch(format!(
            "lifting has {} entries, Δ({d}, {n}) has {}",
            p.len(),
            binomial(n, d)
        )));
    }
    let at_base = p.at(base).clone();
    Ok(ProductLifting::from_fn(base, |i, j| {
        p.at(base.without(i).with(j)).clone() - at_base.clone()
    }))
}

/// Re-lift the corank vector of the first maximal cell through `I` and compare
/// the induced subdivision of `Δ(d, n)` with the cells of `ms`.
pub fn verify_stiefel_roundtrip(ms: &MultiSplit, base: Subset) -> Result<bool> {
    let cells = ms.cells();
    if base.ground() != ms.n() || !cells.common.is_basis(base) {
        return Err(Error::BaseNotInCommonCell(format!(
            "{base} is not a basis of the common cell"
        )));
    }
    let p: Lifting<Rational> = Lifting::corank(&cells.maximal[0]);
    let lifted = stiefel_lift(&induced_product_lifting(&p, base)?);
    let pc = PointConfiguration::hypersimplex(ms.d(), ms.n())?;
    let got = regular_subdivision(&pc, &lifted)?;
    Ok(got.cells() == matroid_cells(ms).as_slice())
}

/// Maximal cells of `ms` as sorted colex vertex-index lists, in canonical order.
pub fn matroid_cells(ms: &MultiSplit) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = ms
        .maximal_cells()
        .iter()
        .map(|m| {
            let mut v: Vec<usize> = m.bases().iter().map(|b| b.colex_rank()).collect();
            v.sort_unstable();
            v
        })
        .collect();
    out.sort();
    out
}

/// Largest `d·ℓ` accepted by [`search_01_lifting`].
pub const SEARCH_MAX_ENTRIES: usize = 20;

/// A 0/1 lifting of `Δ_{d−1} × Δ_{ℓ−1}` inducing `target`, trying masks by
/// number of ones and then numerically.
pub fn search_01_lifting<T: Field>(d: usize, l: usize, target: &Subdivision<T>) -> Result<Option<ProductLifting<T>>> {
    let m = d * l;
    if m > SEARCH_MAX_ENTRIES || d + l > MAX_GROUND {
        return Err(Error::Range(format!(
            "{d} × {l} table has {m} entries, search limit is {SEARCH_MAX_ENTRIES}"
        )));
    }
    if target.num_points() != m {
        return Err(Error::Configuration(format!(
            "target has {} points, Δ_{{{}}} × Δ_{{{}}} has {m}",
            target.num_points(),
            d.saturating_sub(1),
            l.saturating_sub(1)
        )));
    }
    let pc = PointConfiguration::product_of_simplices(d, l)?;
    for ones in 0..=m {
        for mask in masks_with_ones(m, ones) {
            let heights: Vec<T> = (0..m).map(|b| T::from_i64(((mask >> b) & 1) as i64)).collect();
            let s = regular_subdivision(&pc, &Lifting::new(heights.clone()))?;
            if s.cells() == target.cells() {
                return Ok(Some(ProductLifting::from_product_heights(d, l, heights)?));
            }
        }
    }
    Ok(None)
}

/// `m`-bit masks with `ones` bits set, increasing.
fn masks_with_ones(m: usize, ones: usize) -> impl Iterator<Item = u32> {
    let limit = 1u64 << m;
    let mut next = if ones > m { None } else { Some(((1u64 << ones) - 1) as u32) };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur as u64;
            let low = c & c.wrapping_neg();
            let r = c + low;
            let nx = (((r ^ c) >> 2) / low) | r;
            (nx < limit).then_some(nx as u32)
        };
        Some(cur)
    })
}
