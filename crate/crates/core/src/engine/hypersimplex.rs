use crate::error::{Error, Result};
use crate::linalg::RowSpace;
use crate::matroid::{is_matroid, Matroid};
use crate::scalar::{Field, Weight};
use crate::subset::{binomial, Subset};

use super::{hull_coordinates, regular_subdivision, Lifting, PointConfiguration, Subdivision};

/// Dimension of the space of piecewise-affine height functions on a subdivision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinearityDimension {
    pub dim: usize,
    /// Dimension of the configuration's affine hull.
    pub affine_dim: usize,
    /// `dim == affine_dim + 2`: the subdivision spans a ray modulo lineality.
    pub is_coarsest: bool,
}

/// `dim W` for `W = { w : w agrees with an affine function on every cell }`.
///
/// Every point must lie in some cell.
pub fn secondary_linearity_dimension<T: Field>(
    pc: &PointConfiguration<T>,
    s: &Subdivision<T>,
) -> Result<LinearityDimension> {
    if pc.len() != s.num_points() {
        return Err(Error::Configuration("subdivision does not belong to this configuration".into()));
    }
    if let Some(i) = s.covered_points().iter().position(|&c| !c) {
        return Err(Error::Unsupported(format!("point {i} lies in no cell")));
    }
    let coords = hull_coordinates(pc);
    let a = coords.len();
    let n = pc.len();
    let unknowns = n + s.cells().len() * (a + 1);
    // w_p − ⟨a_C, p⟩ − c_C = 0 for p ∈ C
    let mut space = RowSpace::new(unknowns);
    for (ci, cell) in s.cells().iter().enumerate() {
        let off = n + ci * (a + 1);
        for &p in cell {
            let mut row = vec![T::zero(); unknowns];
            row[p] = T::one();
            for (k, &j) in coords.iter().enumerate() {
                row[off + k] = -pc.points()[p][j].clone();
            }
            row[off + a] = -T::one();
            space.insert(row);
        }
    }
    let dim = unknowns - space.dim();
    Ok(LinearityDimension {
        dim,
        affine_dim: a,
        is_coarsest: dim == a + 2,
    })
}

/// The subdivision of `Δ(d, n)` induced by the corank vector of `m`.
pub fn corank_subdivision<T: Field>(m: &Matroid) -> Result<Subdivision<T>> {
    let pc = PointConfiguration::hypersimplex(m.d(), m.n())?;
    regular_subdivision(&pc, &Lifting::corank(m))
}

/// Whether every maximal cell of a subdivision of `Δ(d, n)` is a matroid polytope.
pub fn is_matroid_subdivision<T: Field>(s: &Subdivision<T>, d: usize, n: usize) -> Result<bool> {
    if s.num_points() != binomial(n, d) {
        return Err(Error::Configuration(format!(
            "{} points is not the vertex set of Δ({d}, {n})",
            s.num_points()
        )));
    }
    let vertices: Vec<Subset> = Subset::k_subsets(n, d).collect();
    for cell in s.cells() {
        let family: Vec<Subset> = cell.iter().map(|&i| vertices[i]).collect();
        if !is_matroid(n, d, &family)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Three-term tropical Plücker relations: for every `(d−2)`-set `S` and
/// `i < j < k < l` outside `S`, the minimum of
/// `p(Sij)+p(Skl), p(Sik)+p(Sjl), p(Sil)+p(Sjk)` is attained at least twice.
pub fn is_tropical_plucker<T: Weight>(d: usize, n: usize, p: &Lifting<T>) -> Result<bool> {
    Ok(plucker_violation(d, n, p)?.is_none())
}

/// First `(S, [i, j, k, l])` whose three-term minimum is attained once.
pub fn plucker_violation<T: Weight>(d: usize, n: usize, p: &Lifting<T>) -> Result<Option<(Subset, [usize; 4])>> {
    if d > n || n > crate::subset::MAX_GROUND {
        return Err(Error::Range(format!("(d, n) = ({d}, {n}) out of range")));
    }
    if p.len() != binomial(n, d) {
        return Err(Error::SizeMismatch(format!(
            "lifting has {} entries, Δ({d}, {n}) has {}",
            p.len(),
            binomial(n, d)
        )));
    }
    if d < 2 || d + 2 > n {
        return Ok(None);
    }
    let h = |s: Subset| p.at(s);
    for base in Subset::k_subsets(n, d - 2) {
        let rest: Vec<usize> = base.complement().to_vec();
        for a in 0..rest.len() {
            for b in a + 1..rest.len() {
                for c in b + 1..rest.len() {
                    for e in c + 1..rest.len() {
                        let (i, j, k, l) = (rest[a], rest[b], rest[c], rest[e]);
                        let s = |x: usize, y: usize| base.with(x).with(y);
                        let mut terms = [
                            h(s(i, j)).clone() + h(s(k, l)).clone(),
                            h(s(i, k)).clone() + h(s(j, l)).clone(),
                            h(s(i, l)).clone() + h(s(j, k)).clone(),
                        ];
                        terms.sort();
                        if terms[0] != terms[1] {
                            return Ok(Some((base, [i, j, k, l])));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Every vertex of `Δ(d, n)` lies in a maximal cell of the corank subdivision
/// of `m` that meets the basis set of `m`.
pub fn verify_corank_covering(m: &Matroid) -> Result<bool> {
    let s: Subdivision<crate::Rational> = corank_subdivision(m)?;
    let vertices: Vec<Subset> = Subset::k_subsets(m.n(), m.d()).collect();
    let touching: Vec<&Vec<usize>> = s
        .cells()
        .iter()
        .filter(|c| c.iter().any(|&i| m.is_basis(vertices[i])))
        .collect();
    Ok((0..vertices.len()).all(|v| touching.iter().any(|c| c.binary_search(&v).is_ok())))
}
