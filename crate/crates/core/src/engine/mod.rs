//! Regular subdivisions of point configurations over exact scalars.
//!
//! The lower hull of the lifted points is read off the vertices of the
//! polyhedron of affine minorants `{ (a, c) : ⟨a, p⟩ + c ≤ h(p) ∀p }`. Each
//! vertex is an affine function tight on exactly one maximal cell, so it is
//! kept as the cell's regularity witness.

mod config;
mod dd;
mod hypersimplex;

pub use config::{ConfigKind, Lifting, PointConfiguration};
pub use hypersimplex::{
    corank_subdivision, is_matroid_subdivision, is_tropical_plucker, plucker_violation, secondary_linearity_dimension,
    verify_corank_covering, LinearityDimension,
};

use crate::error::{Error, Result};
use crate::linalg::rref;
use crate::scalar::Field;

/// An affine function `x ↦ ⟨coeffs, x⟩ + constant`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Affine<T> {
    pub coeffs: Vec<T>,
    pub constant: T,
}

impl<T: Field> Affine<T> {
    pub fn eval(&self, x: &[T]) -> T {
        self.coeffs
            .iter()
            .zip(x)
            .fold(self.constant.clone(), |acc, (a, b)| acc + a.clone() * b.clone())
    }
}

/// Maximal cells of a regular subdivision, each with its affine witness.
#[derive(Clone, Debug)]
pub struct Subdivision<T> {
    points: usize,
    cells: Vec<Vec<usize>>,
    witnesses: Vec<Affine<T>>,
}

impl<T: Field> Subdivision<T> {
    /// Number of points of the underlying configuration.
    pub fn num_points(&self) -> usize {
        self.points
    }

    /// Cells as sorted point-index lists, in canonical (lexicographic) order.
    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn witnesses(&self) -> &[Affine<T>] {
        &self.witnesses
    }

    pub fn is_trivial(&self) -> bool {
        self.cells.len() == 1
    }

    /// Indices contained in at least one cell.
    pub fn covered_points(&self) -> Vec<bool> {
        let mut seen = vec![false; self.points];
        for c in &self.cells {
            for &i in c {
                seen[i] = true;
            }
        }
        seen
    }

    /// Re-check every witness: tight on its cell, strictly below elsewhere,
    /// and the cell affinely spans the configuration.
    pub fn verify_witnesses(&self, pc: &PointConfiguration<T>, lifting: &Lifting<T>) -> Result<()> {
        if pc.len() != self.points || lifting.len() != self.points {
            return Err(Error::SizeMismatch("subdivision, configuration and lifting disagree".into()));
        }
        let full = affine_rank(pc.points().iter());
        for (cell, g) in self.cells.iter().zip(&self.witnesses) {
            let mut in_cell = vec![false; self.points];
            for &i in cell {
                in_cell[i] = true;
            }
            for (i, (p, h)) in pc.points().iter().zip(lifting.heights()).enumerate() {
                let v = g.eval(p);
                if in_cell[i] && v != *h {
                    return Err(Error::Inconsistent(format!("witness not tight at point {i} of cell {cell:?}")));
                }
                if !in_cell[i] && v >= *h {
                    return Err(Error::Inconsistent(format!("witness not strictly below at point {i} for cell {cell:?}")));
                }
            }
            if affine_rank(cell.iter().map(|&i| &pc.points()[i])) != full {
                return Err(Error::Inconsistent(format!("cell {cell:?} is not full-dimensional")));
            }
        }
        Ok(())
    }
}

/// Set equality of maximal cells.
pub fn subdivisions_equal<T: Field>(a: &Subdivision<T>, b: &Subdivision<T>) -> Result<bool> {
    if a.points != b.points {
        return Err(Error::Configuration(format!(
            "subdivisions of different configurations ({} vs {} points)",
            a.points, b.points
        )));
    }
    Ok(a.cells == b.cells)
}

/// Dimension of the affine span of a point set, plus one (`0` for no points).
fn affine_rank<'a, T: Field + 'a>(points: impl Iterator<Item = &'a Vec<T>>) -> usize {
    let rows: Vec<Vec<T>> = points
        .map(|p| {
            let mut r = p.clone();
            r.push(T::one());
            r
        })
        .collect();
    let cols = rows.first().map_or(0, Vec::len);
    rref(rows, cols).rank()
}

/// Coordinates that parametrize the affine hull of the configuration
/// injectively: the pivot columns of the differences `p − p₀`.
fn hull_coordinates<T: Field>(pc: &PointConfiguration<T>) -> Vec<usize> {
    let p0 = &pc.points()[0];
    let diffs: Vec<Vec<T>> = pc.points()[1..]
        .iter()
        .map(|p| p.iter().zip(p0).map(|(a, b)| a.clone() - b.clone()).collect())
        .collect();
    rref(diffs, pc.dim()).pivots
}

/// The regular subdivision induced by `lifting`: maximal sets of points on a
/// common lower facet of the lifted configuration. Points lifted strictly
/// above the lower hull appear in no cell.
pub fn regular_subdivision<T: Field>(pc: &PointConfiguration<T>, lifting: &Lifting<T>) -> Result<Subdivision<T>> {
    if lifting.len() != pc.len() {
        return Err(Error::SizeMismatch(format!(
            "lifting has {} heights for {} points",
            lifting.len(),
            pc.len()
        )));
    }
    let coords = hull_coordinates(pc);
    let a = coords.len();
    // variables (a_1..a_A, c, t); row · x = t·h(p) − ⟨a, p⟩ − c ≥ 0
    let mut rows: Vec<Vec<T>> = pc
        .points()
        .iter()
        .zip(lifting.heights())
        .map(|(p, h)| {
            let mut r: Vec<T> = coords.iter().map(|&j| -p[j].clone()).collect();
            r.push(-T::one());
            r.push(h.clone());
            r
        })
        .collect();
    let mut t_row = vec![T::zero(); a + 2];
    t_row[a + 1] = T::one();
    rows.push(t_row);

    let rays = dd::extreme_rays(&rows)
        .ok_or_else(|| Error::Inconsistent("minorant cone is not pointed".into()))?;

    let mut cells: Vec<(Vec<usize>, Affine<T>)> = Vec::new();
    for ray in rays {
        let t = ray.v[a + 1].clone();
        if !t.is_positive() {
            continue;
        }
        let cell: Vec<usize> = (0..pc.len()).filter(|&i| ray.zeros.contains(i)).collect();
        let mut coeffs = vec![T::zero(); pc.dim()];
        for (k, &j) in coords.iter().enumerate() {
            coeffs[j] = ray.v[k].clone() / t.clone();
        }
        let constant = ray.v[a].clone() / t;
        cells.push((cell, Affine { coeffs, constant }));
    }
    cells.sort_by(|x, y| x.0.cmp(&y.0));
    cells.dedup_by(|x, y| x.0 == y.0);
    let (cells, witnesses) = cells.into_iter().unzip();
    Ok(Subdivision {
        points: pc.len(),
        cells,
        witnesses,
    })
}
