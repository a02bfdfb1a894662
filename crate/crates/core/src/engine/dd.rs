//! Extreme rays of a pointed polyhedral cone `{x : A x ≥ 0}` by the
//! double description method with the combinatorial adjacency test.

use crate::linalg::{inverse, RowSpace};
use crate::scalar::Field;

/// Bitset over constraint rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct RowBits(Vec<u64>);

impl RowBits {
    pub(crate) fn new(rows: usize) -> Self {
        RowBits(vec![0; rows.div_ceil(64).max(1)])
    }

    pub(crate) fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn contains(&self, i: usize) -> bool {
        self.0[i / 64] & (1 << (i % 64)) != 0
    }

    fn and(&self, other: &RowBits) -> RowBits {
        RowBits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_superset_of(&self, other: &RowBits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| b & !a == 0)
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Ray<T> {
    pub(crate) v: Vec<T>,
    /// Processed rows on which the ray is tight.
    pub(crate) zeros: RowBits,
}

fn dot<T: Field>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

fn normalize<T: Field>(v: &mut [T]) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).map(|x| x.abs()) {
        let inv = T::one() / lead;
        for x in v.iter_mut() {
            *x = x.clone() * inv.clone();
        }
    }
}

/// Extreme rays of `{x : rows · x ≥ 0}`.
///
/// Returns `None` if the rows do not have full column rank (cone not pointed).
pub(crate) fn extreme_rays<T: Field>(rows: &[Vec<T>]) -> Option<Vec<Ray<T>>> {
    let dim = rows.first().map(Vec::len)?;
    let m = rows.len();

    let mut space = RowSpace::new(dim);
    let mut basis = Vec::with_capacity(dim);
    for (i, r) in rows.iter().enumerate() {
        if space.insert(r.clone()) {
            basis.push(i);
            if basis.len() == dim {
                break;
            }
        }
    }
    if basis.len() < dim {
        return None;
    }

    // Rays of the simplicial cone {x : B x ≥ 0} are the columns of B⁻¹.
    let b: Vec<Vec<T>> = basis.iter().map(|&i| rows[i].clone()).collect();
    let inv = inverse(&b)?;
    let mut rays: Vec<Ray<T>> = (0..dim)
        .map(|col| {
            let mut v: Vec<T> = (0..dim).map(|r| inv[r][col].clone()).collect();
            normalize(&mut v);
            let mut zeros = RowBits::new(m);
            for (k, &row) in basis.iter().enumerate() {
                if k != col {
                    zeros.insert(row);
                }
            }
            Ray { v, zeros }
        })
        .collect();

    let mut in_basis = vec![false; m];
    for &i in &basis {
        in_basis[i] = true;
    }

    for (j, row) in rows.iter().enumerate() {
        if in_basis[j] {
            continue;
        }
        let values: Vec<T> = rays.iter().map(|r| dot(row, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();

        let mut fresh = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros.and(&rays[q].zeros);
                if common.count() + 2 < dim {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(r, ray)| r != p && r != q && ray.zeros.is_superset_of(&common));
                if blocked {
                    continue;
                }
                let mut v: Vec<T> = rays[q]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(xq, xp)| values[p].clone() * xq.clone() - values[q].clone() * xp.clone())
                    .collect();
                normalize(&mut v);
                let mut zeros = common;
                zeros.insert(j);
                fresh.push(Ray { v, zeros });
            }
        }

        let mut kept: Vec<Ray<T>> = Vec::with_capacity(rays.len() + fresh.len());
        for (i, mut ray) in rays.into_iter().enumerate() {
            if values[i].is_negative() {
                continue;
            }
            if values[i].is_zero() {
                ray.zeros.insert(j);
            }
            kept.push(ray);
        }
        kept.extend(fresh);
        rays = kept;
    }
    Some(rays)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Weight;
    use num_traits::Signed;
    use crate::Rational;

    fn rows(r: &[&[i64]]) -> Vec<Vec<Rational>> {
        r.iter().map(|row| row.iter().map(|&v| Rational::from_i64(v)).collect()).collect()
    }

    #[test]
    fn square_cone() {
        // cone over a square: x + z >= 0, -x + z >= 0, y + z >= 0, -y + z >= 0
        let a = rows(&[&[1, 0, 1], &[-1, 0, 1], &[0, 1, 1], &[0, -1, 1]]);
        let rays = extreme_rays(&a).unwrap();
        assert_eq!(rays.len(), 4);
        for r in &rays {
            assert_eq!(r.zeros.count(), 2);
            for row in &a {
                assert!(!dot(row, &r.v).is_negative());
            }
        }
    }

    #[test]
    fn degenerate_pyramid() {
        // homogenized square pyramid (x, y, h, t): apex is tight on four facets,
        // plus the redundant constraint t >= 0
        let a = rows(&[
            &[-1, 0, -1, 1],
            &[1, 0, -1, 1],
            &[0, -1, -1, 1],
            &[0, 1, -1, 1],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
        ]);
        let rays = extreme_rays(&a).unwrap();
        // apex and four base corners
        assert_eq!(rays.len(), 5);
    }

    #[test]
    fn not_pointed() {
        let a = rows(&[&[1, 0], &[2, 0]]);
        assert!(extreme_rays(&a).is_none());
    }
}
