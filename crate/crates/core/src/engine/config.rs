use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::scalar::{Field, Weight};
use crate::subset::{Subset, MAX_GROUND};

/// Where a configuration came from; hypersimplex and product configurations
/// have a fixed point order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConfigKind {
    Explicit,
    /// Vertices `e_S` of `Δ(d, n)`, `S` in colexicographic order.
    Hypersimplex { d: usize, n: usize },
    /// Vertices `(e_i, e_j)` of `Δ_{d−1} × Δ_{l−1}`, row-major in `(i, j)`.
    ProductOfSimplices { d: usize, l: usize },
}

/// A finite set of pairwise distinct points in `T^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration<T> {
    dim: usize,
    points: Vec<Vec<T>>,
    kind: ConfigKind,
}

impl<T: Field> PointConfiguration<T> {
    pub fn new(points: Vec<Vec<T>>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::Configuration("no points".into()));
        };
        let dim = first.len();
        if let Some(p) = points.iter().position(|p| p.len() != dim) {
            return Err(Error::Configuration(format!(
                "point {p} has {} coordinates, expected {dim}",
                points[p].len()
            )));
        }
        let mut seen = HashSet::new();
        for (i, p) in points.iter().enumerate() {
            if !seen.insert(p) {
                return Err(Error::Configuration(format!("point {i} is repeated")));
            }
        }
        Ok(PointConfiguration {
            dim,
            points,
            kind: ConfigKind::Explicit,
        })
    }

    pub fn hypersimplex(d: usize, n: usize) -> Result<Self> {
        if n > MAX_GROUND || d > n {
            return Err(Error::Range(format!("Δ({d}, {n}) needs 0 <= d <= n <= {MAX_GROUND}")));
        }
        let points = Subset::k_subsets(n, d)
            .map(|s| (1..=n).map(|e| T::from_i64(s.contains(e) as i64)).collect())
            .collect();
        Ok(PointConfiguration {
            dim: n,
            points,
            kind: ConfigKind::Hypersimplex { d, n },
        })
    }

    pub fn product_of_simplices(d: usize, l: usize) -> Result<Self> {
        if d == 0 || l == 0 {
            return Err(Error::Range(format!("Δ_{{d-1}} × Δ_{{l-1}} needs d, l >= 1 (got {d}, {l})")));
        }
        let mut points = Vec::with_capacity(d * l);
        for i in 0..d {
            for j in 0..l {
                let mut p = vec![T::zero(); d + l];
                p[i] = T::one();
                p[d + j] = T::one();
                points.push(p);
            }
        }
        Ok(PointConfiguration {
            dim: d + l,
            points,
            kind: ConfigKind::ProductOfSimplices { d, l },
        })
    }
}

impl<T> PointConfiguration<T> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<T>] {
        &self.points
    }

    pub fn kind(&self) -> ConfigKind {
        self.kind
    }
}

/// Heights aligned with a configuration's point order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lifting<T> {
    heights: Vec<T>,
}

impl<T: Weight> Lifting<T> {
    pub fn new(heights: Vec<T>) -> Self {
        Lifting { heights }
    }

    pub fn zero(len: usize) -> Self {
        Lifting {
            heights: vec![T::zero(); len],
        }
    }

    /// The corank vector `S ↦ d − rank(S)` over `Δ(d, n)` in colex order.
    pub fn corank(m: &Matroid) -> Self {
        Lifting {
            heights: m.corank_vector().into_iter().map(|c| T::from_i64(c as i64)).collect(),
        }
    }

    pub fn heights(&self) -> &[T] {
        &self.heights
    }

    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    /// Height of a hypersimplex vertex.
    pub fn at(&self, s: Subset) -> &T {
        &self.heights[s.colex_rank()]
    }

    pub fn into_heights(self) -> Vec<T> {
        self.heights
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn hypersimplex_points() {
        let pc = PointConfiguration::<Rational>::hypersimplex(2, 4).unwrap();
        assert_eq!(pc.len(), 6);
        assert_eq!(pc.dim(), 4);
        let ones: Vec<usize> = pc.points()[3]
            .iter()
            .enumerate()
            .filter(|(_, x)| **x == Rational::from_i64(1))
            .map(|(i, _)| i + 1)
            .collect();
        assert_eq!(ones, vec![1, 4]);
    }

    #[test]
    fn validation() {
        let q = Rational::from_i64;
        assert!(PointConfiguration::<Rational>::new(vec![]).is_err());
        assert!(PointConfiguration::new(vec![vec![q(0)], vec![q(0)]]).is_err());
        assert!(PointConfiguration::new(vec![vec![q(0)], vec![q(1), q(2)]]).is_err());
        assert!(PointConfiguration::<Rational>::hypersimplex(5, 4).is_err());
        assert_eq!(PointConfiguration::<Rational>::product_of_simplices(2, 3).unwrap().len(), 6);
    }
}
