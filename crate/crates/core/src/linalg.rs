//! Dense exact linear algebra over a [`Field`].

use crate::scalar::Field;

/// Reduced row echelon form of a dense row-major matrix.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    pub rows: Vec<Vec<T>>,
    /// Pivot column of each nonzero row, ascending.
    pub pivots: Vec<usize>,
}

impl<T: Field> Echelon<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Gauss-Jordan elimination; `cols` is needed when `rows` is empty.
pub fn rref<T: Field>(mut rows: Vec<Vec<T>>, cols: usize) -> Echelon<T> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = T::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = x.clone() - factor.clone() * p.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Echelon { rows, pivots }
}

pub fn rank<T: Field>(rows: &[Vec<T>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    rref(rows.to_vec(), cols).rank()
}

/// Solve the square system `a x = b`; `None` when `a` is singular.
pub fn solve<T: Field>(a: &[Vec<T>], b: &[T]) -> Option<Vec<T>> {
    let n = a.len();
    debug_assert!(a.iter().all(|r| r.len() == n) && b.len() == n);
    let aug: Vec<Vec<T>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let e = rref(aug, n + 1);
    if e.rank() != n || e.pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some(e.rows.iter().map(|r| r[n].clone()).collect())
}

/// Inverse of a square matrix; `None` when singular.
pub fn inverse<T: Field>(a: &[Vec<T>]) -> Option<Vec<Vec<T>>> {
    let n = a.len();
    let aug: Vec<Vec<T>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { T::one() } else { T::zero() }));
            r
        })
        .collect();
    let e = rref(aug, 2 * n);
    if e.rank() < n || e.pivots[n - 1] >= n {
        return None;
    }
    Some(e.rows.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Incrementally maintained row space in reduced echelon form.
#[derive(Clone, Debug)]
pub struct RowSpace<T> {
    cols: usize,
    rows: Vec<(usize, Vec<T>)>,
}

impl<T: Field> RowSpace<T> {
    pub fn new(cols: usize) -> Self {
        RowSpace { cols, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Insert a row; returns whether it enlarged the space.
    pub fn insert(&mut self, mut row: Vec<T>) -> bool {
        debug_assert_eq!(row.len(), self.cols);
        for (pivot, basis) in &self.rows {
            if row[*pivot].is_zero() {
                continue;
            }
            let f = row[*pivot].clone();
            for (x, b) in row.iter_mut().zip(basis) {
                if !b.is_zero() {
                    *x = x.clone() - f.clone() * b.clone();
                }
            }
        }
        let Some(pivot) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = T::one() / row[pivot].clone();
        for x in row.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for (_, basis) in self.rows.iter_mut() {
            if basis[pivot].is_zero() {
                continue;
            }
            let f = basis[pivot].clone();
            for (x, r) in basis.iter_mut().zip(&row) {
                if !r.is_zero() {
                    *x = x.clone() - f.clone() * r.clone();
                }
            }
        }
        self.rows.push((pivot, row));
        true
    }
}
