//! Minimum-weight perfect matchings in square tables.

use crate::error::{Error, Result};
use crate::scalar::Weight;

/// Sizes up to this use plain permutation enumeration.
const EXHAUSTIVE_MAX: usize = 4;

fn check_square<T>(w: &[Vec<T>]) -> Result<()> {
    if let Some(i) = w.iter().position(|r| r.len() != w.len()) {
        return Err(Error::SizeMismatch(format!(
            "row {i} has {} entries in a {}-row assignment table",
            w[i].len(),
            w.len()
        )));
    }
    Ok(())
}

/// `min_ω Σ_i w[i][ω(i)]` over bijections `ω`; `0` for the empty table.
pub fn assignment_min<T: Weight>(w: &[Vec<T>]) -> Result<T> {
    if w.len() <= EXHAUSTIVE_MAX {
        assignment_min_exhaustive(w)
    } else {
        assignment_min_hungarian(w)
    }
}

/// Enumerates all `m!` bijections.
pub fn assignment_min_exhaustive<T: Weight>(w: &[Vec<T>]) -> Result<T> {
    check_square(w)?;
    fn go<T: Weight>(w: &[Vec<T>], row: usize, used: u64, acc: T, best: &mut Option<T>) {
        if row == w.len() {
            if best.as_ref().is_none_or(|b| acc < *b) {
                *best = Some(acc);
            }
            return;
        }
        for j in 0..w.len() {
            if used & (1 << j) == 0 {
                go(w, row + 1, used | (1 << j), acc.clone() + w[row][j].clone(), best);
            }
        }
    }
    if w.len() > 12 {
        return Err(Error::Range(format!("{}! bijections is too many to enumerate", w.len())));
    }
    let mut best = None;
    go(w, 0, 0, T::zero(), &mut best);
    Ok(best.unwrap_or_else(T::zero))
}

/// Shortest augmenting paths with dual potentials, `O(m³)` exact operations.
pub fn assignment_min_hungarian<T: Weight>(w: &[Vec<T>]) -> Result<T> {
    check_square(w)?;
    let m = w.len();
    // 1-based columns; column 0 is the virtual start of each augmentation
    let mut u = vec![T::zero(); m + 1];
    let mut v = vec![T::zero(); m + 1];
    let mut owner = vec![0usize; m + 1];
    let mut way = vec![0usize; m + 1];
    for i in 1..=m {
        owner[0] = i;
        let mut j0 = 0;
        let mut minv: Vec<Option<T>> = vec![None; m + 1];
        let mut used = vec![false; m + 1];
        loop {
            used[j0] = true;
            let i0 = owner[j0];
            let mut delta: Option<T> = None;
            let mut j1 = 0;
            for j in 1..=m {
                if used[j] {
                    continue;
                }
                let cur = w[i0 - 1][j - 1].clone() - u[i0].clone() - v[j].clone();
                if minv[j].as_ref().is_none_or(|x| cur < *x) {
                    minv[j] = Some(cur);
                    way[j] = j0;
                }
                let mj = minv[j].as_ref().unwrap();
                if delta.as_ref().is_none_or(|d| mj < d) {
                    delta = Some(mj.clone());
                    j1 = j;
                }
            }
            let delta = delta.expect("an unused column remains while row i is unmatched");
            for j in 0..=m {
                if used[j] {
                    u[owner[j]] = u[owner[j]].clone() + delta.clone();
                    v[j] = v[j].clone() - delta.clone();
                } else if let Some(x) = minv[j].as_mut() {
                    *x = x.clone() - delta.clone();
                }
            }
            j0 = j1;
            if owner[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            owner[j0] = owner[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    Ok((1..=m).fold(T::zero(), |acc, j| acc + w[owner[j] - 1][j - 1].clone()))
}
