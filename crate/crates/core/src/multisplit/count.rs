use crate::error::{Error, Result};

/// Largest `n` accepted by the counting formulas; all intermediate values fit in `u128`.
const MAX_COUNT_N: usize = 40;

fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

fn check_range(d: usize, n: usize, k: usize) -> Result<()> {
    if n > MAX_COUNT_N {
        return Err(Error::Range(format!("n = {n} exceeds {MAX_COUNT_N}")));
    }
    if d > n || k < 2 || k > d.min(n - d) {
        return Err(Error::Range(format!(
            "need 2 ≤ k ≤ min(d, n − d), got (d, n, k) = ({d}, {n}, {k})"
        )));
    }
    Ok(())
}

/// Number of `x ∈ ℤ^k` with `Σ x = d` and `0 < x_j < α_j`, where
/// `α_k = n − Σ_{j<k} α_j`.
pub fn mu(d: usize, n: usize, k: usize, alphas: &[usize]) -> Result<u128> {
    if k < 2 || alphas.len() != k - 1 {
        return Err(Error::Range(format!("expected {} block sizes, got {}", k.saturating_sub(1), alphas.len())));
    }
    if let Some(a) = alphas.iter().find(|&&a| a < 2) {
        return Err(Error::Range(format!("block size {a} below 2")));
    }
    let used: usize = alphas.iter().sum();
    if used + 2 > n {
        return Err(Error::Range(format!("last block size {} below 2", n as isize - used as isize)));
    }
    let mut all = alphas.to_vec();
    all.push(n - used);
    Ok(count_compositions(d, &all))
}

fn count_compositions(d: usize, caps: &[usize]) -> u128 {
    match caps.split_first() {
        None => u128::from(d == 0),
        Some((&a, rest)) => (1..a.min(d + 1)).map(|x| count_compositions(d - x, rest)).sum(),
    }
}

/// Number of `k`-splits of `Δ(d, n)`:
/// `(1/k) Σ_α μ(α) Π_j C(β_j, α_j)` with `β_j = n − Σ_{ℓ<j} α_ℓ`,
/// `2 ≤ α_j ≤ β_j − 2(k − j)` and `α_k = β_k`.
pub fn count_multisplits_formula(d: usize, n: usize, k: usize) -> Result<u128> {
    check_range(d, n, k)?;
    let mut alphas = Vec::with_capacity(k);
    let total = sum_over_sizes(d, k, n, &mut alphas, 1);
    exact_div(total, k)
}

fn sum_over_sizes(d: usize, k: usize, beta: usize, alphas: &mut Vec<usize>, weight: u128) -> u128 {
    let j = alphas.len() + 1;
    if j == k {
        alphas.push(beta);
        let m = count_compositions(d, alphas);
        alphas.pop();
        return weight * m;
    }
    let top = beta.saturating_sub(2 * (k - j));
    let mut acc = 0;
    for a in 2..=top {
        alphas.push(a);
        acc += sum_over_sizes(d, k, beta - a, alphas, weight * binom(beta, a));
        alphas.pop();
    }
    acc
}

fn exact_div(total: u128, k: usize) -> Result<u128> {
    let k = k as u128;
    if !total.is_multiple_of(k) {
        return Err(Error::Inconsistent(format!("sum {total} is not divisible by {k}")));
    }
    Ok(total / k)
}

/// Number of `k`-splits of `Δ_{d−1} × Δ_{ℓ−1}`:
/// `(1/k) (Σ_α Π C(β_j, α_j)) (Σ_γ Π C(δ_j, γ_j))` over block sizes `≥ 1`.
pub fn count_product_multisplits_formula(d: usize, l: usize, k: usize) -> Result<u128> {
    if d + l > MAX_COUNT_N {
        return Err(Error::Range(format!("d + ℓ = {} exceeds {MAX_COUNT_N}", d + l)));
    }
    if k < 2 || k > d.min(l) {
        return Err(Error::Range(format!("need 2 ≤ k ≤ min(d, ℓ), got (d, ℓ, k) = ({d}, {l}, {k})")));
    }
    exact_div(ordered_partitions(d, k) * ordered_partitions(l, k), k)
}

/// `Σ Π_j C(β_j, α_j)` over compositions of `m` into `k` positive parts.
fn ordered_partitions(m: usize, k: usize) -> u128 {
    if k == 1 {
        return u128::from(m >= 1);
    }
    (1..m).map(|a| binom(m, a) * ordered_partitions(m - a, k - 1)).sum()
}
