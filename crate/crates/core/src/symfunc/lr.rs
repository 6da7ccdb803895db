use num_traits::ToPrimitive;

use super::partition::Partition;
use super::{Basis, SymFunc};
use crate::error::{Error, Result};

fn check_sizes(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<()> {
    if lambda.size() + mu.size() != nu.size() {
        return Err(Error::SizeMismatch {
            expected: nu.size(),
            actual: lambda.size() + mu.size(),
        });
    }
    Ok(())
}

/// `c^ν_{λμ}` as the number of Littlewood–Richardson tableaux: semistandard
/// fillings of `ν/λ` with content `μ` whose reverse reading word is a
/// lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    check_sizes(lambda, mu, nu)?;
    if (0..lambda.len()).any(|r| lambda.part(r) > nu.part(r)) {
        return Ok(0);
    }
    // Reading order: top row first, each row right to left.
    let cells: Vec<(usize, usize)> = (0..nu.len())
        .flat_map(|r| (lambda.part(r)..nu.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = (0..nu.len()).map(|r| vec![0; nu.part(r)]).collect();
    let mut used = vec![0usize; mu.len() + 1];
    let mut count = 0;
    fill(&cells, 0, lambda, mu, &mut grid, &mut used, &mut count);
    Ok(count)
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    lambda: &Partition,
    mu: &Partition,
    grid: &mut [Vec<usize>],
    used: &mut [usize],
    count: &mut u64,
) {
    let Some(&(r, c)) = cells.get(k) else {
        *count += 1;
        return;
    };
    // Row weakly increasing: bounded by the already-filled right neighbour.
    let hi = if c + 1 < grid[r].len() {
        grid[r][c + 1]
    } else {
        mu.len()
    };
    // Column strict: above neighbour is either in λ (no constraint) or filled.
    let lo = if r > 0 && c >= lambda.part(r - 1) {
        grid[r - 1][c] + 1
    } else {
        1
    };
    for v in lo..=hi.min(mu.len()) {
        if used[v] >= mu.part(v - 1) {
            continue;
        }
        if v > 1 && used[v] + 1 > used[v - 1] {
            continue;
        }
        used[v] += 1;
        grid[r][c] = v;
        fill(cells, k + 1, lambda, mu, grid, used, count);
        grid[r][c] = 0;
        used[v] -= 1;
    }
}

/// `c^ν_{λμ}` read off from `s_λ · s_μ` expanded in the Schur basis.
pub fn lr_coefficient_via_product(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<u64> {
    check_sizes(lambda, mu, nu)?;
    let product = SymFunc::basis_element(Basis::S, lambda.clone())
        .multiply(&SymFunc::basis_element(Basis::S, mu.clone()))
        .convert(Basis::S);
    let c = product.coeff(nu).eval_at_one();
    c.to_u64()
        .ok_or_else(|| Error::Parse(format!("negative LR coefficient {c}")))
}
