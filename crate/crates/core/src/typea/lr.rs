use std::collections::BTreeMap;

use rayon::prelude::*;

use super::Partition;
use crate::error::{Error, Result};
use crate::rootsys::Weight;
use crate::weightpoly::WeightPolynomial;

/// c^λ_{μν}: the number of LR tableaux of shape λ/μ and content ν, i.e.
/// semistandard fillings whose reverse reading word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    if nu.is_empty() {
        return 1;
    }
    let rows = lambda.len();
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| (mu.part(r) as usize..lambda.part(r) as usize).rev().map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u8>> = (0..rows).map(|r| vec![0; lambda.part(r) as usize]).collect();
    let content: Vec<u32> = nu.parts().to_vec();
    let mut used = vec![0u32; content.len()];

    fn go(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut [Vec<u8>],
        used: &mut [u32],
        content: &[u32],
        mu: &Partition,
        lambda: &Partition,
    ) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let mut hi = content.len() as u8;
        if c + 1 < lambda.part(r) as usize {
            hi = hi.min(grid[r][c + 1]);
        }
        // at most r + 1 in row r of a lattice filling
        hi = hi.min(r as u8 + 1);
        let lo = if r > 0 && c >= mu.part(r - 1) as usize { grid[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in lo..=hi {
            let i = (v - 1) as usize;
            if used[i] == content[i] || (i > 0 && used[i - 1] <= used[i]) {
                continue;
            }
            grid[r][c] = v;
            used[i] += 1;
            total += go(k + 1, cells, grid, used, content, mu, lambda);
            used[i] -= 1;
        }
        grid[r][c] = 0;
        total
    }
    go(0, &cells, &mut grid, &mut used, &content, mu, lambda)
}

/// Multiplicity of s_λ in s_{μ⁽¹⁾} ⋯ s_{μ⁽ʳ⁾}, peeling off the last factor
/// through intermediate shapes κ ⊆ λ.
pub fn multi_lr(lambda: &Partition, factors: &[Partition]) -> u64 {
    let total: u32 = factors.iter().map(Partition::size).sum();
    if total != lambda.size() {
        return 0;
    }
    match factors {
        [] => u64::from(lambda.is_empty()),
        [only] => u64::from(lambda == only),
        [rest @ .., last] => lambda
            .subpartitions(lambda.size() - last.size())
            .par_iter()
            .map(|kappa| {
                let c = lr_coefficient(lambda, kappa, last);
                if c == 0 {
                    0
                } else {
                    c * multi_lr(kappa, rest)
                }
            })
            .sum(),
    }
}

/// s_μ · s_ν = Σ c^λ_{μν} s_λ.
pub fn lr_product(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, u64> {
    let n = mu.size() + nu.size();
    Partition::all_of(n, mu.len() + nu.len())
        .into_par_iter()
        .filter_map(|l| {
            let c = lr_coefficient(&l, mu, nu);
            (c > 0).then_some((l, c))
        })
        .collect()
}

/// `lambda,coefficient` rows of s_μ · s_ν.
pub fn lr_table_csv(mu: &Partition, nu: &Partition) -> String {
    let mut out = String::from("lambda,coefficient\n");
    for (l, c) in lr_product(mu, nu) {
        let parts: Vec<String> = l.parts().iter().map(u32::to_string).collect();
        out.push_str(&format!("\"{}\",{c}\n", parts.join(" ")));
    }
    out
}

/// The Schur expansion of a product of Schur functions.
pub fn product_expansion(factors: &[Partition]) -> BTreeMap<Partition, u64> {
    let mut acc = BTreeMap::from([(Partition::empty(), 1u64)]);
    for f in factors {
        let mut next = BTreeMap::new();
        for (k, c) in &acc {
            for (l, d) in lr_product(k, f) {
                *next.entry(l).or_insert(0) += c * d;
            }
        }
        acc = next;
    }
    acc
}

/// K_{λ,α}: semistandard tableaux of shape λ and content α (any
/// composition), built as a chain of horizontal strips.
pub fn kostka(lambda: &Partition, content: &[u32]) -> u64 {
    if content.iter().sum::<u32>() != lambda.size() {
        return 0;
    }
    fn strip(r: usize, rest: u32, shape: &mut [u32], before: &[u32], i: usize, content: &[u32], lambda: &Partition) -> u64 {
        if rest == 0 {
            return fill(shape, i + 1, content, lambda);
        }
        if r == shape.len() {
            return 0;
        }
        // a horizontal strip: new row r stays within old row r − 1
        let cap = if r == 0 { lambda.part(0) } else { lambda.part(r).min(before[r - 1]) };
        let mut total = 0;
        for add in 0..=rest.min(cap.saturating_sub(before[r])) {
            shape[r] = before[r] + add;
            total += strip(r + 1, rest - add, shape, before, i, content, lambda);
        }
        shape[r] = before[r];
        total
    }
    fn fill(shape: &mut [u32], i: usize, content: &[u32], lambda: &Partition) -> u64 {
        if i == content.len() {
            return u64::from(shape.iter().zip(lambda.parts()).all(|(a, b)| a == b));
        }
        let before = shape.to_vec();
        strip(0, content[i], shape, &before, i, content, lambda)
    }
    let mut shape = vec![0u32; lambda.len()];
    fill(&mut shape, 0, content, lambda)
}

/// The Kostka matrix on partitions of n with at most `max_len` parts,
/// indexed as in [`Partition::all_of`]: entry (i, j) is K_{λ_i, λ_j}.
pub fn kostka_matrix(n: u32, max_len: usize) -> (Vec<Partition>, Vec<Vec<i64>>) {
    let parts = Partition::all_of(n, max_len);
    let m = parts
        .iter()
        .map(|l| parts.iter().map(|mu| kostka(l, mu.parts()) as i64).collect())
        .collect();
    (parts, m)
}

/// Exact inverse of the (upper unitriangular) Kostka matrix.
pub fn inverse_kostka_matrix(n: u32, max_len: usize) -> (Vec<Partition>, Vec<Vec<i64>>) {
    let (parts, k) = kostka_matrix(n, max_len);
    let d = parts.len();
    let mut inv = vec![vec![0i64; d]; d];
    // K is upper unitriangular in this order; solve K · X = I column by column
    for j in 0..d {
        for i in (0..d).rev() {
            let mut s = i64::from(i == j);
            for t in i + 1..d {
                s -= k[i][t] * inv[t][j];
            }
            debug_assert_eq!(k[i][i], 1);
            inv[i][j] = s;
        }
    }
    (parts, inv)
}

/// Entry (λ, μ) of the inverse Kostka matrix.
pub fn inverse_kostka(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!("|{lambda}| ≠ |{mu}|")));
    }
    let n = lambda.size();
    let (parts, inv) = inverse_kostka_matrix(n, n as usize);
    let i = parts.iter().position(|p| p == lambda).expect("partition listed");
    let j = parts.iter().position(|p| p == mu).expect("partition listed");
    Ok(inv[i][j])
}

/// s_λ(x₁, …, x_m) as a weight polynomial on ℤ^m, from tableau counts.
pub fn schur_polynomial(lambda: &Partition, m: usize) -> WeightPolynomial {
    if lambda.len() > m {
        return WeightPolynomial::zero();
    }
    let n = lambda.size();
    let mut terms = Vec::new();
    fn compositions(rest: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=rest {
            cur.push(x);
            compositions(rest - x, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    if m > 0 {
        compositions(n, m, &mut Vec::new(), &mut all);
    }
    for alpha in all {
        let k = kostka(lambda, &alpha);
        if k > 0 {
            let c: Vec<i64> = alpha.iter().map(|&x| i64::from(x)).collect();
            terms.push((Weight::from_ints(&c), k as i64));
        }
    }
    WeightPolynomial::from_terms(terms)
}
