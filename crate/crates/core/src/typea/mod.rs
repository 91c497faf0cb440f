//! Partitions, Littlewood–Richardson coefficients, Kostka numbers and the
//! type-A and polarisation branching formulas.

mod lr;
mod polar;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::Weight;

pub use lr::{
    kostka, kostka_matrix, inverse_kostka, inverse_kostka_matrix, lr_coefficient, lr_product, lr_table_csv, multi_lr,
    product_expansion, schur_polynomial,
};
pub use polar::{
    delta_shift_check, polarisation_branch, polarisation_oracle, polarisation_terms, schur_factorization_check, FactorizationReport, PolarTerm,
};

/// A partition λ₁ ≥ λ₂ ≥ … > 0 (trailing zeros dropped).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: &[u32]) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidWeight(format!("{parts:?} is not weakly decreasing")));
        }
        let mut v = parts.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        Ok(Partition(v))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part i (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// 2λ = (2λ₁, 2λ₂, …).
    pub fn doubled(&self) -> Partition {
        Partition(self.0.iter().map(|p| 2 * p).collect())
    }

    /// μ ⊆ λ as Young diagrams.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().enumerate().all(|(i, &m)| m <= self.0[i])
    }

    /// All partitions of `n` with at most `max_len` parts, in reverse
    /// lexicographic order ((n) first).
    pub fn all_of(n: u32, max_len: usize) -> Vec<Partition> {
        fn go(rest: u32, cap: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if cur.len() == max_len {
                return;
            }
            for p in (1..=rest.min(cap)).rev() {
                cur.push(p);
                go(rest - p, p, max_len, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions ν ⊆ self with |ν| = size.
    pub fn subpartitions(&self, size: u32) -> Vec<Partition> {
        fn go(outer: &[u32], i: usize, rest: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if i == outer.len() {
                return;
            }
            // remaining rows cannot hold more than this
            let room: u32 = outer[i..].iter().map(|&o| o.min(cap)).sum();
            if room < rest {
                return;
            }
            for p in (1..=rest.min(cap).min(outer[i])).rev() {
                cur.push(p);
                go(outer, i + 1, rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.0, 0, size, u32::MAX, &mut Vec::new(), &mut out);
        out
    }

    /// The gl_n weight (λ₁, …, λ_k, 0, …, 0).
    pub fn to_weight(&self, n: usize) -> Result<Weight> {
        if self.len() > n {
            return Err(Error::SizeMismatch(format!("{self} has more than {n} parts")));
        }
        let mut c: Vec<i64> = self.0.iter().map(|&p| i64::from(p)).collect();
        c.resize(n, 0);
        Ok(Weight::from_ints(&c))
    }

    /// Reads a weakly decreasing nonnegative integral weight.
    pub fn from_weight(w: &Weight) -> Option<Partition> {
        let c = w.to_ints()?;
        if c.iter().any(|&x| x < 0) {
            return None;
        }
        Partition::new(&c.iter().map(|&x| x as u32).collect::<Vec<_>>()).ok()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(&v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']).trim();
        if inner.is_empty() || inner == "∅" {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::InvalidWeight(format!("bad part {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(&parts)
    }
}

/// The pair (μ₊, μ₋) of a dominant gl_n weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedSplit {
    pub mu_plus: Partition,
    pub mu_minus: Partition,
}

impl SignedSplit {
    /// (μ₊ padded with zeros, then −μ₋ reversed).
    pub fn to_weight(&self, n: usize) -> Result<Weight> {
        let (p, m) = (self.mu_plus.len(), self.mu_minus.len());
        if p + m > n {
            return Err(Error::SizeMismatch(format!("split does not fit in {n} coordinates")));
        }
        let mut c: Vec<i64> = self.mu_plus.parts().iter().map(|&x| i64::from(x)).collect();
        c.resize(n - m, 0);
        c.extend(self.mu_minus.parts().iter().rev().map(|&x| -i64::from(x)));
        Ok(Weight::from_ints(&c))
    }

    pub fn total(&self) -> u32 {
        self.mu_plus.size() + self.mu_minus.size()
    }
}

pub fn split_signed(mu: &Weight) -> Result<SignedSplit> {
    let c = mu
        .to_ints()
        .ok_or_else(|| Error::InvalidWeight(format!("{mu} is not integral")))?;
    if c.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidWeight(format!("{mu} is not weakly decreasing")));
    }
    let plus: Vec<u32> = c.iter().filter(|&&x| x > 0).map(|&x| x as u32).collect();
    let minus: Vec<u32> = c.iter().rev().filter(|&&x| x < 0).map(|&x| (-x) as u32).collect();
    Ok(SignedSplit {
        mu_plus: Partition::new(&plus)?,
        mu_minus: Partition::new(&minus)?,
    })
}
