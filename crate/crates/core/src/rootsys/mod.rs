//! Classical root systems in exact ambient ε-coordinates and their Levi
//! subsystems.
//!
//! Conventions (0-based coordinates, simple roots numbered from 1 in the
//! public API):
//!
//! | family | ambient | simple roots                        | positive roots            |
//! |--------|---------|-------------------------------------|---------------------------|
//! | `GL`   | n       | εi − εi+1 (i < n)                   | εi − εj                   |
//! | `B`    | n       | εi − εi+1, εn                       | εi ± εj, εi               |
//! | `C`    | n       | εi − εi+1, 2εn                      | εi ± εj, 2εi              |
//! | `D`    | n       | εi − εi+1, εn−1 + εn                | εi ± εj                   |

mod levi;
mod weight;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

pub use levi::{Component, ComponentKind, LeviDatum, SystemDescriptor};
pub use weight::Weight;

use crate::error::{Error, Result};
use crate::weylgrp::{WeylElement, WeylGroup};

/// Default bound on |W| for operations that enumerate the whole Weyl group.
pub const DEFAULT_GROUP_GUARD: u64 = 2_000_000;

/// Coefficients of a weight in the basis of simple roots.
pub type SimpleCoords = SmallVec<[i64; 8]>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    GL,
    B,
    C,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::GL => "GL",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "GL" | "A" => Ok(Family::GL),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            other => Err(Error::Config(format!("unknown family {other:?}"))),
        }
    }
}

/// Positive roots, simple roots and ρ of a (possibly reducible) root
/// subsystem spanned by a subset of the simple roots of a classical datum.
///
/// The full root system is the subsystem spanned by every simple root; the
/// root system of a Levi subalgebra is the one spanned by S̄.
#[derive(Clone, Debug)]
pub struct RootSubsystem {
    family: Family,
    rank: usize,
    simple_indices: Vec<usize>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    rho: Weight,
}

impl RootSubsystem {
    pub fn family(&self) -> Family {
        self.family
    }

    /// 0-based indices of the spanning simple roots.
    pub fn simple_indices(&self) -> &[usize] {
        &self.simple_indices
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn ambient_dim(&self) -> usize {
        self.rank
    }

    pub fn is_dominant(&self, beta: &Weight) -> bool {
        self.simple_roots.iter().all(|a| beta.dot4(a) >= 0)
    }

    /// Strictly dominant: positive pairing with every simple coroot.
    pub fn is_regular_dominant(&self, beta: &Weight) -> bool {
        self.simple_roots.iter().all(|a| beta.dot4(a) > 0)
    }

    /// Whether `beta` is an ℕ-combination of the positive roots of this
    /// subsystem. Exact: the cone is spanned by the simple roots.
    pub fn in_positive_cone(&self, beta: &Weight) -> bool {
        match simple_coords(self.family, self.rank, beta) {
            Some(c) => c.iter().enumerate().all(|(i, &ci)| {
                ci >= 0 && (ci == 0 || self.simple_indices.binary_search(&i).is_ok())
            }),
            None => false,
        }
    }

    /// Moves `beta` into the closed dominant chamber of this subsystem by
    /// simple reflections. Returns the dominant weight and the element `w`
    /// with `w(beta)` equal to it.
    pub fn dominant_rep(&self, beta: &Weight) -> (Weight, WeylElement) {
        let mut cur = beta.clone();
        let mut w = WeylElement::identity(beta.dim());
        'outer: loop {
            for a in &self.simple_roots {
                if cur.dot4(a) < 0 {
                    let s = WeylElement::reflection(a);
                    cur = s.act(&cur);
                    w = s.compose(&w);
                    continue 'outer;
                }
            }
            return (cur, w);
        }
    }

    /// The orbit of `beta` under the Weyl group of this subsystem, sorted.
    pub fn orbit(&self, beta: &Weight) -> Vec<Weight> {
        let reflections: Vec<WeylElement> =
            self.simple_roots.iter().map(WeylElement::reflection).collect();
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut stack = vec![beta.clone()];
        seen.insert(beta.clone());
        while let Some(x) = stack.pop() {
            for s in &reflections {
                let y = s.act(&x);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        let mut out: Vec<Weight> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// All elements of the Weyl group of the subsystem, by closure under the
    /// simple reflections. Sorted canonically.
    pub fn group_elements(&self) -> Vec<WeylElement> {
        let n = self.rank;
        let reflections: Vec<WeylElement> =
            self.simple_roots.iter().map(WeylElement::reflection).collect();
        let id = WeylElement::identity(n);
        let mut seen: HashSet<WeylElement> = HashSet::new();
        seen.insert(id.clone());
        let mut stack = vec![id];
        while let Some(x) = stack.pop() {
            for s in &reflections {
                let y = x.compose(s);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        let mut out: Vec<WeylElement> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// Order of the Weyl group of the subsystem, from its components.
    pub fn group_order(&self) -> u64 {
        let c = levi::components_of(self.family, self.rank, &self.simple_indices);
        c.iter().map(|c| c.weyl_order()).product()
    }
}

/// A classical root datum with ambient coordinates ℤⁿ (or (ℤ/2)ⁿ).
#[derive(Clone)]
pub struct RootDatum {
    family: Family,
    rank: usize,
    system: RootSubsystem,
    group_guard: u64,
    group: OnceLock<Arc<WeylGroup>>,
}

impl fmt::Debug for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootDatum({}{})", self.family, self.rank)
    }
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family && self.rank == other.rank
    }
}

impl Eq for RootDatum {}

impl RootDatum {
    /// Builds the classical root system of the given family and rank. For
    /// `GL` the rank is the size of the matrices (gl_n), so there are n − 1
    /// simple roots.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let unsupported = |reason: &str| Error::UnsupportedSystem {
            family: family.to_string(),
            rank,
            reason: reason.to_string(),
        };
        if rank == 0 {
            return Err(unsupported("rank must be at least 1"));
        }
        if family == Family::D && rank < 2 {
            return Err(unsupported("type D needs rank at least 2"));
        }
        if rank > 8 {
            return Err(unsupported("ranks above 8 are outside the supported range"));
        }
        let n = rank;
        let e = |i: usize, k: i32| Weight::unit(n, i, k);

        let mut simple = Vec::new();
        for i in 0..n.saturating_sub(1) {
            simple.push(&e(i, 1) - &e(i + 1, 1));
        }
        match family {
            Family::GL => {}
            Family::B => simple.push(e(n - 1, 1)),
            Family::C => simple.push(e(n - 1, 2)),
            Family::D => {
                simple.pop();
                simple.push(&e(n - 2, 1) - &e(n - 1, 1));
                simple.push(&e(n - 2, 1) + &e(n - 1, 1));
            }
        }

        let mut positive = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                positive.push(&e(i, 1) - &e(j, 1));
                if family != Family::GL {
                    positive.push(&e(i, 1) + &e(j, 1));
                }
            }
            match family {
                Family::B => positive.push(e(i, 1)),
                Family::C => positive.push(e(i, 2)),
                _ => {}
            }
        }
        positive.sort();

        let rho = half_sum(n, &positive);
        let system = RootSubsystem {
            family,
            rank: n,
            simple_indices: (0..simple.len()).collect(),
            simple_roots: simple,
            positive_roots: positive,
            rho,
        };
        Ok(RootDatum {
            family,
            rank,
            system,
            group_guard: DEFAULT_GROUP_GUARD,
            group: OnceLock::new(),
        })
    }

    /// Same datum with a different bound on |W| for full enumerations.
    pub fn with_group_guard(mut self, guard: u64) -> Self {
        self.group_guard = guard;
        self.group = OnceLock::new();
        self
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.rank
    }

    pub fn group_guard(&self) -> u64 {
        self.group_guard
    }

    pub fn system(&self) -> &RootSubsystem {
        &self.system
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.system.simple_roots
    }

    pub fn num_simple(&self) -> usize {
        self.system.simple_roots.len()
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.system.positive_roots
    }

    pub fn rho(&self) -> &Weight {
        &self.system.rho
    }

    /// Short label such as `C6` or `GL4`.
    pub fn label(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    /// Order of the Weyl group (closed form, no enumeration).
    pub fn weyl_order(&self) -> u64 {
        let n = self.rank as u64;
        let fact: u64 = (1..=n).product();
        match self.family {
            Family::GL => fact,
            Family::B | Family::C => fact << n,
            Family::D => fact << (n - 1),
        }
    }

    /// The enumerated Weyl group, built once and shared.
    pub fn weyl_group(&self) -> Result<Arc<WeylGroup>> {
        let order = self.weyl_order();
        if order > self.group_guard {
            return Err(Error::GroupTooLarge {
                order,
                guard: self.group_guard,
            });
        }
        Ok(self
            .group
            .get_or_init(|| Arc::new(WeylGroup::enumerate_unchecked(self)))
            .clone())
    }

    /// Simple-root coordinates of `beta`, or `None` if `beta` is not in the
    /// root lattice.
    pub fn simple_coords(&self, beta: &Weight) -> Option<SimpleCoords> {
        simple_coords(self.family, self.rank, beta)
    }

    /// Whether `beta` lies in the weight lattice P of this datum.
    pub fn is_integral(&self, beta: &Weight) -> bool {
        if beta.dim() != self.rank {
            return false;
        }
        match self.family {
            Family::GL | Family::C => beta.is_integral(),
            Family::B | Family::D => beta.is_integral() || beta.is_half_integral(),
        }
    }

    pub fn check_weight(&self, beta: &Weight) -> Result<()> {
        if beta.dim() != self.rank {
            return Err(Error::InvalidWeight(format!(
                "{beta} has {} coordinates, {} expects {}",
                beta.dim(),
                self.label(),
                self.rank
            )));
        }
        if !self.is_integral(beta) {
            return Err(Error::InvalidWeight(format!(
                "{beta} is not an integral weight of {}",
                self.label()
            )));
        }
        Ok(())
    }

    pub fn is_dominant(&self, beta: &Weight) -> bool {
        self.system.is_dominant(beta)
    }

    /// Whether `alpha` is a root (positive or negative) of the datum.
    pub fn is_root(&self, alpha: &Weight) -> bool {
        let neg = -alpha;
        self.positive_roots().binary_search(alpha).is_ok()
            || self.positive_roots().binary_search(&neg).is_ok()
    }

    /// Positive roots are exactly the roots whose first nonzero coordinate is
    /// positive, in every family handled here.
    pub fn is_positive_root(&self, alpha: &Weight) -> bool {
        self.positive_roots().binary_search(alpha).is_ok()
    }

    /// The highest root (used to size default λ-boxes).
    pub fn highest_root(&self) -> Weight {
        let n = self.rank;
        match self.family {
            Family::GL if n == 1 => Weight::zero(1),
            Family::GL => &Weight::unit(n, 0, 1) - &Weight::unit(n, n - 1, 1),
            Family::B | Family::D if n >= 2 => &Weight::unit(n, 0, 1) + &Weight::unit(n, 1, 1),
            Family::B => Weight::unit(n, 0, 1),
            Family::C => Weight::unit(n, 0, 2),
            Family::D => unreachable!("D has rank at least 2"),
        }
    }
}

/// The standard (rational) pairing (β, α) as a reduced fraction.
pub fn pairing(beta: &Weight, alpha: &Weight) -> (i64, i64) {
    reduce(beta.dot4(alpha), 4)
}

/// ⟨β, α∨⟩ = 2(β, α)/(α, α). Errors when α = 0 or the pairing is not an
/// integer (β outside the weight lattice).
pub fn coroot_pairing(beta: &Weight, alpha: &Weight) -> Result<i64> {
    let aa = alpha.dot4(alpha);
    if aa == 0 {
        return Err(Error::InvalidWeight("coroot of the zero vector".into()));
    }
    let num = 2 * beta.dot4(alpha);
    if num % aa != 0 {
        return Err(Error::InvalidWeight(format!(
            "pairing of {beta} with the coroot of {alpha} is not integral"
        )));
    }
    Ok(num / aa)
}

fn reduce(num: i64, den: i64) -> (i64, i64) {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    let g = gcd(num, den).max(1);
    (num / g, den / g)
}

pub(crate) fn half_sum(dim: usize, roots: &[Weight]) -> Weight {
    let mut acc = Weight::zero(dim);
    for r in roots {
        acc = &acc + r;
    }
    // doubled coordinates of Σα are 2Σα; halving gives doubled coords of ρ
    Weight(acc.0.iter().map(|&d| d / 2).collect())
}

/// Simple-root coordinates for the classical families, computed from the
/// partial sums of the ε-coordinates.
pub(crate) fn simple_coords(family: Family, n: usize, beta: &Weight) -> Option<SimpleCoords> {
    let d = beta.doubled();
    if d.len() != n {
        return None;
    }
    // doubled partial sums T_k = 2 (β_1 + ... + β_k)
    let mut t: SmallVec<[i64; 8]> = SmallVec::with_capacity(n);
    let mut acc = 0i64;
    for &x in d {
        acc += i64::from(x);
        t.push(acc);
    }
    let half = |v: i64| (v % 2 == 0).then_some(v / 2);
    let quarter = |v: i64| (v % 4 == 0).then_some(v / 4);
    let mut c = SimpleCoords::new();
    match family {
        Family::GL => {
            if t[n - 1] != 0 {
                return None;
            }
            for &tk in &t[..n - 1] {
                c.push(half(tk)?);
            }
        }
        Family::B => {
            for &tk in &t {
                c.push(half(tk)?);
            }
        }
        Family::C => {
            for &tk in &t[..n - 1] {
                c.push(half(tk)?);
            }
            c.push(quarter(t[n - 1])?);
        }
        Family::D => {
            for &tk in &t[..n - 2] {
                c.push(half(tk)?);
            }
            c.push(quarter(2 * t[n - 2] - t[n - 1])?);
            c.push(quarter(t[n - 1])?);
        }
    }
    Some(c)
}

/// A set of roots defining a dominance order.
#[derive(Clone, Copy, Debug)]
pub enum RootSet<'a> {
    /// R₊ of the datum: the order ≤.
    Positive,
    /// R̄₊ of a Levi: the order ⪯.
    Levi(&'a LeviDatum),
    /// w⁻¹(R₊): the order ≤_w.
    Chamber(&'a WeylElement),
    /// An arbitrary subset of R₊; cone membership by bounded search.
    Subset(&'a [Weight]),
}

/// γ ≤ β for the order defined by `set`: β − γ is an ℕ-combination of the
/// roots in `set`.
pub fn dominance_leq(datum: &RootDatum, gamma: &Weight, beta: &Weight, set: RootSet<'_>) -> bool {
    let diff = beta - gamma;
    match set {
        RootSet::Positive => datum.system.in_positive_cone(&diff),
        RootSet::Levi(levi) => levi.subsystem().in_positive_cone(&diff),
        RootSet::Chamber(w) => datum.system.in_positive_cone(&w.act(&diff)),
        RootSet::Subset(roots) => cone_contains(datum, roots, &diff),
    }
}

/// Exact membership of `beta` in the ℕ-cone of `roots` (all of which must be
/// positive roots of `datum`). Depth-first search over roots in a fixed order
/// with memoised failures; the search depth is bounded by the height of
/// `beta`.
pub fn cone_contains(datum: &RootDatum, roots: &[Weight], beta: &Weight) -> bool {
    let Some(target) = datum.simple_coords(beta) else {
        return false;
    };
    let root_coords: Vec<SimpleCoords> = roots
        .iter()
        .map(|r| {
            datum
                .simple_coords(r)
                .filter(|c| c.iter().all(|&x| x >= 0) && c.iter().any(|&x| x > 0))
                .expect("cone_contains expects positive roots")
        })
        .collect();
    let mut dead: HashSet<(usize, SimpleCoords)> = HashSet::new();
    fn go(
        k: usize,
        rest: &SimpleCoords,
        roots: &[SimpleCoords],
        dead: &mut HashSet<(usize, SimpleCoords)>,
    ) -> bool {
        if rest.iter().all(|&x| x == 0) {
            return true;
        }
        if k == roots.len() || rest.iter().any(|&x| x < 0) {
            return false;
        }
        if dead.contains(&(k, rest.clone())) {
            return false;
        }
        // use root k zero or more times, then move on
        let mut cur = rest.clone();
        loop {
            if go(k + 1, &cur, roots, dead) {
                return true;
            }
            for (x, r) in cur.iter_mut().zip(&roots[k]) {
                *x -= r;
            }
            if cur.iter().any(|&x| x < 0) {
                break;
            }
        }
        dead.insert((k, rest.clone()));
        false
    }
    go(0, &target, &root_coords, &mut dead)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight::from_ints(c)
    }

    #[test]
    fn positive_root_counts() {
        for n in 1..=6 {
            assert_eq!(RootDatum::new(Family::GL, n).unwrap().positive_roots().len(), n * (n - 1) / 2);
            assert_eq!(RootDatum::new(Family::B, n).unwrap().positive_roots().len(), n * n);
            assert_eq!(RootDatum::new(Family::C, n).unwrap().positive_roots().len(), n * n);
            if n >= 2 {
                assert_eq!(RootDatum::new(Family::D, n).unwrap().positive_roots().len(), n * (n - 1));
            }
        }
    }

    #[test]
    fn rho_values() {
        assert_eq!(RootDatum::new(Family::GL, 3).unwrap().rho(), &w(&[1, 0, -1]));
        assert_eq!(RootDatum::new(Family::C, 3).unwrap().rho(), &w(&[3, 2, 1]));
        assert_eq!(RootDatum::new(Family::D, 4).unwrap().rho(), &w(&[3, 2, 1, 0]));
        assert_eq!(RootDatum::new(Family::B, 2).unwrap().rho().doubled(), &[3, 1]);
    }

    #[test]
    fn unsupported_ranks() {
        assert!(RootDatum::new(Family::D, 1).is_err());
        assert!(RootDatum::new(Family::C, 0).is_err());
    }

    #[test]
    fn sp12_positive_roots_match_listing() {
        let c6 = RootDatum::new(Family::C, 6).unwrap();
        let mut expected = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                expected.push(&Weight::unit(6, i, 1) - &Weight::unit(6, j, 1));
                expected.push(&Weight::unit(6, i, 1) + &Weight::unit(6, j, 1));
            }
            expected.push(Weight::unit(6, i, 2));
        }
        expected.sort();
        assert_eq!(c6.positive_roots(), expected.as_slice());
        assert_eq!(c6.positive_roots().len(), 36);
    }

    #[test]
    fn positive_roots_have_nonnegative_simple_coords() {
        for (f, n) in [(Family::GL, 5), (Family::B, 4), (Family::C, 4), (Family::D, 5), (Family::D, 2)] {
            let d = RootDatum::new(f, n).unwrap();
            for a in d.positive_roots() {
                let c = d.simple_coords(a).unwrap();
                assert!(c.iter().all(|&x| x >= 0), "{f:?}{n} {a}");
            }
            for (i, a) in d.simple_roots().iter().enumerate() {
                let c = d.simple_coords(a).unwrap();
                for (j, &x) in c.iter().enumerate() {
                    assert_eq!(x, i64::from(i == j));
                }
            }
        }
    }

    #[test]
    fn pairings() {
        let c3 = RootDatum::new(Family::C, 3).unwrap();
        assert_eq!(coroot_pairing(c3.rho(), &w(&[2, 0, 0])).unwrap(), 3);
        assert_eq!(coroot_pairing(&Weight::zero(3), &w(&[1, -1, 0])).unwrap(), 0);
        let a = w(&[1, -1, 0]);
        assert_eq!(coroot_pairing(&a, &a).unwrap(), 2);
        assert!(coroot_pairing(&a, &Weight::zero(3)).is_err());
        assert_eq!(pairing(&w(&[1, 0, 0]), &w(&[2, 0, 0])), (2, 1));
    }

    #[test]
    fn dominance_examples() {
        let gl3 = RootDatum::new(Family::GL, 3).unwrap();
        let zero = Weight::zero(3);
        let g = w(&[1, -1, 0]);
        assert!(!dominance_leq(&gl3, &g, &zero, RootSet::Positive));
        assert!(!dominance_leq(&gl3, &zero, &g, RootSet::Positive) || gl3.simple_coords(&g).is_some());
        assert!(dominance_leq(&gl3, &zero, &w(&[1, 0, -1]), RootSet::Positive));
        assert!(dominance_leq(&gl3, &g, &g, RootSet::Positive));
        let levi = LeviDatum::new(Arc::new(gl3.clone()), &[1]).unwrap();
        let mu = w(&[2, 0, 1]);
        let up = &mu + &w(&[1, -1, 0]);
        assert!(dominance_leq(&gl3, &mu, &up, RootSet::Levi(&levi)));
        assert!(!dominance_leq(&gl3, &mu, &(&mu + &w(&[0, 1, -1])), RootSet::Levi(&levi)));
    }

    #[test]
    fn cone_search_matches_simple_coordinate_test() {
        let c3 = RootDatum::new(Family::C, 3).unwrap();
        let roots = c3.positive_roots().to_vec();
        for a in -2..=2 {
            for b in -2..=2 {
                for c in -2..=2 {
                    let beta = w(&[a, b, c]);
                    assert_eq!(
                        cone_contains(&c3, &roots, &beta),
                        c3.system().in_positive_cone(&beta),
                        "{beta}"
                    );
                }
            }
        }
    }
}
