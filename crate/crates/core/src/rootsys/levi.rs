use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use super::{half_sum, Family, RootDatum, RootSubsystem, Weight};
use crate::error::{Error, Result};
use crate::weylgrp::WeylElement;

/// Simple type of a component of a Levi subalgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ComponentKind {
    Gl,
    B,
    C,
    D,
}

/// One block g_k of ḡ = g₁ ⊕ … ⊕ g_r, living on a set of ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub kind: ComponentKind,
    /// 0-based ambient coordinates of the block, increasing.
    pub coords: Vec<usize>,
    /// 0-based indices of the simple roots of the block.
    pub simple_indices: Vec<usize>,
    /// A type-A block of a type-D datum that uses εn−1 + εn: its last
    /// coordinate enters with a minus sign.
    pub twisted: bool,
}

impl Component {
    pub fn size(&self) -> usize {
        self.coords.len()
    }

    pub fn weyl_order(&self) -> u64 {
        let k = self.size() as u64;
        let fact: u64 = (1..=k).product();
        match self.kind {
            ComponentKind::Gl => fact,
            ComponentKind::B | ComponentKind::C => fact << k,
            ComponentKind::D => fact << (k - 1),
        }
    }

    pub fn name(&self) -> String {
        let k = self.size();
        match self.kind {
            ComponentKind::Gl => format!("gl{k}"),
            ComponentKind::B => format!("so{}", 2 * k + 1),
            ComponentKind::C => format!("sp{}", 2 * k),
            ComponentKind::D => format!("so{}", 2 * k),
        }
    }
}

/// Splits the ambient coordinates into the blocks of the Levi spanned by
/// `sbar` (0-based simple-root indices, sorted).
pub(crate) fn components_of(family: Family, n: usize, sbar: &[usize]) -> Vec<Component> {
    let has = |j: usize| sbar.binary_search(&j).is_ok();
    // union of consecutive coordinates joined by εj − εj+1 type roots
    let mut block_of: Vec<usize> = (0..n).collect();
    let last_a = match family {
        Family::GL => n.saturating_sub(1),
        Family::B | Family::C => n - 1,
        Family::D => n - 1,
    };
    for j in 0..last_a {
        if has(j) {
            block_of[j + 1] = block_of[j];
        }
    }
    let d_twist = family == Family::D && has(n - 1);
    if d_twist && !has(n - 2) {
        // εn−1 + εn alone joins the last two coordinates
        block_of[n - 1] = block_of[n - 2];
    }

    let mut comps: Vec<Component> = Vec::new();
    for i in 0..n {
        if i > 0 && block_of[i] == block_of[i - 1] {
            comps.last_mut().unwrap().coords.push(i);
        } else {
            comps.push(Component {
                kind: ComponentKind::Gl,
                coords: vec![i],
                simple_indices: Vec::new(),
                twisted: false,
            });
        }
    }
    for c in &mut comps {
        let first = c.coords[0];
        let last = *c.coords.last().unwrap();
        c.simple_indices = sbar
            .iter()
            .copied()
            .filter(|&j| {
                let (lo, hi) = simple_support(family, n, j);
                lo >= first && hi <= last
            })
            .collect();
        if last == n - 1 {
            match family {
                Family::B if has(n - 1) => c.kind = ComponentKind::B,
                Family::C if has(n - 1) => c.kind = ComponentKind::C,
                Family::D if has(n - 1) && has(n - 2) => c.kind = ComponentKind::D,
                Family::D if has(n - 1) => c.twisted = true,
                _ => {}
            }
        }
    }
    comps
}

/// Smallest and largest ambient coordinate touched by simple root `j`.
fn simple_support(family: Family, n: usize, j: usize) -> (usize, usize) {
    match family {
        Family::B | Family::C if j == n - 1 => (n - 1, n - 1),
        Family::D if j == n - 1 => (n - 2, n - 1),
        _ => (j, j + 1),
    }
}

/// A Levi subalgebra ḡ ⊆ g, given by the set S̄ of simple roots it keeps.
#[derive(Clone)]
pub struct LeviDatum {
    parent: Arc<RootDatum>,
    sbar: Vec<usize>,
    sub: RootSubsystem,
    components: Vec<Component>,
    wbar: OnceLock<Arc<Vec<WeylElement>>>,
}

impl fmt::Debug for LeviDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LeviDatum({} ⊃ {})", self.parent.label(), self.describe())
    }
}

impl LeviDatum {
    /// `sbar` lists the retained simple roots, numbered from 1.
    pub fn new(parent: Arc<RootDatum>, sbar: &[usize]) -> Result<Self> {
        let max = parent.num_simple();
        let mut idx: Vec<usize> = Vec::with_capacity(sbar.len());
        for &i in sbar {
            if i == 0 || i > max {
                return Err(Error::IndexOutOfRange { index: i, max });
            }
            idx.push(i - 1);
        }
        idx.sort_unstable();
        idx.dedup();
        Ok(Self::from_zero_based(parent, idx))
    }

    /// The Levi obtained by removing the listed simple roots (1-based).
    pub fn removing(parent: Arc<RootDatum>, removed: &[usize]) -> Result<Self> {
        let max = parent.num_simple();
        for &i in removed {
            if i == 0 || i > max {
                return Err(Error::IndexOutOfRange { index: i, max });
            }
        }
        let keep: Vec<usize> = (1..=max).filter(|i| !removed.contains(i)).collect();
        Self::new(parent, &keep)
    }

    fn from_zero_based(parent: Arc<RootDatum>, sbar: Vec<usize>) -> Self {
        let family = parent.family();
        let n = parent.rank();
        let simple_roots: Vec<Weight> = sbar.iter().map(|&j| parent.simple_roots()[j].clone()).collect();
        let probe = RootSubsystem {
            family,
            rank: n,
            simple_indices: sbar.clone(),
            simple_roots: simple_roots.clone(),
            positive_roots: Vec::new(),
            rho: Weight::zero(n),
        };
        let rbar: Vec<Weight> = parent
            .positive_roots()
            .iter()
            .filter(|a| probe.in_positive_cone(a))
            .cloned()
            .collect();
        let rho_bar = half_sum(n, &rbar);
        let sub = RootSubsystem {
            family,
            rank: n,
            simple_indices: sbar.clone(),
            simple_roots,
            positive_roots: rbar,
            rho: rho_bar,
        };
        let components = components_of(family, n, &sbar);
        LeviDatum {
            parent,
            sbar,
            sub,
            components,
            wbar: OnceLock::new(),
        }
    }

    pub fn parent(&self) -> &RootDatum {
        &self.parent
    }

    pub fn parent_arc(&self) -> &Arc<RootDatum> {
        &self.parent
    }

    /// Retained simple roots, numbered from 1.
    pub fn sbar(&self) -> Vec<usize> {
        self.sbar.iter().map(|i| i + 1).collect()
    }

    pub fn subsystem(&self) -> &RootSubsystem {
        &self.sub
    }

    /// R̄₊.
    pub fn rbar_plus(&self) -> &[Weight] {
        self.sub.positive_roots()
    }

    /// ρ̄.
    pub fn rho_bar(&self) -> &Weight {
        self.sub.rho()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// ḡ-dominance of β (nonnegative pairing with every coroot of S̄).
    pub fn is_dominant(&self, beta: &Weight) -> bool {
        self.sub.is_dominant(beta)
    }

    /// |W̄|, from the component types.
    pub fn wbar_order(&self) -> u64 {
        self.components.iter().map(Component::weyl_order).product()
    }

    /// The elements of W̄, enumerated once by closure.
    pub fn wbar_elements(&self) -> Arc<Vec<WeylElement>> {
        self.wbar
            .get_or_init(|| Arc::new(self.sub.group_elements()))
            .clone()
    }

    /// ε(w̄₀) = (−1)^{|R̄₊|}.
    pub fn sign_w0bar(&self) -> i64 {
        if self.rbar_plus().len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// ḡ written as a sum of blocks, e.g. `gl3+sp6`.
    pub fn describe(&self) -> String {
        self.components
            .iter()
            .map(Component::name)
            .collect::<Vec<_>>()
            .join("+")
    }

    /// True when ḡ = gl_n embedded in B_n, C_n or D_n along the first n − 1
    /// simple roots (the polarisation setting).
    pub fn is_standard_gl_levi(&self) -> bool {
        let n = self.parent.rank();
        self.parent.family() != Family::GL && self.sbar == (0..n - 1).collect::<Vec<_>>()
    }

    pub fn descriptor(&self) -> SystemDescriptor {
        SystemDescriptor {
            family: self.parent.family(),
            rank: self.parent.rank(),
            levi: self.sbar(),
        }
    }
}

/// Root-system descriptor as it appears in configuration files:
/// `{"family": "C", "rank": 6, "levi": [1,2,4,5,6]}` (1-based indices of the
/// simple roots kept in S̄).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDescriptor {
    pub family: Family,
    pub rank: usize,
    #[serde(default)]
    pub levi: Vec<usize>,
}

impl SystemDescriptor {
    pub fn build(&self) -> Result<LeviDatum> {
        let datum = Arc::new(RootDatum::new(self.family, self.rank)?);
        LeviDatum::new(datum, &self.levi)
    }

    pub fn build_with_guard(&self, guard: u64) -> Result<LeviDatum> {
        let datum = Arc::new(RootDatum::new(self.family, self.rank)?.with_group_guard(guard));
        LeviDatum::new(datum, &self.levi)
    }
}

/// Parses `C:6` (family and rank). The Levi part is given separately.
impl FromStr for SystemDescriptor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (fam, rank) = s
            .split_once(':')
            .ok_or_else(|| Error::Config(format!("expected FAMILY:RANK, got {s:?}")))?;
        let rank = rank
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("bad rank in {s:?}")))?;
        Ok(SystemDescriptor {
            family: fam.parse()?,
            rank,
            levi: Vec::new(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(f: Family, n: usize) -> Arc<RootDatum> {
        Arc::new(RootDatum::new(f, n).unwrap())
    }

    #[test]
    fn sp12_levi_gl3_sp6() {
        let levi = LeviDatum::new(datum(Family::C, 6), &[1, 2, 4, 5, 6]).unwrap();
        assert_eq!(levi.describe(), "gl3+sp6");
        assert_eq!(levi.rbar_plus().len(), 12);
        assert_eq!(levi.rho_bar(), &Weight::from_ints(&[1, 0, -1, 3, 2, 1]));
        assert_eq!(levi.wbar_order(), 288);
        let e = |i, k| Weight::unit(6, i, k);
        let mut listed = vec![
            &e(0, 1) - &e(1, 1),
            &e(0, 1) - &e(2, 1),
            &e(1, 1) - &e(2, 1),
        ];
        for (i, j) in [(3, 4), (3, 5), (4, 5)] {
            listed.push(&e(i, 1) - &e(j, 1));
            listed.push(&e(i, 1) + &e(j, 1));
        }
        for i in 3..6 {
            listed.push(e(i, 2));
        }
        listed.sort();
        assert_eq!(levi.rbar_plus(), listed.as_slice());
    }

    #[test]
    fn gl6_levi_gl4_gl2() {
        let levi = LeviDatum::removing(datum(Family::GL, 6), &[4]).unwrap();
        assert_eq!(levi.describe(), "gl4+gl2");
        assert_eq!(levi.rho_bar().scaled(2), Weight::from_ints(&[3, 1, -1, -3, 1, -1]));
        assert_eq!(levi.sign_w0bar(), -1);
    }

    #[test]
    fn empty_levi_is_cartan() {
        let levi = LeviDatum::new(datum(Family::B, 3), &[]).unwrap();
        assert!(levi.rbar_plus().is_empty());
        assert_eq!(levi.describe(), "gl1+gl1+gl1");
        assert_eq!(levi.wbar_order(), 1);
        assert!(levi.rho_bar().is_zero());
    }

    #[test]
    fn index_bounds() {
        assert!(matches!(
            LeviDatum::new(datum(Family::GL, 3), &[3]),
            Err(Error::IndexOutOfRange { index: 3, max: 2 })
        ));
        assert!(LeviDatum::new(datum(Family::GL, 3), &[0]).is_err());
    }

    #[test]
    fn type_d_components() {
        let d4 = datum(Family::D, 4);
        assert_eq!(LeviDatum::new(d4.clone(), &[1, 2, 3]).unwrap().describe(), "gl4");
        let twisted = LeviDatum::new(d4.clone(), &[1, 2, 4]).unwrap();
        assert_eq!(twisted.describe(), "gl4");
        assert!(twisted.components()[0].twisted);
        assert_eq!(LeviDatum::new(d4.clone(), &[2, 3, 4]).unwrap().describe(), "gl1+so6");
        assert_eq!(LeviDatum::new(d4, &[3, 4]).unwrap().describe(), "gl1+gl1+so4");
        let b3 = datum(Family::B, 3);
        assert_eq!(LeviDatum::new(b3, &[1, 3]).unwrap().describe(), "gl2+so3");
    }

    #[test]
    fn wbar_enumeration_matches_order() {
        for (f, n, s) in [
            (Family::C, 6, vec![1, 2, 4, 5, 6]),
            (Family::D, 4, vec![1, 2, 4]),
            (Family::D, 4, vec![3, 4]),
            (Family::B, 3, vec![1, 3]),
            (Family::GL, 6, vec![1, 2, 3, 5]),
        ] {
            let levi = LeviDatum::new(datum(f, n), &s).unwrap();
            assert_eq!(levi.wbar_elements().len() as u64, levi.wbar_order(), "{levi:?}");
        }
    }

    #[test]
    fn levi_roots_are_closed_in_span() {
        // Ē ∩ R₊ = R̄₊, checked by rational span membership via simple coords
        for (f, n, s) in [(Family::C, 4, vec![1, 3, 4]), (Family::D, 5, vec![2, 4, 5]), (Family::B, 4, vec![1, 2, 4])] {
            let d = datum(f, n);
            let levi = LeviDatum::new(d.clone(), &s).unwrap();
            let sbar0: Vec<usize> = s.iter().map(|i| i - 1).collect();
            for a in d.positive_roots() {
                let c = d.simple_coords(a).unwrap();
                let in_span = c.iter().enumerate().all(|(i, &x)| x == 0 || sbar0.contains(&i));
                assert_eq!(in_span, levi.rbar_plus().contains(a));
            }
        }
    }

    #[test]
    fn descriptor_json() {
        let d: SystemDescriptor = serde_json::from_str(r#"{"family":"C","rank":6,"levi":[1,2,4,5,6]}"#).unwrap();
        assert_eq!(d.build().unwrap().describe(), "gl3+sp6");
        assert!(serde_json::from_str::<SystemDescriptor>(r#"{"family":"C","rank":6,"extra":1}"#).is_err());
        let s: SystemDescriptor = "GL:4".parse().unwrap();
        assert_eq!((s.family, s.rank), (Family::GL, 4));
    }
}
