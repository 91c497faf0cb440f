//! Weyl groups of the classical families as signed permutations.
//!
//! An element `w` sends the basis vector εi to `signs[i] · ε_{perm[i]}`, so it
//! acts on a weight by moving coordinate `i` to position `perm[i]` and
//! multiplying it by `signs[i]`. For `GL` every sign is +1; for `D` the
//! product of the signs is +1.

use std::collections::HashSet;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::rootsys::{Family, LeviDatum, RootDatum, Weight};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    perm: SmallVec<[u8; 8]>,
    signs: SmallVec<[i8; 8]>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement {
            perm: (0..n as u8).collect(),
            signs: smallvec::smallvec![1; n],
        }
    }

    /// Builds an element from 0-based images and signs. Fails if `perm` is
    /// not a permutation or a sign is not ±1.
    pub fn new(perm: &[usize], signs: &[i8]) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n {
            return Err(Error::SizeMismatch("perm and signs differ in length".into()));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidWeight(format!("{perm:?} is not a permutation")));
            }
        }
        if signs.iter().any(|s| s.abs() != 1) {
            return Err(Error::InvalidWeight("signs must be ±1".into()));
        }
        Ok(WeylElement {
            perm: perm.iter().map(|&p| p as u8).collect(),
            signs: signs.iter().copied().collect(),
        })
    }

    /// The reflection s_α for a root α of a classical datum. Every such
    /// reflection is a signed permutation.
    pub fn reflection(alpha: &Weight) -> Self {
        let n = alpha.dim();
        let a = alpha.doubled();
        let norm: i64 = alpha.dot4(alpha);
        let mut perm = SmallVec::new();
        let mut signs = SmallVec::new();
        for k in 0..n {
            // s_α(e_k) = e_k − 2 a_k a / |a|², in doubled coordinates
            let ak = i64::from(a[k]);
            let mut image: SmallVec<[i64; 8]> = (0..n).map(|j| if j == k { norm } else { 0 }).collect();
            for (j, x) in image.iter_mut().enumerate() {
                *x -= 2 * ak * i64::from(a[j]);
            }
            let (pos, val) = image
                .iter()
                .enumerate()
                .find(|(_, &v)| v != 0)
                .map(|(j, &v)| (j, v))
                .expect("reflection image is nonzero");
            debug_assert_eq!(val.abs(), norm, "not a signed permutation");
            perm.push(pos as u8);
            signs.push(if val > 0 { 1 } else { -1 });
        }
        WeylElement { perm, signs }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    /// 0-based images of the coordinates.
    pub fn perm(&self) -> impl Iterator<Item = usize> + '_ {
        self.perm.iter().map(|&p| p as usize)
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p as usize == i) && self.signs.iter().all(|&s| s == 1)
    }

    pub fn act(&self, beta: &Weight) -> Weight {
        let src = beta.doubled();
        let mut out = Weight::zero(src.len());
        for (i, &x) in src.iter().enumerate() {
            out.0[self.perm[i] as usize] = i32::from(self.signs[i]) * x;
        }
        out
    }

    /// The dot action w∘β = w(β + ρ) − ρ.
    pub fn dot_act(&self, beta: &Weight, rho: &Weight) -> Weight {
        &self.act(&(beta + rho)) - rho
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let perm = other.perm.iter().map(|&p| self.perm[p as usize]).collect();
        let signs = other
            .perm
            .iter()
            .zip(&other.signs)
            .map(|(&p, &s)| s * self.signs[p as usize])
            .collect();
        WeylElement { perm, signs }
    }

    pub fn inverse(&self) -> WeylElement {
        let n = self.rank();
        let mut perm: SmallVec<[u8; 8]> = smallvec::smallvec![0; n];
        let mut signs: SmallVec<[i8; 8]> = smallvec::smallvec![1; n];
        for i in 0..n {
            let p = self.perm[i] as usize;
            perm[p] = i as u8;
            signs[p] = self.signs[i];
        }
        WeylElement { perm, signs }
    }

    /// ε(w), the determinant.
    pub fn sign(&self) -> i8 {
        let n = self.rank();
        let mut visited = [false; 8];
        let mut parity = 0usize;
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !visited[j] {
                visited[j] = true;
                j = self.perm[j] as usize;
                len += 1;
            }
            parity += len - 1;
        }
        let flips = self.signs.iter().filter(|&&s| s < 0).count();
        if (parity + flips).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Whether this signed permutation lies in the Weyl group of `family`.
    pub fn belongs_to(&self, family: Family) -> bool {
        let flips = self.signs.iter().filter(|&&s| s < 0).count();
        match family {
            Family::GL => flips == 0,
            Family::B | Family::C => true,
            Family::D => flips % 2 == 0,
        }
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rank() {
            if i > 0 {
                write!(f, " ")?;
            }
            let s = if self.signs[i] < 0 { "-" } else { "" };
            write!(f, "{}→{}{}", i + 1, s, self.perm[i] + 1)?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WeylElementRepr {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

/// `{"perm":[...], "signs":[...]}` with 1-based images.
impl Serialize for WeylElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        WeylElementRepr {
            perm: self.perm.iter().map(|&p| p as usize + 1).collect(),
            signs: self.signs.to_vec(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WeylElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let r = WeylElementRepr::deserialize(deserializer)?;
        let perm: Vec<usize> = r
            .perm
            .iter()
            .map(|&p| p.checked_sub(1).ok_or_else(|| D::Error::custom("perm entries are 1-based")))
            .collect::<std::result::Result<_, _>>()?;
        WeylElement::new(&perm, &r.signs).map_err(D::Error::custom)
    }
}

/// Number of sign patterns per permutation for the family.
fn sign_patterns(family: Family, n: usize) -> u64 {
    match family {
        Family::GL => 1,
        Family::B | Family::C => 1 << n,
        Family::D => 1 << (n - 1),
    }
}

/// Decodes the `index`-th element in the canonical enumeration order:
/// permutations in lexicographic order of their image lists, and for each
/// permutation the sign patterns in binary order.
fn decode(family: Family, n: usize, index: u64) -> WeylElement {
    let per = sign_patterns(family, n);
    let mut perm_idx = index / per;
    let sign_idx = index % per;
    let mut pool: SmallVec<[u8; 8]> = (0..n as u8).collect();
    let mut fact: u64 = (1..n as u64).product();
    let mut perm = SmallVec::new();
    for k in (0..n).rev() {
        let q = (perm_idx / fact.max(1)) as usize;
        perm_idx %= fact.max(1);
        perm.push(pool.remove(q));
        if k > 0 {
            fact /= k as u64;
        }
    }
    let mut signs: SmallVec<[i8; 8]> = smallvec::smallvec![1; n];
    match family {
        Family::GL => {}
        Family::B | Family::C => {
            for (i, s) in signs.iter_mut().enumerate() {
                if sign_idx >> (n - 1 - i) & 1 == 1 {
                    *s = -1;
                }
            }
        }
        Family::D => {
            let mut neg = 0;
            for i in 0..n - 1 {
                if sign_idx >> (n - 2 - i) & 1 == 1 {
                    signs[i] = -1;
                    neg += 1;
                }
            }
            if neg % 2 == 1 {
                signs[n - 1] = -1;
            }
        }
    }
    WeylElement { perm, signs }
}

/// Deterministic stream over W. Splits into independent index ranges for
/// parallel consumers via [`WeylGroupIter::range`].
#[derive(Clone, Debug)]
pub struct WeylGroupIter {
    family: Family,
    n: usize,
    next: u64,
    end: u64,
}

impl WeylGroupIter {
    pub fn range(datum: &RootDatum, start: u64, end: u64) -> Self {
        WeylGroupIter {
            family: datum.family(),
            n: datum.rank(),
            next: start,
            end: end.min(datum.weyl_order()),
        }
    }
}

impl Iterator for WeylGroupIter {
    type Item = (WeylElement, i8);
    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.end {
            return None;
        }
        let w = decode(self.family, self.n, self.next);
        self.next += 1;
        let s = w.sign();
        Some((w, s))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = (self.end - self.next) as usize;
        (r, Some(r))
    }
}

/// Streams every element of W with its sign, after checking the group guard.
pub fn enumerate_group(datum: &RootDatum) -> Result<WeylGroupIter> {
    let order = datum.weyl_order();
    if order > datum.group_guard() {
        return Err(Error::GroupTooLarge {
            order,
            guard: datum.group_guard(),
        });
    }
    Ok(WeylGroupIter::range(datum, 0, order))
}

/// The fully enumerated Weyl group of a datum.
#[derive(Debug)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    signs: Vec<i8>,
}

impl WeylGroup {
    pub(crate) fn enumerate_unchecked(datum: &RootDatum) -> Self {
        let (elements, signs) = WeylGroupIter::range(datum, 0, datum.weyl_order()).unzip();
        WeylGroup { elements, signs }
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WeylElement, i8)> {
        self.elements.iter().zip(self.signs.iter().copied())
    }
}

/// The dominant weight λ in the W-orbit of β together with one `w` such that
/// `w(β) = λ`. Only λ is canonical; `w` is the element produced by a stable
/// sort of the coordinates.
pub fn dominant_representative(datum: &RootDatum, beta: &Weight) -> (WeylElement, Weight) {
    let n = beta.dim();
    let d = beta.doubled();
    let signed = datum.family() != Family::GL;
    let key = |i: usize| if signed { d[i].abs() } else { d[i] };
    let mut order: SmallVec<[usize; 8]> = (0..n).collect();
    order.sort_by(|&a, &b| key(b).cmp(&key(a)).then(a.cmp(&b)));

    let mut perm: SmallVec<[u8; 8]> = smallvec::smallvec![0; n];
    let mut signs: SmallVec<[i8; 8]> = smallvec::smallvec![1; n];
    for (pos, &i) in order.iter().enumerate() {
        perm[i] = pos as u8;
        if signed && d[i] < 0 {
            signs[i] = -1;
        }
    }
    if datum.family() == Family::D {
        let flips = signs.iter().filter(|&&s| s < 0).count();
        if flips % 2 == 1 {
            // flip a zero coordinate if there is one, else leave the last
            // sorted coordinate with the odd sign
            let last = order[n - 1];
            signs[last] = -signs[last];
        }
    }
    let w = WeylElement { perm, signs };
    let lambda = w.act(beta);
    debug_assert!(datum.is_dominant(&lambda), "{beta} -> {lambda}");
    (w, lambda)
}

/// Dominant representative only.
pub fn dominant_weight(datum: &RootDatum, beta: &Weight) -> Weight {
    dominant_representative(datum, beta).1
}

/// Stabilizer order of a weight in W, by counting.
pub fn stabilizer_order(datum: &RootDatum, beta: &Weight) -> u64 {
    let orbit = orbit_size(datum, beta);
    datum.weyl_order() / orbit
}

/// |W·β| computed combinatorially from the multiset of coordinates.
pub fn orbit_size(datum: &RootDatum, beta: &Weight) -> u64 {
    let n = beta.dim() as u64;
    let signed = datum.family() != Family::GL;
    let mut vals: Vec<i32> = beta
        .doubled()
        .iter()
        .map(|&x| if signed { x.abs() } else { x })
        .collect();
    vals.sort_unstable();
    let fact = |k: u64| -> u64 { (1..=k).product() };
    let mut count = fact(n);
    let mut i = 0;
    while i < vals.len() {
        let mut j = i;
        while j < vals.len() && vals[j] == vals[i] {
            j += 1;
        }
        count /= fact((j - i) as u64);
        i = j;
    }
    let nonzero = vals.iter().filter(|&&v| v != 0).count() as u32;
    match datum.family() {
        Family::GL => count,
        Family::B | Family::C => count << nonzero,
        Family::D => {
            if nonzero as u64 == n {
                count << (nonzero - 1)
            } else {
                count << nonzero
            }
        }
    }
}

/// The orbit W·β, sorted canonically. Generated directly from the signed
/// permutations of the coordinate multiset.
pub fn orbit(datum: &RootDatum, beta: &Weight) -> Vec<Weight> {
    datum.system().orbit(beta)
}

/// Decomposes `w = u · w̄` with `u ∈ U` and `w̄ ∈ W̄`, by right-multiplying
/// with simple reflections of S̄ while some simple root of S̄ is sent to a
/// negative root.
pub fn coset_decompose(levi: &LeviDatum, w: &WeylElement) -> (WeylElement, WeylElement) {
    let datum = levi.parent();
    let mut u = w.clone();
    let mut wbar = WeylElement::identity(w.rank());
    'outer: loop {
        for a in levi.subsystem().simple_roots() {
            if !datum.is_positive_root(&u.act(a)) {
                let s = WeylElement::reflection(a);
                u = u.compose(&s);
                wbar = s.compose(&wbar);
                continue 'outer;
            }
        }
        return (u, wbar);
    }
}

/// The set U = {u ∈ W : u(R̄₊) ⊆ R₊} of minimal-length coset representatives.
#[derive(Clone, Debug)]
pub struct Transversal {
    pub elements: Vec<WeylElement>,
}

impl Transversal {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        self.elements.binary_search(w).is_ok()
    }
}

/// u(R̄₊) ⊆ R₊, checked on the simple roots of S̄.
pub fn in_transversal(levi: &LeviDatum, u: &WeylElement) -> bool {
    let datum = levi.parent();
    levi.subsystem()
        .simple_roots()
        .iter()
        .all(|a| datum.is_positive_root(&u.act(a)))
}

pub fn transversal_u(levi: &LeviDatum) -> Result<Transversal> {
    let group = levi.parent().weyl_group()?;
    let mut elements: Vec<WeylElement> = group
        .elements()
        .iter()
        .filter(|u| in_transversal(levi, u))
        .cloned()
        .collect();
    elements.sort();
    debug_assert_eq!(elements.len() as u64 * levi.wbar_order(), levi.parent().weyl_order());
    Ok(Transversal { elements })
}

/// The subgroup {u ∈ W : u(R̄₊) = R̄₊}: the Dynkin diagram automorphisms of ḡ
/// realised inside W. Each returned element fixes ρ̄.
pub fn diagram_automorphisms(levi: &LeviDatum) -> Result<Vec<WeylElement>> {
    let group = levi.parent().weyl_group()?;
    let rbar = levi.rbar_plus();
    let mut out = Vec::new();
    for u in group.elements() {
        let preserves = levi
            .subsystem()
            .simple_roots()
            .iter()
            .all(|a| rbar.binary_search(&u.act(a)).is_ok());
        if preserves {
            if &u.act(levi.rho_bar()) != levi.rho_bar() {
                return Err(Error::Invariant(format!(
                    "automorphism {u:?} does not fix rho_bar"
                )));
            }
            out.push(u.clone());
        }
    }
    out.sort();
    Ok(out)
}

/// Straightening of a virtual character s_β: returns `None` when β + ρ lies
/// on a wall, otherwise `(ε(w), λ)` with λ = w∘β dominant and s_β = ε(w) s_λ.
pub fn straighten(datum: &RootDatum, beta: &Weight) -> Option<(i8, Weight)> {
    let shifted = beta + datum.rho();
    if datum.positive_roots().iter().any(|a| shifted.dot4(a) == 0) {
        return None;
    }
    let (w, top) = dominant_representative(datum, &shifted);
    Some((w.sign(), &top - datum.rho()))
}

/// Stabilizer of a dominant weight: the parabolic subgroup generated by the
/// simple reflections fixing it.
pub fn dominant_stabilizer(datum: &RootDatum, lambda: &Weight) -> Vec<WeylElement> {
    let gens: Vec<WeylElement> = datum
        .simple_roots()
        .iter()
        .filter(|a| lambda.dot4(a) == 0)
        .map(WeylElement::reflection)
        .collect();
    let id = WeylElement::identity(datum.rank());
    let mut seen: HashSet<WeylElement> = HashSet::new();
    seen.insert(id.clone());
    let mut stack = vec![id];
    while let Some(x) = stack.pop() {
        for s in &gens {
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
