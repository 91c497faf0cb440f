//! Sparse integer combinations of formal exponentials e^β, Kostant partition
//! functions and characters.

mod character;
mod partition;

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rootsys::Weight;
use crate::weylgrp::WeylElement;

pub use character::{
    alternating_sum, dominant_character, dominant_weights, kostant_multiplicity, kostka_multiplicity,
    nabla_bar, nabla_bar_alternating, nabla_bar_product, subsystem_character, symmetrize, weyl_character,
    weyl_dimension, DominantCharacter, DEFAULT_CHARACTER_BUDGET,
};
pub use partition::PartitionTable;

/// Σ c_β e^β with nonzero integer coefficients, stored sorted by the
/// canonical weight order.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct WeightPolynomial {
    terms: Vec<(Weight, i64)>,
}

impl WeightPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(beta: Weight, c: i64) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            WeightPolynomial { terms: vec![(beta, c)] }
        }
    }

    /// Collects arbitrary terms, merging repeated weights and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Weight, i64)>) -> Self {
        let mut v: Vec<(Weight, i64)> = terms.into_iter().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Weight, i64)> = Vec::with_capacity(v.len());
        for (w, c) in v {
            match out.last_mut() {
                Some((lw, lc)) if *lw == w => *lc += c,
                _ => out.push((w, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        WeightPolynomial { terms: out }
    }

    pub fn from_map(map: BTreeMap<Weight, i64>) -> Self {
        WeightPolynomial {
            terms: map.into_iter().filter(|t| t.1 != 0).collect(),
        }
    }

    pub fn terms(&self) -> &[(Weight, i64)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, beta: &Weight) -> i64 {
        match self.terms.binary_search_by(|t| t.0.cmp(beta)) {
            Ok(i) => self.terms[i].1,
            Err(_) => 0,
        }
    }

    /// Sum of the coefficients (the value at e^β = 1).
    pub fn augmentation(&self) -> i64 {
        self.terms.iter().map(|t| t.1).sum()
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        WeightPolynomial {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    /// e^γ · self.
    pub fn shift(&self, gamma: &Weight) -> Self {
        // translation preserves the lexicographic order
        WeightPolynomial {
            terms: self.terms.iter().map(|(w, c)| (w + gamma, *c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        merge(&self.terms, &other.terms, 1)
    }

    pub fn sub(&self, other: &Self) -> Self {
        merge(&self.terms, &other.terms, -1)
    }

    /// Product as a balanced merge of the sorted runs c_β e^β · other.
    pub fn mul(&self, other: &Self) -> Self {
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut runs: Vec<WeightPolynomial> = small
            .terms
            .iter()
            .map(|(w, c)| big.shift(w).scale(*c))
            .collect();
        if runs.is_empty() {
            return Self::zero();
        }
        while runs.len() > 1 {
            let mut next = Vec::with_capacity(runs.len().div_ceil(2));
            let mut it = runs.into_iter();
            while let Some(a) = it.next() {
                match it.next() {
                    Some(b) => next.push(a.add(&b)),
                    None => next.push(a),
                }
            }
            runs = next;
        }
        runs.pop().unwrap()
    }

    /// w · Σ c_β e^β = Σ c_β e^{w(β)}.
    pub fn act(&self, w: &WeylElement) -> Self {
        let mut terms: Vec<(Weight, i64)> = self.terms.iter().map(|(b, c)| (w.act(b), *c)).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        WeightPolynomial { terms }
    }

    pub fn to_map(&self) -> BTreeMap<Weight, i64> {
        self.terms.iter().cloned().collect()
    }
}

fn merge(a: &[(Weight, i64)], b: &[(Weight, i64)], sign: i64) -> WeightPolynomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((b[j].0.clone(), sign * b[j].1));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = a[i].1 + sign * b[j].1;
                if c != 0 {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(w, c)| (w.clone(), sign * c)));
    WeightPolynomial { terms: out }
}

impl fmt::Debug for WeightPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·e^{w}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Term {
    w: Weight,
    c: i64,
}

/// `[{"w": [...], "c": n}, ...]` in canonical order.
impl Serialize for WeightPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (w, c) in &self.terms {
            seq.serialize_element(&Term { w: w.clone(), c: *c })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for WeightPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms: Vec<Term> = Vec::deserialize(deserializer)?;
        if terms.iter().any(|t| t.c == 0) {
            return Err(D::Error::custom("zero coefficient in weight polynomial"));
        }
        Ok(WeightPolynomial::from_terms(terms.into_iter().map(|t| (t.w, t.c))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight::from_ints(c)
    }

    #[test]
    fn arithmetic() {
        let a = WeightPolynomial::from_terms([(w(&[1, 0]), 1), (w(&[0, 1]), 1)]);
        let b = WeightPolynomial::from_terms([(w(&[1, 0]), 1), (w(&[0, 1]), -1)]);
        let p = a.mul(&b);
        assert_eq!(p, WeightPolynomial::from_terms([(w(&[2, 0]), 1), (w(&[0, 2]), -1)]));
        assert!(a.sub(&a).is_empty());
        assert_eq!(a.add(&b).coeff(&w(&[1, 0])), 2);
        assert_eq!(a.add(&b).len(), 1);
        assert_eq!(WeightPolynomial::monomial(w(&[1]), 0), WeightPolynomial::zero());
    }

    #[test]
    fn multiplication_is_commutative_and_merges() {
        let a = WeightPolynomial::from_terms((0..5).map(|i| (w(&[i, -i]), i + 1)));
        let b = WeightPolynomial::from_terms((0..3).map(|i| (w(&[-i, 2 * i]), 2 - i)));
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&b).augmentation(), a.augmentation() * b.augmentation());
    }

    #[test]
    fn json_round_trip() {
        let p = WeightPolynomial::from_terms([(w(&[0, 1]), -2), (w(&[1, 0]), 3)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"[{"w":[0,1],"c":-2},{"w":[1,0],"c":3}]"#);
        assert_eq!(serde_json::from_str::<WeightPolynomial>(&s).unwrap(), p);
        assert!(serde_json::from_str::<WeightPolynomial>(r#"[{"w":[0],"c":0}]"#).is_err());
    }
}
