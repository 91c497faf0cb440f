use std::collections::{BTreeMap, HashMap, HashSet};

use super::{PartitionTable, WeightPolynomial};
use crate::error::{Error, Result};
use crate::rootsys::{LeviDatum, RootDatum, RootSubsystem, Weight};
use crate::weylgrp::{self, WeylElement};

/// Default bound on dim V(λ) for full character computations.
pub const DEFAULT_CHARACTER_BUDGET: u128 = 20_000_000;

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Weyl dimension formula Π (λ+ρ, α)/(ρ, α) over the positive roots of the
/// subsystem. Saturates at `u128::MAX` on overflow.
pub fn weyl_dimension(sys: &RootSubsystem, lambda: &Weight) -> u128 {
    let shifted = lambda + sys.rho();
    let (mut num, mut den) = (1u128, 1u128);
    for a in sys.positive_roots() {
        let top = shifted.dot4(a);
        let bottom = sys.rho().dot4(a);
        debug_assert!(top > 0 && bottom > 0, "{lambda} is not dominant");
        let (mut t, mut b) = (top as u128, bottom as u128);
        let g = gcd(t, den);
        t /= g;
        den /= g;
        let g = gcd(b, num);
        b /= g;
        num /= g;
        num = match num.checked_mul(t) {
            Some(v) => v,
            None => return u128::MAX,
        };
        den = match den.checked_mul(b) {
            Some(v) => v,
            None => return u128::MAX,
        };
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    debug_assert_eq!(den, 1);
    num
}

/// The dominant weights μ ≤ λ of the subsystem, found by subtracting
/// positive roots while staying dominant. Sorted by increasing (λ − μ, ρ).
pub fn dominant_weights(sys: &RootSubsystem, lambda: &Weight) -> Vec<Weight> {
    let mut seen: HashSet<Weight> = HashSet::new();
    seen.insert(lambda.clone());
    let mut stack = vec![lambda.clone()];
    while let Some(mu) = stack.pop() {
        for a in sys.positive_roots() {
            let nu = &mu - a;
            if sys.is_dominant(&nu) && !seen.contains(&nu) {
                seen.insert(nu.clone());
                stack.push(nu);
            }
        }
    }
    let rho = sys.rho();
    let mut out: Vec<Weight> = seen.into_iter().collect();
    out.sort_by_key(|mu| (lambda.dot4(rho) - mu.dot4(rho), mu.clone()));
    out
}

/// Multiplicities of the dominant weights of V(λ) for a (possibly
/// reducible) root subsystem. Also records the subsystem so that full
/// characters can be expanded from orbits.
#[derive(Clone, Debug)]
pub struct DominantCharacter {
    pub highest: Weight,
    pub mults: BTreeMap<Weight, u64>,
}

impl DominantCharacter {
    pub fn multiplicity_of_dominant(&self, mu: &Weight) -> u64 {
        self.mults.get(mu).copied().unwrap_or(0)
    }
}

/// Freudenthal's recursion on the dominant weights, in the exact form
/// m(μ)(|λ+ρ|² − |μ+ρ|²) = 2 Σ_{α>0} Σ_{k≥1} m(μ+kα)(μ+kα, α).
pub fn dominant_character(sys: &RootSubsystem, lambda: &Weight) -> Result<DominantCharacter> {
    if !sys.is_dominant(lambda) {
        return Err(Error::NotDominant {
            weight: lambda.to_string(),
            context: "character computation".into(),
        });
    }
    let rho = sys.rho();
    let top = (lambda + rho).dot4(&(lambda + rho));
    let order = dominant_weights(sys, lambda);
    let mut mults: HashMap<Weight, u64> = HashMap::with_capacity(order.len());
    mults.insert(lambda.clone(), 1);
    for mu in order.iter().skip(1) {
        let shifted = mu + rho;
        let denom = top - shifted.dot4(&shifted);
        let mut sum: i128 = 0;
        for a in sys.positive_roots() {
            let mut nu = mu + a;
            loop {
                let dom = sys.dominant_rep(&nu).0;
                let m = match mults.get(&dom) {
                    Some(&m) => m,
                    None => break,
                };
                sum += i128::from(m) * i128::from(nu.dot4(a));
                nu = &nu + a;
            }
        }
        // doubled inner products: dot4 on both sides, so the factor 2 stays
        let num = 2 * sum;
        if denom <= 0 || num % i128::from(denom) != 0 {
            return Err(Error::Invariant(format!(
                "Freudenthal recursion not integral at {mu} for highest weight {lambda}"
            )));
        }
        let m = (num / i128::from(denom)) as u64;
        if m > 0 {
            mults.insert(mu.clone(), m);
        }
    }
    Ok(DominantCharacter {
        highest: lambda.clone(),
        mults: mults.into_iter().collect(),
    })
}

/// Full character of the irreducible module of highest weight λ for a root
/// subsystem (the whole datum or a Levi), checked against a dimension
/// budget first.
pub fn subsystem_character(sys: &RootSubsystem, lambda: &Weight, budget: u128) -> Result<WeightPolynomial> {
    if !sys.is_dominant(lambda) {
        return Err(Error::NotDominant {
            weight: lambda.to_string(),
            context: "character computation".into(),
        });
    }
    let dim = weyl_dimension(sys, lambda);
    if dim > budget {
        return Err(Error::BudgetExceeded { dimension: dim, budget });
    }
    let dc = dominant_character(sys, lambda)?;
    let mut terms = Vec::new();
    for (mu, &m) in &dc.mults {
        for x in sys.orbit(mu) {
            terms.push((x, m as i64));
        }
    }
    let poly = WeightPolynomial::from_terms(terms);
    if poly.augmentation() as u128 != dim {
        return Err(Error::Invariant(format!(
            "character of {lambda} has total multiplicity {} but Weyl dimension {dim}",
            poly.augmentation()
        )));
    }
    Ok(poly)
}

/// ch V(λ) for the datum, by Freudenthal's formula.
pub fn weyl_character(datum: &RootDatum, lambda: &Weight) -> Result<WeightPolynomial> {
    datum.check_weight(lambda)?;
    subsystem_character(datum.system(), lambda, DEFAULT_CHARACTER_BUDGET)
}

/// K_{λ,β} = dim V(λ)_β, via the dominant representative of β.
pub fn kostka_multiplicity(datum: &RootDatum, lambda: &Weight, beta: &Weight) -> Result<u64> {
    datum.check_weight(lambda)?;
    datum.check_weight(beta)?;
    let dom = weylgrp::dominant_weight(datum, beta);
    if !crate::rootsys::dominance_leq(datum, &dom, lambda, crate::rootsys::RootSet::Positive) {
        return Ok(0);
    }
    Ok(dominant_character(datum.system(), lambda)?.multiplicity_of_dominant(&dom))
}

/// Kostant's formula K_{λ,β} = Σ_w ε(w) P(w∘λ − β), used as an independent
/// check on Freudenthal.
pub fn kostant_multiplicity(datum: &RootDatum, table: &PartitionTable, lambda: &Weight, beta: &Weight) -> Result<i128> {
    let group = datum.weyl_group()?;
    let rho = datum.rho();
    let mut total: i128 = 0;
    for (w, s) in group.iter() {
        let arg = &w.dot_act(lambda, rho) - beta;
        let p = table.count(&arg);
        if p > 0 {
            total += i128::from(s) * p as i128;
        }
    }
    Ok(total)
}

/// m_γ = Σ_{w∈W} e^{w(γ)}: every orbit point with coefficient |Stab_W(γ)|.
pub fn symmetrize(datum: &RootDatum, gamma: &Weight) -> Result<WeightPolynomial> {
    datum.check_weight(gamma)?;
    let orbit = weylgrp::orbit(datum, gamma);
    let stab = (datum.weyl_order() / orbit.len() as u64) as i64;
    Ok(WeightPolynomial::from_terms(orbit.into_iter().map(|x| (x, stab))))
}

/// ā_γ = Σ_{w̄∈W̄} ε(w̄) e^{w̄(γ)}.
pub fn alternating_sum(levi: &LeviDatum, gamma: &Weight) -> WeightPolynomial {
    let wbar = levi.wbar_elements();
    WeightPolynomial::from_terms(wbar.iter().map(|w| (w.act(gamma), i64::from(w.sign()))))
}

/// Π_{α∈R̄₊} (1 − e^α).
pub fn nabla_bar_product(levi: &LeviDatum) -> WeightPolynomial {
    let n = levi.parent().rank();
    let mut acc = WeightPolynomial::monomial(Weight::zero(n), 1);
    for a in levi.rbar_plus() {
        let factor = WeightPolynomial::from_terms([(Weight::zero(n), 1), (a.clone(), -1)]);
        acc = acc.mul(&factor);
    }
    acc
}

/// Σ_{w̄} ε(w̄) e^{ρ̄ − w̄(ρ̄)}.
pub fn nabla_bar_alternating(levi: &LeviDatum) -> WeightPolynomial {
    let rho = levi.rho_bar();
    let wbar = levi.wbar_elements();
    WeightPolynomial::from_terms(wbar.iter().map(|w: &WeylElement| (rho - &w.act(rho), i64::from(w.sign()))))
}

/// ▽̄, computed both as a product and as an alternating sum; errors if the
/// two disagree.
pub fn nabla_bar(levi: &LeviDatum) -> Result<WeightPolynomial> {
    let p = nabla_bar_product(levi);
    let a = nabla_bar_alternating(levi);
    if p != a {
        return Err(Error::Invariant(format!("product and alternating forms of nabla differ for {levi:?}")));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::rootsys::Family;

    fn w(c: &[i64]) -> Weight {
        Weight::from_ints(c)
    }

    fn datum(f: Family, n: usize) -> RootDatum {
        RootDatum::new(f, n).unwrap()
    }

    #[test]
    fn trivial_and_defining_characters() {
        let c2 = datum(Family::C, 2);
        let triv = weyl_character(&c2, &Weight::zero(2)).unwrap();
        assert_eq!(triv, WeightPolynomial::monomial(Weight::zero(2), 1));
        let def = weyl_character(&c2, &w(&[1, 0])).unwrap();
        let expected = WeightPolynomial::from_terms([w(&[1, 0]), w(&[-1, 0]), w(&[0, 1]), w(&[0, -1])].map(|x| (x, 1)));
        assert_eq!(def, expected);
    }

    #[test]
    fn dimensions() {
        let c3 = datum(Family::C, 3);
        assert_eq!(weyl_dimension(c3.system(), &w(&[1, 1, 0])), 14);
        assert_eq!(weyl_character(&c3, &w(&[1, 1, 0])).unwrap().augmentation(), 14);
        let b3 = datum(Family::B, 3);
        let spin = Weight::from_doubled(&[1, 1, 1]);
        assert_eq!(weyl_character(&b3, &spin).unwrap().augmentation(), 8);
        let d4 = datum(Family::D, 4);
        assert_eq!(weyl_dimension(d4.system(), &w(&[1, 1, 0, 0])), 28);
        let gl3 = datum(Family::GL, 3);
        assert_eq!(weyl_dimension(gl3.system(), &w(&[2, 1, 0])), 8);
    }

    #[test]
    fn kostka_examples() {
        let gl3 = datum(Family::GL, 3);
        let lam = w(&[2, 1, 0]);
        assert_eq!(kostka_multiplicity(&gl3, &lam, &w(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(kostka_multiplicity(&gl3, &lam, &lam).unwrap(), 1);
        assert_eq!(kostka_multiplicity(&gl3, &lam, &w(&[3, 0, 0])).unwrap(), 0);
        assert_eq!(kostka_multiplicity(&gl3, &lam, &w(&[0, 1, 2])).unwrap(), 1);
    }

    #[test]
    fn budget_is_enforced() {
        let c3 = datum(Family::C, 3);
        let err = subsystem_character(c3.system(), &w(&[1, 1, 0]), 10).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { dimension: 14, budget: 10 }));
    }

    #[test]
    fn freudenthal_matches_kostant() {
        for (f, n, lam) in [
            (Family::C, 2, w(&[2, 1])),
            (Family::B, 2, Weight::from_doubled(&[3, 1])),
            (Family::GL, 3, w(&[3, 1, 0])),
            (Family::D, 4, w(&[1, 1, 0, 0])),
            (Family::B, 3, w(&[2, 1, 0])),
        ] {
            let d = datum(f, n);
            let table = PartitionTable::full(&d);
            let dc = dominant_character(d.system(), &lam).unwrap();
            for mu in dominant_weights(d.system(), &lam) {
                let k = kostant_multiplicity(&d, &table, &lam, &mu).unwrap();
                assert_eq!(k, i128::from(dc.multiplicity_of_dominant(&mu)), "{f:?}{n} {lam} at {mu}");
            }
        }
    }

    #[test]
    fn characters_are_w_invariant() {
        let b3 = datum(Family::B, 3);
        let ch = weyl_character(&b3, &w(&[1, 1, 0])).unwrap();
        for x in b3.weyl_group().unwrap().elements() {
            assert_eq!(ch.act(x), ch);
        }
    }

    #[test]
    fn symmetrize_examples() {
        let gl3 = datum(Family::GL, 3);
        let m = symmetrize(&gl3, &w(&[1, 0, 0])).unwrap();
        assert_eq!(m.len(), 3);
        assert!(m.terms().iter().all(|t| t.1 == 2));
        let z = symmetrize(&gl3, &Weight::zero(3)).unwrap();
        assert_eq!(z, WeightPolynomial::monomial(Weight::zero(3), 6));
        let r = symmetrize(&gl3, &w(&[2, 1, 0])).unwrap();
        assert_eq!(r.len(), 6);
        assert!(r.terms().iter().all(|t| t.1 == 1));
        assert_eq!(symmetrize(&gl3, &w(&[0, 1, 2])).unwrap(), r);
    }

    #[test]
    fn alternating_sum_examples() {
        let gl3 = Arc::new(datum(Family::GL, 3));
        let cartan = LeviDatum::new(gl3.clone(), &[]).unwrap();
        assert_eq!(alternating_sum(&cartan, &w(&[1, 2, 3])), WeightPolynomial::monomial(w(&[1, 2, 3]), 1));
        let levi = LeviDatum::new(gl3, &[1]).unwrap();
        assert!(alternating_sum(&levi, &w(&[1, 1, 0])).is_empty());
        let a = alternating_sum(&levi, levi.rho_bar());
        assert_eq!(a.len(), 2);
        assert_eq!(a.augmentation(), 0);
        let s = WeylElement::reflection(&w(&[1, -1, 0]));
        assert_eq!(alternating_sum(&levi, &s.act(&w(&[3, 1, 0]))), alternating_sum(&levi, &w(&[3, 1, 0])).scale(-1));
    }

    #[test]
    fn nabla_forms_agree() {
        let c6 = Arc::new(datum(Family::C, 6));
        let levi = LeviDatum::new(c6, &[1, 2, 4, 5, 6]).unwrap();
        let nb = nabla_bar(&levi).unwrap();
        assert_eq!(nb.len(), 288);
        assert_eq!(nb.coeff(&Weight::zero(6)), 1);
        for (f, n) in [(Family::B, 3), (Family::D, 4), (Family::GL, 4)] {
            let d = Arc::new(datum(f, n));
            let k = d.num_simple();
            for mask in 0..(1u32 << k) {
                let s: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
                let l = LeviDatum::new(d.clone(), &s).unwrap();
                nabla_bar(&l).unwrap();
            }
        }
        let gl2 = Arc::new(datum(Family::GL, 2));
        let l = LeviDatum::new(gl2, &[1]).unwrap();
        assert_eq!(
            nabla_bar(&l).unwrap(),
            WeightPolynomial::from_terms([(Weight::zero(2), 1), (w(&[1, -1]), -1)])
        );
    }
}
