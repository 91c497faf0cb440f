//! Branching coefficients m_μ^λ for a Levi subalgebra, the finite
//! M-functions that decide equality of induced characters, and related
//! triangularity data.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{dominance_leq, Family, LeviDatum, RootDatum, RootSet, Weight};
use crate::weightpoly::{alternating_sum, subsystem_character, PartitionTable, WeightPolynomial, DEFAULT_CHARACTER_BUDGET};
use crate::weylgrp::{self, WeylElement};

const CHUNK: usize = 512;

pub(crate) fn check_g_dominant(datum: &RootDatum, lambda: &Weight) -> Result<()> {
    datum.check_weight(lambda)?;
    if !datum.is_dominant(lambda) {
        return Err(Error::NotDominant {
            weight: lambda.to_string(),
            context: datum.label(),
        });
    }
    Ok(())
}

pub(crate) fn check_levi_dominant(levi: &LeviDatum, mu: &Weight) -> Result<()> {
    levi.parent().check_weight(mu)?;
    if !levi.is_dominant(mu) {
        return Err(Error::NotDominant {
            weight: mu.to_string(),
            context: format!("the Levi {}", levi.describe()),
        });
    }
    Ok(())
}

/// Evaluates m_μ^λ = Σ_{w∈W} ε(w) P̄(w(λ+ρ) − μ − ρ) with a shared P̄ table.
pub struct Brancher {
    levi: LeviDatum,
    table: PartitionTable,
}

impl Brancher {
    pub fn new(levi: &LeviDatum) -> Self {
        Brancher {
            table: PartitionTable::for_levi(levi),
            levi: levi.clone(),
        }
    }

    pub fn levi(&self) -> &LeviDatum {
        &self.levi
    }

    pub fn table(&self) -> &PartitionTable {
        &self.table
    }

    pub fn multiplicity(&self, lambda: &Weight, mu: &Weight) -> Result<u64> {
        let datum = self.levi.parent();
        check_g_dominant(datum, lambda)?;
        check_levi_dominant(&self.levi, mu)?;
        // m ≠ 0 needs λ − μ in the root lattice with μ ≤ λ
        if !dominance_leq(datum, mu, lambda, RootSet::Positive) {
            return Ok(0);
        }
        let group = datum.weyl_group()?;
        let rho = datum.rho();
        let top = lambda + rho;
        let base = mu + rho;
        let total: i128 = group
            .elements()
            .par_chunks(CHUNK)
            .zip(group.signs().par_chunks(CHUNK))
            .map(|(ws, ss)| {
                let mut acc: i128 = 0;
                for (w, &s) in ws.iter().zip(ss) {
                    let arg = &w.act(&top) - &base;
                    let p = self.table.count(&arg);
                    if p != 0 {
                        acc += i128::from(s) * p as i128;
                    }
                }
                acc
            })
            .sum();
        u64::try_from(total).map_err(|_| {
            Error::Invariant(format!("alternating sum for λ={lambda}, μ={mu} is {total}"))
        })
    }

    /// One row of the branching matrix: m_μ^λ for every λ in `lambdas`.
    pub fn row(&self, mu: &Weight, lambdas: &[Weight]) -> Result<BranchingRow> {
        let mut entries = BTreeMap::new();
        for l in lambdas {
            entries.insert(l.clone(), self.multiplicity(l, mu)?);
        }
        Ok(BranchingRow { mu: mu.clone(), entries })
    }
}

/// m_μ^λ with a fresh partition table.
pub fn branch_multiplicity(levi: &LeviDatum, lambda: &Weight, mu: &Weight) -> Result<u64> {
    Brancher::new(levi).multiplicity(lambda, mu)
}

/// m_μ^λ for a fixed μ over a box of λ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchingRow {
    pub mu: Weight,
    #[serde(with = "weight_map")]
    pub entries: BTreeMap<Weight, u64>,
}

/// Decomposition of Res V(λ) into irreducible ḡ-modules: μ ↦ m_μ^λ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Restriction {
    pub lambda: Weight,
    #[serde(with = "weight_map")]
    pub entries: BTreeMap<Weight, u64>,
}

impl Restriction {
    pub fn get(&self, mu: &Weight) -> u64 {
        self.entries.get(mu).copied().unwrap_or(0)
    }
}

mod weight_map {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::rootsys::Weight;

    #[derive(Serialize, Deserialize)]
    struct Entry {
        weight: Weight,
        multiplicity: u64,
    }

    pub fn serialize<S: Serializer>(map: &BTreeMap<Weight, u64>, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<Entry> = map
            .iter()
            .map(|(w, &m)| Entry {
                weight: w.clone(),
                multiplicity: m,
            })
            .collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Weight, u64>, D::Error> {
        let v: Vec<Entry> = Vec::deserialize(d)?;
        Ok(v.into_iter().map(|e| (e.weight, e.multiplicity)).collect())
    }
}

fn csv_coord(d: i32) -> String {
    if d % 2 == 0 {
        (d / 2).to_string()
    } else {
        format!("{d}/2")
    }
}

fn csv_rows(entries: &BTreeMap<Weight, u64>, prefix: &str) -> String {
    let n = entries.keys().next().map_or(0, Weight::dim);
    let mut out = String::new();
    let header: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
    let _ = writeln!(out, "{},multiplicity", header.join(","));
    for (w, m) in entries {
        let coords: Vec<String> = w.doubled().iter().map(|&d| csv_coord(d)).collect();
        let _ = writeln!(out, "{},{m}", coords.join(","));
    }
    out
}

impl BranchingRow {
    /// CSV with one line per λ: coordinates then multiplicity.
    pub fn to_csv(&self) -> String {
        csv_rows(&self.entries, "lambda")
    }
}

impl Restriction {
    pub fn to_csv(&self) -> String {
        csv_rows(&self.entries, "mu")
    }
}

/// Restriction oracle: strips ḡ-highest weights from ch V(λ). At each step
/// the remaining character is a sum of ḡ-characters, and a weight maximising
/// (·, ρ̄) is ⪯-maximal, hence a highest weight. Ties go to the smallest
/// weight in canonical order.
pub fn branch_by_restriction(levi: &LeviDatum, lambda: &Weight, budget: u128) -> Result<Restriction> {
    let datum = levi.parent();
    check_g_dominant(datum, lambda)?;
    let ch = subsystem_character(datum.system(), lambda, budget)?;
    let mut rest: HashMap<Weight, i64> = ch.terms().iter().cloned().collect();
    let rho_bar = levi.rho_bar();
    let mut entries = BTreeMap::new();
    while let Some(top) = rest
        .keys()
        .max_by(|a, b| a.dot4(rho_bar).cmp(&b.dot4(rho_bar)).then(b.cmp(a)))
        .cloned()
    {
        let c = rest[&top];
        if c <= 0 || !levi.is_dominant(&top) {
            return Err(Error::Invariant(format!(
                "restriction of V({lambda}) left {c}·e^{top}, not a ḡ-highest weight"
            )));
        }
        let sub = subsystem_character(levi.subsystem(), &top, budget)?;
        for (x, m) in sub.terms() {
            let e = rest.entry(x.clone()).or_insert(0);
            *e -= c * m;
            if *e == 0 {
                rest.remove(x);
            }
        }
        entries.insert(top, c as u64);
    }
    Ok(Restriction {
        lambda: lambda.clone(),
        entries,
    })
}

/// Restriction oracle with the default dimension budget.
pub fn restrict(levi: &LeviDatum, lambda: &Weight) -> Result<Restriction> {
    branch_by_restriction(levi, lambda, DEFAULT_CHARACTER_BUDGET)
}

/// All weights of the lattice P with every coordinate in [−bound, bound].
/// Half-integral weights are included for B and D.
pub fn lattice_box(datum: &RootDatum, bound: i32) -> Vec<Weight> {
    let n = datum.rank();
    let mut out = Vec::new();
    let mut parities = vec![0];
    if matches!(datum.family(), Family::B | Family::D) {
        parities.push(1);
    }
    for parity in parities {
        let vals: Vec<i32> = (-2 * bound..=2 * bound).filter(|d| d.rem_euclid(2) == parity).collect();
        let mut cur = vec![0i32; n];
        fn go(i: usize, cur: &mut Vec<i32>, vals: &[i32], out: &mut Vec<Weight>) {
            if i == cur.len() {
                out.push(Weight::from_doubled(cur));
                return;
            }
            for &v in vals {
                cur[i] = v;
                go(i + 1, cur, vals, out);
            }
        }
        go(0, &mut cur, &vals, &mut out);
    }
    out.sort();
    out
}

/// Dominant weights of g with all coordinates in [−bound, bound].
pub fn dominant_box(datum: &RootDatum, bound: i32) -> Vec<Weight> {
    lattice_box(datum, bound).into_iter().filter(|w| datum.is_dominant(w)).collect()
}

/// ḡ-dominant weights with all coordinates in [−bound, bound].
pub fn levi_dominant_box(levi: &LeviDatum, bound: i32) -> Vec<Weight> {
    lattice_box(levi.parent(), bound)
        .into_iter()
        .filter(|w| levi.is_dominant(w))
        .collect()
}

/// Default λ-box for a row: dominant λ with λ ≤ μ + k·θ, θ the highest root.
pub fn default_lambda_box(levi: &LeviDatum, mu: &Weight, k: i32) -> Vec<Weight> {
    let datum = levi.parent();
    let cap = mu + &datum.highest_root().scaled(k);
    let top = weylgrp::dominant_weight(datum, &cap);
    let mut out: Vec<Weight> = crate::weightpoly::dominant_weights(datum.system(), &top)
        .into_iter()
        .filter(|l| dominance_leq(datum, l, &cap, RootSet::Positive))
        .collect();
    out.sort();
    out
}

/// M_μ = Σ_{w̄∈W̄} ε(w̄) m_{μ+ρ̄−w̄(ρ̄)}, stored in the basis of the
/// symmetrized monomials m_Λ (Λ dominant). Two M-functions are equal as
/// weight polynomials exactly when these coefficient maps are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MFunction {
    mu: Weight,
    coeffs: BTreeMap<Weight, i64>,
}

impl MFunction {
    pub fn mu(&self) -> &Weight {
        &self.mu
    }

    /// Coefficients c_Λ with M_μ = Σ c_Λ m_Λ.
    pub fn m_coefficients(&self) -> &BTreeMap<Weight, i64> {
        &self.coeffs
    }

    /// The explicit weight polynomial Σ c_Λ |Stab_W(Λ)| Σ_{β∈WΛ} e^β.
    pub fn poly(&self, datum: &RootDatum) -> WeightPolynomial {
        let mut terms = Vec::new();
        for (lam, &c) in &self.coeffs {
            let orbit = weylgrp::orbit(datum, lam);
            let stab = (datum.weyl_order() / orbit.len() as u64) as i64;
            terms.extend(orbit.into_iter().map(|x| (x, c * stab)));
        }
        WeightPolynomial::from_terms(terms)
    }

    /// The ⪯-largest Λ with nonzero coefficient, by (Λ, ρ) then canonical
    /// order.
    pub fn top(&self, datum: &RootDatum) -> Option<(&Weight, i64)> {
        let rho = datum.rho();
        self.coeffs
            .iter()
            .max_by(|a, b| a.0.dot4(rho).cmp(&b.0.dot4(rho)).then(b.0.cmp(a.0)))
            .map(|(w, &c)| (w, c))
    }
}

/// E_μ = {μ + ρ̄ − w̄(ρ̄)}, with the sign of the w̄ producing each element.
fn e_terms(levi: &LeviDatum, mu: &Weight) -> Vec<(Weight, i8)> {
    let rho = levi.rho_bar();
    let base = mu + rho;
    levi.wbar_elements()
        .iter()
        .map(|w| (&base - &w.act(rho), w.sign()))
        .collect()
}

pub fn build_m(levi: &LeviDatum, mu: &Weight) -> Result<MFunction> {
    check_levi_dominant(levi, mu)?;
    Ok(build_m_unchecked(levi, mu))
}

pub(crate) fn build_m_unchecked(levi: &LeviDatum, mu: &Weight) -> MFunction {
    let datum = levi.parent();
    let mut coeffs: BTreeMap<Weight, i64> = BTreeMap::new();
    for (e, s) in e_terms(levi, mu) {
        *coeffs.entry(weylgrp::dominant_weight(datum, &e)).or_insert(0) += i64::from(s);
    }
    coeffs.retain(|_, c| *c != 0);
    MFunction { mu: mu.clone(), coeffs }
}

/// The product form ε(w̄₀) Σ_{u∈U} u(ā_{μ+ρ̄} · ā_ρ̄) of M_μ.
pub fn m_function_product_form(levi: &LeviDatum, mu: &Weight) -> Result<WeightPolynomial> {
    check_levi_dominant(levi, mu)?;
    let u = weylgrp::transversal_u(levi)?;
    let prod = alternating_sum(levi, &(mu + levi.rho_bar())).mul(&alternating_sum(levi, levi.rho_bar()));
    let mut terms = Vec::with_capacity(prod.len() * u.len());
    let sign = levi.sign_w0bar();
    for x in &u.elements {
        terms.extend(prod.terms().iter().map(|(b, c)| (x.act(b), sign * c)));
    }
    Ok(WeightPolynomial::from_terms(terms))
}

/// Checks that the sum and product constructions of M_μ coincide.
pub fn check_m_dual(levi: &LeviDatum, mu: &Weight) -> Result<()> {
    let m = build_m(levi, mu)?;
    let a = m.poly(levi.parent());
    let b = m_function_product_form(levi, mu)?;
    if a != b {
        return Err(Error::Invariant(format!(
            "sum and product forms of M_{mu} differ ({} vs {} terms)",
            a.len(),
            b.len()
        )));
    }
    Ok(())
}

/// a_{λ,μ} = Σ ε(w̄) over the w̄ with μ + ρ̄ − w̄(ρ̄) ∈ W·λ.
pub fn a_coefficient(levi: &LeviDatum, lambda: &Weight, mu: &Weight) -> Result<i64> {
    check_levi_dominant(levi, mu)?;
    levi.parent().check_weight(lambda)?;
    let dom = weylgrp::dominant_weight(levi.parent(), lambda);
    Ok(build_m_unchecked(levi, mu).coeffs.get(&dom).copied().unwrap_or(0))
}

/// The leading term of M_μ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeadingTerm {
    /// Λ, the dominant representative of μ + 2ρ̄.
    pub lambda: Weight,
    /// Coefficient of m_Λ; always ε(w̄₀).
    pub coefficient: i64,
    /// Coefficient of e^Λ in the expanded polynomial: ε(w̄₀)·|Stab_W(Λ)|.
    pub monomial_coefficient: i64,
}

/// Λ = dom(μ + 2ρ̄) with its coefficient. Checks that the coefficient is
/// ε(w̄₀) and that every other Λ' in M_μ satisfies Λ' < Λ.
pub fn leading_term(levi: &LeviDatum, mu: &Weight) -> Result<LeadingTerm> {
    let m = build_m(levi, mu)?;
    let datum = levi.parent();
    let lam = weylgrp::dominant_weight(datum, &(mu + &levi.rho_bar().scaled(2)));
    let c = m.coeffs.get(&lam).copied().unwrap_or(0);
    if c != levi.sign_w0bar() {
        return Err(Error::Invariant(format!(
            "coefficient of m_{lam} in M_{mu} is {c}, expected {}",
            levi.sign_w0bar()
        )));
    }
    for other in m.coeffs.keys() {
        if other != &lam && !dominance_leq(datum, other, &lam, RootSet::Positive) {
            return Err(Error::Invariant(format!("term m_{other} of M_{mu} is not below {lam}")));
        }
    }
    let stab = weylgrp::stabilizer_order(datum, &lam) as i64;
    Ok(LeadingTerm {
        lambda: lam,
        coefficient: c,
        monomial_coefficient: c * stab,
    })
}

/// E_μ, sorted canonically.
pub fn e_set(levi: &LeviDatum, mu: &Weight) -> Result<Vec<Weight>> {
    check_levi_dominant(levi, mu)?;
    let mut out: Vec<Weight> = e_terms(levi, mu).into_iter().map(|t| t.0).collect();
    out.sort();
    out.dedup();
    if out.len() as u64 != levi.wbar_order() {
        return Err(Error::Invariant(format!("|E_{mu}| = {} differs from |W̄|", out.len())));
    }
    Ok(out)
}

/// An element w ∈ W with w(x) dominant for every x in `set`, if any. Any
/// such w maps the first element to its dominant representative, so it is
/// s·w₁ with w₁ fixed and s in the stabilizer of that representative.
pub fn common_chamber(datum: &RootDatum, set: &[Weight]) -> Option<WeylElement> {
    let first = set.first()?;
    let (w1, lam) = weylgrp::dominant_representative(datum, first);
    let moved: Vec<Weight> = set.iter().map(|x| w1.act(x)).collect();
    weylgrp::dominant_stabilizer(datum, &lam)
        .into_iter()
        .find(|s| moved.iter().all(|x| datum.is_dominant(&s.act(x))))
        .map(|s| s.compose(&w1))
}

/// Whether all of E_μ lies in one closed Weyl chamber.
pub fn far_from_walls(levi: &LeviDatum, mu: &Weight) -> Result<bool> {
    let e = e_set(levi, mu)?;
    Ok(common_chamber(levi.parent(), &e).is_some())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight::from_ints(c)
    }

    fn levi(f: Family, n: usize, s: &[usize]) -> LeviDatum {
        LeviDatum::new(Arc::new(RootDatum::new(f, n).unwrap()), s).unwrap()
    }

    #[test]
    fn multiplicity_examples() {
        let l = levi(Family::GL, 3, &[1]);
        assert_eq!(branch_multiplicity(&l, &Weight::zero(3), &Weight::zero(3)).unwrap(), 1);
        let lam = w(&[1, 0, 0]);
        let b = Brancher::new(&l);
        assert_eq!(b.multiplicity(&lam, &w(&[1, 0, 0])).unwrap(), 1);
        assert_eq!(b.multiplicity(&lam, &w(&[0, 0, 1])).unwrap(), 1);
        assert_eq!(b.multiplicity(&lam, &w(&[0, -1, 2])).unwrap(), 0);

        let c2 = levi(Family::C, 2, &[1]);
        let b = Brancher::new(&c2);
        assert_eq!(b.multiplicity(&w(&[1, 0]), &w(&[1, 0])).unwrap(), 1);
        assert_eq!(b.multiplicity(&w(&[1, 0]), &w(&[0, -1])).unwrap(), 1);
        assert_eq!(b.multiplicity(&w(&[1, 0]), &w(&[0, 0])).unwrap(), 0);
    }

    #[test]
    fn validation_errors() {
        let l = levi(Family::GL, 3, &[1]);
        assert!(matches!(branch_multiplicity(&l, &w(&[0, 1, 0]), &Weight::zero(3)), Err(Error::NotDominant { .. })));
        assert!(matches!(branch_multiplicity(&l, &Weight::zero(3), &w(&[0, 1, 0])), Err(Error::NotDominant { .. })));
        assert!(branch_multiplicity(&l, &Weight::zero(2), &Weight::zero(3)).is_err());
    }

    #[test]
    fn restriction_examples() {
        let c3 = levi(Family::C, 3, &[1, 2]);
        let r = restrict(&c3, &w(&[1, 0, 0])).unwrap();
        assert_eq!(r.entries, BTreeMap::from([(w(&[0, 0, -1]), 1), (w(&[1, 0, 0]), 1)]));
        let b2 = levi(Family::B, 2, &[1]);
        let r = restrict(&b2, &w(&[1, 0])).unwrap();
        assert_eq!(r.entries, BTreeMap::from([(w(&[0, -1]), 1), (w(&[0, 0]), 1), (w(&[1, 0]), 1)]));
        let triv = restrict(&b2, &Weight::zero(2)).unwrap();
        assert_eq!(triv.entries, BTreeMap::from([(Weight::zero(2), 1)]));
    }

    #[test]
    fn oracle_agrees_small() {
        for l in [levi(Family::C, 2, &[1]), levi(Family::B, 2, &[2]), levi(Family::GL, 3, &[2]), levi(Family::D, 3, &[2, 3])] {
            let b = Brancher::new(&l);
            for lam in dominant_box(l.parent(), 2) {
                let r = restrict(&l, &lam).unwrap();
                for mu in levi_dominant_box(&l, 3) {
                    if dominance_leq(l.parent(), &mu, &lam, RootSet::Positive) {
                        assert_eq!(b.multiplicity(&lam, &mu).unwrap(), r.get(&mu), "{l:?} {lam} {mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn csv_and_json() {
        let l = levi(Family::GL, 3, &[1]);
        let b = Brancher::new(&l);
        let row = b.row(&w(&[1, 0, 0]), &[w(&[1, 0, 0]), w(&[2, 0, -1]), w(&[3, 0, 0])]).unwrap();
        assert_eq!(row.to_csv(), "lambda1,lambda2,lambda3,multiplicity\n1,0,0,1\n2,0,-1,1\n3,0,0,0\n");
        let json = serde_json::to_string(&row).unwrap();
        assert_eq!(serde_json::from_str::<BranchingRow>(&json).unwrap(), row);
    }

    #[test]
    fn m_function_cartan_is_symmetrized_monomial() {
        let l = levi(Family::C, 2, &[]);
        let mu = w(&[2, -1]);
        let m = build_m(&l, &mu).unwrap();
        assert_eq!(m.poly(l.parent()), crate::weightpoly::symmetrize(l.parent(), &mu).unwrap());
    }

    #[test]
    fn m_function_sum_and_product_forms_agree() {
        for (l, mu) in [
            (levi(Family::GL, 3, &[1]), w(&[0, 0, 0])),
            (levi(Family::C, 3, &[1, 2]), w(&[2, 0, -1])),
            (levi(Family::B, 3, &[1, 3]), w(&[1, 0, 2])),
            (levi(Family::D, 4, &[1, 2, 4]), w(&[1, 1, 0, 0])),
            (levi(Family::GL, 4, &[1, 3]), w(&[3, 1, 2, 2])),
        ] {
            check_m_dual(&l, &mu).unwrap();
        }
    }

    #[test]
    fn a_coefficients_gl3() {
        let l = levi(Family::GL, 3, &[1]);
        let mu = Weight::zero(3);
        assert_eq!(a_coefficient(&l, &mu, &mu).unwrap(), 1);
        assert_eq!(a_coefficient(&l, &w(&[1, -1, 0]), &mu).unwrap(), -1);
        assert_eq!(a_coefficient(&l, &w(&[0, 1, -1]), &mu).unwrap(), -1);
        assert_eq!(a_coefficient(&l, &w(&[2, -1, -1]), &mu).unwrap(), 0);
        assert_eq!(build_m(&l, &mu).unwrap().m_coefficients().len(), 2);
    }

    #[test]
    fn leading_term_examples() {
        let l = levi(Family::GL, 6, &[1, 2, 3, 5]);
        let t = leading_term(&l, &w(&[5, 2, 2, 1, 4, 3])).unwrap();
        assert_eq!(t.lambda, w(&[8, 5, 3, 2, 1, -2]));
        assert_eq!(t.coefficient, -1);
        let c = levi(Family::C, 2, &[]);
        let t = leading_term(&c, &Weight::zero(2)).unwrap();
        assert_eq!((t.lambda, t.coefficient, t.monomial_coefficient), (Weight::zero(2), 1, 8));
    }

    #[test]
    fn e_sets() {
        let l = levi(Family::GL, 3, &[1]);
        let e = e_set(&l, &w(&[5, 1, 0])).unwrap();
        assert_eq!(e, vec![w(&[5, 1, 0]), w(&[6, 0, 0])]);
        assert!(far_from_walls(&l, &w(&[5, 1, 0])).unwrap());
        let cartan = levi(Family::B, 2, &[]);
        assert_eq!(e_set(&cartan, &w(&[0, 3])).unwrap(), vec![w(&[0, 3])]);
        assert!(far_from_walls(&cartan, &w(&[0, 3])).unwrap());
    }

    #[test]
    fn far_from_walls_matches_exhaustive_search() {
        for l in [levi(Family::C, 3, &[1, 2]), levi(Family::B, 3, &[1, 3]), levi(Family::GL, 4, &[1, 3])] {
            let d = l.parent();
            let group = d.weyl_group().unwrap();
            let mut seen = [0, 0];
            for mu in levi_dominant_box(&l, 2) {
                let e = e_set(&l, &mu).unwrap();
                let brute = group.elements().iter().any(|x| e.iter().all(|y| d.is_dominant(&x.act(y))));
                assert_eq!(far_from_walls(&l, &mu).unwrap(), brute, "{l:?} {mu}");
                seen[usize::from(brute)] += 1;
            }
            assert!(seen[0] > 0 && seen[1] > 0);
        }
    }

    #[test]
    fn default_box_bounds() {
        let l = levi(Family::C, 2, &[1]);
        let lambdas = default_lambda_box(&l, &w(&[1, 0]), 1);
        assert!(lambdas.contains(&w(&[1, 0])));
        assert!(lambdas.contains(&w(&[3, 0])));
        assert!(lambdas.iter().all(|x| l.parent().is_dominant(x)));
        assert!(!lambdas.contains(&w(&[0, 0])));
    }
}
