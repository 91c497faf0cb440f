use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::{lr_coefficient, multi_lr, split_signed, Partition};
use crate::branching::{restrict, Brancher};
use crate::error::{Error, Result};
use crate::rootsys::{Family, LeviDatum, RootDatum, Weight};

fn require_gl(levi: &LeviDatum) -> Result<()> {
    if levi.parent().family() != Family::GL {
        return Err(Error::UnsupportedSystem {
            family: levi.parent().family().to_string(),
            rank: levi.parent().rank(),
            reason: "this check needs a Levi of gl_n".into(),
        });
    }
    Ok(())
}

fn ones(n: usize, a: i64) -> Weight {
    Weight::from_ints(&vec![a; n])
}

/// m_{μ+aδ}^{λ+aδ} = m_μ^λ with δ = (1, …, 1).
pub fn delta_shift_check(levi: &LeviDatum, lambda: &Weight, mu: &Weight, a: i64) -> Result<bool> {
    require_gl(levi)?;
    if a < 0 {
        return Err(Error::Config(format!("shift {a} must be nonnegative")));
    }
    let b = Brancher::new(levi);
    let d = ones(levi.parent().rank(), a);
    Ok(b.multiplicity(lambda, mu)? == b.multiplicity(&(lambda + &d), &(mu + &d))?)
}

/// Outcome of comparing m_μ^λ with the iterated LR coefficient of the blocks
/// of μ.
#[derive(Clone, Debug, Serialize)]
pub struct FactorizationReport {
    /// μ after the δ-shift making all coordinates positive.
    pub mu: Weight,
    pub shift: i64,
    pub blocks: Vec<Partition>,
    pub checked: usize,
    /// (λ, branching multiplicity, iterated LR coefficient), shifted frame.
    pub mismatches: Vec<(Weight, u64, u64)>,
    /// λ with a negative coordinate after the shift.
    pub skipped: Vec<Weight>,
}

impl FactorizationReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Checks m_μ^λ = c^λ_{μ⁽¹⁾, …, μ⁽ʳ⁾} where μ⁽ᵏ⁾ is μ restricted to the k-th
/// block of the Levi. μ is first shifted by a multiple of δ so that its
/// coordinates are positive; `lambdas` (unshifted) default to all partitions
/// of |μ| in the shifted frame.
pub fn schur_factorization_check(levi: &LeviDatum, mu: &Weight, lambdas: Option<&[Weight]>) -> Result<FactorizationReport> {
    require_gl(levi)?;
    crate::branching::check_levi_dominant(levi, mu)?;
    let n = levi.parent().rank();
    let c = mu
        .to_ints()
        .ok_or_else(|| Error::InvalidWeight(format!("{mu} is not integral")))?;
    let shift = (1 - c.iter().copied().min().unwrap_or(1)).max(0);
    let d = ones(n, shift);
    let mu_s = mu + &d;

    let mut blocks = Vec::new();
    let mut covered = 0;
    for comp in levi.components() {
        covered += comp.size();
        let part = Partition::from_weight(&mu_s.restrict(&comp.coords))
            .ok_or_else(|| Error::Invariant(format!("block of {mu_s} is not a partition")))?;
        blocks.push(part);
    }
    if covered != n {
        return Err(Error::Invariant(format!("blocks of {} cover {covered} of {n} coordinates", levi.describe())));
    }

    let targets: Vec<Weight> = match lambdas {
        Some(ls) => ls.iter().map(|l| l + &d).collect(),
        None => {
            let size: u32 = blocks.iter().map(Partition::size).sum();
            Partition::all_of(size, n).iter().map(|p| p.to_weight(n)).collect::<Result<_>>()?
        }
    };

    let b = Brancher::new(levi);
    let mut report = FactorizationReport {
        mu: mu_s.clone(),
        shift,
        blocks,
        checked: 0,
        mismatches: Vec::new(),
        skipped: Vec::new(),
    };
    for lam in targets {
        let Some(p) = Partition::from_weight(&lam) else {
            report.skipped.push(lam);
            continue;
        };
        let m = b.multiplicity(&lam, &mu_s)?;
        let c = multi_lr(&p, &report.blocks);
        report.checked += 1;
        if m != c {
            report.mismatches.push((lam, m, c));
        }
    }
    Ok(report)
}

/// One nonzero summand c^γ_{μ₊μ₋} · c^λ_{γ,δ'} of the Littlewood formula,
/// with δ' = δ, 2δ or (2δ)* by family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolarTerm {
    pub gamma: Partition,
    pub delta: Partition,
    pub value: u64,
}

pub fn polarisation_terms(family: Family, n: usize, mu: &Weight, lambda: &Partition) -> Result<Vec<PolarTerm>> {
    if family == Family::GL {
        return Err(Error::UnsupportedSystem {
            family: family.to_string(),
            rank: n,
            reason: "polarisation needs family B, C or D".into(),
        });
    }
    if mu.dim() != n {
        return Err(Error::SizeMismatch(format!("{mu} is not a gl{n} weight")));
    }
    if lambda.len() > n {
        return Err(Error::SizeMismatch(format!("{lambda} has more than {n} parts")));
    }
    let split = split_signed(mu)?;
    let g = split.total();
    if lambda.size() < g {
        return Ok(Vec::new());
    }
    let per_box = if family == Family::B { 1 } else { 2 };
    let rest = lambda.size() - g;
    if !rest.is_multiple_of(per_box) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for gamma in lambda.subpartitions(g) {
        if gamma.len() > n {
            continue;
        }
        let c1 = lr_coefficient(&gamma, &split.mu_plus, &split.mu_minus);
        if c1 == 0 {
            continue;
        }
        for delta in Partition::all_of(rest / per_box, n) {
            let shape = match family {
                Family::B => delta.clone(),
                Family::C => delta.doubled(),
                _ => delta.doubled().conjugate(),
            };
            let c2 = lr_coefficient(lambda, &gamma, &shape);
            if c2 > 0 {
                out.push(PolarTerm { gamma: gamma.clone(), delta, value: c1 * c2 });
            }
        }
    }
    Ok(out)
}

/// Littlewood's branching multiplicity of V̄(μ) in V(λ) for gl_n inside
/// so_{2n+1}, sp_{2n} or so_{2n}.
pub fn polarisation_branch(family: Family, n: usize, mu: &Weight, lambda: &Partition) -> Result<u64> {
    Ok(polarisation_terms(family, n, mu, lambda)?.iter().map(|t| t.value).sum())
}

/// Restriction to gl_n of the module the Littlewood sum describes, computed
/// with the restriction oracle. For so_{2n} and λ_n > 0 that module is
/// V(λ) ⊕ V(λ₁, …, λ_{n−1}, −λ_n).
pub fn polarisation_oracle(family: Family, n: usize, lambda: &Partition) -> Result<BTreeMap<Weight, u64>> {
    if n == 0 || family == Family::GL {
        return Err(Error::UnsupportedSystem {
            family: family.to_string(),
            rank: n,
            reason: "polarisation needs family B, C or D with n ≥ 1".into(),
        });
    }
    let levi = LeviDatum::new(Arc::new(RootDatum::new(family, n)?), &(1..n).collect::<Vec<_>>())?;
    let top = lambda.to_weight(n)?;
    let mut out = restrict(&levi, &top)?.entries;
    if family == Family::D && lambda.part(n - 1) > 0 {
        let mut c = top.to_ints().expect("integral");
        c[n - 1] = -c[n - 1];
        for (mu, m) in restrict(&levi, &Weight::from_ints(&c))?.entries {
            *out.entry(mu).or_insert(0) += m;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branching::{branch_multiplicity, levi_dominant_box};

    fn w(c: &[i64]) -> Weight {
        Weight::from_ints(c)
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts).unwrap()
    }

    fn levi(family: Family, n: usize, sbar: &[usize]) -> LeviDatum {
        LeviDatum::new(Arc::new(RootDatum::new(family, n).unwrap()), sbar).unwrap()
    }

    #[test]
    fn delta_shift_examples() {
        let l = levi(Family::GL, 3, &[1]);
        assert!(delta_shift_check(&l, &w(&[1, 0, 0]), &w(&[1, 0, 0]), 0).unwrap());
        assert!(delta_shift_check(&l, &w(&[1, 0, 0]), &w(&[1, 0, 0]), 2).unwrap());
        assert_eq!(branch_multiplicity(&l, &w(&[3, 2, 2]), &w(&[3, 2, 2])).unwrap(), 1);
        assert!(delta_shift_check(&levi(Family::C, 2, &[1]), &w(&[0, 0]), &w(&[0, 0]), 1).is_err());
    }

    #[test]
    fn factorization_examples() {
        let l = levi(Family::GL, 2, &[]);
        let r = schur_factorization_check(&l, &w(&[1, 1]), None).unwrap();
        assert!(r.ok() && r.checked == 2);
        assert_eq!(branch_multiplicity(&l, &w(&[2, 0]), &w(&[1, 1])).unwrap(), 1);
        assert_eq!(branch_multiplicity(&l, &w(&[1, 1]), &w(&[1, 1])).unwrap(), 1);

        let l = levi(Family::GL, 3, &[1]);
        let r = schur_factorization_check(&l, &w(&[1, 1, 1]), None).unwrap();
        assert!(r.ok(), "{r:?}");
        assert_eq!(branch_multiplicity(&l, &w(&[1, 1, 1]), &w(&[1, 1, 1])).unwrap(), 1);
        assert_eq!(branch_multiplicity(&l, &w(&[2, 1, 0]), &w(&[1, 1, 1])).unwrap(), 1);

        let l = levi(Family::GL, 4, &[1, 3]);
        let r = schur_factorization_check(&l, &w(&[2, 1, 1, 1]), None).unwrap();
        assert!(r.ok() && r.checked == 6, "{r:?}");

        // nonpositive μ is shifted first
        let r = schur_factorization_check(&l, &w(&[1, 0, 0, -1]), None).unwrap();
        assert_eq!(r.shift, 2);
        assert!(r.ok(), "{r:?}");
    }

    #[test]
    fn polarisation_examples() {
        let mu = w(&[1, 0]);
        assert_eq!(polarisation_branch(Family::B, 2, &mu, &p(&[1])).unwrap(), 1);
        assert_eq!(polarisation_branch(Family::B, 2, &mu, &Partition::empty()).unwrap(), 0);
        // δ = (1) puts V̄(0,0) inside V(1,0) for so5
        assert_eq!(polarisation_branch(Family::B, 2, &w(&[0, 0]), &p(&[1])).unwrap(), 1);
        assert_eq!(polarisation_branch(Family::C, 2, &w(&[0, 0]), &p(&[1])).unwrap(), 0);
        // |λ| = |μ₊| + |μ₋| reduces to one LR coefficient
        let mu = w(&[2, 0, -1]);
        for lam in Partition::all_of(3, 3) {
            let c = lr_coefficient(&lam, &p(&[2]), &p(&[1]));
            for f in [Family::B, Family::C, Family::D] {
                assert_eq!(polarisation_branch(f, 3, &mu, &lam).unwrap(), c);
            }
        }
        assert_eq!(polarisation_branch(Family::C, 3, &mu, &p(&[1, 1])).unwrap(), 0);
        assert!(polarisation_branch(Family::GL, 3, &mu, &p(&[1])).is_err());
    }

    #[test]
    fn polarisation_matches_restriction_in_stable_range() {
        for (f, n) in [(Family::B, 2), (Family::C, 2), (Family::C, 3), (Family::D, 2), (Family::D, 3)] {
            let l = levi(f, n, &(1..n).collect::<Vec<_>>());
            for size in 0..=n as u32 {
                for lam in Partition::all_of(size, n) {
                    let res = polarisation_oracle(f, n, &lam).unwrap();
                    for mu in levi_dominant_box(&l, size as i32 + 1) {
                        if !mu.is_integral() {
                            continue;
                        }
                        assert_eq!(polarisation_branch(f, n, &mu, &lam).unwrap(), res.get(&mu).copied().unwrap_or(0), "{f:?}{n} λ={lam} μ={mu}");
                    }
                }
            }
        }
    }
}
