//! The invariant suite behind `levi verify` and the acceptance test. Every
//! check is parameterised by its system and box so the same code runs at
//! desk scale and at acceptance scale.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::branching::{
    build_m, check_m_dual, dominant_box, lattice_box, leading_term, levi_dominant_box, restrict, Brancher,
};
use crate::equivalence::{search_box, MemorySink, SearchOptions};
use crate::error::Result;
use crate::rootsys::{dominance_leq, Family, LeviDatum, RootDatum, RootSet, Weight};
use crate::typea::{
    delta_shift_check, inverse_kostka_matrix, kostka_matrix, polarisation_branch, polarisation_oracle,
    schur_factorization_check, split_signed, Partition,
};
use crate::weightpoly::{dominant_character, nabla_bar_alternating, nabla_bar_product, weyl_character, weyl_dimension};
use crate::weylgrp::{self, coset_decompose, diagram_automorphisms, transversal_u, WeylElement};

const MAX_RECORDED: usize = 20;

/// Result of one check: how many cases ran and the first few failures.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub cases: u64,
    pub failures: Vec<String>,
    pub failure_count: u64,
    pub seconds: f64,
    /// Extra material that does not affect the verdict (e.g. the
    /// out-of-range polarisation discrepancies).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            cases: 0,
            failures: Vec::new(),
            failure_count: 0,
            seconds: 0.0,
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(describe());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED {
            self.failures.push(msg);
        }
    }

    fn merge(&mut self, other: CheckReport) {
        self.cases += other.cases;
        self.failure_count += other.failure_count;
        for f in other.failures {
            if self.failures.len() < MAX_RECORDED {
                self.failures.push(format!("{}: {f}", other.name));
            }
        }
        self.notes.extend(other.notes);
    }

    fn timed(mut self, start: Instant) -> Self {
        self.seconds = start.elapsed().as_secs_f64();
        self
    }

    /// One line: `PASS name (cases, seconds)` or `FAIL ...` with the first
    /// failure.
    pub fn line(&self) -> String {
        let head = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!("{head} {} ({} cases, {:.2}s)", self.name, self.cases, self.seconds);
        if let Some(f) = self.failures.first() {
            s.push_str(&format!(": {} failures, first: {f}", self.failure_count));
        }
        s
    }
}

fn tag(l: &LeviDatum) -> String {
    format!("{} ⊃ {}", l.parent().label(), l.describe())
}

pub fn levi(family: Family, rank: usize, sbar: &[usize]) -> Result<LeviDatum> {
    LeviDatum::new(Arc::new(RootDatum::new(family, rank)?), sbar)
}

/// A random ḡ-dominant weight of g with coordinates in [−bound, bound]
/// before straightening (spin weights included for B and D).
pub fn random_levi_dominant(levi: &LeviDatum, rng: &mut impl Rng, bound: i64) -> Weight {
    let n = levi.parent().rank();
    let half = matches!(levi.parent().family(), Family::B | Family::D) && rng.gen_bool(0.5);
    let doubled: Vec<i32> = (0..n)
        .map(|_| {
            if half {
                2 * rng.gen_range(-bound..bound) as i32 + 1
            } else {
                2 * rng.gen_range(-bound..=bound) as i32
            }
        })
        .collect();
    levi.subsystem().dominant_rep(&Weight::from_doubled(&doubled)).0
}

fn random_weight(n: usize, rng: &mut impl Rng, bound: i64) -> Weight {
    let c: Vec<i64> = (0..n).map(|_| rng.gen_range(-bound..=bound)).collect();
    Weight::from_ints(&c)
}

/// Σ R₊ = 2ρ, closedness of R̄₊ in R₊, and dominance as a partial order.
pub fn check_root_data(systems: &[(Family, usize, Vec<usize>)]) -> Result<CheckReport> {
    let start = Instant::now();
    let mut rep = CheckReport::new("root data");
    for (f, n, sbar) in systems {
        let l = levi(*f, *n, sbar)?;
        let d = l.parent();
        let sum = d.positive_roots().iter().fold(Weight::zero(*n), |a, r| &a + r);
        rep.case(sum == d.rho().scaled(2), || format!("{}: Σ R₊ ≠ 2ρ", d.label()));
        let rbar: BTreeSet<&Weight> = l.rbar_plus().iter().collect();
        for r in l.rbar_plus() {
            rep.case(d.is_positive_root(r), || format!("{}: {r} ∈ R̄₊ not in R₊", l.describe()));
        }
        for r in d.positive_roots() {
            let in_span = l.subsystem().in_positive_cone(r) || l.subsystem().in_positive_cone(&-r);
            rep.case(in_span == rbar.contains(r), || format!("{}: span mismatch at {r}", l.describe()));
        }
        let pts: Vec<Weight> = lattice_box(d, 1).into_iter().take(60).collect();
        for a in &pts {
            rep.case(dominance_leq(d, a, a, RootSet::Positive), || format!("{a} ≤ {a} fails"));
            for b in &pts {
                let ab = dominance_leq(d, a, b, RootSet::Positive);
                let ba = dominance_leq(d, b, a, RootSet::Positive);
                rep.case(!(ab && ba) || a == b, || format!("antisymmetry {a} {b}"));
                if ab {
                    for c in &pts {
                        if dominance_leq(d, b, c, RootSet::Positive) {
                            rep.case(dominance_leq(d, a, c, RootSet::Positive), || format!("transitivity {a} {b} {c}"));
                        }
                    }
                }
            }
        }
    }
    Ok(rep.timed(start))
}

/// W ≅ U × W̄, and on the coordinate box: β ∈ P̄₊ ⟺ u(β) ∈ P₊ for some
/// u ∈ U; α ∈ R̄₊ ⟺ u(α) ∈ R₊ for every u ∈ U.
pub fn check_transversal(l: &LeviDatum, bound: i32) -> Result<CheckReport> {
    let start = Instant::now();
    let mut rep = CheckReport::new(format!("transversal {}", tag(l)));
    let d = l.parent();
    let group = d.weyl_group()?;
    let u = transversal_u(l)?;
    let wbar = l.wbar_elements();
    rep.case(u.len() as u64 * wbar.len() as u64 == group.len() as u64, || {
        format!("|U|·|W̄| = {}·{} ≠ |W| = {}", u.len(), wbar.len(), group.len())
    });
    let rbar: BTreeSet<&Weight> = l.rbar_plus().iter().collect();
    let mut images = BTreeSet::new();
    for uu in &u.elements {
        for wb in wbar.iter() {
            images.insert(uu.compose(wb));
        }
    }
    rep.case(images.len() == group.len(), || format!("U·W̄ has {} elements", images.len()));
    for w in group.elements() {
        let (uu, wb) = coset_decompose(l, w);
        let wb_ok = wbar.iter().any(|x| x == &wb);
        rep.case(u.contains(&uu) && wb_ok && &uu.compose(&wb) == w, || format!("decomposition of {w:?}"));
    }
    let mut box_rep = CheckReport::new("box");
    let results: Vec<(bool, Weight)> = lattice_box(d, bound)
        .into_par_iter()
        .map(|beta| {
            let lhs = l.is_dominant(&beta);
            let rhs = u.elements.iter().any(|x| d.is_dominant(&x.act(&beta)));
            (lhs == rhs, beta)
        })
        .collect();
    for (ok, beta) in results {
        box_rep.case(ok, || format!("P̄₊ membership of {beta}"));
    }
    rep.merge(box_rep);
    for alpha in d.positive_roots().iter().flat_map(|r| [r.clone(), -r]) {
        let lhs = rbar.contains(&alpha);
        let rhs = u.elements.iter().all(|x| d.is_positive_root(&x.act(&alpha)));
        rep.case(lhs == rhs, || format!("R̄₊ membership of {alpha}"));
    }
    Ok(rep.timed(start))
}

/// u(ρ̄) = ρ̄ ⟺ u(R̄₊) = R̄₊, and u(ρ̄) ≠ ρ̄ ⟹ u(ρ̄) ≮ ρ̄, for u ∈ U.
pub fn check_rho_bar_lemmas(l: &LeviDatum) -> Result<CheckReport> {
    let start = Instant::now();
    let mut rep = CheckReport::new(format!("ρ̄ lemmas {}", tag(l)));
    let d = l.parent();
    let rho = l.rho_bar();
    let rbar: BTreeSet<&Weight> = l.rbar_plus().iter().collect();
    for u in transversal_u(l)?.elements {
        let fixes = &u.act(rho) == rho;
        let preserves = l.rbar_plus().iter().all(|r| rbar.contains(&u.act(r)));
        rep.case(fixes == preserves, || format!("{u:?}: fixes ρ̄ {fixes}, preserves R̄₊ {preserves}"));
        if !fixes {
            let image = u.act(rho);
            rep.case(!dominance_leq(d, &image, rho, RootSet::Positive), || format!("{u:?}: u(ρ̄) < ρ̄"));
        }
    }
    Ok(rep.timed(start))
}

/// Sampled: γ ⪯ γ′ ⟹ u(γ) ≤ u(γ′), and γ ∉ P̄₊ ⟹ u(γ) ∉ P₊, for u ∈ U.
pub fn check_transversal_sampled(l: &LeviDatum, seed: u64, samples: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let mut rep = CheckReport::new(format!("sampled transversal lemmas {}", tag(l)));
    let d = l.parent();
    let n = d.rank();
    let u = transversal_u(l)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let simple: Vec<Weight> = l.subsystem().simple_roots().to_vec();
    for _ in 0..samples {
        let g = random_weight(n, &mut rng, 4);
        let mut g2 = g.clone();
        for a in &simple {
            g2 = &g2 + &a.scaled(rng.gen_range(0..3));
        }
        for x in &u.elements {
            rep.case(dominance_leq(d, &x.act(&g), &x.act(&g2), RootSet::Positive), || {
                format!("{x:?}: {g} ⪯ {g2} not preserved")
            });
        }
        if !l.is_dominant(&g) {
            for x in &u.elements {
                rep.case(!d.is_dominant(&x.act(&g)), || format!("{x:?}: {g} ∉ P̄₊ but u(γ) ∈ P₊"));
            }
        }
    }
    Ok(rep.timed(start))
}

/// ε is a homomorphism and W preserves the pairing (sampled pairs).
pub fn check_weyl_group(datum: &RootDatum, seed: u64, samples: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let mut rep = CheckReport::new(format!("Weyl group {}", datum.label()));
    let group = datum.weyl_group()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let els = group.elements();
    for _ in 0..samples {
        let a = &els[rng.gen_range(0..els.len())];
        let b = &els[rng.gen_range(0..els.len())];
        rep.case(a.compose(b).sign() == a.sign() * b.sign(), || format!("ε({a:?}∘{b:?})"));
        let x = random_weight(datum.rank(), &mut rng, 5);
        let y = random_weight(datum.rank(), &mut rng, 5);
        rep.case(a.act(&x).dot4(&a.act(&y)) == x.dot4(&y), || format!("{a:?} does not preserve ({x},{y})"));
    }
    Ok(rep.timed(start))
}

/// W-symmetry and dimension of characters, and both forms of ▽̄.
pub fn check_characters(l: &LeviDatum, bound: i32) -> Result<CheckReport> {
    let start = Instant::now();
    let mut rep = CheckReport::new(format!("characters {}", tag(l)));
    let d = l.parent();
    let group = d.weyl_group()?;
    for lam in dominant_box(d, bound) {
        let ch = weyl_character(d, &lam)?;
        let dim: i64 = ch.augmentation();
        rep.case(dim as u128 == weyl_dimension(d.system(), &lam), || format!("dimension of V({lam})"));
        for w in group.elements().iter().step_by((group.len() / 24).max(1)) {
            rep.case(ch.act(w) == ch, || format!("V({lam}) not {w:?}-invariant"));
        }
    }
    rep.case(nabla_bar_product(l) == nabla_bar_alternating(l), || "▽̄ forms differ".into());
    Ok(rep.timed(start))
}

/// m_μ^λ from the alternating sum against the restriction oracle, for every
/// dominant λ and ḡ-dominant μ with coordinates in [−bound, bound].
pub fn check_oracle(l: &LeviDatum, bound: i32) -> Result<CheckReport> {
    let start = Instant::now();
    let mut rep = CheckReport::new(format!("Th_multi vs restriction {}", tag(l)));
    let d = l.parent();
    let brancher = Brancher::new(l);
    let mus = levi_dominant_box(l, bound);
    let lambdas = dominant_box(d, bound);
    let rows: Vec<Result<Vec<(Weight, Weight, u64, u64)>>> = lambdas
        .par_iter()
        .map(|lam| {
            let res = restrict(l, lam)?;
            // the weights of V(λ) stay inside the box
            if res.entries.keys().any(|m| m.doubled().iter().any(|&c| c.abs() > 2 * bound)) {
                return Err(crate::error::Error::Invariant(format!("restriction of {lam} leaves the box")));
            }
            let mut bad = Vec::new();
            for mu in &mus {
                let want = res.get(mu);
                let got = brancher.multiplicity(lam, mu)?;
                if want != got {
                    bad.push((lam.clone(), mu.clone(), got, want));
                }
            }
            Ok(bad)
        })
        .collect();
    for row in rows {
        rep.cases += mus.len() as u64;
        for (lam, mu, got, want) in row? {
            rep.fail(format!("λ={lam} μ={mu}: {got} vs oracle {want}"));
        }
    }
    Ok(rep.timed(start))
}

/// M_{u(μ)} = M_μ for every diagram automorphism u, on random μ.
pub fn check_prop_direct(l: &LeviDatum, seed: u64, samples: usize, bound: i64) -> Result<CheckReport> {
    let start = Instant::now();
    let mut rep = CheckReport::new(format!("diagram automorphisms preserve M {}", tag(l)));
    let autos = diagram_automorphisms(l)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mus: Vec<Weight> = (0..samples).map(|_| random_levi_dominant(l, &mut rng, bound)).collect();
    let out: Vec<Result<Vec<(Weight, WeylElement, bool)>>> = mus
        .par_iter()
        .map(|mu| {
            let m = build_m(l, mu)?;
            autos
                .iter()
                .map(|u| {
                    let other = build_m(l, &u.act(mu))?;
                    Ok((mu.clone(), u.clone(), other.m_coefficients() == m.m_coefficients()))
                })
                .collect()
        })
        .collect();
    for r in out {
        for (mu, u, ok) in r? {
            rep.case(ok, || format!("μ={mu} u={u:?}"));
        }
    }
    Ok(rep.timed(start))
}

/// The sum and product forms of M_μ agree on random μ.
pub fn check_m_forms(l: &LeviDatum, seed: u64, samples: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let mut rep = CheckReport::new(format!("M sum form = product form {}", tag(l)));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let mu = random_levi_dominant(l, &mut rng, 3);
        let r = check_m_dual(l, &mu);
        rep.case(r.is_ok(), || format!("μ={mu}: {}", r.err().map(|e| e.to_string()).unwrap_or_default()));
    }
    Ok(rep.timed(start))
}

/// Coefficient ε(w̄₀) at Λ = dom(μ + 2ρ̄), every other term below Λ.
pub fn check_leading_terms(l: &LeviDatum, seed: u64, samples: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let mut rep = CheckReport::new(format!("leading term {}", tag(l)));
    let d = l.parent();
    let eps = if l.rbar_plus().len().is_multiple_of(2) { 1 } else { -1 };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mus: Vec<Weight> = (0..samples).map(|_| random_levi_dominant(l, &mut rng, 4)).collect();
    let out: Vec<(Weight, std::result::Result<(bool, String), String>)> = mus
        .par_iter()
        .map(|mu| {
            let r = match leading_term(l, mu) {
                Ok(t) => {
                    let lam = weylgrp::dominant_weight(d, &(mu + &l.rho_bar().scaled(2)));
                    Ok((t.lambda == lam && t.coefficient == eps, format!("Λ={} c={}", t.lambda, t.coefficient)))
                }
                Err(e) => Err(e.to_string()),
            };
            (mu.clone(), r)
        })
        .collect();
    for (mu, r) in out {
        match r {
            Ok((ok, what)) => rep.case(ok, || format!("μ={mu}: {what}")),
            Err(e) => rep.case(false, || format!("μ={mu}: {e}")),
        }
    }
    Ok(rep.timed(start))
}

/// m_μ^λ = c^λ_{μ⁽¹⁾…μ⁽ʳ⁾} for every μ with coordinates in [1, max] and
/// every partition λ of |μ|.
pub fn check_schur_factorization(l: &LeviDatum, max: i64) -> Result<CheckReport> {
    let start = Instant::now();
    let mut rep = CheckReport::new(format!("Schur factorization {}", tag(l)));
    let n = l.parent().rank();
    let mut mus = Vec::new();
    let mut cur = vec![1i64; n];
    loop {
        let w = Weight::from_ints(&cur);
        if l.is_dominant(&w) {
            mus.push(w);
        }
        let mut i = 0;
        while i < n && cur[i] == max {
            cur[i] = 1;
            i += 1;
        }
        if i == n {
            break;
        }
        cur[i] += 1;
    }
    let reports: Vec<_> = mus.par_iter().map(|mu| schur_factorization_check(l, mu, None)).collect();
    for r in reports {
        let r = r?;
        rep.cases += r.checked as u64;
        for (lam, m, c) in &r.mismatches {
            rep.fail(format!("μ={} λ={lam}: {m} vs {c}", r.mu));
        }
    }
    Ok(rep.timed(start))
}

/// m_{μ+aδ}^{λ+aδ} = m_μ^λ on random instances.
pub fn check_delta_shift(l: &LeviDatum, seed: u64, samples: usize) -> Result<CheckReport> {
    let start = Instant::now();
    let mut rep = CheckReport::new(format!("δ-shift {}", tag(l)));
    let d = l.parent();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let lam = weylgrp::dominant_weight(d, &random_weight(d.rank(), &mut rng, 3));
        let mu = random_levi_dominant(l, &mut rng, 3);
        let a = rng.gen_range(0..4);
        let ok = delta_shift_check(l, &lam, &mu, a)?;
        rep.case(ok, || format!("λ={lam} μ={mu} a={a}"));
    }
    Ok(rep.timed(start))
}

/// Littlewood's sums against the restriction oracle for gl_n in a classical
/// group: asserted for |λ| ≤ n, recorded (not asserted) for n < |λ| ≤ n + extra.
pub fn check_polarisation(family: Family, n: usize, mu_total: u32, extra: u32) -> Result<CheckReport> {
    let start = Instant::now();
    let mut rep = CheckReport::new(format!("polarisation {family}{n}"));
    let mus: Vec<Weight> = {
        let l = levi(family, n, &(1..n).collect::<Vec<_>>())?;
        levi_dominant_box(&l, mu_total as i32)
            .into_iter()
            .filter(|m| m.is_integral())
            .filter(|m| split_signed(m).map(|s| s.total() <= mu_total).unwrap_or(false))
            .collect()
    };
    for size in 0..=n as u32 + extra {
        for lam in Partition::all_of(size, n) {
            let oracle = polarisation_oracle(family, n, &lam)?;
            let mut seen: BTreeSet<Weight> = BTreeSet::new();
            for mu in mus.iter().chain(oracle.keys()) {
                if !mu.is_integral() || !seen.insert(mu.clone()) {
                    continue;
                }
                let want = oracle.get(mu).copied().unwrap_or(0);
                let got = polarisation_branch(family, n, mu, &lam)?;
                let in_range = size <= n as u32;
                if in_range {
                    if !mus.contains(mu) {
                        continue;
                    }
                    rep.case(got == want, || format!("λ={lam} μ={mu}: {got} vs oracle {want}"));
                } else if got != want {
                    rep.notes.push(format!("{family}{n} λ={lam} μ={mu}: Littlewood {got}, restriction {want}"));
                }
            }
        }
    }
    Ok(rep.timed(start))
}

/// A bounded conjecture scan: no counterexamples, and every equal pair
/// carries a relating automorphism.
pub fn check_scan(l: &LeviDatum, bound: i32) -> Result<CheckReport> {
    let start = Instant::now();
    let mut rep = CheckReport::new(format!("scan {} bound {bound}", tag(l)));
    let mut sink = MemorySink::default();
    let summary = search_box(l, &SearchOptions::new(bound), &mut sink)?;
    rep.cases = summary.counts.pairs_tested;
    for v in &sink.verdicts {
        if v.counterexample || v.auto.is_none() {
            rep.fail(format!("μ={} ν={} equal without automorphism", v.mu, v.nu));
        }
    }
    rep.notes.push(format!(
        "{}: {} weights, {} groups, {} equal pairs, {} counterexamples",
        summary.system, summary.weights, summary.groups, summary.counts.equal_pairs, summary.counts.counterexamples
    ));
    Ok(rep.timed(start))
}

/// K from tableaux equals K from Freudenthal on gl_n, and K·K⁻¹ = I, for
/// every size up to `max`.
pub fn check_kostka(max: u32) -> Result<CheckReport> {
    let start = Instant::now();
    let mut rep = CheckReport::new("Kostka inversion");
    for n in 1..=max {
        let (parts, k) = kostka_matrix(n, n as usize);
        let (_, inv) = inverse_kostka_matrix(n, n as usize);
        let gl = RootDatum::new(Family::GL, n as usize)?;
        let rows: Vec<Result<Vec<i64>>> = parts
            .par_iter()
            .map(|lam| {
                let ch = dominant_character(gl.system(), &lam.to_weight(n as usize)?)?;
                parts
                    .iter()
                    .map(|mu| Ok(ch.multiplicity_of_dominant(&mu.to_weight(n as usize)?) as i64))
                    .collect()
            })
            .collect();
        let freud: Vec<Vec<i64>> = rows.into_iter().collect::<Result<_>>()?;
        let d = parts.len();
        for i in 0..d {
            for j in 0..d {
                rep.case(freud[i][j] == k[i][j], || {
                    format!("K[{},{}]: Freudenthal {} vs tableaux {}", parts[i], parts[j], freud[i][j], k[i][j])
                });
                let s: i64 = (0..d).map(|t| freud[i][t] * inv[t][j]).sum();
                rep.case(s == i64::from(i == j), || format!("(K·K⁻¹)[{},{}] = {s}", parts[i], parts[j]));
            }
        }
    }
    Ok(rep.timed(start))
}

/// Everything `levi verify` runs, at desk scale unless `full` is set.
pub fn suite(seed: u64, full: bool) -> Result<Vec<CheckReport>> {
    let scale: usize = if full { 4 } else { 1 };
    let step = scale as i32;
    let mut out = Vec::new();
    let systems: Vec<(Family, usize, Vec<usize>)> = vec![
        (Family::GL, 4, vec![1, 3]),
        (Family::B, 3, vec![1, 2]),
        (Family::C, 3, vec![1, 2]),
        (Family::D, 4, vec![1, 2, 3]),
    ];
    out.push(check_root_data(&systems)?);
    for (f, n, s) in &systems {
        let l = levi(*f, *n, s)?;
        out.push(check_transversal(&l, 2 + step)?);
        out.push(check_rho_bar_lemmas(&l)?);
        out.push(check_transversal_sampled(&l, seed, 50 * scale)?);
        out.push(check_weyl_group(l.parent(), seed, 200 * scale)?);
        out.push(check_characters(&l, 1 + step / 2)?);
        out.push(check_m_forms(&l, seed, 5 * scale)?);
        out.push(check_leading_terms(&l, seed, 20 * scale)?);
        out.push(check_prop_direct(&l, seed, 10 * scale, 3)?);
        out.push(check_oracle(&l, 1 + step / 2)?);
    }
    let gl = levi(Family::GL, 4, &[1, 3])?;
    out.push(check_schur_factorization(&gl, 2 + scale as i64 / 4)?);
    out.push(check_delta_shift(&gl, seed, 25 * scale)?);
    for (f, n) in [(Family::B, 2), (Family::C, 2), (Family::C, 3)] {
        out.push(check_polarisation(f, n, 4, 0)?);
    }
    out.push(check_scan(&levi(Family::C, 2, &[1])?, 2 + step / 2)?);
    out.push(check_kostka(4 + scale as u32)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_weights_are_levi_dominant() {
        let l = levi(Family::B, 3, &[1, 3]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let w = random_levi_dominant(&l, &mut rng, 3);
            assert!(l.is_dominant(&w) && l.parent().check_weight(&w).is_ok(), "{w}");
        }
    }

    #[test]
    fn small_checks_pass() {
        let l = levi(Family::C, 2, &[1]).unwrap();
        for r in [
            check_transversal(&l, 3).unwrap(),
            check_rho_bar_lemmas(&l).unwrap(),
            check_transversal_sampled(&l, 1, 30).unwrap(),
            check_oracle(&l, 2).unwrap(),
            check_leading_terms(&l, 1, 20).unwrap(),
            check_prop_direct(&l, 1, 10, 3).unwrap(),
            check_kostka(4).unwrap(),
        ] {
            assert!(r.passed(), "{}", r.line());
            assert!(r.cases > 0);
        }
    }

    #[test]
    fn failure_lines_name_the_case() {
        let mut r = CheckReport::new("x");
        r.case(false, || "boom".into());
        assert!(!r.passed());
        assert!(r.line().starts_with("FAIL x (1 cases"));
        assert!(r.line().contains("boom"));
    }
}
