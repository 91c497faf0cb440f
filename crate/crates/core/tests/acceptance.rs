//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach the test log.

use std::fs;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use levi_branching::checks::{self, levi, CheckReport};
use levi_branching::equivalence::induced_equal;
use levi_branching::error::Result;
use levi_branching::rootsys::{Family, Weight};
use levi_branching::weylgrp::{diagram_automorphisms, dominant_weight};

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_reports(reports: &[CheckReport]) -> Outcome {
    let ok = reports.iter().all(CheckReport::passed);
    let cases: u64 = reports.iter().map(|r| r.cases).sum();
    let mut detail = format!("{} checks, {cases} cases", reports.len());
    if let Some(bad) = reports.iter().find(|r| !r.passed()) {
        detail.push_str(&format!("; {}", bad.line()));
    }
    Outcome { ok, detail }
}

fn w(c: &[i64]) -> Weight {
    Weight::from_ints(c)
}

fn criterion_1() -> Result<Outcome> {
    let l = levi(Family::GL, 6, &[1, 2, 3, 5])?;
    let d = l.parent();
    let (mu, nu) = (w(&[5, 2, 2, 1, 4, 3]), w(&[5, 4, 3, 1, 2, 2]));
    let a = dominant_weight(d, &mu) == dominant_weight(d, &nu);
    let two_rho = l.rho_bar().scaled(2);
    let (ms, ns) = (&mu + &two_rho, &nu + &two_rho);
    let b = ms == w(&[8, 3, 1, -2, 5, 2]) && ns == w(&[8, 5, 2, -2, 3, 1]) && dominant_weight(d, &ms) == dominant_weight(d, &ns);
    let c = !induced_equal(&l, &mu, &nu)?;
    Ok(Outcome {
        ok: a && b && c,
        detail: format!("same dom(μ) {a}, same dom(μ+2ρ̄) {b}, H_μ ≠ H_ν {c}"),
    })
}

fn criterion_2() -> Result<Outcome> {
    let mut reports = Vec::new();
    let mut autos = Vec::new();
    for (f, n, s) in [(Family::GL, 4, vec![1, 3]), (Family::GL, 6, vec![1, 2, 4, 5]), (Family::C, 6, vec![1, 2, 4, 5, 6])] {
        let l = levi(f, n, &s)?;
        autos.push(diagram_automorphisms(&l)?.len());
        reports.push(checks::check_prop_direct(&l, 2024, 50, 4)?);
    }
    let mut o = from_reports(&reports);
    // each Levi has a nontrivial automorphism, so the check is not vacuous
    o.ok &= autos.iter().all(|&a| a > 1);
    o.detail.push_str(&format!("; automorphism counts {autos:?}"));
    Ok(o)
}

fn oracle_systems() -> Vec<(Family, usize, Vec<usize>)> {
    vec![
        (Family::C, 3, vec![1, 2]),
        (Family::B, 3, vec![1, 2]),
        (Family::D, 4, vec![1, 2, 3]),
        (Family::GL, 4, vec![1, 3]),
        (Family::GL, 4, vec![1, 2]),
    ]
}

fn criterion_3() -> Result<Outcome> {
    let reports = oracle_systems()
        .into_iter()
        .map(|(f, n, s)| checks::check_oracle(&levi(f, n, &s)?, 3))
        .collect::<Result<Vec<_>>>()?;
    Ok(from_reports(&reports))
}

fn criterion_4() -> Result<Outcome> {
    let mut reports = Vec::new();
    for (f, n, s) in [
        (Family::C, 3, vec![1, 2]),
        (Family::C, 3, vec![2, 3]),
        (Family::B, 3, vec![1, 2]),
        (Family::B, 3, vec![1, 3]),
        (Family::D, 4, vec![1, 2, 3]),
        (Family::D, 4, vec![2, 3, 4]),
    ] {
        reports.push(checks::check_transversal(&levi(f, n, &s)?, 5)?);
    }
    Ok(from_reports(&reports))
}

fn criterion_5() -> Result<Outcome> {
    let mut systems = oracle_systems();
    systems.push((Family::GL, 6, vec![1, 2, 3, 5]));
    systems.push((Family::C, 6, vec![1, 2, 4, 5, 6]));
    let reports = systems
        .into_iter()
        .map(|(f, n, s)| checks::check_leading_terms(&levi(f, n, &s)?, 55, 200))
        .collect::<Result<Vec<_>>>()?;
    Ok(from_reports(&reports))
}

fn criterion_6() -> Result<Outcome> {
    let l = levi(Family::GL, 4, &[1, 3])?;
    Ok(from_reports(&[checks::check_schur_factorization(&l, 3)?, checks::check_delta_shift(&l, 66, 100)?]))
}

fn criterion_7() -> Result<Outcome> {
    let mut reports = Vec::new();
    for (f, n) in [(Family::B, 2), (Family::C, 2), (Family::C, 3), (Family::D, 4)] {
        reports.push(checks::check_polarisation(f, n, 4, 2)?);
    }
    let notes: Vec<String> = reports.iter().flat_map(|r| r.notes.clone()).collect();
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("polarisation_out_of_range.txt");
    let mut text = String::from("# Littlewood sum vs restriction for n < |λ| ≤ n + 2 (not asserted)\n");
    for n in &notes {
        text.push_str(n);
        text.push('\n');
    }
    fs::write(&path, text).map_err(|e| levi_branching::error::Error::io(&path, e))?;
    let mut o = from_reports(&reports);
    o.detail
        .push_str(&format!("; {} out-of-range discrepancies logged to {}", notes.len(), path.display()));
    Ok(o)
}

fn criterion_8() -> Result<Outcome> {
    let mut reports = Vec::new();
    for (l, bound) in [
        (levi(Family::C, 2, &[1])?, 4),
        (levi(Family::C, 3, &[1, 2])?, 3),
        (levi(Family::GL, 4, &[1, 3])?, 3),
        (levi(Family::B, 3, &[1, 3])?, 3),
    ] {
        reports.push(checks::check_scan(&l, bound)?);
    }
    let mut o = from_reports(&reports);
    for r in &reports {
        o.detail.push_str(&format!("; {}", r.notes.join(" ")));
    }
    Ok(o)
}

fn criterion_9() -> Result<Outcome> {
    Ok(from_reports(&[checks::check_kostka(8)?]))
}

type Criterion = (u32, &'static str, fn() -> Result<Outcome>, Duration);

fn main() {
    let list: Vec<Criterion> = vec![
        (1, "remark pair: same orbits, different induced characters", criterion_1, Duration::from_secs(5)),
        (2, "diagram automorphisms preserve M", criterion_2, Duration::from_secs(120)),
        (3, "alternating sum = restriction oracle, λ box 3", criterion_3, Duration::from_secs(600)),
        (4, "W = U × W̄ and the U-membership assertions, box 5", criterion_4, Duration::MAX),
        (5, "leading term ε(w̄₀) at dom(μ+2ρ̄), others below", criterion_5, Duration::MAX),
        (6, "type A Schur factorization and δ-shift", criterion_6, Duration::MAX),
        (7, "polarisation = restriction oracle for |λ| ≤ n", criterion_7, Duration::MAX),
        (8, "bounded scans: no counterexamples", criterion_8, Duration::from_secs(1800)),
        (9, "Kostka inversion, sizes ≤ 8", criterion_9, Duration::MAX),
    ];
    let mut failed = 0;
    for (id, what, run, limit) in list {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(o) => (o.ok && took <= limit, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        let timing = if limit == Duration::MAX {
            format!("{:.2}s", took.as_secs_f64())
        } else {
            format!("{:.2}s, limit {}s", took.as_secs_f64(), limit.as_secs())
        };
        println!("criterion {id}: {} {what} ({timing}) {detail}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
