//! Equality of induced characters H_μ = H_ν through M-functions, relating
//! diagram automorphisms, and bounded scans for pairs that are equal without
//! being related by one.

use std::collections::{BTreeMap, HashMap};
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::branching::{build_m_unchecked, check_levi_dominant, common_chamber, e_set, levi_dominant_box, MFunction};
use crate::error::{Error, Result};
use crate::rootsys::{Family, LeviDatum, Weight};
use crate::weylgrp::{self, WeylElement};

/// Sufficient conditions under which equality of induced characters forces
/// a relating diagram automorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Coverage {
    SameChamber,
    FarFromWalls,
    #[serde(rename = "MU_2RHO_DOMINANT")]
    Mu2RhoDominant,
    TypeA,
    Polarisation,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairVerdict {
    pub mu: Weight,
    pub nu: Weight,
    pub equal: bool,
    pub auto: Option<WeylElement>,
    pub covered: Vec<Coverage>,
    pub counterexample: bool,
}

impl PairVerdict {
    pub fn is_covered(&self) -> bool {
        self.covered.iter().any(|c| *c != Coverage::None)
    }
}

/// Comparison context for one Levi: caches M-functions and the group of
/// diagram automorphisms.
pub struct Comparator {
    levi: LeviDatum,
    autos: OnceLock<Vec<WeylElement>>,
    minus_w0bar: Option<WeylElement>,
    cache: Mutex<HashMap<Weight, Arc<MFunction>>>,
}

impl Comparator {
    pub fn new(levi: &LeviDatum) -> Self {
        Comparator {
            minus_w0bar: polarisation_element(levi),
            levi: levi.clone(),
            autos: OnceLock::new(),
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn levi(&self) -> &LeviDatum {
        &self.levi
    }

    /// {u ∈ W : u(R̄₊) = R̄₊}, enumerated once.
    pub fn autos(&self) -> Result<&[WeylElement]> {
        if let Some(a) = self.autos.get() {
            return Ok(a);
        }
        let a = weylgrp::diagram_automorphisms(&self.levi)?;
        Ok(self.autos.get_or_init(|| a))
    }

    pub fn m_function(&self, mu: &Weight) -> Result<Arc<MFunction>> {
        check_levi_dominant(&self.levi, mu)?;
        if let Some(m) = self.cache.lock().expect("cache lock").get(mu) {
            return Ok(m.clone());
        }
        let m = Arc::new(build_m_unchecked(&self.levi, mu));
        self.cache.lock().expect("cache lock").insert(mu.clone(), m.clone());
        Ok(m)
    }

    /// H_μ = H_ν, decided by M_μ = M_ν after the W-orbit and leading-term
    /// filters.
    pub fn induced_equal(&self, mu: &Weight, nu: &Weight) -> Result<bool> {
        check_levi_dominant(&self.levi, mu)?;
        check_levi_dominant(&self.levi, nu)?;
        if mu == nu {
            return Ok(true);
        }
        let datum = self.levi.parent();
        if weylgrp::dominant_weight(datum, mu) != weylgrp::dominant_weight(datum, nu) {
            return Ok(false);
        }
        let two_rho = self.levi.rho_bar().scaled(2);
        if weylgrp::dominant_weight(datum, &(mu + &two_rho)) != weylgrp::dominant_weight(datum, &(nu + &two_rho)) {
            return Ok(false);
        }
        Ok(self.m_function(mu)?.m_coefficients() == self.m_function(nu)?.m_coefficients())
    }

    /// Some u with u(R̄₊) = R̄₊ and u(μ) = ν.
    pub fn relating_automorphism(&self, mu: &Weight, nu: &Weight) -> Result<Option<WeylElement>> {
        Ok(self.autos()?.iter().find(|u| &u.act(mu) == nu).cloned())
    }

    /// The sufficient conditions that hold for the pair.
    pub fn coverage(&self, mu: &Weight, nu: &Weight) -> Result<Vec<Coverage>> {
        let datum = self.levi.parent();
        let mut out = Vec::new();
        if common_chamber(datum, &[mu.clone(), nu.clone()]).is_some() {
            out.push(Coverage::SameChamber);
        }
        let far = |x: &Weight| -> Result<bool> { Ok(common_chamber(datum, &e_set(&self.levi, x)?).is_some()) };
        if far(mu)? && far(nu)? {
            out.push(Coverage::FarFromWalls);
        }
        let two_rho = self.levi.rho_bar().scaled(2);
        if datum.is_dominant(&(mu + &two_rho)) || datum.is_dominant(&(nu + &two_rho)) {
            out.push(Coverage::Mu2RhoDominant);
        }
        if datum.family() == Family::GL {
            out.push(Coverage::TypeA);
        }
        if self.minus_w0bar.is_some() {
            out.push(Coverage::Polarisation);
        }
        if out.is_empty() {
            out.push(Coverage::None);
        }
        Ok(out)
    }

    pub fn classify(&self, mu: &Weight, nu: &Weight) -> Result<PairVerdict> {
        let equal = self.induced_equal(mu, nu)?;
        let auto = if equal { self.relating_automorphism(mu, nu)? } else { None };
        let v = PairVerdict {
            mu: mu.clone(),
            nu: nu.clone(),
            equal,
            counterexample: equal && auto.is_none(),
            auto,
            covered: self.coverage(mu, nu)?,
        };
        if v.counterexample && v.is_covered() {
            return Err(Error::Invariant(format!(
                "pair {mu}, {nu} is covered by {:?} but has no relating automorphism",
                v.covered
            )));
        }
        Ok(v)
    }
}

/// −w̄₀ for ḡ = gl_n inside B_n, C_n or D_n, when it lies in W: the map
/// εi ↦ −ε_{n+1−i}. For D_n with n odd it has an odd number of sign changes
/// and is not in W.
pub fn polarisation_element(levi: &LeviDatum) -> Option<WeylElement> {
    if !levi.is_standard_gl_levi() {
        return None;
    }
    let n = levi.parent().rank();
    let perm: Vec<usize> = (0..n).rev().collect();
    let w = WeylElement::new(&perm, &vec![-1; n]).expect("valid signed permutation");
    w.belongs_to(levi.parent().family()).then_some(w)
}

pub fn induced_equal(levi: &LeviDatum, mu: &Weight, nu: &Weight) -> Result<bool> {
    Comparator::new(levi).induced_equal(mu, nu)
}

pub fn relating_automorphism(levi: &LeviDatum, mu: &Weight, nu: &Weight) -> Result<Option<WeylElement>> {
    check_levi_dominant(levi, mu)?;
    check_levi_dominant(levi, nu)?;
    Comparator::new(levi).relating_automorphism(mu, nu)
}

pub fn classify_pair(levi: &LeviDatum, mu: &Weight, nu: &Weight) -> Result<PairVerdict> {
    Comparator::new(levi).classify(mu, nu)
}

/// Running totals of a scan.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchCounts {
    pub pairs_tested: u64,
    pub equal_pairs: u64,
    pub autos_found: u64,
    pub counterexamples: u64,
}

impl SearchCounts {
    fn absorb(&mut self, other: &SearchCounts) {
        self.pairs_tested += other.pairs_tested;
        self.equal_pairs += other.equal_pairs;
        self.autos_found += other.autos_found;
        self.counterexamples += other.counterexamples;
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchSummary {
    pub system: String,
    pub levi: Vec<usize>,
    pub levi_type: String,
    pub bound: i32,
    pub weights: usize,
    pub groups: usize,
    pub groups_done: usize,
    pub complete: bool,
    pub diagram_automorphisms: usize,
    #[serde(flatten)]
    pub counts: SearchCounts,
    pub elapsed_seconds: f64,
}

/// Destination for verdicts. Groups arrive in order; `resume_point` tells
/// the scan how many groups were already recorded.
pub trait ReportSink {
    fn resume_point(&mut self) -> Result<Option<(usize, SearchCounts)>>;
    fn record_group(&mut self, index: usize, key: &Weight, verdicts: &[PairVerdict], counts: &SearchCounts) -> Result<()>;
}

/// Keeps verdicts in memory.
#[derive(Default)]
pub struct MemorySink {
    pub verdicts: Vec<PairVerdict>,
}

impl ReportSink for MemorySink {
    fn resume_point(&mut self) -> Result<Option<(usize, SearchCounts)>> {
        Ok(None)
    }

    fn record_group(&mut self, _: usize, _: &Weight, verdicts: &[PairVerdict], _: &SearchCounts) -> Result<()> {
        self.verdicts.extend_from_slice(verdicts);
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Progress {
    next_group: usize,
    last_key: Weight,
    bytes: u64,
    counts: SearchCounts,
}

/// Append-only JSONL certificate file with a `.progress` sidecar recording
/// the last completed group, so an interrupted scan can be resumed and
/// reproduces the same file.
pub struct CertificateLog {
    path: PathBuf,
    progress: PathBuf,
    file: Option<File>,
    resume: bool,
}

impl CertificateLog {
    /// `resume = false` truncates any previous run.
    pub fn new(path: impl Into<PathBuf>, resume: bool) -> Self {
        let path = path.into();
        let mut progress = path.clone().into_os_string();
        progress.push(".progress");
        CertificateLog {
            path,
            progress: PathBuf::from(progress),
            file: None,
            resume,
        }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Reads back every record in the log.
    pub fn read_all(path: &Path) -> Result<Vec<PairVerdict>> {
        let f = File::open(path).map_err(|e| Error::io(path, e))?;
        BufReader::new(f)
            .lines()
            .map(|l| {
                let l = l.map_err(|e| Error::io(path, e))?;
                Ok(serde_json::from_str(&l)?)
            })
            .collect()
    }
}

impl ReportSink for CertificateLog {
    fn resume_point(&mut self) -> Result<Option<(usize, SearchCounts)>> {
        let mut state = None;
        let mut len = 0;
        if self.resume && self.progress.exists() {
            let text = fs::read_to_string(&self.progress).map_err(|e| Error::io(&self.progress, e))?;
            let p: Progress = serde_json::from_str(&text)?;
            len = p.bytes;
            state = Some((p.next_group, p.counts));
        }
        let file = OpenOptions::new()
            .create(true)
            .write(true)
            .truncate(false)
            .open(&self.path)
            .map_err(|e| Error::io(&self.path, e))?;
        // drop anything written after the last recorded group
        file.set_len(len).map_err(|e| Error::io(&self.path, e))?;
        let file = OpenOptions::new()
            .append(true)
            .open(&self.path)
            .map_err(|e| Error::io(&self.path, e))?;
        self.file = Some(file);
        if state.is_none() && self.progress.exists() {
            fs::remove_file(&self.progress).map_err(|e| Error::io(&self.progress, e))?;
        }
        Ok(state)
    }

    fn record_group(&mut self, index: usize, key: &Weight, verdicts: &[PairVerdict], counts: &SearchCounts) -> Result<()> {
        let file = self.file.as_mut().ok_or_else(|| Error::Config("certificate log not opened".into()))?;
        let mut buf = String::new();
        for v in verdicts {
            buf.push_str(&serde_json::to_string(v)?);
            buf.push('\n');
        }
        file.write_all(buf.as_bytes()).map_err(|e| Error::io(&self.path, e))?;
        file.flush().map_err(|e| Error::io(&self.path, e))?;
        let bytes = file.metadata().map_err(|e| Error::io(&self.path, e))?.len();
        let p = Progress {
            next_group: index + 1,
            last_key: key.clone(),
            bytes,
            counts: counts.clone(),
        };
        let tmp = self.progress.with_extension("progress.tmp");
        fs::write(&tmp, serde_json::to_string(&p)?).map_err(|e| Error::io(&tmp, e))?;
        fs::rename(&tmp, &self.progress).map_err(|e| Error::io(&self.progress, e))?;
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub bound: i32,
    /// Stop after this many groups in this invocation (the scan can be
    /// resumed later).
    pub max_groups: Option<usize>,
    /// Groups evaluated in parallel between two sink writes.
    pub batch: usize,
}

impl SearchOptions {
    pub fn new(bound: i32) -> Self {
        SearchOptions {
            bound,
            max_groups: None,
            batch: 64,
        }
    }
}

fn scan_group(cmp: &Comparator, members: &[Weight]) -> Result<(Vec<PairVerdict>, SearchCounts)> {
    let mut counts = SearchCounts::default();
    let mut verdicts = Vec::new();
    let ms: Vec<Arc<MFunction>> = members
        .iter()
        .map(|m| cmp.m_function(m))
        .collect::<Result<_>>()?;
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            counts.pairs_tested += 1;
            if ms[i].m_coefficients() != ms[j].m_coefficients() {
                continue;
            }
            let v = cmp.classify(&members[i], &members[j])?;
            debug_assert!(v.equal);
            counts.equal_pairs += 1;
            if v.auto.is_some() {
                counts.autos_found += 1;
            }
            if v.counterexample {
                counts.counterexamples += 1;
            }
            verdicts.push(v);
        }
    }
    Ok((verdicts, counts))
}

/// Scans {μ ∈ P̄₊ : |μ_i| ≤ bound}, comparing only weights with the same
/// dominant representative, and reports every equal pair.
pub fn search_box(levi: &LeviDatum, opts: &SearchOptions, sink: &mut dyn ReportSink) -> Result<SearchSummary> {
    let start = Instant::now();
    let cmp = Comparator::new(levi);
    let n_autos = cmp.autos()?.len();
    let datum = levi.parent();
    let weights = levi_dominant_box(levi, opts.bound);
    let mut groups: BTreeMap<Weight, Vec<Weight>> = BTreeMap::new();
    for mu in &weights {
        groups.entry(weylgrp::dominant_weight(datum, mu)).or_default().push(mu.clone());
    }
    let groups: Vec<(Weight, Vec<Weight>)> = groups.into_iter().filter(|g| g.1.len() > 1).collect();

    let (first, mut counts) = sink.resume_point()?.unwrap_or_default();
    let stop = opts
        .max_groups
        .map_or(groups.len(), |m| (first + m).min(groups.len()));
    let mut done = first.min(groups.len());
    while done < stop {
        let end = (done + opts.batch.max(1)).min(stop);
        let results: Vec<Result<(Vec<PairVerdict>, SearchCounts)>> = groups[done..end]
            .par_iter()
            .map(|(_, members)| scan_group(&cmp, members))
            .collect();
        for (k, r) in results.into_iter().enumerate() {
            let (verdicts, c) = r?;
            counts.absorb(&c);
            sink.record_group(done + k, &groups[done + k].0, &verdicts, &counts)?;
        }
        done = end;
    }
    Ok(SearchSummary {
        system: datum.label(),
        levi: levi.sbar(),
        levi_type: levi.describe(),
        bound: opts.bound,
        weights: weights.len(),
        groups: groups.len(),
        groups_done: done,
        complete: done == groups.len(),
        diagram_automorphisms: n_autos,
        counts,
        elapsed_seconds: start.elapsed().as_secs_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootDatum;

    fn w(c: &[i64]) -> Weight {
        Weight::from_ints(c)
    }

    fn levi(f: Family, n: usize, s: &[usize]) -> LeviDatum {
        LeviDatum::new(Arc::new(RootDatum::new(f, n).unwrap()), s).unwrap()
    }

    #[test]
    fn remark_pair_is_not_equal() {
        let l = levi(Family::GL, 6, &[1, 2, 3, 5]);
        let (mu, nu) = (w(&[5, 2, 2, 1, 4, 3]), w(&[5, 4, 3, 1, 2, 2]));
        assert!(!induced_equal(&l, &mu, &nu).unwrap());
        let v = classify_pair(&l, &mu, &nu).unwrap();
        assert!(!v.equal && !v.counterexample);
        assert!(v.covered.contains(&Coverage::TypeA));
    }

    #[test]
    fn trivial_pair() {
        let l = levi(Family::C, 3, &[1, 2]);
        let z = Weight::zero(3);
        let v = classify_pair(&l, &z, &z).unwrap();
        assert!(v.equal);
        assert!(v.auto.unwrap().is_identity());
        assert!(v.covered.contains(&Coverage::SameChamber));
    }

    #[test]
    fn block_swap_relates() {
        let l = levi(Family::GL, 4, &[1, 3]);
        let (mu, nu) = (w(&[3, 1, 2, 0]), w(&[2, 0, 3, 1]));
        assert!(induced_equal(&l, &mu, &nu).unwrap());
        let u = relating_automorphism(&l, &mu, &nu).unwrap().unwrap();
        assert_eq!(u.act(&mu), nu);
        assert!(!u.is_identity());
    }

    #[test]
    fn negate_reverse_in_type_c() {
        let l = levi(Family::C, 3, &[1, 2]);
        let mu = w(&[2, 0, -1]);
        let nu = w(&[1, 0, -2]);
        let u = relating_automorphism(&l, &mu, &nu).unwrap().unwrap();
        assert_eq!(u, polarisation_element(&l).unwrap());
        assert!(induced_equal(&l, &mu, &nu).unwrap());
    }

    #[test]
    fn polarisation_element_parity() {
        assert!(polarisation_element(&levi(Family::D, 4, &[1, 2, 3])).is_some());
        assert!(polarisation_element(&levi(Family::D, 3, &[1, 2])).is_none());
        assert!(polarisation_element(&levi(Family::B, 3, &[1, 2])).is_some());
        assert!(polarisation_element(&levi(Family::C, 3, &[1])).is_none());
    }

    #[test]
    fn small_scans() {
        let full = levi(Family::C, 2, &[1, 2]);
        let s = search_box(&full, &SearchOptions::new(2), &mut MemorySink::default()).unwrap();
        assert_eq!(s.groups, 0);
        assert_eq!(s.counts.equal_pairs, 0);

        let l = levi(Family::C, 2, &[1]);
        let mut sink = MemorySink::default();
        let s = search_box(&l, &SearchOptions::new(4), &mut sink).unwrap();
        assert_eq!(s.counts.counterexamples, 0);
        assert!(s.counts.equal_pairs > 0);
        assert!(sink.verdicts.iter().all(|v| v.auto.is_some()));
    }

    #[test]
    fn certificate_log_resumes_identically() {
        let dir = tempfile::tempdir().unwrap();
        let l = levi(Family::GL, 4, &[1, 3]);
        let full_path = dir.path().join("full.jsonl");
        let mut log = CertificateLog::new(&full_path, false);
        let whole = search_box(&l, &SearchOptions::new(2), &mut log).unwrap();
        assert!(whole.complete);

        let part_path = dir.path().join("part.jsonl");
        let mut opts = SearchOptions::new(2);
        opts.batch = 3;
        opts.max_groups = Some(5);
        let first = search_box(&l, &opts, &mut CertificateLog::new(&part_path, false)).unwrap();
        assert!(!first.complete);
        // garbage after the last recorded group is discarded on resume
        let mut f = OpenOptions::new().append(true).open(&part_path).unwrap();
        f.write_all(b"{\"partial").unwrap();
        opts.max_groups = None;
        let second = search_box(&l, &opts, &mut CertificateLog::new(&part_path, true)).unwrap();
        assert!(second.complete);
        assert_eq!(second.counts, whole.counts);
        assert_eq!(fs::read(&full_path).unwrap(), fs::read(&part_path).unwrap());
        let records = CertificateLog::read_all(&full_path).unwrap();
        assert_eq!(records.len() as u64, whole.counts.equal_pairs);
    }

    #[test]
    fn certificate_record_shape() {
        let l = levi(Family::GL, 4, &[1, 3]);
        let v = classify_pair(&l, &w(&[1, 0, 1, 1]), &w(&[1, 1, 1, 0])).unwrap();
        let s = serde_json::to_string(&v).unwrap();
        assert!(s.starts_with(r#"{"mu":[1,0,1,1],"nu":[1,1,1,0],"equal":true,"auto":{"perm":[3,4,1,2],"signs":[1,1,1,1]},"covered":["#));
        assert!(s.ends_with(r#""counterexample":false}"#));
    }
}
