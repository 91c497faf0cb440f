//! Bounded scan for equal M-functions, written to a resumable certificate
//! log. The first call stops after a few groups, the second resumes.
//!
//! cargo run --release --example conjecture_scan

use levi_branching::checks::levi;
use levi_branching::equivalence::{search_box, CertificateLog, SearchOptions};
use levi_branching::error::Result;
use levi_branching::rootsys::Family;

fn main() -> Result<()> {
    let l = levi(Family::C, 3, &[1, 2])?;
    let path = std::env::temp_dir().join("levi_scan_c3.jsonl");
    let _ = std::fs::remove_file(&path);
    let _ = std::fs::remove_file(path.with_extension("jsonl.progress"));

    let mut opts = SearchOptions::new(3);
    opts.max_groups = Some(4);
    let first = search_box(&l, &opts, &mut CertificateLog::new(&path, false))?;
    println!("first pass: {}/{} groups, complete = {}", first.groups_done, first.groups, first.complete);

    opts.max_groups = None;
    let done = search_box(&l, &opts, &mut CertificateLog::new(&path, true))?;
    println!("{}", serde_json::to_string_pretty(&done).expect("summary serializes"));

    let verdicts = CertificateLog::read_all(&path)?;
    println!("{} equal pairs in {}", verdicts.len(), path.display());
    for v in verdicts.iter().take(3) {
        println!("  {} ~ {} via {:?}", v.mu, v.nu, v.auto);
    }
    Ok(())
}
