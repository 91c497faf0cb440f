//! M-functions, their leading terms, and comparison of two Levi-dominant
//! weights.
//!
//! cargo run --example m_functions

use levi_branching::branching::{build_m, leading_term};
use levi_branching::checks::levi;
use levi_branching::equivalence::{classify_pair, induced_equal};
use levi_branching::error::Result;
use levi_branching::rootsys::{Family, Weight};

fn main() -> Result<()> {
    let l = levi(Family::GL, 4, &[1, 3])?;
    let mu = Weight::from_ints(&[2, 0, 1, -1]);
    let m = build_m(&l, &mu)?;
    println!("M_{mu} for {} in the m-basis:", l.describe());
    for (lam, c) in m.m_coefficients() {
        println!("  {c:+} m{lam}");
    }
    let lt = leading_term(&l, &mu)?;
    println!("leading term: {lt:?}");

    // the swap of the two gl2 blocks is a diagram automorphism
    let nu = Weight::from_ints(&[1, -1, 2, 0]);
    let v = classify_pair(&l, &mu, &nu)?;
    println!("\n{}", serde_json::to_string_pretty(&v).expect("verdict serializes"));

    // same W-orbits of μ and μ+2ρ̄, but different induced characters
    let l = levi(Family::GL, 6, &[1, 2, 3, 5])?;
    let (a, b) = (Weight::from_ints(&[5, 2, 2, 1, 4, 3]), Weight::from_ints(&[5, 4, 3, 1, 2, 2]));
    println!("gl6 pair {a}, {b}: H equal = {}", induced_equal(&l, &a, &b)?);
    Ok(())
}
