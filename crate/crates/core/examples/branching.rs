//! Branching coefficients m_μ^λ from the alternating sum over W, checked
//! against direct restriction of the character.
//!
//! cargo run --example branching

use levi_branching::branching::{default_lambda_box, restrict, Brancher};
use levi_branching::checks::levi;
use levi_branching::error::Result;
use levi_branching::rootsys::{Family, Weight};

fn main() -> Result<()> {
    let l = levi(Family::C, 3, &[1, 2])?;
    let b = Brancher::new(&l);
    let lambda = Weight::from_ints(&[2, 1, 0]);

    let res = restrict(&l, &lambda)?;
    println!("Res V({lambda}) to {}:", l.describe());
    for (mu, &m) in &res.entries {
        let alt = b.multiplicity(&lambda, mu)?;
        println!("  μ = {mu}: {m} (alternating sum {alt})");
        assert_eq!(m, alt);
    }

    let mu = Weight::from_ints(&[1, 0, -1]);
    let row = b.row(&mu, &default_lambda_box(&l, &mu, 2))?;
    println!("\nm_μ^λ for μ = {mu}:");
    for (lam, m) in row.entries.iter().filter(|(_, &m)| m > 0) {
        println!("  λ = {lam}: {m}");
    }
    Ok(())
}
