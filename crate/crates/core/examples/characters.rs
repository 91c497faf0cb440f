//! Weyl characters by Freudenthal's recursion, cross-checked against
//! Kostant's multiplicity formula and the Weyl dimension formula.
//!
//! cargo run --example characters

use levi_branching::error::Result;
use levi_branching::rootsys::{Family, RootDatum, Weight};
use levi_branching::weightpoly::{dominant_character, kostant_multiplicity, weyl_character, weyl_dimension, PartitionTable};

fn main() -> Result<()> {
    let d = RootDatum::new(Family::B, 3)?;
    let lambda: Weight = "3/2,1/2,1/2".parse()?;
    let ch = dominant_character(d.system(), &lambda)?;
    println!("so7, λ = {lambda}, dim = {}", weyl_dimension(d.system(), &lambda));
    let table = PartitionTable::full(&d);
    for (mu, m) in &ch.mults {
        let k = kostant_multiplicity(&d, &table, &lambda, mu)?;
        println!("  m({mu}) = {m}  (Kostant: {k})");
    }

    let d = RootDatum::new(Family::C, 2)?;
    let lambda = Weight::from_ints(&[2, 1]);
    let chi = weyl_character(&d, &lambda)?;
    println!("\nsp4, λ = {lambda}: {} weights, total multiplicity {}", chi.len(), chi.augmentation());
    for (beta, c) in chi.terms() {
        println!("  {beta}: {c}");
    }
    Ok(())
}
