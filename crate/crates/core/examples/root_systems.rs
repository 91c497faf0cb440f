//! Root data for the classical families and a Levi subsystem.
//!
//! cargo run --example root_systems

use std::sync::Arc;

use levi_branching::error::Result;
use levi_branching::rootsys::{Family, LeviDatum, RootDatum, Weight};

fn main() -> Result<()> {
    for (f, n) in [(Family::GL, 4), (Family::B, 3), (Family::C, 3), (Family::D, 4)] {
        let d = RootDatum::new(f, n)?;
        println!(
            "{}: {} positive roots, |W| = {}, ρ = {}, highest root {}",
            d.label(),
            d.positive_roots().len(),
            d.weyl_order(),
            d.rho(),
            d.highest_root()
        );
    }

    let c6 = Arc::new(RootDatum::new(Family::C, 6)?);
    let l = LeviDatum::new(c6, &[1, 2, 4, 5, 6])?;
    println!("\n{}", l.describe());
    println!("R̄₊ = {:?}", l.rbar_plus());
    println!("ρ̄ = {}, |W̄| = {}, ε(w̄₀) = {}", l.rho_bar(), l.wbar_order(), l.sign_w0bar());

    let mu: Weight = "3,1,0,2,1,1".parse()?;
    println!("{mu} is Levi-dominant: {}", l.is_dominant(&mu));
    Ok(())
}
