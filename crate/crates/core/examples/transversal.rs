//! The transversal U, the factorisation W = U·W̄ and the diagram
//! automorphisms of a Levi.
//!
//! cargo run --example transversal

use levi_branching::checks::levi;
use levi_branching::error::Result;
use levi_branching::rootsys::{Family, Weight};
use levi_branching::weylgrp::{coset_decompose, diagram_automorphisms, in_transversal, transversal_u};

fn main() -> Result<()> {
    let l = levi(Family::C, 3, &[1, 2])?;
    let d = l.parent();
    let u = transversal_u(&l)?;
    println!("{}: |U| = {}, |W̄| = {}, |W| = {}", l.describe(), u.len(), l.wbar_order(), d.weyl_order());

    let group = d.weyl_group()?;
    let w = &group.elements()[17];
    let (u1, wb) = coset_decompose(&l, w);
    println!("w = {w:?} splits as u = {u1:?}, w̄ = {wb:?}; u ∈ U: {}", in_transversal(&l, &u1));
    assert_eq!(u1.compose(&wb), *w);

    let rho = d.rho();
    let rho_bar = l.rho_bar();
    for x in u.elements.iter().take(4) {
        let img: Weight = x.act(rho_bar);
        println!("u = {x:?}: u(ρ̄) = {img}, u⁻¹(ρ) = {}", x.inverse().act(rho));
    }

    for (f, n, s) in [(Family::GL, 4, vec![1, 3]), (Family::C, 6, vec![1, 2, 4, 5, 6]), (Family::B, 3, vec![1, 3])] {
        let l = levi(f, n, &s)?;
        let autos = diagram_automorphisms(&l)?;
        println!("{}: {} diagram automorphisms", l.describe(), autos.len());
        for a in &autos {
            println!("  {a:?}");
        }
    }
    Ok(())
}
