//! A pair of spin weights for so7 ⊃ gl2 + so3 with equal M-functions but
//! no diagram automorphism relating them. The restriction oracle confirms
//! the branching coefficients agree.
//!
//! cargo run --release --example spin_pair

use levi_branching::branching::{build_m, dominant_box, restrict};
use levi_branching::checks::levi;
use levi_branching::equivalence::classify_pair;
use levi_branching::error::Result;
use levi_branching::rootsys::{Family, Weight};

fn main() -> Result<()> {
    let l = levi(Family::B, 3, &[1, 3])?;
    let mu: Weight = "-1/2,-3/2,1/2".parse()?;
    let nu: Weight = "-1/2,-1/2,3/2".parse()?;
    let v = classify_pair(&l, &mu, &nu)?;
    println!("equal = {}, automorphism = {:?}, counterexample = {}", v.equal, v.auto, v.counterexample);
    for w in [&mu, &nu] {
        let m = build_m(&l, w)?;
        println!("M_{w} = {:?}", m.m_coefficients());
    }

    let mut agree = 0;
    for lam in dominant_box(l.parent(), 3) {
        let r = restrict(&l, &lam)?;
        assert_eq!(r.get(&mu), r.get(&nu), "λ = {lam}");
        if r.get(&mu) > 0 {
            agree += 1;
        }
    }
    println!("m_μ^λ = m_ν^λ on the box, nonzero for {agree} λ");
    Ok(())
}
