//! Type A factorisation of branching coefficients and the stable-range
//! Littlewood formulas for the gl_n Levi of B, C and D.
//!
//! cargo run --example polarisation

use levi_branching::checks::levi;
use levi_branching::error::Result;
use levi_branching::rootsys::{Family, Weight};
use levi_branching::typea::{delta_shift_check, polarisation_oracle, polarisation_terms, schur_factorization_check, Partition};

fn main() -> Result<()> {
    let l = levi(Family::GL, 4, &[1, 3])?;
    let mu = Weight::from_ints(&[1, 0, 0, -1]);
    let rep = schur_factorization_check(&l, &mu, None)?;
    println!("gl4 ⊃ gl2+gl2, μ = {mu}: shift {}, {} λ checked, ok = {}", rep.shift, rep.checked, rep.ok());
    let lambda = Weight::from_ints(&[2, 1, 0, 0]);
    println!("δ-shift by 3 holds at λ = {lambda}: {}", delta_shift_check(&l, &lambda, &Weight::from_ints(&[2, 0, 1, 0]), 3)?);

    let lam: Partition = "(2,1)".parse()?;
    for f in [Family::B, Family::C, Family::D] {
        let oracle = polarisation_oracle(f, 3, &lam)?;
        println!("\n{f}3 ⊃ gl3, λ = {lam}:");
        for (mu, &m) in &oracle {
            let terms = polarisation_terms(f, 3, mu, &lam)?;
            let sum: u64 = terms.iter().map(|t| t.value).sum();
            println!("  μ = {mu}: restriction {m}, Littlewood sum {sum} from {} terms", terms.len());
        }
    }
    Ok(())
}
