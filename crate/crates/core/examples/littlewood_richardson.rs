//! Littlewood–Richardson coefficients, products of Schur functions and
//! (inverse) Kostka numbers.
//!
//! cargo run --example littlewood_richardson

use levi_branching::typea::{inverse_kostka_matrix, kostka, lr_coefficient, lr_table_csv, multi_lr, Partition};

fn p(s: &str) -> Partition {
    s.parse().expect("valid partition")
}

fn main() {
    let (mu, nu) = (p("(2,1)"), p("(2,1)"));
    println!("c^(3,2,1)_(2,1),(2,1) = {}", lr_coefficient(&p("(3,2,1)"), &mu, &nu));
    print!("s(2,1)·s(2,1):\n{}", lr_table_csv(&mu, &nu));

    let factors = [p("(1)"), p("(1)"), p("(1)")];
    println!("\nmultiplicity of s(2,1) in s(1)³: {}", multi_lr(&p("(2,1)"), &factors));

    println!("K_(3,1),(2,1,1) = {}", kostka(&p("(3,1)"), &[2, 1, 1]));
    let (parts, inv) = inverse_kostka_matrix(4, 4);
    println!("\ninverse Kostka matrix, n = 4, rows {parts:?}:");
    for row in inv {
        println!("  {row:?}");
    }
}
