use clap::Parser;
use levi_branching::cli::{run, Cli};

fn main() {
    std::process::exit(run(Cli::parse()));
}
