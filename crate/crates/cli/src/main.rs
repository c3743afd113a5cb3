//! `cyclehom`: solve, verify, generate and inspect list `C_k`-coloring instances.

mod check;
mod generate;
mod io;
mod solve;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "cyclehom", version, about = "List homomorphisms into cycles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the graph has a list C_k-coloring and print one.
    Solve(solve::SolveArgs),
    /// Check a coloring against a graph and lists; exit 0 iff it is valid.
    Verify(VerifyArgs),
    /// Build an instance from one of the hardness constructions.
    Generate(generate::GenerateArgs),
    /// Report structural properties of a graph.
    Check(check::CheckArgs),
}

#[derive(clap::Args, Debug)]
struct VerifyArgs {
    graph: PathBuf,
    /// Coloring file: `v <vertex> <color>` lines, as printed by `solve`.
    coloring: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    lists: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Auto,
    P9,
    Localized,
    Oracle,
}

/// Outcome of a command that decides something.
pub enum Status {
    Yes,
    No,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(a) => solve::run(&a),
        Command::Verify(a) => verify(&a),
        Command::Generate(a) => generate::run(&a).map(|()| Status::Yes),
        Command::Check(a) => check::run(&a).map(|()| Status::Yes),
    };
    match result {
        Ok(Status::Yes) => ExitCode::from(0),
        Ok(Status::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn verify(a: &VerifyArgs) -> anyhow::Result<Status> {
    let g = io::read_graph(&a.graph)?;
    let l = io::read_lists(a.lists.as_deref(), g.n(), a.k)?;
    let f = io::read_coloring(&a.coloring, g.n())?;
    if cyclehom::oracle::verify(&g, &l, &cyclehom::TargetGraph::cycle(a.k), &f) {
        println!("VALID");
        Ok(Status::Yes)
    } else {
        println!("INVALID");
        Ok(Status::No)
    }
}
