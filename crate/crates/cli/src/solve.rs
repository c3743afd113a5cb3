use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Result};
use cyclehom::oracle::solve_exact;
use cyclehom::solver::{solve_localized, solve_with, SolveOptions, SolveStats};
use cyclehom::{Coloring, Graph, ListAssignment, SolveError, TargetGraph};

use crate::io;
use crate::{Algo, Status};

#[derive(clap::Args, Debug)]
pub struct SolveArgs {
    graph: PathBuf,
    /// Target cycle length.
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value = "auto")]
    algo: Algo,
    /// List file with `v: c1 c2 ...` lines; missing vertices get all colors.
    #[arg(long)]
    lists: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Explore seed colorings in parallel. The answer does not change.
    #[arg(long)]
    parallel: bool,
    /// Print wall time per phase to stderr.
    #[arg(long)]
    bench: bool,
}

pub fn run(a: &SolveArgs) -> Result<Status> {
    if a.k < 3 {
        bail!("k = {} must be at least 3", a.k);
    }
    check_algo(a.algo, a.k)?;
    let g = io::read_graph(&a.graph)?;
    let l = io::read_lists(a.lists.as_deref(), g.n(), a.k)?;
    let opts = SolveOptions { parallel: a.parallel, ..SolveOptions::default() };
    let stats = SolveStats::default();
    let start = Instant::now();
    let answer = dispatch(a.algo, &g, &l, a.k, opts, &stats)?;
    if a.bench {
        let s = stats.snapshot();
        eprintln!("seed_search_ms {:.3}", s.seed_time.as_secs_f64() * 1e3);
        eprintln!("branching_ms {:.3}", s.branch_time.as_secs_f64() * 1e3);
        eprintln!("two_sat_ms {:.3}", s.twosat_time.as_secs_f64() * 1e3);
        eprintln!("total_ms {:.3}", start.elapsed().as_secs_f64() * 1e3);
        eprintln!("seed_colorings {} subinstances {} branchings {} rounds {}", s.seed_colorings, s.subinstances, s.branchings, s.max_round);
    }
    match answer {
        Some(f) => {
            io::emit(a.out.as_deref(), &io::format_coloring(&f))?;
            Ok(Status::Yes)
        }
        None => {
            io::emit(a.out.as_deref(), "UNSAT\n")?;
            Ok(Status::No)
        }
    }
}

fn check_algo(algo: Algo, k: usize) -> Result<()> {
    match algo {
        Algo::P9 if ![5, 7, 9].contains(&k) => bail!("--algo p9 needs k in {{5, 7, 9}}, got {k}"),
        Algo::Localized if k < 10 => bail!("--algo localized needs k >= 10, got {k}"),
        _ => Ok(()),
    }
}

fn dispatch(algo: Algo, g: &Graph, l: &ListAssignment, k: usize, opts: SolveOptions, stats: &SolveStats) -> Result<Option<Coloring>> {
    let oracle = || solve_exact(g, l, &TargetGraph::cycle(k));
    Ok(match algo {
        Algo::Oracle => oracle(),
        Algo::Localized => solve_localized(g, l)?,
        Algo::P9 => solve_with(g, l, k, opts, stats)?,
        Algo::Auto => match solve_with(g, l, k, opts, stats) {
            Ok(r) => r,
            Err(e @ (SolveError::NotP9Free(_) | SolveError::Unsupported(_))) => {
                eprintln!("warning: {e}; falling back to the exact search");
                oracle()
            }
            Err(e) => return Err(e.into()),
        },
    })
}
