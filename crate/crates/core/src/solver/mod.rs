//! List `C_k`-coloring of P9-free graphs.
//!
//! For `k ∈ {5, 7, 9}` the solver colors a small dominating seed, splits the
//! graph into layers around it, branches until no bad path is left, shrinks
//! all lists to at most two colors (plus a stable set of 3-lists) and
//! finishes with 2-SAT. For `k >= 10` it tries every window of 8 consecutive
//! colors as a path target.

pub mod badpath;
pub mod branch;
pub mod finish;
pub mod layers;
pub mod localized;
pub mod slope;

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::SolveError;
use crate::graph::{connected_components, find_induced_path, find_seed, find_triangle, induced_subgraph, Graph, Vertex, VertexSet};
use crate::lists::{arc_consistency, ColorSet, ListAssignment, TargetGraph};
use crate::oracle::{for_each_coloring, verify, Coloring};

pub use badpath::{depth, find_bad_paths, min_starter_depth, BadPath};
pub use branch::{branch_phase3, BranchChoice};
pub use finish::{finalize_2sat, reduce_y_lists, reduce_z_lists};
pub use layers::{canonicalize, partition_layers, LayerStructure, Part};
pub use localized::{solve_localized, solve_path_hom};
pub use slope::{closed_walk_consistent, image_window, orient_by_hom, reachable_slopes, slope, OrientedGraph, Window};

/// Rounds of branching after which the input is declared not P9-free.
pub const ROUND_CAP: usize = 6;

/// A list assignment together with its layers and the guesses behind it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subinstance {
    pub lists: ListAssignment,
    pub layers: LayerStructure,
    pub provenance: Provenance,
    /// Number of branching rounds applied so far.
    pub round: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Provenance {
    pub seed_coloring: Vec<(Vertex, usize)>,
    pub rounds: Vec<BranchChoice>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Explore seed colorings on the rayon pool. The answer is the same as
    /// the sequential one.
    pub parallel: bool,
    /// Drop subinstances whose lists are not arc consistent before branching.
    pub prune_with_ac: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { parallel: false, prune_with_ac: true }
    }
}

/// Counters gathered while solving; safe to share between threads.
#[derive(Debug, Default)]
pub struct SolveStats {
    seed_colorings: AtomicU64,
    subinstances: AtomicU64,
    branchings: AtomicU64,
    depth_checks: AtomicU64,
    max_round: AtomicU64,
    final_calls: AtomicU64,
    seed_nanos: AtomicU64,
    run_nanos: AtomicU64,
    finish_nanos: AtomicU64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StatsSnapshot {
    pub seed_colorings: u64,
    pub subinstances: u64,
    /// Subinstances that had bad paths and were branched on.
    pub branchings: u64,
    /// Children whose starter depth was compared with their parent's.
    pub depth_checks: u64,
    /// Largest number of rounds any subinstance needed.
    pub max_round: u64,
    pub final_calls: u64,
    /// Finding the seed and enumerating its colorings.
    pub seed_time: Duration,
    /// Layering and branching, summed over seed colorings.
    pub branch_time: Duration,
    /// List reduction and 2-SAT, summed over final subinstances.
    pub twosat_time: Duration,
}

impl SolveStats {
    pub fn snapshot(&self) -> StatsSnapshot {
        let get = |a: &AtomicU64| a.load(Ordering::Relaxed);
        StatsSnapshot {
            seed_colorings: get(&self.seed_colorings),
            subinstances: get(&self.subinstances),
            branchings: get(&self.branchings),
            depth_checks: get(&self.depth_checks),
            max_round: get(&self.max_round),
            final_calls: get(&self.final_calls),
            seed_time: Duration::from_nanos(get(&self.seed_nanos)),
            branch_time: Duration::from_nanos(get(&self.run_nanos).saturating_sub(get(&self.finish_nanos))),
            twosat_time: Duration::from_nanos(get(&self.finish_nanos)),
        }
    }

    fn add_time(a: &AtomicU64, since: Instant) {
        a.fetch_add(since.elapsed().as_nanos() as u64, Ordering::Relaxed);
    }

    fn bump(a: &AtomicU64) {
        a.fetch_add(1, Ordering::Relaxed);
    }
}

/// Solve with default options.
pub fn solve(g: &Graph, l: &ListAssignment, k: usize) -> Result<Option<Coloring>, SolveError> {
    solve_with(g, l, k, SolveOptions::default(), &SolveStats::default())
}

pub fn solve_with(
    g: &Graph,
    l: &ListAssignment,
    k: usize,
    opts: SolveOptions,
    stats: &SolveStats,
) -> Result<Option<Coloring>, SolveError> {
    check_input(g, l, k)?;
    match k {
        5 | 7 | 9 => {}
        k if k >= 10 => return solve_localized(g, l),
        k => return Err(SolveError::Unsupported(k)),
    }
    if find_triangle(g).is_some() {
        return Ok(None);
    }
    let mut out = vec![0; g.n()];
    for comp in connected_components(g) {
        let sub = induced_subgraph(g, &comp);
        let lists = ListAssignment::from_lists(l.colors(), sub.map.iter().map(|&v| l.get(v)).collect())
            .expect("restricted lists stay in range");
        let Some(f) = solve_p9free_with(&sub.graph, &lists, opts, stats)? else {
            return Ok(None);
        };
        for (&v, c) in sub.map.iter().zip(f) {
            out[v] = c;
        }
    }
    assert!(verify(g, l, &TargetGraph::cycle(k), &out));
    Ok(Some(out))
}

fn check_input(g: &Graph, l: &ListAssignment, k: usize) -> Result<(), SolveError> {
    if l.n() != g.n() {
        return Err(SolveError::Input(format!("{} lists for {} vertices", l.n(), g.n())));
    }
    if l.k() != k {
        return Err(SolveError::Input(format!("lists are over C_{} but k = {k}", l.k())));
    }
    Ok(())
}

/// Solver for a connected triangle-free graph, `k ∈ {5, 7, 9}`.
pub fn solve_p9free(g: &Graph, l: &ListAssignment, k: usize) -> Result<Option<Coloring>, SolveError> {
    check_input(g, l, k)?;
    solve_p9free_with(g, l, SolveOptions::default(), &SolveStats::default())
}

pub fn solve_p9free_with(
    g: &Graph,
    l: &ListAssignment,
    opts: SolveOptions,
    stats: &SolveStats,
) -> Result<Option<Coloring>, SolveError> {
    let k = l.k();
    if ![5, 7, 9].contains(&k) {
        return Err(SolveError::Unsupported(k));
    }
    if g.n() == 0 {
        return Ok(Some(Vec::new()));
    }
    if let Some(p) = find_induced_path(g, 9) {
        return Err(SolveError::NotP9Free(format!("induced path {p:?}")));
    }
    if let Some(t) = find_triangle(g) {
        return Err(SolveError::Input(format!("triangle {t:?}")));
    }
    let t0 = Instant::now();
    let seed = find_seed(g).map_err(|e| SolveError::NotP9Free(e.to_string()))?;
    let colorings = seed_colorings(g, l, &seed);
    SolveStats::add_time(&stats.seed_nanos, t0);
    let ctx = Ctx { g, opts, stats };
    let run = |colors: &Vec<usize>| -> Option<Result<Coloring, SolveError>> {
        match ctx.run_seed(l, &seed, colors) {
            Ok(Some(f)) => Some(Ok(f)),
            Ok(None) => None,
            Err(e) => Some(Err(e)),
        }
    };
    let found = if opts.parallel {
        colorings.par_iter().find_map_first(run)
    } else {
        colorings.iter().find_map(run)
    };
    match found {
        Some(Ok(f)) => {
            assert!(verify(g, l, &TargetGraph::cycle(k), &f));
            Ok(Some(f))
        }
        Some(Err(e)) => Err(e),
        None => Ok(None),
    }
}

/// List-respecting homomorphisms of `G|S` in lexicographic order.
pub fn seed_colorings(g: &Graph, l: &ListAssignment, seed: &VertexSet) -> Vec<Vec<usize>> {
    let sub = induced_subgraph(g, seed);
    let lists: Vec<ColorSet> = sub.map.iter().map(|&v| l.get(v)).collect();
    let mut out = Vec::new();
    let _ = for_each_coloring::<()>(&sub.graph, &lists, &TargetGraph::cycle(l.k()), |f| {
        out.push(f.to_vec());
        ControlFlow::Continue(())
    });
    out
}

/// Layered subinstance for one seed coloring, or `None` if canonicalization
/// already fails.
pub fn initial_subinstance(g: &Graph, l: &ListAssignment, seed: &VertexSet, colors: &[usize]) -> Option<Subinstance> {
    let mut lists = l.clone();
    layers::color_seed(&mut lists, seed, colors);
    let layers = partition_layers(g, seed, &lists);
    canonicalize(g, &layers, &mut lists).ok()?;
    Some(Subinstance {
        lists,
        layers,
        provenance: Provenance { seed_coloring: seed.iter().zip(colors.iter().copied()).collect(), rounds: Vec::new() },
        round: 0,
    })
}

struct Ctx<'a> {
    g: &'a Graph,
    opts: SolveOptions,
    stats: &'a SolveStats,
}

impl Ctx<'_> {
    fn run_seed(&self, l: &ListAssignment, seed: &VertexSet, colors: &[usize]) -> Result<Option<Coloring>, SolveError> {
        SolveStats::bump(&self.stats.seed_colorings);
        let t0 = Instant::now();
        let r = match initial_subinstance(self.g, l, seed, colors) {
            Some(sub) => self.explore(sub, None),
            None => Ok(None),
        };
        SolveStats::add_time(&self.stats.run_nanos, t0);
        r
    }

    fn explore(&self, sub: Subinstance, parent_depth: Option<usize>) -> Result<Option<Coloring>, SolveError> {
        let g = self.g;
        SolveStats::bump(&self.stats.subinstances);
        if self.opts.prune_with_ac && arc_consistency(g, &sub.lists, &TargetGraph::cycle(sub.lists.k())).is_err() {
            return Ok(None);
        }
        let paths = find_bad_paths(g, &sub.layers);
        let Some(here) = min_starter_depth(g, &sub.layers, &paths) else {
            self.stats.max_round.fetch_max(sub.round as u64, Ordering::Relaxed);
            return self.finish(sub);
        };
        if let Some(d) = parent_depth {
            SolveStats::bump(&self.stats.depth_checks);
            if here <= d {
                return Err(SolveError::NotP9Free(format!("starter depth {here} did not grow past {d}")));
            }
        }
        if sub.round >= ROUND_CAP {
            return Err(SolveError::NotP9Free(format!("bad paths remain after {ROUND_CAP} rounds")));
        }
        SolveStats::bump(&self.stats.branchings);
        let flow = branch_phase3(g, &sub, &paths, |child| match self.explore(child, Some(here)) {
            Ok(None) => ControlFlow::Continue(()),
            Ok(Some(f)) => ControlFlow::Break(Ok(f)),
            Err(e) => ControlFlow::Break(Err(e)),
        });
        match flow {
            ControlFlow::Continue(()) => Ok(None),
            ControlFlow::Break(r) => r.map(Some),
        }
    }

    fn finish(&self, mut sub: Subinstance) -> Result<Option<Coloring>, SolveError> {
        SolveStats::bump(&self.stats.final_calls);
        let t0 = Instant::now();
        let r = self.finish_inner(&mut sub);
        SolveStats::add_time(&self.stats.finish_nanos, t0);
        r
    }

    fn finish_inner(&self, sub: &mut Subinstance) -> Result<Option<Coloring>, SolveError> {
        reduce_z_lists(self.g, &sub.layers, &mut sub.lists)?;
        if sub.lists.first_empty().is_some() {
            return Ok(None);
        }
        match reduce_y_lists(self.g, &sub.layers, &sub.lists)? {
            Some(l) => finalize_2sat(self.g, &l),
            None => Ok(None),
        }
    }
}
