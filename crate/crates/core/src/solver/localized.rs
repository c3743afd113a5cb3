//! Solver for `k >= 10`. On a connected P9-free graph every coloring uses an
//! arc of at most 8 consecutive colors, so it suffices to try each window as
//! a list homomorphism into the path `P_8`.

use crate::error::SolveError;
use crate::graph::{bipartition, connected_components, find_induced_path, induced_subgraph, Graph};
use crate::lists::{propagate, ColorSet, CycleColors, ListAssignment, TargetGraph};
use crate::oracle::{verify, Coloring};

/// Number of consecutive colors a connected P9-free graph can use.
pub const WINDOW: usize = 8;

/// List homomorphism into the path with vertices `1..=t`, or `None`.
/// Each component is split by bipartition parity, made arc consistent, and
/// colored with the smallest surviving position.
pub fn solve_path_hom(g: &Graph, lists: &[ColorSet], t: usize) -> Option<Coloring> {
    let target = TargetGraph::path(t);
    let odd = ColorSet::from_colors((1..=t).step_by(2));
    let even = ColorSet::from_colors((2..=t).step_by(2));
    let side = bipartition(g)?;
    let mut out = vec![0; g.n()];
    for comp in connected_components(g) {
        let found = [false, true].into_iter().find_map(|flip| {
            let mut work: Vec<ColorSet> = lists.iter().map(|&l| l & target.full()).collect();
            for v in comp.iter() {
                let parity = if (side[v] == 1) ^ flip { even } else { odd };
                work[v] &= parity;
            }
            propagate(g, &mut work, &target, comp.as_slice()).ok()?;
            Some(comp.iter().map(|v| (v, work[v].min_color().unwrap())).collect::<Vec<_>>())
        })?;
        for (v, c) in found {
            out[v] = c;
        }
    }
    debug_assert!(crate::oracle::verify_lists(g, lists, &target, &out));
    Some(out)
}

/// Positions `1..=WINDOW` of the window starting at color `start`.
fn window_lists(cc: CycleColors, l: &[ColorSet], start: usize) -> Vec<ColorSet> {
    l.iter()
        .map(|&lv| ColorSet::from_colors((1..=WINDOW).filter(|&p| lv.contains(cc.add(start, p as i64 - 1)))))
        .collect()
}

/// Exact solver for `k >= 10` on P9-free graphs.
pub fn solve_localized(g: &Graph, l: &ListAssignment) -> Result<Option<Coloring>, SolveError> {
    let cc = l.colors();
    let k = cc.k();
    if k < 10 {
        return Err(SolveError::Unsupported(k));
    }
    if let Some(p) = find_induced_path(g, 9) {
        return Err(SolveError::NotP9Free(format!("induced path {p:?}")));
    }
    let mut out = vec![0; g.n()];
    for comp in connected_components(g) {
        let sub = induced_subgraph(g, &comp);
        let sub_lists: Vec<ColorSet> = sub.map.iter().map(|&v| l.get(v)).collect();
        let found = (1..=k).find_map(|start| {
            let pos = solve_path_hom(&sub.graph, &window_lists(cc, &sub_lists, start), WINDOW)?;
            Some(pos.iter().map(|&p| cc.add(start, p as i64 - 1)).collect::<Vec<_>>())
        });
        let Some(colors) = found else { return Ok(None) };
        for (&v, c) in sub.map.iter().zip(colors) {
            out[v] = c;
        }
    }
    debug_assert!(verify(g, l, &TargetGraph::cycle(k), &out));
    Ok(Some(out))
}
