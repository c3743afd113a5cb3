//! Orientation of a graph along a coloring, slopes of walks and image windows.

use std::collections::BTreeSet;

use crate::error::NotAWalk;
use crate::graph::{Graph, Vertex};
use crate::lists::CycleColors;

/// Each edge `uv` is oriented `u -> v` when `h(v) = h(u) + 1 (mod k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedGraph {
    n: usize,
    arcs: Vec<(Vertex, Vertex)>,
}

impl OrientedGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Arcs sorted lexicographically.
    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    /// `+1` for a forward step, `-1` for a backward step, `None` off the edges.
    pub fn step(&self, u: Vertex, v: Vertex) -> Option<i64> {
        if self.has_arc(u, v) {
            Some(1)
        } else if self.has_arc(v, u) {
            Some(-1)
        } else {
            None
        }
    }
}

/// Orientation induced by a homomorphism `h` into `C_k`. Panics if `h` is not one.
pub fn orient_by_hom(g: &Graph, h: &[usize], k: usize) -> OrientedGraph {
    let cc = CycleColors::new(k).expect("valid cycle length");
    let mut arcs: Vec<(Vertex, Vertex)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            if cc.add(h[u], 1) == h[v] {
                (u, v)
            } else {
                assert_eq!(cc.add(h[v], 1), h[u], "edge ({u}, {v}) is not mapped to an edge");
                (v, u)
            }
        })
        .collect();
    arcs.sort_unstable();
    OrientedGraph { n: g.n(), arcs }
}

/// Forward steps minus backward steps along `walk`.
pub fn slope(og: &OrientedGraph, walk: &[Vertex]) -> Result<i64, NotAWalk> {
    walk.windows(2)
        .enumerate()
        .try_fold(0, |acc, (index, w)| og.step(w[0], w[1]).map(|s| acc + s).ok_or(NotAWalk { index }))
}

/// Cyclic interval of colors `start, start + 1, ..., start + len - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub start: usize,
    pub len: usize,
}

/// Shortest cyclic interval covering the image of `h`, smallest start on ties.
pub fn image_window(h: &[usize], k: usize) -> Window {
    let used: Vec<usize> = {
        let mut u = h.to_vec();
        u.sort_unstable();
        u.dedup();
        u
    };
    (1..=k)
        .map(|start| Window { start, len: used.iter().map(|&c| (c + k - start) % k + 1).max().unwrap_or(0) })
        .min_by_key(|w| (w.len, w.start))
        .expect("k >= 1")
}

/// For a closed walk the slope is a multiple of `k`: `s + a - b ≡ 0 (mod k)`
/// where `a, b` are the colors of the start and end.
pub fn closed_walk_consistent(slope: i64, start_color: usize, end_color: usize, k: usize) -> bool {
    (slope + start_color as i64 - end_color as i64).rem_euclid(k as i64) == 0
}

/// Slopes of all walks from `start` with at most `max_len` steps, per end vertex.
pub fn reachable_slopes(og: &OrientedGraph, start: Vertex, max_len: usize) -> Vec<BTreeSet<i64>> {
    let mut adj: Vec<Vec<(Vertex, i64)>> = vec![Vec::new(); og.n];
    for &(u, v) in &og.arcs {
        adj[u].push((v, 1));
        adj[v].push((u, -1));
    }
    let mut seen: Vec<BTreeSet<i64>> = vec![BTreeSet::new(); og.n];
    seen[start].insert(0);
    let mut frontier = vec![(start, 0i64)];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (u, s) in frontier {
            for &(v, d) in &adj[u] {
                if seen[v].insert(s + d) {
                    next.push((v, s + d));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    seen
}
