//! Exact list homomorphism solver and verifier for an arbitrary fixed target.
//! Backtracking with arc-consistency propagation; the ground truth used to
//! check every other solver.

use std::ops::ControlFlow;

use crate::error::CapExceeded;
use crate::graph::{Graph, Vertex};
use crate::lists::{propagate, ColorSet, ListAssignment};
pub use crate::lists::TargetGraph;

/// Color per vertex, using the target's colors `1..=size`.
pub type Coloring = Vec<usize>;

pub const DEFAULT_ENUMERATION_CAP: usize = 10_000_000;

/// Whether `f` is a homomorphism into `target` that respects `l`.
pub fn verify(g: &Graph, l: &ListAssignment, target: &TargetGraph, f: &[usize]) -> bool {
    verify_lists(g, l.as_slice(), target, f)
}

pub fn verify_lists(g: &Graph, lists: &[ColorSet], target: &TargetGraph, f: &[usize]) -> bool {
    f.len() == g.n()
        && lists.len() == g.n()
        && f.iter().zip(lists).all(|(&c, l)| (1..=target.size()).contains(&c) && l.contains(c))
        && g.edges().iter().all(|&(u, v)| target.adjacent(f[u], f[v]))
}

/// Some list-respecting homomorphism, or `None`. Branches on the vertex with
/// the fewest remaining colors (lowest id on ties), colors in increasing order.
pub fn solve_exact(g: &Graph, l: &ListAssignment, target: &TargetGraph) -> Option<Coloring> {
    solve_lists(g, l.as_slice(), target)
}

pub fn solve_lists(g: &Graph, lists: &[ColorSet], target: &TargetGraph) -> Option<Coloring> {
    let mut work: Vec<ColorSet> = lists.iter().map(|&l| l & target.full()).collect();
    let all: Vec<Vertex> = g.vertices().collect();
    propagate(g, &mut work, target, &all).ok()?;
    let found = search(g, target, work)?;
    debug_assert!(verify_lists(g, lists, target, &found));
    Some(found)
}

fn search(g: &Graph, target: &TargetGraph, lists: Vec<ColorSet>) -> Option<Coloring> {
    let pick = lists
        .iter()
        .enumerate()
        .filter(|(_, l)| l.len() > 1)
        .min_by_key(|&(v, l)| (l.len(), v))
        .map(|(v, _)| v);
    let Some(v) = pick else {
        return Some(lists.iter().map(|l| l.min_color().unwrap()).collect());
    };
    for c in lists[v] {
        let mut next = lists.clone();
        next[v] = ColorSet::singleton(c);
        if propagate(g, &mut next, target, &[v]).is_ok() {
            if let Some(found) = search(g, target, next) {
                return Some(found);
            }
        }
    }
    None
}

/// Visit every list-respecting homomorphism in lexicographic order (vertex 0
/// most significant). The visitor can stop the walk early.
pub fn for_each_coloring<B>(
    g: &Graph,
    lists: &[ColorSet],
    target: &TargetGraph,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let mut work: Vec<ColorSet> = lists.iter().map(|&l| l & target.full()).collect();
    let all: Vec<Vertex> = g.vertices().collect();
    if propagate(g, &mut work, target, &all).is_err() {
        return ControlFlow::Continue(());
    }
    let mut current = vec![0; g.n()];
    enumerate_from(g, target, work, 0, &mut current, &mut visit)
}

fn enumerate_from<B>(
    g: &Graph,
    target: &TargetGraph,
    lists: Vec<ColorSet>,
    v: Vertex,
    current: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if v == g.n() {
        return visit(current);
    }
    if let Some(c) = lists[v].single() {
        current[v] = c;
        return enumerate_from(g, target, lists, v + 1, current, visit);
    }
    for c in lists[v] {
        let mut next = lists.clone();
        next[v] = ColorSet::singleton(c);
        if propagate(g, &mut next, target, &[v]).is_ok() {
            current[v] = c;
            enumerate_from(g, target, next, v + 1, current, visit)?;
        }
    }
    ControlFlow::Continue(())
}

/// All list-respecting homomorphisms in lexicographic order, failing once
/// more than `cap` have been found.
pub fn enumerate_all_capped(g: &Graph, l: &ListAssignment, target: &TargetGraph, cap: usize) -> Result<Vec<Coloring>, CapExceeded> {
    let mut out = Vec::new();
    let flow = for_each_coloring(g, l.as_slice(), target, |f| {
        if out.len() == cap {
            return ControlFlow::Break(());
        }
        out.push(f.to_vec());
        ControlFlow::Continue(())
    });
    match flow {
        ControlFlow::Break(()) => Err(CapExceeded { cap }),
        ControlFlow::Continue(()) => Ok(out),
    }
}

pub fn enumerate_all(g: &Graph, l: &ListAssignment, target: &TargetGraph) -> Result<Vec<Coloring>, CapExceeded> {
    enumerate_all_capped(g, l, target, DEFAULT_ENUMERATION_CAP)
}

pub fn count_colorings(g: &Graph, lists: &[ColorSet], target: &TargetGraph) -> u64 {
    let mut n = 0u64;
    let _ = for_each_coloring::<()>(g, lists, target, |_| {
        n += 1;
        ControlFlow::Continue(())
    });
    n
}

/// Extend a partial coloring: precolored vertices get singleton lists, all
/// others the full target.
pub fn solve_extension(g: &Graph, target: &TargetGraph, precoloring: &[(Vertex, usize)]) -> Option<Coloring> {
    solve_lists(g, &extension_lists(g.n(), target, precoloring), target)
}

/// Lists for an extension instance. A vertex precolored twice with different
/// colors gets an empty list.
pub fn extension_lists(n: usize, target: &TargetGraph, precoloring: &[(Vertex, usize)]) -> Vec<ColorSet> {
    let mut lists = vec![target.full(); n];
    for &(v, c) in precoloring {
        let s = if (1..=target.size()).contains(&c) { ColorSet::singleton(c) } else { ColorSet::EMPTY };
        lists[v] &= s;
    }
    lists
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lists::CycleColors;

    fn full(n: usize, k: usize) -> ListAssignment {
        ListAssignment::full(n, CycleColors::new(k).unwrap())
    }

    #[test]
    fn verify_examples() {
        let c5 = Graph::cycle(5);
        let t = TargetGraph::cycle(5);
        assert!(verify(&c5, &full(5, 5), &t, &[1, 2, 3, 4, 5]));
        assert!(!verify(&Graph::path(2), &full(2, 5), &t, &[1, 1]));
        assert!(verify(&Graph::cycle(9), &full(9, 5), &t, &[1, 2, 3, 4, 5, 1, 2, 1, 2]));
        assert!(!verify(&c5, &full(5, 5), &t, &[1, 2, 3, 4]));
        let mut l = full(2, 5);
        l.set(0, ColorSet::singleton(3));
        assert!(!verify(&Graph::path(2), &l, &t, &[1, 2]));
    }

    #[test]
    fn solve_examples() {
        let t = TargetGraph::cycle(5);
        let f = solve_exact(&Graph::cycle(5), &full(5, 5), &t).unwrap();
        assert!(verify(&Graph::cycle(5), &full(5, 5), &t, &f));
        assert_eq!(solve_exact(&Graph::complete(3), &full(3, 5), &t), None);
        let f = solve_exact(&Graph::cycle(9), &full(9, 5), &t).unwrap();
        assert!(verify(&Graph::cycle(9), &full(9, 5), &t, &f));
        assert_eq!(solve_exact(&Graph::petersen(), &full(10, 5), &t), None);
        assert_eq!(solve_exact(&Graph::cycle(5), &full(5, 7), &TargetGraph::cycle(7)), None);
    }

    #[test]
    fn enumerate_examples() {
        let t = TargetGraph::cycle(5);
        assert_eq!(enumerate_all(&Graph::path(2), &full(2, 5), &t).unwrap().len(), 10);
        let autos = enumerate_all(&Graph::cycle(5), &full(5, 5), &t).unwrap();
        assert_eq!(autos.len(), 10);
        let mut sorted = autos.clone();
        sorted.sort();
        assert_eq!(sorted, autos);
        assert!(enumerate_all(&Graph::complete(3), &full(3, 5), &t).unwrap().is_empty());
        assert_eq!(enumerate_all_capped(&Graph::path(2), &full(2, 5), &t, 3), Err(CapExceeded { cap: 3 }));
        assert_eq!(count_colorings(&Graph::path(3), full(3, 5).as_slice(), &t), 20);
    }

    #[test]
    fn extension_examples() {
        let t = TargetGraph::cycle(5);
        let f = solve_extension(&Graph::path(2), &t, &[(0, 1)]).unwrap();
        assert!([2, 5].contains(&f[1]));
        assert_eq!(solve_extension(&Graph::path(2), &t, &[(0, 1), (1, 3)]), None);
        let f = solve_extension(&Graph::path(5), &t, &[(0, 1), (4, 1)]).unwrap();
        assert_eq!((f[0], f[4]), (1, 1));
        assert_eq!(solve_extension(&Graph::path(2), &t, &[(0, 1), (0, 2)]), None);
    }

    #[test]
    fn odd_path_endpoints_differ() {
        for s in 2..=4 {
            let k = 2 * s + 1;
            let g = Graph::path(2 * s);
            let t = TargetGraph::cycle(k);
            let all = enumerate_all(&g, &full(2 * s, k), &t).unwrap();
            let mut pairs = std::collections::BTreeSet::new();
            for f in &all {
                assert_ne!(f[0], f[2 * s - 1]);
                pairs.insert((f[0], f[2 * s - 1]));
            }
            assert_eq!(pairs.len(), k * (k - 1));
        }
    }
}
