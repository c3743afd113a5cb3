//! Branching on bad paths. Children are produced lazily through a callback so
//! the search can stop at the first solution.

use std::ops::ControlFlow;

use crate::graph::{Graph, Vertex};
use crate::lists::{update, ColorSet, ListAssignment};

use super::badpath::{starters, BadPath};
use super::layers::{canonicalize, rebuild_layers, Part};
use super::Subinstance;

/// The guesses that produced a child from its parent.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BranchChoice {
    /// Indices in `I`: the chosen bad path and the color `q_i` of its starter.
    pub guessed: Vec<(BadPath, usize)>,
    /// Indices in `I*`: the path with fewest `X_i` neighbors and its vertex `x_i`.
    pub pinned: Vec<(BadPath, Vertex)>,
    /// Colors given to the vertices of `Q`.
    pub q_colors: Vec<(Vertex, usize)>,
}

/// Call `f(idx)` for every tuple with `idx[j] < sizes[j]`, last position fastest.
pub(crate) fn for_each_tuple<B>(sizes: &[usize], mut f: impl FnMut(&[usize]) -> ControlFlow<B>) -> ControlFlow<B> {
    if sizes.contains(&0) {
        return ControlFlow::Continue(());
    }
    let mut idx = vec![0; sizes.len()];
    loop {
        f(&idx)?;
        let mut j = sizes.len();
        loop {
            if j == 0 {
                return ControlFlow::Continue(());
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < sizes[j] {
                break;
            }
            idx[j] = 0;
        }
    }
}

/// Enumerate all children of `sub`. Every child is canonical for its layer
/// structure; children whose lists empty are skipped.
pub fn branch_phase3<B>(
    g: &Graph,
    sub: &Subinstance,
    paths: &[Vec<BadPath>],
    mut visit: impl FnMut(Subinstance) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let cc = sub.lists.colors();
    let layers = &sub.layers;
    let nonempty: Vec<usize> = (1..=cc.k()).filter(|&i| !paths[i - 1].is_empty()).collect();
    if nonempty.is_empty() {
        return visit(sub.clone());
    }
    let x_nbrs = |a: Vertex, i: usize| -> Vec<Vertex> {
        g.neighbors(a).iter().copied().filter(|&u| layers.part(u) == Part::X(i)).collect()
    };

    for mask in 0..(1u64 << nonempty.len()) {
        let in_guess = |b: usize| mask >> b & 1 == 1;
        let guess_idx: Vec<usize> = nonempty.iter().enumerate().filter(|&(b, _)| in_guess(b)).map(|(_, &i)| i).collect();
        let pin_idx: Vec<usize> = nonempty.iter().enumerate().filter(|&(b, _)| !in_guess(b)).map(|(_, &i)| i).collect();

        let mut base = sub.lists.clone();
        let mut dead = false;
        for &i in &pin_idx {
            for a in starters(&paths[i - 1]) {
                base.set(a, base.get(a) & ColorSet::singleton(i));
                dead |= base.get(a).is_empty();
            }
        }
        if dead {
            continue;
        }
        let pinned: Vec<(BadPath, Vertex)> = pin_idx
            .iter()
            .map(|&i| {
                let p = *paths[i - 1].iter().min_by_key(|p| (x_nbrs(p.a, i).len(), **p)).unwrap();
                (p, x_nbrs(p.a, i)[0])
            })
            .collect();

        let sizes: Vec<usize> = guess_idx.iter().map(|&i| paths[i - 1].len()).collect();
        for_each_tuple(&sizes, |pick| {
            let chosen: Vec<BadPath> = guess_idx.iter().zip(pick).map(|(&i, &j)| paths[i - 1][j]).collect();
            let mut with_paths = base.clone();
            for p in &chosen {
                let two_away = cc.shifted(p.index, &[-2, 2]);
                with_paths.set(p.a, with_paths.get(p.a) & two_away);
                if with_paths.get(p.a).is_empty() {
                    return ControlFlow::Continue(());
                }
            }
            let q_options: Vec<Vec<usize>> = chosen.iter().map(|p| with_paths.get(p.a).iter().collect()).collect();
            let q_sizes: Vec<usize> = q_options.iter().map(Vec::len).collect();
            for_each_tuple(&q_sizes, |qpick| {
                let mut lists = with_paths.clone();
                let mut guessed = Vec::with_capacity(chosen.len());
                for ((p, opts), &j) in chosen.iter().zip(&q_options).zip(qpick) {
                    let q = opts[j];
                    guessed.push((*p, q));
                    lists.set(p.a, ColorSet::singleton(q));
                    let toward = cc.neighbors(q) & cc.shifted(p.index, &[-1, 1]);
                    for x in x_nbrs(p.a, p.index) {
                        lists.set(x, lists.get(x) & toward);
                        if lists.get(x).is_empty() {
                            return ControlFlow::Continue(());
                        }
                    }
                }
                let mut q_set: Vec<Vertex> = guessed.iter().flat_map(|(p, _)| [p.b, p.c]).collect();
                q_set.extend(pinned.iter().flat_map(|&(p, x)| [p.b, p.c, x]));
                q_set.sort_unstable();
                q_set.dedup();

                let mut a_set = vec![false; g.n()];
                for (p, _) in &guessed {
                    for x in x_nbrs(p.a, p.index) {
                        a_set[x] = true;
                    }
                    for v in [p.a, p.b, p.c] {
                        a_set[v] = true;
                    }
                }
                for &(p, x) in &pinned {
                    for v in [x, p.a, p.b, p.c] {
                        a_set[v] = true;
                    }
                }

                for_each_q_coloring(g, &lists, &q_set, |colored| {
                    let choice = BranchChoice {
                        guessed: guessed.clone(),
                        pinned: pinned.clone(),
                        q_colors: q_set.iter().copied().zip(colored.iter().copied()).collect(),
                    };
                    match make_child(g, sub, &lists, &q_set, colored, &a_set, choice) {
                        Some(child) => visit(child),
                        None => ControlFlow::Continue(()),
                    }
                })
            })
        })?;
    }
    ControlFlow::Continue(())
}

/// Colorings of `q_set` from the current lists, pruned by edges inside
/// `q_set` and by neighbors that already have singleton lists.
fn for_each_q_coloring<B>(
    g: &Graph,
    lists: &ListAssignment,
    q_set: &[Vertex],
    mut f: impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    fn go<B>(
        g: &Graph,
        lists: &ListAssignment,
        q_set: &[Vertex],
        pos: usize,
        colored: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if pos == q_set.len() {
            return f(colored);
        }
        let cc = lists.colors();
        let v = q_set[pos];
        'colors: for c in lists.get(v) {
            for &u in g.neighbors(v) {
                let fixed = match q_set[..pos].iter().position(|&w| w == u) {
                    Some(j) => Some(colored[j]),
                    None if !q_set.contains(&u) => lists.get(u).single(),
                    None => None,
                };
                if fixed.is_some_and(|d| !cc.adjacent(c, d)) {
                    continue 'colors;
                }
            }
            colored.push(c);
            go(g, lists, q_set, pos + 1, colored, f)?;
            colored.pop();
        }
        ControlFlow::Continue(())
    }
    go(g, lists, q_set, 0, &mut Vec::with_capacity(q_set.len()), &mut f)
}

fn make_child(
    g: &Graph,
    parent: &Subinstance,
    lists: &ListAssignment,
    q_set: &[Vertex],
    colored: &[usize],
    a_set: &[bool],
    choice: BranchChoice,
) -> Option<Subinstance> {
    let mut lists = lists.clone();
    for (&v, &c) in q_set.iter().zip(colored) {
        lists.set(v, ColorSet::singleton(c));
    }
    let a_vertices: Vec<Vertex> = g.vertices().filter(|&v| a_set[v]).collect();
    if a_vertices.iter().any(|&a| lists.get(a).len() != 1) {
        return None;
    }
    for &a in &a_vertices {
        for &v in g.neighbors(a) {
            update(g, &mut lists, v, a);
            if lists.get(v).is_empty() {
                return None;
            }
        }
    }
    let layers = rebuild_layers(g, &parent.layers, a_set, &lists);
    canonicalize(g, &layers, &mut lists).ok()?;
    let mut provenance = parent.provenance.clone();
    provenance.rounds.push(choice);
    Some(Subinstance { lists, layers, provenance, round: parent.round + 1 })
}
