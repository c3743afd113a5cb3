//! Deterministic random instances for tests and benchmarks.

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::gadgets::formula::{Formula, FormulaKind, Hypergraph};
use crate::graph::{find_induced_path, is_connected, Graph, Vertex};
use crate::lists::{ColorSet, CycleColors, ListAssignment};

/// Random connected triangle-free graph: a random tree plus extra edges
/// added with probability `p` when they close no triangle.
pub fn connected_triangle_free<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut adj = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    let mut add = |u: Vertex, v: Vertex, adj: &mut Vec<Vec<bool>>| {
        adj[u][v] = true;
        adj[v][u] = true;
        edges.push((u.min(v), u.max(v)));
    };
    for v in 1..n {
        let u = rng.random_range(0..v);
        add(u, v, &mut adj);
    }
    for u in 0..n {
        for v in u + 1..n {
            if !adj[u][v] && rng.random_bool(p) && !(0..n).any(|w| adj[u][w] && adj[v][w]) {
                add(u, v, &mut adj);
            }
        }
    }
    Graph::new(n, &edges).expect("valid edges")
}

/// Random connected graph built layer by layer: each new layer attaches to
/// the previous one, with sparse edges inside layers. Triangles are avoided.
pub fn layered<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut layer_of = Vec::with_capacity(n);
    let mut layer = 0;
    for v in 0..n {
        if v > 0 && rng.random_bool(0.4) {
            layer += 1;
        }
        layer_of.push(layer);
    }
    let mut adj = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    let closes_triangle = |adj: &Vec<Vec<bool>>, u: Vertex, v: Vertex| (0..n).any(|w| adj[u][w] && adj[v][w]);
    for v in 1..n {
        let lv = layer_of[v];
        let below: Vec<Vertex> = (0..v).filter(|&u| layer_of[u] + 1 == lv || (lv == 0 && u < v)).collect();
        let anchor = *below.choose(rng).unwrap_or(&(v - 1));
        for u in std::iter::once(anchor).chain(below.iter().copied().filter(|_| rng.random_bool(0.35))) {
            if !adj[u][v] && !closes_triangle(&adj, u, v) {
                adj[u][v] = true;
                adj[v][u] = true;
                edges.push((u, v));
            }
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if layer_of[u] == layer_of[v] && !adj[u][v] && rng.random_bool(0.1) && !closes_triangle(&adj, u, v) {
                adj[u][v] = true;
                adj[v][u] = true;
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("valid edges")
}

/// A small connected graph with each edge subdivided 0 to 2 times.
pub fn randomly_subdivided<R: Rng>(rng: &mut R, base_n: usize) -> Graph {
    let base = connected_triangle_free(rng, base_n, 0.5);
    let mut n = base.n();
    let mut edges = Vec::new();
    for &(u, v) in base.edges() {
        let extra = rng.random_range(0..=2);
        let mut prev = u;
        for _ in 0..extra {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        edges.push((prev, v));
    }
    Graph::new(n, &edges).expect("valid edges")
}

/// Connected, triangle-free, P9-free graph on at most `max_n` vertices,
/// drawn from the three generators above.
pub fn p9free_instance<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    loop {
        let n = rng.random_range(2..=max_n);
        let g = match rng.random_range(0..3) {
            0 => {
                let p = rng.random_range(0.05..0.5);
                connected_triangle_free(rng, n, p)
            }
            1 => layered(rng, n),
            _ => randomly_subdivided(rng, n.min(5)),
        };
        if g.n() <= max_n && is_connected(&g) && crate::graph::is_triangle_free(&g) && find_induced_path(&g, 9).is_none() {
            return g;
        }
    }
}

/// A uniformly chosen good list: a singleton, `{i-1, i+1}`, `{i-2, i, i+2}`
/// or the full set.
pub fn good_list<R: Rng>(rng: &mut R, cc: CycleColors) -> ColorSet {
    let i = rng.random_range(1..=cc.k());
    match rng.random_range(0..4) {
        0 => ColorSet::singleton(i),
        1 => cc.shifted(i, &[-1, 1]),
        2 => cc.shifted(i, &[-2, 0, 2]),
        _ => cc.full(),
    }
}

/// Kinds of list assignments used in random suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ListKind {
    Full,
    Good,
    /// Full lists except a few precolored vertices.
    Singletons,
    /// Arbitrary nonempty subsets.
    Arbitrary,
}

pub fn lists<R: Rng>(rng: &mut R, n: usize, cc: CycleColors, kind: ListKind) -> ListAssignment {
    let mut l = ListAssignment::full(n, cc);
    for v in 0..n {
        let lv = match kind {
            ListKind::Full => cc.full(),
            ListKind::Good => {
                if rng.random_bool(0.5) {
                    good_list(rng, cc)
                } else {
                    cc.full()
                }
            }
            ListKind::Singletons => {
                if rng.random_bool(0.2) {
                    ColorSet::singleton(rng.random_range(1..=cc.k()))
                } else {
                    cc.full()
                }
            }
            ListKind::Arbitrary => ColorSet::from_bits(rng.random_range(1..=cc.full().bits())),
        };
        l.set(v, lv);
    }
    l
}

/// Positive NAE formula with `m` clauses over `n >= 3` variables.
pub fn nae_formula<R: Rng>(rng: &mut R, n: usize, m: usize) -> Formula {
    let vars: Vec<i32> = (1..=n as i32).collect();
    let clauses = (0..m).map(|_| vars.choose_multiple(rng, 3).copied().collect()).collect();
    Formula::new(n, clauses, FormulaKind::Nae3).expect("three distinct positive literals")
}

/// Monotone formula with up to `m` clauses over `n >= 3` variables; clauses
/// that would put a variable in a fourth clause are skipped.
pub fn monotone_formula<R: Rng>(rng: &mut R, n: usize, m: usize) -> Formula {
    let vars: Vec<i32> = (1..=n as i32).collect();
    let mut occ = vec![0; n + 1];
    let mut clauses = Vec::new();
    for _ in 0..m {
        let size = rng.random_range(2..=3);
        let sign = if rng.random_bool(0.5) { 1 } else { -1 };
        let mut c: Vec<i32> = vars.choose_multiple(rng, size).copied().collect();
        if c.iter().any(|&v| occ[v as usize] >= 3) {
            continue;
        }
        c.sort_unstable();
        for &v in &c {
            occ[v as usize] += 1;
        }
        clauses.push(c.into_iter().map(|v| sign * v).collect());
    }
    Formula::new(n, clauses, FormulaKind::Monotone3).expect("occurrences are bounded")
}

/// 3-uniform hypergraph with `m` hyperedges on `n >= 3` vertices; each
/// vertex is precolored with probability 1/2.
pub fn hypergraph<R: Rng>(rng: &mut R, n: usize, m: usize) -> Hypergraph {
    let verts: Vec<usize> = (0..n).collect();
    let edges = (0..m)
        .map(|_| {
            let e: Vec<usize> = verts.choose_multiple(rng, 3).copied().collect();
            [e[0], e[1], e[2]]
        })
        .collect();
    let precolor = (0..n).map(|_| rng.random_bool(0.5).then(|| rng.random_range(1..=3))).collect();
    Hypergraph::new(n, edges, precolor).expect("distinct vertices in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_graphs_meet_their_promises() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let g = p9free_instance(&mut rng, 14);
            assert!(g.n() <= 14 && is_connected(&g) && crate::graph::is_triangle_free(&g));
        }
    }

    #[test]
    fn random_sources_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            assert_eq!(nae_formula(&mut rng, 5, 4).clauses.len(), 4);
            assert!(monotone_formula(&mut rng, 6, 8).validate().is_ok());
            assert_eq!(hypergraph(&mut rng, 6, 3).edges.len(), 3);
        }
    }

    #[test]
    fn good_lists_are_good() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let cc = CycleColors::new(7).unwrap();
        for _ in 0..500 {
            assert!(cc.is_good_list(good_list(&mut rng, cc)));
        }
    }
}
