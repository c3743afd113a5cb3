//! Exhaustive catalogs of small reduction sources and brute-force deciders.

use crate::graph::Graph;

use super::formula::{Formula, FormulaKind, Hypergraph};

/// Positive NAE formulas over exactly 3 variables with 1 or 2 clauses, every
/// clause order included.
pub fn small_nae_formulas() -> Vec<Formula> {
    let perms: [[i32; 3]; 6] = [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]];
    let mut out = Vec::new();
    for a in perms {
        out.push(Formula::new(3, vec![a.to_vec()], FormulaKind::Nae3).unwrap());
        for b in perms {
            out.push(Formula::new(3, vec![a.to_vec(), b.to_vec()], FormulaKind::Nae3).unwrap());
        }
    }
    out
}

/// Monotone formulas over 2 or 3 variables with 1 or 2 clauses of 2 or 3
/// literals.
pub fn small_monotone_formulas() -> Vec<Formula> {
    let mut out = Vec::new();
    for nv in 2..=3i32 {
        let mut clauses: Vec<Vec<i32>> = Vec::new();
        for sign in [1, -1] {
            for a in 1..=nv {
                for b in a + 1..=nv {
                    clauses.push(vec![sign * a, sign * b]);
                }
            }
            if nv == 3 {
                clauses.push(vec![sign, sign * 2, sign * 3]);
            }
        }
        for a in &clauses {
            out.push(Formula::new(nv as usize, vec![a.clone()], FormulaKind::Monotone3).unwrap());
            for b in &clauses {
                out.push(Formula::new(nv as usize, vec![a.clone(), b.clone()], FormulaKind::Monotone3).unwrap());
            }
        }
    }
    out
}

/// Hypergraphs on 3 to 5 vertices with 1 or 2 hyperedges, each with every
/// partial precoloring. On 5 vertices only the pair sharing one vertex is
/// used; other shapes already appear on fewer vertices.
pub fn small_hypergraphs() -> Vec<Hypergraph> {
    let mut shapes: Vec<(usize, Vec<[usize; 3]>)> = Vec::new();
    for n in 3..=4 {
        let triples: Vec<[usize; 3]> = (0..n)
            .flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c])))
            .collect();
        for (i, &e) in triples.iter().enumerate() {
            shapes.push((n, vec![e]));
            for &f in &triples[i + 1..] {
                shapes.push((n, vec![e, f]));
            }
        }
    }
    shapes.push((5, vec![[0, 1, 2], [2, 3, 4]]));
    let mut out = Vec::new();
    for (n, edges) in shapes {
        for code in 0..4usize.pow(n as u32) {
            let precolor: Vec<Option<usize>> = (0..n)
                .map(|v| match (code / 4usize.pow(v as u32)) % 4 {
                    0 => None,
                    c => Some(c),
                })
                .collect();
            out.push(Hypergraph::new(n, edges.clone(), precolor).unwrap());
        }
    }
    out
}

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    (0..1u64 << pairs.len())
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            Graph::new(n, &edges).unwrap()
        })
        .collect()
}

/// Brute force over all `2^n` assignments.
pub fn formula_satisfiable(f: &Formula) -> bool {
    (0..1u64 << f.num_vars).any(|mask| {
        let a: Vec<bool> = (0..f.num_vars).map(|i| mask >> i & 1 == 1).collect();
        f.is_satisfied_by(&a)
    })
}

/// Brute force over all extensions of the precoloring with colors 1, 2, 3.
pub fn hypergraph_extendable(h: &Hypergraph) -> bool {
    let free: Vec<usize> = (0..h.n).filter(|&v| h.precolor[v].is_none()).collect();
    let mut colors: Vec<usize> = h.precolor.iter().map(|p| p.unwrap_or(1)).collect();
    (0..3usize.pow(free.len() as u32)).any(|code| {
        for (i, &v) in free.iter().enumerate() {
            colors[v] = 1 + (code / 3usize.pow(i as u32)) % 3;
        }
        h.is_valid_coloring(&colors)
    })
}

/// Brute force proper `q`-coloring.
pub fn graph_colorable(g: &Graph, q: usize) -> bool {
    let n = g.n();
    let mut colors = vec![0usize; n];
    (0..q.pow(n as u32)).any(|code| {
        for (v, c) in colors.iter_mut().enumerate() {
            *c = (code / q.pow(v as u32)) % q;
        }
        g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
    })
}
