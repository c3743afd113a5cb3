//! Reductions for odd cycles `C_{2s+1}`.

use crate::error::GadgetError;
use crate::graph::{is_bipartite, is_triangle_free, max_degree, Graph, Vertex};

use super::formula::{Formula, FormulaKind, Hypergraph};
use super::{certify, Builder, GadgetInstance, Metadata};

fn bad(msg: impl Into<String>) -> GadgetError {
    GadgetError::BadParameter(msg.into())
}

fn odd_k(k: usize) -> Result<usize, GadgetError> {
    if k < 5 || k.is_multiple_of(2) {
        return Err(bad(format!("k = {k} must be odd and at least 5")));
    }
    Ok((k - 1) / 2)
}

/// Replace every edge by a path with `m` edges. Original vertices keep their
/// ids; new vertices follow in edge order.
pub fn subdivide(g: &Graph, m: usize) -> Result<Graph, GadgetError> {
    if m == 0 {
        return Err(bad("paths need at least one edge"));
    }
    let mut b = Builder::new(g.n());
    for &(u, v) in g.edges() {
        b.path(u, v, m);
    }
    Ok(b.finish())
}

/// `g` is `(2s+1)`-colorable iff the `(2s-1)`-subdivision is `C_{2s+1}`-colorable.
pub fn subdivide_instance(g: &Graph, s: usize) -> Result<GadgetInstance, GadgetError> {
    if s < 2 {
        return Err(bad("s must be at least 2"));
    }
    let m = 2 * s - 1;
    let out = subdivide(g, m)?;
    let mut meta = Metadata::default();
    meta.set("construction", "subdivide");
    meta.set("k", 2 * s + 1);
    meta.set("s", s);
    meta.set("path_edges", m);
    meta.set("source_vertices", g.n());
    meta.set("source_edges", g.m());
    meta.set("claim", format!("source is {}-colorable iff output is C_{}-colorable", 2 * s + 1, 2 * s + 1));
    certify(&out, &mut meta, Some(m));
    Ok(GadgetInstance { graph: out, k: 2 * s + 1, lists: None, precoloring: Vec::new(), outputs: Vec::new(), metadata: meta })
}

/// Vertex ids of a chain of `d` copies of `C_k`, copy `j` listed as
/// `w^j_0 .. w^j_{k-1}`. Consecutive copies share an edge:
/// `w^j_1 = w^{j+1}_{k-1}` and `w^j_2 = w^{j+1}_{k-2}`.
fn chain_layout(d: usize, k: usize, mut fresh: impl FnMut() -> Vertex) -> Vec<Vec<Vertex>> {
    let mut copies: Vec<Vec<Vertex>> = Vec::with_capacity(d);
    for j in 0..d {
        let mut w = vec![usize::MAX; k];
        if j > 0 {
            w[k - 1] = copies[j - 1][1];
            w[k - 2] = copies[j - 1][2];
        }
        for slot in w.iter_mut() {
            if *slot == usize::MAX {
                *slot = fresh();
            }
        }
        copies.push(w);
    }
    copies
}

fn chain_edges(copies: &[Vec<Vertex>]) -> Vec<(Vertex, Vertex)> {
    let mut edges = Vec::new();
    for (j, w) in copies.iter().enumerate() {
        let k = w.len();
        for t in 0..k {
            // the edge w_{k-2} w_{k-1} already exists as w_2 w_1 of the previous copy
            if j > 0 && t == k - 2 {
                continue;
            }
            edges.push((w[t], w[(t + 1) % k]));
        }
    }
    edges
}

/// The chain `R^d`: in every `C_k`-coloring all outputs get the same color.
pub fn build_chain_gadget(d: usize, k: usize) -> Result<GadgetInstance, GadgetError> {
    odd_k(k)?;
    if d == 0 {
        return Err(bad("d must be at least 1"));
    }
    let mut n = 0;
    let copies = chain_layout(d, k, || {
        n += 1;
        n - 1
    });
    let g = Graph::new(n, &chain_edges(&copies))?;
    debug_assert!(max_degree(&g) <= 3 && is_triangle_free(&g));
    let outputs: Vec<Vertex> = copies.iter().map(|w| w[0]).collect();
    let mut meta = Metadata::default();
    meta.set("construction", "chain");
    meta.set("k", k);
    meta.set("d", d);
    meta.set("outputs", format!("{outputs:?}"));
    meta.set("claim", "all outputs share one color in every C_k-coloring; every color is attained");
    certify(&g, &mut meta, None);
    assert!(max_degree(&g) <= 3 && is_triangle_free(&g));
    Ok(GadgetInstance { graph: g, k, lists: None, precoloring: Vec::new(), outputs, metadata: meta })
}

/// Replace every vertex of degree `d >= 4` by a chain `R^d`. The vertex
/// itself becomes the first output; its sorted neighbors are wired to the
/// outputs in order.
pub fn reduce_degree(g: &Graph, k: usize) -> Result<GadgetInstance, GadgetError> {
    odd_k(k)?;
    let mut n = g.n();
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut replaced = vec![false; g.n()];
    let mut wired: Vec<(Vertex, Vertex, Vertex)> = Vec::new();
    for v in g.vertices() {
        let d = g.degree(v);
        if d < 4 {
            continue;
        }
        replaced[v] = true;
        let mut first = true;
        let copies = chain_layout(d, k, || {
            if std::mem::take(&mut first) {
                v
            } else {
                n += 1;
                n - 1
            }
        });
        edges.extend(chain_edges(&copies));
        for (j, &u) in g.neighbors(v).iter().enumerate() {
            wired.push((v, u, copies[j][0]));
        }
    }
    let endpoint = |v: Vertex, u: Vertex| -> Vertex {
        if replaced[v] {
            wired.iter().find(|&&(a, b, _)| a == v && b == u).unwrap().2
        } else {
            v
        }
    };
    for &(u, v) in g.edges() {
        edges.push((endpoint(u, v), endpoint(v, u)));
    }
    let out = Graph::new(n, &edges)?;
    assert!(max_degree(&out) <= 3);
    let mut meta = Metadata::default();
    meta.set("construction", "degree-reduce");
    meta.set("k", k);
    meta.set("replaced", replaced.iter().filter(|&&r| r).count());
    meta.set("claim", format!("source is C_{k}-colorable iff output is"));
    certify(&out, &mut meta, None);
    Ok(GadgetInstance { graph: out, k, lists: None, precoloring: Vec::new(), outputs: Vec::new(), metadata: meta })
}

/// Extension instance for non-rainbow coloring extension of `h`, target
/// `C_{2s+1}`. Variable vertices are `0..h.n`.
pub fn nonrainbow_to_extension(h: &Hypergraph, s: usize) -> Result<GadgetInstance, GadgetError> {
    if s < 2 {
        return Err(bad("s must be at least 2"));
    }
    let k = 2 * s + 1;
    let mut b = Builder::new(h.n);
    let mut pre = Vec::new();
    for v in 0..h.n {
        match h.precolor[v] {
            Some(c) => pre.push((v, c)),
            None => {
                for c in 4..=k {
                    let aux = b.vertex();
                    pre.push((aux, c));
                    b.path(v, aux, 2 * s - 1);
                }
            }
        }
    }
    for e in &h.edges {
        let ve = b.vertex();
        for &x in e {
            b.path(ve, x, s);
        }
    }
    let g = b.finish();
    assert!(is_bipartite(&g), "edge gadgets must keep the graph bipartite");
    let mut meta = Metadata::default();
    meta.set("construction", "nonrainbow");
    meta.set("k", k);
    meta.set("s", s);
    meta.set("source", h.to_text());
    meta.set("claim", "precoloring extends iff the hypergraph coloring extends with no rainbow hyperedge");
    certify(&g, &mut meta, Some(s));
    Ok(GadgetInstance { graph: g, k, lists: None, precoloring: pre, outputs: Vec::new(), metadata: meta })
}

/// `C_{2s+1}`-coloring instance that is colorable iff the positive NAE
/// formula is satisfiable. `d` defaults to `s(2s-1)` and must be a multiple
/// of it. Vertex `0` is `z`, vertices `1..=n` are the variables.
pub fn nae3sat_to_coloring(f: &Formula, s: usize, d: Option<usize>) -> Result<GadgetInstance, GadgetError> {
    if s < 2 {
        return Err(bad("s must be at least 2"));
    }
    if f.kind != FormulaKind::Nae3 {
        return Err(GadgetError::Malformed("expected a NAE formula".into()));
    }
    f.validate()?;
    let unit = s * (2 * s - 1);
    let d = d.unwrap_or(unit);
    if d == 0 || !d.is_multiple_of(unit) {
        return Err(bad(format!("d = {d} must be a positive multiple of {unit}")));
    }
    let k = 2 * s + 1;
    let step = 2 * s - 1;
    let mut b = Builder::new(1 + f.num_vars);
    let z = 0;
    for i in 1..=f.num_vars {
        b.edge(z, i);
    }
    for clause in &f.clauses {
        let ys: Vec<Vertex> = clause.iter().map(|_| b.vertex()).collect();
        for a in 0..3 {
            for c in a + 1..3 {
                b.path(ys[a], ys[c], step);
            }
        }
        for (&lit, &y) in clause.iter().zip(&ys) {
            let v = lit as usize;
            let p = b.path(v, y, 2 * d * step + 1);
            for j in 1..=2 * d {
                b.edge(z, p[j * step]);
            }
        }
    }
    let g = b.finish();
    let mut meta = Metadata::default();
    meta.set("construction", "nae");
    meta.set("k", k);
    meta.set("s", s);
    meta.set("d", d);
    meta.set("source", f.to_dimacs());
    meta.set("claim", format!("C_{k}-colorable iff the formula is NAE-satisfiable"));
    certify(&g, &mut meta, None);
    Ok(GadgetInstance { graph: g, k, lists: None, precoloring: Vec::new(), outputs: Vec::new(), metadata: meta })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{girth, is_in_gamma_p};

    #[test]
    fn subdivide_examples() {
        let g = subdivide(&Graph::complete(3), 3).unwrap();
        assert_eq!((g.n(), g.m()), (9, 9));
        assert_eq!(girth(&g), Some(9));
        assert_eq!(subdivide(&Graph::petersen(), 1).unwrap(), Graph::petersen());
        let inst = subdivide_instance(&Graph::complete(4), 2).unwrap();
        assert!(is_in_gamma_p(&inst.graph, 3));
        assert_eq!(inst.metadata.get("girth"), Some("9"));
    }

    #[test]
    fn chain_sizes() {
        for (d, k) in [(1, 5), (2, 5), (3, 5), (2, 7), (4, 9)] {
            let inst = build_chain_gadget(d, k).unwrap();
            assert_eq!(inst.graph.n(), d * k - 2 * (d - 1));
            assert_eq!(inst.outputs.len(), d);
        }
        assert_eq!(build_chain_gadget(1, 5).unwrap().graph, Graph::cycle(5));
        assert!(build_chain_gadget(2, 6).is_err());
    }

    #[test]
    fn degree_reduction_shapes() {
        let cube = reduce_degree(&Graph::petersen(), 5).unwrap();
        assert_eq!(cube.graph, Graph::petersen());
        let star = reduce_degree(&Graph::star(4), 5).unwrap();
        assert_eq!(star.graph.n(), 5 + 4 * 5 - 2 * 3 - 1);
        assert!(max_degree(&star.graph) <= 3);
        let k5 = reduce_degree(&Graph::complete(5), 5).unwrap();
        assert!(max_degree(&k5.graph) <= 3);
    }

    #[test]
    fn nonrainbow_shape() {
        let h = Hypergraph::new(3, vec![[0, 1, 2]], vec![Some(1), Some(1), Some(2)]).unwrap();
        let inst = nonrainbow_to_extension(&h, 2).unwrap();
        assert_eq!(inst.graph.n(), 3 + 1 + 3);
        assert_eq!(inst.precoloring, vec![(0, 1), (1, 1), (2, 2)]);
        let free = Hypergraph::new(1, vec![], vec![None]).unwrap();
        let inst = nonrainbow_to_extension(&free, 2).unwrap();
        assert_eq!(inst.precoloring, vec![(1, 4), (4, 5)]);
        assert_eq!(inst.graph.n(), 1 + 2 * 3);
    }

    #[test]
    fn nae_vertex_count() {
        let f = Formula::new(3, vec![vec![1, 2, 3]], FormulaKind::Nae3).unwrap();
        let inst = nae3sat_to_coloring(&f, 2, None).unwrap();
        // z, three variables, three y's, three 3-edge paths and three connectors of 37 edges
        assert_eq!(inst.graph.n(), 1 + 3 + 3 + 3 * 2 + 3 * 36);
        assert!(nae3sat_to_coloring(&f, 2, Some(4)).is_err());
        assert_eq!(inst.graph.degree(0), 3 + 3 * 12);
    }
}
