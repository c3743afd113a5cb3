//! Hardness constructions and the forbidden-subgraph classifier.
//!
//! Every generator returns a [`GadgetInstance`]: the graph, its lists or
//! precoloring, and a metadata record holding the parameters, the claimed
//! equivalence and structural certificates that were re-checked on the
//! emitted graph.

pub mod classify;
pub mod even;
pub mod formula;
pub mod odd;
pub mod sources;

use std::fmt::Write as _;

use crate::graph::{Graph, Vertex};
use crate::lists::{ColorSet, CycleColors, ListAssignment};

pub use classify::{classify, is_subdivided_claw_subgraph, Variant, Verdict};
pub use even::{monotone3sat_to_listinstance, q_path_lists, QPath};
pub use formula::{parse_dimacs, parse_hypergraph, Formula, FormulaKind, Hypergraph};
pub use odd::{build_chain_gadget, nae3sat_to_coloring, nonrainbow_to_extension, reduce_degree, subdivide, subdivide_instance};

/// Ordered key-value record written next to generated instances.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Metadata {
    entries: Vec<(String, String)>,
}

impl Metadata {
    pub fn set(&mut self, key: &str, value: impl ToString) {
        let value = value.to_string();
        match self.entries.iter_mut().find(|(k, _)| k == key) {
            Some(e) => e.1 = value,
            None => self.entries.push((key.to_string(), value)),
        }
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    /// One `key = value` line per entry; newlines in values are escaped.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            writeln!(out, "{k} = {}", v.replace('\n', "\\n")).unwrap();
        }
        out
    }
}

/// Output of a reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetInstance {
    pub graph: Graph,
    /// Target cycle length.
    pub k: usize,
    /// Lists for list instances; `None` means full lists.
    pub lists: Option<ListAssignment>,
    pub precoloring: Vec<(Vertex, usize)>,
    /// Distinguished vertices, e.g. the outputs of a chain gadget.
    pub outputs: Vec<Vertex>,
    pub metadata: Metadata,
}

impl GadgetInstance {
    /// Lists combining the instance's lists and precoloring.
    pub fn effective_lists(&self) -> ListAssignment {
        let cc = CycleColors::new(self.k).expect("valid cycle length");
        let mut l = self.lists.clone().unwrap_or_else(|| ListAssignment::full(self.graph.n(), cc));
        for &(v, c) in &self.precoloring {
            l.set(v, l.get(v) & ColorSet::singleton(c));
        }
        l
    }
}

/// Incremental edge list used by the constructions.
#[derive(Debug, Default)]
pub(crate) struct Builder {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Builder {
    pub fn new(n: usize) -> Self {
        Builder { n, edges: Vec::new() }
    }

    pub fn vertex(&mut self) -> Vertex {
        self.n += 1;
        self.n - 1
    }

    pub fn edge(&mut self, u: Vertex, v: Vertex) {
        self.edges.push((u, v));
    }

    /// Join `u` and `v` by a path with `m` edges; returns all path vertices
    /// from `u` to `v`.
    pub fn path(&mut self, u: Vertex, v: Vertex, m: usize) -> Vec<Vertex> {
        assert!(m >= 1, "a path needs at least one edge");
        let mut verts = vec![u];
        for _ in 1..m {
            let w = self.vertex();
            verts.push(w);
        }
        verts.push(v);
        for w in verts.windows(2) {
            self.edge(w[0], w[1]);
        }
        verts
    }

    pub fn finish(self) -> Graph {
        Graph::new(self.n, &self.edges).expect("constructions emit simple graphs")
    }
}

/// Record girth, degree, bipartiteness and optionally `Γ_p` on `meta`.
pub(crate) fn certify(g: &Graph, meta: &mut Metadata, gamma: Option<usize>) {
    use crate::graph::{girth, is_bipartite, is_in_gamma_p, max_degree, min_branch_distance};
    meta.set("vertices", g.n());
    meta.set("edges", g.m());
    meta.set("girth", girth(g).map_or("inf".to_string(), |x| x.to_string()));
    meta.set("max_degree", max_degree(g));
    meta.set("bipartite", is_bipartite(g));
    meta.set("min_branch_distance", min_branch_distance(g).map_or("none".to_string(), |x| x.to_string()));
    if let Some(p) = gamma {
        let ok = is_in_gamma_p(g, p);
        assert!(ok, "construction left the class Gamma_{p}");
        meta.set(&format!("gamma_{p}"), ok);
    }
}
