//! Layer structures `(S, X, Y, Z)` and canonical list assignments.

use crate::error::Infeasible;
use crate::graph::{bfs_distances, Graph, Vertex, VertexSet};
use crate::lists::{update, ColorSet, ListAssignment};

/// Which layer a vertex belongs to; `X(i)` and `Y(i)` carry the color index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    S,
    X(usize),
    Y(usize),
    Z,
}

impl Part {
    pub fn is_s(self) -> bool {
        self == Part::S
    }

    pub fn is_x(self) -> bool {
        matches!(self, Part::X(_))
    }

    pub fn is_y(self) -> bool {
        matches!(self, Part::Y(_))
    }

    pub fn is_z(self) -> bool {
        self == Part::Z
    }
}

/// Partition of `V(G)` into seed `S`, `X = N(S)`, `Y = N(X) \ S` and the rest
/// `Z`, with `X` and `Y` split into `X_1..X_k`, `Y_1..Y_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LayerStructure {
    k: usize,
    part: Vec<Part>,
}

impl LayerStructure {
    pub fn from_parts(k: usize, part: Vec<Part>) -> Self {
        LayerStructure { k, part }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn part(&self, v: Vertex) -> Part {
        self.part[v]
    }

    pub fn parts(&self) -> &[Part] {
        &self.part
    }

    fn collect(&self, want: impl Fn(Part) -> bool) -> VertexSet {
        VertexSet::new((0..self.part.len()).filter(|&v| want(self.part[v])))
    }

    pub fn s(&self) -> VertexSet {
        self.collect(Part::is_s)
    }

    pub fn x(&self) -> VertexSet {
        self.collect(Part::is_x)
    }

    pub fn y(&self) -> VertexSet {
        self.collect(Part::is_y)
    }

    pub fn z(&self) -> VertexSet {
        self.collect(Part::is_z)
    }

    pub fn x_i(&self, i: usize) -> VertexSet {
        self.collect(|p| p == Part::X(i))
    }

    pub fn y_i(&self, i: usize) -> VertexSet {
        self.collect(|p| p == Part::Y(i))
    }

    /// Check the layer-structure conditions: `S` connected, each layer
    /// dominates the next, no `S`-`(Y ∪ Z)` or `X`-`Z` edges.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.part.len() != g.n() {
            return false;
        }
        let s: Vec<Vertex> = self.s().into_vec();
        if !s.is_empty() {
            let sub = crate::graph::induced_subgraph(g, &VertexSet::new(s.iter().copied()));
            if !crate::graph::is_connected(&sub.graph) {
                return false;
            }
        }
        for v in g.vertices() {
            let nb = |want: fn(Part) -> bool| g.neighbors(v).iter().any(|&u| want(self.part[u]));
            let ok = match self.part[v] {
                Part::S => !nb(Part::is_y) && !nb(Part::is_z),
                Part::X(_) => nb(Part::is_s) && !nb(Part::is_z),
                Part::Y(_) => nb(Part::is_x) && !nb(Part::is_s),
                Part::Z => nb(Part::is_y) && !nb(Part::is_s) && !nb(Part::is_x),
            };
            if !ok {
                return false;
            }
        }
        true
    }
}

/// Layers around `seed`. Every seed vertex must have a singleton list; `X_i`
/// and `Y_i` follow the first-index rule.
pub fn partition_layers(g: &Graph, seed: &VertexSet, lists: &ListAssignment) -> LayerStructure {
    let k = lists.k();
    let dist = bfs_distances(g, seed.as_slice());
    let mut part: Vec<Part> = dist
        .iter()
        .map(|d| match d {
            Some(0) => Part::S,
            Some(1) => Part::X(0),
            Some(2) => Part::Y(0),
            _ => Part::Z,
        })
        .collect();
    for v in g.vertices() {
        if part[v] == Part::X(0) {
            let i = min_singleton_neighbor(g, lists, &part, v, Part::is_s).expect("seed lists are singletons");
            part[v] = Part::X(i);
        }
    }
    assign_y_first_index(g, &mut part, |p| p == Part::Y(0));
    LayerStructure { k, part }
}

/// Smallest `j` such that `v` has a neighbor `s` with `want(part[s])` and `L(s) = {j}`.
fn min_singleton_neighbor(g: &Graph, lists: &ListAssignment, part: &[Part], v: Vertex, want: fn(Part) -> bool) -> Option<usize> {
    g.neighbors(v).iter().filter(|&&u| want(part[u])).filter_map(|&u| lists.get(u).single()).min()
}

/// Give every vertex selected by `pending` the index `Y(i)` for the smallest
/// `i` with a neighbor in `X_i`; vertices without one become `Z`.
fn assign_y_first_index(g: &Graph, part: &mut [Part], pending: impl Fn(Part) -> bool) {
    for v in g.vertices() {
        if pending(part[v]) {
            let i = g
                .neighbors(v)
                .iter()
                .filter_map(|&u| match part[u] {
                    Part::X(i) => Some(i),
                    _ => None,
                })
                .min();
            part[v] = i.map_or(Part::Z, Part::Y);
        }
    }
}

/// New layers after moving `a_set` into the seed. Vertices of the old
/// `Y ∪ Z` that now touch the seed join `X'_j`, where `j` is the smallest
/// color of a seed neighbor; old `X_j` vertices keep their index.
pub fn rebuild_layers(g: &Graph, old: &LayerStructure, a_set: &[bool], lists: &ListAssignment) -> LayerStructure {
    let mut part: Vec<Part> = old.part.clone();
    for v in g.vertices() {
        if a_set[v] {
            part[v] = Part::S;
        }
    }
    let mut next = part.clone();
    for v in g.vertices() {
        if a_set[v] {
            continue;
        }
        match old.part[v] {
            Part::Y(_) | Part::Z => {
                next[v] = match min_singleton_neighbor(g, lists, &part, v, Part::is_s) {
                    Some(j) => Part::X(j),
                    None => Part::Y(0),
                };
            }
            _ => {}
        }
    }
    assign_y_first_index(g, &mut next, |p| p == Part::Y(0));
    LayerStructure { k: old.k, part: next }
}

/// Ordered updates `S_i -> X_i`, then `X_i -> Y_i`, for `i = 1..k`. Fails if
/// a list empties or some `X_i` has an internal edge.
pub fn canonicalize(g: &Graph, layers: &LayerStructure, lists: &mut ListAssignment) -> Result<(), Infeasible> {
    let k = layers.k;
    let singleton_of = |v: Vertex, l: &ListAssignment| l.get(v).single();
    for i in 1..=k {
        for x in g.vertices().filter(|&x| layers.part[x] == Part::X(i)) {
            for &s in g.neighbors(x) {
                if layers.part[s] == Part::S && singleton_of(s, lists) == Some(i) {
                    update(g, lists, x, s);
                    if lists.get(x).is_empty() {
                        return Err(Infeasible { vertex: x });
                    }
                }
            }
        }
        for y in g.vertices().filter(|&y| layers.part[y] == Part::Y(i)) {
            for &x in g.neighbors(y) {
                if layers.part[x] == Part::X(i) {
                    update(g, lists, y, x);
                    if lists.get(y).is_empty() {
                        return Err(Infeasible { vertex: y });
                    }
                }
            }
        }
    }
    for &(u, v) in g.edges() {
        if let (Part::X(i), Part::X(j)) = (layers.part[u], layers.part[v]) {
            if i == j {
                return Err(Infeasible { vertex: u });
            }
        }
    }
    debug_assert!(is_canonical(layers, lists));
    Ok(())
}

/// `L(s)` singleton on `S`, `L(x) ⊆ {i-1,i+1}` on `X_i`, `L(y) ⊆ {i,i-2,i+2}` on `Y_i`.
pub fn is_canonical(layers: &LayerStructure, lists: &ListAssignment) -> bool {
    let cc = lists.colors();
    (0..layers.part.len()).all(|v| {
        let l = lists.get(v);
        match layers.part[v] {
            Part::S => l.len() == 1,
            Part::X(i) => l.is_subset(cc.shifted(i, &[-1, 1])),
            Part::Y(i) => l.is_subset(cc.shifted(i, &[0, -2, 2])),
            Part::Z => true,
        }
    })
}

/// Restrict the seed to the given colors (one per seed vertex, in order).
pub fn color_seed(lists: &mut ListAssignment, seed: &VertexSet, colors: &[usize]) {
    for (v, &c) in seed.iter().zip(colors) {
        lists.set(v, lists.get(v) & ColorSet::singleton(c));
    }
}
