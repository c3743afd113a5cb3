//! Simple undirected graphs and the structural searches used by the solvers
//! and by gadget validation.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::GraphError;

pub type Vertex = usize;

/// Undirected simple graph on vertices `0..n`. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

/// Build a graph, dropping duplicate edges. Rejects self-loops and
/// out-of-range endpoints.
pub fn build_graph(n: usize, edge_list: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
    let mut edges = Vec::with_capacity(edge_list.len());
    for &(u, v) in edge_list {
        if u >= n || v >= n {
            return Err(GraphError::EndpointOutOfRange { u, v, n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        edges.push((u.min(v), u.max(v)));
    }
    edges.sort_unstable();
    edges.dedup();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in &edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(Graph { n, edges, adj })
}

impl Graph {
    pub fn new(n: usize, edge_list: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        build_graph(n, edge_list)
    }

    fn from_valid(n: usize, edge_list: &[(Vertex, Vertex)]) -> Self {
        build_graph(n, edge_list).expect("generated edge list is valid")
    }

    pub fn empty(n: usize) -> Self {
        Self::from_valid(n, &[])
    }

    pub fn path(n: usize) -> Self {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_valid(n, &e)
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_valid(n, &e)
    }

    pub fn complete(n: usize) -> Self {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Self::from_valid(n, &e)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut e = Vec::new();
        for u in 0..a {
            for v in 0..b {
                e.push((u, a + v));
            }
        }
        Self::from_valid(a + b, &e)
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Self::complete_bipartite(1, leaves)
    }

    pub fn petersen() -> Self {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_valid(10, &e)
    }

    /// Claw with legs of the given edge lengths; the center is vertex 0.
    pub fn subdivided_claw(legs: [usize; 3]) -> Self {
        let mut e = Vec::new();
        let mut next = 1;
        for len in legs {
            let mut prev = 0;
            for _ in 0..len {
                e.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Self::from_valid(next, &e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }
}

/// Sorted, duplicate-free set of vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new(vs: impl IntoIterator<Item = Vertex>) -> Self {
        let mut v: Vec<_> = vs.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    /// Like [`VertexSet::new`] but checks every identifier against `n`.
    pub fn checked(n: usize, vs: impl IntoIterator<Item = Vertex>) -> Result<Self, GraphError> {
        let set = Self::new(vs);
        match set.0.last() {
            Some(&v) if v >= n => Err(GraphError::EndpointOutOfRange { u: v, v, n }),
            _ => Ok(set),
        }
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        Self::new(v)
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        Self::new(iter)
    }
}

pub fn is_triangle_free(g: &Graph) -> bool {
    find_triangle(g).is_none()
}

pub fn find_triangle(g: &Graph) -> Option<[Vertex; 3]> {
    for &(u, v) in g.edges() {
        let (a, b) = (g.neighbors(u), g.neighbors(v));
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return Some([u, v, a[i]]),
            }
        }
    }
    None
}

/// Vertex sequence of an induced path on `t` vertices, if one exists.
pub fn find_induced_path(g: &Graph, t: usize) -> Option<Vec<Vertex>> {
    assert!(t >= 1, "path length must be at least 1");
    if g.n() == 0 {
        return None;
    }
    if t == 1 {
        return Some(vec![0]);
    }
    let mut touch = vec![0u32; g.n()];
    let mut path = Vec::with_capacity(t);
    for v in g.vertices() {
        if extend_induced(g, t, &mut path, &mut touch, v) {
            return Some(path);
        }
    }
    None
}

// `touch[w]` counts path vertices equal or adjacent to `w`.
fn extend_induced(g: &Graph, t: usize, path: &mut Vec<Vertex>, touch: &mut [u32], v: Vertex) -> bool {
    path.push(v);
    touch[v] += 1;
    for &w in g.neighbors(v) {
        touch[w] += 1;
    }
    if path.len() == t {
        return true;
    }
    for &w in g.neighbors(v) {
        // w is adjacent to v; it must not be on the path or adjacent to anything earlier
        if touch[w] == 1 && !path.contains(&w) && extend_induced(g, t, path, touch, w) {
            return true;
        }
    }
    path.pop();
    touch[v] -= 1;
    for &w in g.neighbors(v) {
        touch[w] -= 1;
    }
    false
}

pub fn is_pt_free(g: &Graph, t: usize) -> bool {
    find_induced_path(g, t).is_none()
}

/// Number of vertices on a longest induced path.
pub fn longest_induced_path(g: &Graph) -> usize {
    let mut t = 0;
    while find_induced_path(g, t + 1).is_some() {
        t += 1;
    }
    t
}

/// BFS distances from a set of sources; `None` for unreachable vertices.
pub fn bfs_distances(g: &Graph, sources: &[Vertex]) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    let mut queue = VecDeque::new();
    for &s in sources {
        if dist[s].is_none() {
            dist[s] = Some(0);
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    let mut seen = vec![false; g.n()];
    let mut comps = Vec::new();
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comps.push(VertexSet::new(comp));
    }
    comps
}

pub fn is_connected(g: &Graph) -> bool {
    connected_components(g).len() <= 1
}

/// Induced subgraph on `xs`, with `map[i]` the original id of new vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub map: Vec<Vertex>,
}

pub fn induced_subgraph(g: &Graph, xs: &VertexSet) -> InducedSubgraph {
    let map: Vec<Vertex> = xs.iter().collect();
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in map.iter().enumerate() {
        index[v] = i;
    }
    let mut e = Vec::new();
    for (i, &v) in map.iter().enumerate() {
        for &w in g.neighbors(v) {
            let j = index[w];
            if j != usize::MAX && i < j {
                e.push((i, j));
            }
        }
    }
    InducedSubgraph { graph: Graph::from_valid(map.len(), &e), map }
}

pub fn max_degree(g: &Graph) -> usize {
    g.vertices().map(|v| g.degree(v)).max().unwrap_or(0)
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; g.n()];
    let mut parent = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for r in g.vertices() {
        dist.fill(usize::MAX);
        dist[r] = 0;
        parent[r] = usize::MAX;
        queue.clear();
        queue.push_back(r);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Two-coloring with side 0/1 per vertex, or `None` if some component has an odd cycle.
pub fn bipartition(g: &Graph) -> Option<Vec<u8>> {
    let mut side = vec![u8::MAX; g.n()];
    for s in g.vertices() {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    stack.push(w);
                } else if side[w] == side[u] {
                    return None;
                }
            }
        }
    }
    Some(side)
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

pub fn is_forest(g: &Graph) -> bool {
    g.m() + connected_components(g).len() == g.n()
}

pub fn is_tree(g: &Graph) -> bool {
    g.n() > 0 && is_connected(g) && g.m() + 1 == g.n()
}

/// Vertices of degree at least 3.
pub fn branch_vertices(g: &Graph) -> Vec<Vertex> {
    g.vertices().filter(|&v| g.degree(v) >= 3).collect()
}

/// Smallest distance between two distinct branch vertices.
pub fn min_branch_distance(g: &Graph) -> Option<usize> {
    let bs = branch_vertices(g);
    let mut best = None;
    for (i, &b) in bs.iter().enumerate() {
        let d = bfs_distances(g, &[b]);
        for &c in &bs[i + 1..] {
            if let Some(x) = d[c] {
                best = Some(best.map_or(x, |y: usize| y.min(x)));
            }
        }
    }
    best
}

/// Whether every path joining two branch vertices has an edge count divisible by `p`.
///
/// A path between branch vertices splits at its inner branch vertices into
/// threads: maximal runs of degree-2 vertices between two branch vertices.
/// So it suffices to check every thread whose ends are distinct.
pub fn is_in_gamma_p(g: &Graph, p: usize) -> bool {
    assert!(p >= 1, "divisor must be positive");
    for b in branch_vertices(g) {
        for &first in g.neighbors(b) {
            let (mut prev, mut cur, mut len) = (b, first, 1);
            while g.degree(cur) == 2 {
                let next = if g.neighbors(cur)[0] == prev { g.neighbors(cur)[1] } else { g.neighbors(cur)[0] };
                prev = cur;
                cur = next;
                len += 1;
                if cur == b {
                    break;
                }
            }
            if g.degree(cur) >= 3 && cur != b && len % p != 0 {
                return false;
            }
        }
    }
    true
}

/// All connected vertex sets of exactly `size` vertices, in lexicographic order.
pub fn connected_subsets(g: &Graph, size: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    if size == 0 {
        return out;
    }
    let mut sub = Vec::with_capacity(size);
    for v in g.vertices() {
        sub.push(v);
        let ext: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&u| u > v).collect();
        esu_extend(g, size, v, &mut sub, ext, &mut out);
        sub.pop();
    }
    for s in &mut out {
        s.sort_unstable();
    }
    out.sort();
    out
}

// Each connected set is produced once, rooted at its smallest vertex.
fn esu_extend(g: &Graph, size: usize, root: Vertex, sub: &mut Vec<Vertex>, mut ext: Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
    if sub.len() == size {
        out.push(sub.clone());
        return;
    }
    while let Some(w) = ext.pop() {
        let mut next = ext.clone();
        for &u in g.neighbors(w) {
            if u > root
                && !sub.contains(&u)
                && !ext.contains(&u)
                && !sub.iter().any(|&s| g.has_edge(s, u))
                && u != w
            {
                next.push(u);
            }
        }
        sub.push(w);
        esu_extend(g, size, root, sub, next, out);
        sub.pop();
    }
}

/// Smallest connected `S` (at most 7 vertices, lexicographically first among
/// equal sizes) such that every vertex is within distance 3 of `S`.
pub fn find_seed(g: &Graph) -> Result<VertexSet, GraphError> {
    if g.n() == 0 {
        return Ok(VertexSet::default());
    }
    if !is_connected(g) {
        return Err(GraphError::Disconnected);
    }
    for size in 1..=7.min(g.n()) {
        for s in connected_subsets(g, size) {
            let d = bfs_distances(g, &s);
            if d.iter().all(|x| x.is_some_and(|x| x <= 3)) {
                return Ok(VertexSet::new(s));
            }
        }
    }
    Err(GraphError::NoSeed)
}

/// Parse the text format: first non-comment line `n m`, then `m` lines `u v`.
/// Lines starting with `#` are comments.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let perr = |line: usize, msg: &str| GraphError::Parse { line, msg: msg.to_string() };
    let (hline, header) = lines.next().ok_or_else(|| perr(0, "missing `n m` header"))?;
    let nums = parse_usizes(header).ok_or_else(|| perr(hline, "expected two integers"))?;
    let [n, m] = nums[..] else { return Err(perr(hline, "expected two integers")) };
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let nums = parse_usizes(l).ok_or_else(|| perr(line, "expected two integers"))?;
        let [u, v] = nums[..] else { return Err(perr(line, "expected two integers")) };
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(perr(hline, &format!("header announces {m} edges, found {}", edges.len())));
    }
    build_graph(n, &edges)
}

fn parse_usizes(s: &str) -> Option<Vec<usize>> {
    s.split_whitespace().map(|t| t.parse().ok()).collect()
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_examples() {
        let t = build_graph(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(t.m(), 3);
        assert_eq!(build_graph(1, &[]).unwrap().n(), 1);
        assert_eq!(build_graph(4, &[(0, 1), (0, 1)]).unwrap().m(), 1);
        assert_eq!(build_graph(4, &[(1, 0), (0, 1)]).unwrap().m(), 1);
        assert_eq!(build_graph(2, &[(0, 2)]), Err(GraphError::EndpointOutOfRange { u: 0, v: 2, n: 2 }));
        assert_eq!(build_graph(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = Graph::petersen();
        for u in g.vertices() {
            for &v in g.neighbors(u) {
                assert!(g.has_edge(v, u));
            }
        }
        assert_eq!(g.m(), 15);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
    }

    #[test]
    fn triangle_examples() {
        assert!(is_triangle_free(&Graph::cycle(5)));
        assert!(!is_triangle_free(&Graph::complete(3)));
        assert!(is_triangle_free(&Graph::petersen()));
    }

    #[test]
    fn induced_path_examples() {
        assert!(find_induced_path(&Graph::cycle(9), 9).is_none());
        assert!(find_induced_path(&Graph::cycle(9), 8).is_some());
        let p = find_induced_path(&Graph::path(9), 9).unwrap();
        assert_eq!(p.len(), 9);
        let mut sorted = p.clone();
        sorted.sort();
        assert_eq!(sorted, (0..9).collect::<Vec<_>>());
        assert!(find_induced_path(&Graph::complete(4), 3).is_none());
        assert_eq!(longest_induced_path(&Graph::petersen()), 5);
        assert_eq!(longest_induced_path(&Graph::complete(4)), 2);
    }

    #[test]
    fn induced_path_is_induced() {
        let g = Graph::petersen();
        let p = find_induced_path(&g, 5).unwrap();
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                assert_eq!(g.has_edge(p[i], p[j]), j == i + 1);
            }
        }
    }

    #[test]
    fn seed_examples() {
        assert_eq!(find_seed(&Graph::cycle(7)).unwrap(), VertexSet::new([0]));
        assert_eq!(find_seed(&Graph::star(5)).unwrap(), VertexSet::new([0]));
        assert_eq!(find_seed(&Graph::path(9)).unwrap(), VertexSet::new([3, 4, 5]));
        let two = build_graph(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(find_seed(&two), Err(GraphError::Disconnected));
        assert_eq!(find_seed(&Graph::path(30)), Err(GraphError::NoSeed));
    }

    #[test]
    fn connected_subsets_match_brute_force() {
        let g = Graph::petersen();
        for size in 1..=4 {
            let got = connected_subsets(&g, size);
            let mut want = Vec::new();
            for mask in 0u32..1 << 10 {
                if mask.count_ones() as usize != size {
                    continue;
                }
                let vs: Vec<_> = (0..10).filter(|&i| mask >> i & 1 == 1).collect();
                if is_connected(&induced_subgraph(&g, &VertexSet::new(vs.clone())).graph) {
                    want.push(vs);
                }
            }
            want.sort();
            assert_eq!(got, want, "size {size}");
        }
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&Graph::cycle(9)), Some(9));
        assert_eq!(girth(&Graph::path(6)), None);
        assert_eq!(girth(&Graph::complete(4)), Some(3));
        assert_eq!(girth(&Graph::petersen()), Some(5));
        assert_eq!(girth(&Graph::complete_bipartite(3, 3)), Some(4));
    }

    fn theta(len: usize) -> Graph {
        // two degree-3 vertices 0 and 1 joined by three internally disjoint paths
        let mut e = Vec::new();
        let mut next = 2;
        for _ in 0..3 {
            let mut prev = 0;
            for _ in 0..len - 1 {
                e.push((prev, next));
                prev = next;
                next += 1;
            }
            e.push((prev, 1));
        }
        build_graph(next, &e).unwrap()
    }

    #[test]
    fn gamma_examples() {
        for p in 1..6 {
            assert!(is_in_gamma_p(&Graph::star(3), p));
        }
        assert!(is_in_gamma_p(&theta(3), 3));
        assert!(!is_in_gamma_p(&theta(3), 2));
        assert!(is_in_gamma_p(&Graph::cycle(7), 2));
    }

    #[test]
    fn helper_examples() {
        let two = build_graph(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(connected_components(&two).len(), 2);
        assert_eq!(bfs_distances(&Graph::path(3), &[0]), vec![Some(0), Some(1), Some(2)]);
        let sub = induced_subgraph(&Graph::complete(4), &VertexSet::new([0, 2, 3]));
        assert_eq!(sub.graph, Graph::complete(3));
        assert_eq!(sub.map, vec![0, 2, 3]);
        assert_eq!(max_degree(&Graph::star(4)), 4);
        assert!(is_bipartite(&Graph::cycle(6)));
        assert!(!is_bipartite(&Graph::cycle(5)));
        assert!(is_tree(&Graph::subdivided_claw([1, 2, 3])));
        assert_eq!(min_branch_distance(&theta(3)), Some(3));
    }

    #[test]
    fn text_round_trip() {
        let g = Graph::petersen();
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        let g2 = parse_graph("# comment\n3 2\n0 1\n\n# x\n1 2\n").unwrap();
        assert_eq!(g2, Graph::path(3));
        assert!(matches!(parse_graph("3 2\n0 1\n"), Err(GraphError::Parse { .. })));
        assert!(matches!(parse_graph("3 1\n0 x\n"), Err(GraphError::Parse { line: 2, .. })));
    }

    #[test]
    fn vertex_set_checks() {
        let s = VertexSet::new([3, 1, 3, 2]);
        assert_eq!(s.as_slice(), &[1, 2, 3]);
        assert!(s.contains(2));
        assert!(VertexSet::checked(3, [0, 3]).is_err());
    }
}
