//! Bad paths and starter depth.

use crate::graph::{Graph, Vertex};

use super::layers::{LayerStructure, Part};

/// Induced path `a - b - c` with `a ∈ Y_i`, `b, c ∈ (Y ∪ Z) \ Y_i`, and
/// `{b, c}` anticomplete to `X_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BadPath {
    pub index: usize,
    pub a: Vertex,
    pub b: Vertex,
    pub c: Vertex,
}

fn outside_y_i(part: Part, i: usize) -> bool {
    matches!(part, Part::Y(j) if j != i) || part == Part::Z
}

fn anticomplete_to_x_i(g: &Graph, layers: &LayerStructure, v: Vertex, i: usize) -> bool {
    g.neighbors(v).iter().all(|&u| layers.part(u) != Part::X(i))
}

/// Bad paths grouped by index: entry `i - 1` holds `P_i`, each group in
/// lexicographic `(a, b, c)` order.
pub fn find_bad_paths(g: &Graph, layers: &LayerStructure) -> Vec<Vec<BadPath>> {
    let k = layers.k();
    let mut out = vec![Vec::new(); k];
    for a in g.vertices() {
        let Part::Y(i) = layers.part(a) else { continue };
        for &b in g.neighbors(a) {
            if !outside_y_i(layers.part(b), i) || !anticomplete_to_x_i(g, layers, b, i) {
                continue;
            }
            for &c in g.neighbors(b) {
                if c == a || g.has_edge(a, c) || !outside_y_i(layers.part(c), i) {
                    continue;
                }
                if anticomplete_to_x_i(g, layers, c, i) {
                    out[i - 1].push(BadPath { index: i, a, b, c });
                }
            }
        }
    }
    out
}

pub fn has_bad_paths(paths: &[Vec<BadPath>]) -> bool {
    paths.iter().any(|p| !p.is_empty())
}

/// Distinct starters of a group, ascending.
pub fn starters(group: &[BadPath]) -> Vec<Vertex> {
    let mut a: Vec<Vertex> = group.iter().map(|p| p.a).collect();
    a.dedup();
    a
}

/// Depth of `v ∈ Y_i`: over `x ∈ N(v) ∩ X_i`, the minimum of the longest
/// induced path `v - x - P` with `P` inside `S`, counted in vertices.
pub fn depth(g: &Graph, layers: &LayerStructure, v: Vertex) -> usize {
    let Part::Y(i) = layers.part(v) else { return 0 };
    g.neighbors(v)
        .iter()
        .filter(|&&x| layers.part(x) == Part::X(i))
        .map(|&x| {
            let mut path = vec![v, x];
            longest_into_seed(g, layers, &mut path)
        })
        .min()
        .unwrap_or(0)
}

fn longest_into_seed(g: &Graph, layers: &LayerStructure, path: &mut Vec<Vertex>) -> usize {
    let last = *path.last().unwrap();
    let mut best = path.len();
    for &u in g.neighbors(last) {
        if !layers.part(u).is_s() || path.contains(&u) {
            continue;
        }
        let induced = path[..path.len() - 1].iter().all(|&p| !g.has_edge(p, u));
        if induced {
            path.push(u);
            best = best.max(longest_into_seed(g, layers, path));
            path.pop();
        }
    }
    best
}

/// Smallest depth over all starters of bad paths, `None` if there are none.
pub fn min_starter_depth(g: &Graph, layers: &LayerStructure, paths: &[Vec<BadPath>]) -> Option<usize> {
    paths.iter().flat_map(|group| starters(group)).map(|a| depth(g, layers, a)).min()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;
    use crate::lists::{ColorSet, CycleColors, ListAssignment};
    use crate::solver::layers::partition_layers;

    #[test]
    fn seven_cycle_bad_paths() {
        let g = Graph::cycle(7);
        let mut l = ListAssignment::full(7, CycleColors::new(5).unwrap());
        l.set(0, ColorSet::singleton(1));
        let layers = partition_layers(&g, &VertexSet::new([0]), &l);
        let paths = find_bad_paths(&g, &layers);
        assert_eq!(paths[0], vec![BadPath { index: 1, a: 2, b: 3, c: 4 }, BadPath { index: 1, a: 5, b: 4, c: 3 }]);
        assert_eq!(min_starter_depth(&g, &layers, &paths), Some(3));
    }

    #[test]
    fn star_has_no_bad_path() {
        let g = Graph::star(5);
        let mut l = ListAssignment::full(6, CycleColors::new(5).unwrap());
        l.set(0, ColorSet::singleton(1));
        let layers = partition_layers(&g, &VertexSet::new([0]), &l);
        assert!(!has_bad_paths(&find_bad_paths(&g, &layers)));
    }

    #[test]
    fn long_tail_gives_bad_paths() {
        // seed {0}, tail 0-1-2-3-4: a = 2 in Y_1, b = 3, c = 4 in Z
        let g = Graph::path(5);
        let mut l = ListAssignment::full(5, CycleColors::new(5).unwrap());
        l.set(0, ColorSet::singleton(1));
        let layers = partition_layers(&g, &VertexSet::new([0]), &l);
        let paths = find_bad_paths(&g, &layers);
        assert_eq!(paths[0], vec![BadPath { index: 1, a: 2, b: 3, c: 4 }]);
        assert!(paths[1..].iter().all(Vec::is_empty));
        assert_eq!(depth(&g, &layers, 2), 3);
        assert_eq!(min_starter_depth(&g, &layers, &paths), Some(3));
    }

    #[test]
    fn depth_uses_longest_seed_path() {
        // seed path 0-1-2-3, x = 4 adjacent to 0, y = 5 adjacent to 4
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (0, 4), (4, 5)]).unwrap();
        let mut l = ListAssignment::full(6, CycleColors::new(5).unwrap());
        for (v, c) in [(0, 1), (1, 2), (2, 3), (3, 4)] {
            l.set(v, ColorSet::singleton(c));
        }
        let layers = partition_layers(&g, &VertexSet::new([0, 1, 2, 3]), &l);
        assert_eq!(layers.part(5), Part::Y(1));
        assert_eq!(depth(&g, &layers, 5), 6);
    }
}
