//! Final list reductions once no bad path is left, and the 2-SAT step.

use std::collections::{BTreeSet, HashMap};

use crate::error::SolveError;
use crate::graph::{Graph, Vertex};
use crate::lists::{reduce_within, ColorSet, ListAssignment, TargetGraph};
use crate::oracle::{verify, Coloring};
use crate::twosat::{encode_except, solve_2sat, Lit};

use super::layers::{LayerStructure, Part};

fn not_p9(msg: impl Into<String>) -> SolveError {
    SolveError::NotP9Free(msg.into())
}

/// Shrink every `Z` list to at most two colors. Requires `Z` stable and each
/// `z` to see exactly one `Y_i`.
pub fn reduce_z_lists(g: &Graph, layers: &LayerStructure, lists: &mut ListAssignment) -> Result<(), SolveError> {
    let cc = lists.colors();
    for z in g.vertices().filter(|&z| layers.part(z).is_z()) {
        let mut idx = BTreeSet::new();
        for &u in g.neighbors(z) {
            match layers.part(u) {
                Part::Z => return Err(not_p9(format!("far layer is not stable at vertex {z}"))),
                Part::Y(i) => {
                    idx.insert(i);
                }
                _ => {}
            }
        }
        if idx.len() != 1 {
            return Err(not_p9(format!("vertex {z} sees {} classes of Y", idx.len())));
        }
        let i = *idx.first().unwrap();
        let l = lists.get(z);
        let pick = |near: i64, far: i64| {
            let near = cc.shifted(i, &[near]);
            if near.is_subset(l) {
                near
            } else {
                cc.shifted(i, &[far]) & l
            }
        };
        lists.set(z, pick(-1, -3) | pick(1, 3));
    }
    Ok(())
}

/// Reduce on `S ∪ X ∪ Y`, re-layer by list shape and resolve each component
/// of `G|(Y' ∪ Z)`. `Ok(None)` means the subinstance has no coloring.
pub fn reduce_y_lists(g: &Graph, layers: &LayerStructure, lists: &ListAssignment) -> Result<Option<ListAssignment>, SolveError> {
    let cc = lists.colors();
    let k = cc.k();
    let mask: Vec<bool> = g.vertices().map(|v| !layers.part(v).is_z()).collect();
    let Ok(mut l) = reduce_within(g, lists, Some(&mask)) else {
        return Ok(None);
    };
    if l.first_empty().is_some() {
        return Ok(None);
    }

    let mut part: Vec<Option<Part>> = vec![None; g.n()];
    for v in g.vertices() {
        let lv = l.get(v);
        part[v] = match layers.part(v) {
            Part::Z => Some(Part::Z),
            _ if lv.len() == 1 => Some(Part::S),
            Part::S => None,
            p => {
                let x = (1..=k).find(|&i| lv.is_subset(cc.shifted(i, &[-1, 1]))).map(Part::X);
                let y = || (1..=k).find(|&i| lv.is_subset(cc.shifted(i, &[0, -2, 2]))).map(Part::Y);
                if x.is_some() { x } else if p.is_y() { y() } else { None }
            }
        };
    }
    if let Some(v) = part.iter().position(Option::is_none) {
        return Err(not_p9(format!("vertex {v} fits no layer after reduction")));
    }
    let part: Vec<Part> = part.into_iter().map(Option::unwrap).collect();
    for y in g.vertices() {
        let Part::Y(i) = part[y] else { continue };
        for &u in g.neighbors(y) {
            match part[u] {
                Part::S => return Err(not_p9(format!("vertex {y} of Y' touches S'"))),
                Part::X(j) if j != i => return Err(not_p9(format!("vertex {y} of Y'_{i} touches X'_{j}"))),
                _ => {}
            }
        }
    }

    let in_yz = |v: Vertex| part[v].is_y() || part[v].is_z();
    let mut seen = vec![false; g.n()];
    for start in g.vertices() {
        if seen[start] || !in_yz(start) {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < comp.len() {
            let v = comp[head];
            head += 1;
            for &u in g.neighbors(v) {
                if !seen[u] && in_yz(u) {
                    seen[u] = true;
                    comp.push(u);
                }
            }
        }
        comp.sort_unstable();
        if !resolve_component(g, &part, &mut l, &comp)? {
            return Ok(None);
        }
    }
    Ok(Some(l))
}

/// Apply the list rule for one component; `false` if it has no coloring.
fn resolve_component(g: &Graph, part: &[Part], l: &mut ListAssignment, comp: &[Vertex]) -> Result<bool, SolveError> {
    let cc = l.colors();
    let k = cc.k();
    let idx: BTreeSet<usize> = comp
        .iter()
        .filter_map(|&v| match part[v] {
            Part::Y(i) => Some(i),
            _ => None,
        })
        .collect();
    if idx.is_empty() {
        return Ok(true);
    }
    let has_z = comp.iter().any(|&v| part[v].is_z());
    let edges_in = || {
        comp.iter()
            .flat_map(move |&u| g.neighbors(u).iter().filter(move |&&w| u < w && comp.binary_search(&w).is_ok()).map(move |&w| (u, w)))
    };
    let restrict = |l: &mut ListAssignment, v: Vertex, s: ColorSet| {
        l.set(v, l.get(v) & s);
        !l.get(v).is_empty()
    };

    if idx.len() == 1 {
        let i = *idx.first().unwrap();
        if !has_z {
            if comp.len() >= 2 {
                if k != 5 {
                    return Ok(false);
                }
                let two = cc.shifted(i, &[-2, 2]);
                return Ok(comp.iter().all(|&v| restrict(l, v, two)));
            }
            let v = comp[0];
            if l.get(v).len() == 3 {
                l.set(v, ColorSet::singleton(i));
            }
            return Ok(true);
        }
        let inside: Vec<Vertex> = comp
            .iter()
            .copied()
            .filter(|&v| part[v] == Part::Y(i) && g.neighbors(v).iter().any(|&u| part[u] == Part::Y(i)))
            .collect();
        if inside.is_empty() {
            return Ok(true);
        }
        if k != 5 {
            return Ok(false);
        }
        let two = cc.shifted(i, &[-2, 2]);
        return Ok(inside.iter().all(|&v| restrict(l, v, two)));
    }

    if idx.len() == 2 && !has_z {
        if edges_in().any(|(u, w)| part[u] == part[w]) {
            return Err(not_p9("component of Y' has an edge inside one class"));
        }
        let i = *idx.first().unwrap();
        let j = *idx.last().unwrap();
        let (lo, hi) = if cc.add(i, 1) == j {
            (i, j)
        } else if cc.add(j, 1) == i {
            (j, i)
        } else {
            return Ok(true);
        };
        for &v in comp {
            if l.get(v).len() != 3 {
                continue;
            }
            let drop = if part[v] == Part::Y(lo) { cc.add(lo, -2) } else { cc.add(hi, 2) };
            let mut lv = l.get(v);
            lv.remove(drop);
            l.set(v, lv);
        }
        return Ok(true);
    }
    Err(not_p9(format!("component of Y' ∪ Z meets {} classes of Y' (far layer: {has_z})", idx.len())))
}

/// Solve an instance whose lists of size at least 3 form a stable set:
/// encode everything else into 2-SAT, forbid neighbor color pairs with no
/// common extension, then color the large-list vertices greedily.
pub fn finalize_2sat(g: &Graph, l: &ListAssignment) -> Result<Option<Coloring>, SolveError> {
    let cc = l.colors();
    let target = TargetGraph::cycle(cc.k());
    if l.first_empty().is_some() {
        return Ok(None);
    }
    let big: Vec<bool> = g.vertices().map(|v| l.get(v).len() >= 3).collect();
    if g.edges().iter().any(|&(u, v)| big[u] && big[v]) {
        return Err(not_p9("vertices with lists of size 3 or more are not independent"));
    }
    let mut f = encode_except(g, l, &target, &big).map_err(|e| SolveError::Input(e.to_string()))?;
    let var_of: HashMap<(Vertex, usize), usize> =
        (0..f.num_vars()).filter_map(|x| f.var_meaning(x).map(|m| (m, x))).collect();
    let support = |v: Vertex, c: usize| cc.neighbors(c) & l.get(v);
    for v in g.vertices().filter(|&v| big[v]) {
        let nb = g.neighbors(v);
        for &u in nb {
            for c in l.get(u) {
                if support(v, c).is_empty() {
                    f.add_unit(Lit::neg(var_of[&(u, c)]));
                }
            }
        }
        for (a, &u) in nb.iter().enumerate() {
            for &w in &nb[a + 1..] {
                for cu in l.get(u) {
                    for cw in l.get(w) {
                        if !support(v, cu).intersects(support(v, cw)) {
                            f.add_binary(Lit::neg(var_of[&(u, cu)]), Lit::neg(var_of[&(w, cw)]));
                        }
                    }
                }
            }
        }
    }
    let Some(assignment) = solve_2sat(&f) else {
        return Ok(None);
    };
    let mut coloring = vec![0; g.n()];
    for (x, &on) in assignment.iter().enumerate().take(f.num_vars()) {
        if on {
            if let Some((v, c)) = f.var_meaning(x) {
                coloring[v] = c;
            }
        }
    }
    for v in g.vertices() {
        if !big[v] && coloring[v] == 0 {
            coloring[v] = l.get(v).single().unwrap_or(0);
        }
    }
    for v in g.vertices().filter(|&v| big[v]) {
        let common = g.neighbors(v).iter().fold(l.get(v), |acc, &u| acc & support(v, coloring[u]));
        coloring[v] = common
            .min_color()
            .ok_or_else(|| not_p9(format!("no common color left for vertex {v}")))?;
    }
    if !verify(g, l, &target, &coloring) {
        return Err(SolveError::Input("2-SAT assignment does not extend to a coloring".into()));
    }
    Ok(Some(coloring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lists::CycleColors;
    use crate::oracle::solve_exact;

    fn cs(v: &[usize]) -> ColorSet {
        ColorSet::from_colors(v.iter().copied())
    }

    #[test]
    fn z_lists_shrink_to_two() {
        let cc = CycleColors::new(7).unwrap();
        let g = Graph::path(2);
        let layers = LayerStructure::from_parts(7, vec![Part::Y(1), Part::Z]);
        let mut l = ListAssignment::full(2, cc);
        reduce_z_lists(&g, &layers, &mut l).unwrap();
        assert_eq!(l[1], cs(&[7, 2]));
        l.set(1, cs(&[5, 4, 3]));
        reduce_z_lists(&g, &layers, &mut l).unwrap();
        assert_eq!(l[1], cs(&[5, 4]));
    }

    #[test]
    fn z_with_two_classes_is_rejected() {
        let g = Graph::path(3);
        let layers = LayerStructure::from_parts(5, vec![Part::Y(1), Part::Z, Part::Y(2)]);
        let mut l = ListAssignment::full(3, CycleColors::new(5).unwrap());
        assert!(matches!(reduce_z_lists(&g, &layers, &mut l), Err(SolveError::NotP9Free(_))));
    }

    #[test]
    fn finalize_matches_oracle_on_stars() {
        // a center with a 3-list and leaves with 2-lists
        let cc = CycleColors::new(7).unwrap();
        let g = Graph::star(3);
        let cases = [
            [cs(&[1, 3, 5]), cs(&[2, 4]), cs(&[4, 6]), cs(&[6, 2])],
            [cs(&[1, 3, 5]), cs(&[2]), cs(&[4]), cs(&[6])],
            [cs(&[1, 3, 5]), cs(&[2, 7]), cs(&[4]), cs(&[6, 7])],
        ];
        for lists in cases {
            let l = ListAssignment::from_lists(cc, lists.to_vec()).unwrap();
            let ours = finalize_2sat(&g, &l).unwrap();
            let truth = solve_exact(&g, &l, &TargetGraph::cycle(7));
            assert_eq!(ours.is_some(), truth.is_some(), "{lists:?}");
        }
    }

    #[test]
    fn adjacent_large_lists_are_rejected() {
        let l = ListAssignment::full(2, CycleColors::new(5).unwrap());
        assert!(finalize_2sat(&Graph::path(2), &l).is_err());
    }
}
