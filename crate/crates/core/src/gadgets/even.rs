//! List `C_{2s}`-coloring instances from monotone 3-SAT.
//!
//! Variables get list `{1, 3}` (1 = true, 3 = false). A positive clause
//! vertex gets `{1, 3, 5}` and is joined to its variables by the paths
//! `Q^(1)`, `Q^(3)`, `Q^(5)`: path `Q^(i)` forbids color `i` at the clause
//! exactly when its variable is false. Negative clauses use the mirror image
//! under the reflection `x -> 4 - x` of `C_{2s}`, which swaps 1 and 3.

use crate::error::GadgetError;
use crate::graph::{girth, max_degree, min_branch_distance, Vertex};
use crate::lists::{ColorSet, CycleColors, ListAssignment};

use super::formula::{Formula, FormulaKind};
use super::{certify, Builder, GadgetInstance, Metadata};

/// Which of the three connector paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QPath {
    One,
    Three,
    Five,
}

impl QPath {
    pub fn color(self) -> usize {
        match self {
            QPath::One => 1,
            QPath::Three => 3,
            QPath::Five => 5,
        }
    }

    pub const ALL: [QPath; 3] = [QPath::One, QPath::Three, QPath::Five];
}

/// Lists along `Q^(i)` from the variable end to the clause end, for
/// `C_{2s}` and an even girth parameter `g`.
pub fn q_path_lists(s: usize, g: usize, which: QPath) -> Vec<ColorSet> {
    let k = 2 * s;
    let set = |cs: &[usize]| ColorSet::from_colors(cs.iter().copied());
    let mut out = Vec::new();
    for _ in 0..g / 2 {
        out.push(set(&[1, 3]));
        out.push(set(&[k, 4]));
    }
    out.push(set(&[1, 3]));
    out.push(set(&[k, 2]));
    match which {
        QPath::One => {
            out.push(set(&[k - 1, 3]));
            out.push(set(&[k, 4]));
        }
        QPath::Five => {
            for j in 1..=k - 6 {
                out.push(set(&[k - j, if j % 2 == 0 { 2 } else { 3 }]));
            }
        }
        QPath::Three => {
            for j in 2..=k - 2 {
                out.push(set(&[k - j + 1, if j % 2 == 0 { 1 } else { k }]));
            }
            for m in 0..s - 2 {
                out.push(set(&[4, k - 2 * m, k]));
                if m + 3 < s {
                    out.push(set(&[1, 3, k - 2 * m - 1]));
                }
            }
        }
    }
    out.push(set(&[1, 3, 5]));
    out
}

/// The reflection `x -> 4 - x (mod 2s)`, an automorphism of `C_{2s}`.
pub fn reflect(s: usize, l: ColorSet) -> ColorSet {
    let cc = CycleColors::new(2 * s).expect("valid cycle length");
    l.iter().map(|c| cc.add(4, -(c as i64))).collect()
}

/// List instance over `C_{2s}` that is colorable iff the monotone formula is
/// satisfiable. Variable `v` is vertex `v - 1`; clause `l` is vertex
/// `num_vars + l`; path vertices follow.
pub fn monotone3sat_to_listinstance(f: &Formula, s: usize, g: usize) -> Result<GadgetInstance, GadgetError> {
    if s < 3 {
        return Err(GadgetError::BadParameter("s must be at least 3".into()));
    }
    if g < 4 || g % 2 == 1 {
        return Err(GadgetError::BadParameter(format!("girth parameter {g} must be even and at least 4")));
    }
    if f.kind != FormulaKind::Monotone3 {
        return Err(GadgetError::Malformed("expected a monotone formula".into()));
    }
    f.validate()?;
    let k = 2 * s;
    let cc = CycleColors::new(k).expect("valid cycle length");
    let n_vars = f.num_vars;
    let mut b = Builder::new(n_vars + f.clauses.len());
    let mut lists: Vec<ColorSet> = vec![ColorSet::from_colors([1, 3]); n_vars];
    for c in &f.clauses {
        let base = if c.len() == 3 { ColorSet::from_colors([1, 3, 5]) } else { ColorSet::from_colors([1, 3]) };
        lists.push(if c[0] > 0 { base } else { reflect(s, base) });
    }
    for (ci, c) in f.clauses.iter().enumerate() {
        let clause_vertex = n_vars + ci;
        for (&lit, which) in c.iter().zip(QPath::ALL) {
            let mut seq = q_path_lists(s, g, which);
            if lit < 0 {
                seq = seq.into_iter().map(|l| reflect(s, l)).collect();
            }
            let var_vertex: Vertex = lit.unsigned_abs() as usize - 1;
            let verts = b.path(var_vertex, clause_vertex, seq.len() - 1);
            for (&v, &l) in verts[1..verts.len() - 1].iter().zip(&seq[1..seq.len() - 1]) {
                debug_assert_eq!(v, lists.len());
                lists.push(l);
            }
        }
    }
    let graph = b.finish();
    let l = ListAssignment::from_lists(cc, lists).expect("colors lie on the cycle");
    let mut meta = Metadata::default();
    meta.set("construction", "monotone-list");
    meta.set("k", k);
    meta.set("s", s);
    meta.set("g", g);
    meta.set("source", f.to_dimacs());
    meta.set("claim", format!("list C_{k}-colorable iff the formula is satisfiable"));
    certify(&graph, &mut meta, None);
    assert!(max_degree(&graph) <= 3, "a variable occurs in too many clauses");
    assert!(girth(&graph).is_none_or(|x| x > g));
    assert!(min_branch_distance(&graph).is_none_or(|x| x > g));
    Ok(GadgetInstance { graph, k, lists: Some(l), precoloring: Vec::new(), outputs: Vec::new(), metadata: meta })
}
