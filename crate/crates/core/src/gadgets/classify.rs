//! Known complexity of `C_k`-coloring variants on `F`-free graphs.

use crate::error::GadgetError;
use crate::graph::{branch_vertices, is_connected, is_in_gamma_p, is_tree, max_degree, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Plain,
    Extension,
    List,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    PolynomialKnown,
    NPCompleteKnown,
    OpenOrUnknown,
}

/// A connected graph is a subgraph of a subdivided claw iff it is a path or
/// a tree with exactly one vertex of degree 3 and none larger.
pub fn is_subdivided_claw_subgraph(f: &Graph) -> bool {
    if !is_tree(f) {
        return false;
    }
    match max_degree(f) {
        0..=2 => true,
        3 => branch_vertices(f).len() == 1,
        _ => false,
    }
}

fn is_path(f: &Graph) -> bool {
    is_tree(f) && max_degree(f) <= 2
}

pub fn classify(f: &Graph, k: usize, variant: Variant) -> Result<Verdict, GadgetError> {
    if f.n() == 0 || !is_connected(f) {
        return Err(GadgetError::Disconnected);
    }
    let odd = k % 2 == 1 && k >= 5;
    if !is_subdivided_claw_subgraph(f) {
        let hard = match variant {
            Variant::Extension | Variant::List if odd => true,
            Variant::List => k.is_multiple_of(2) && k >= 6,
            Variant::Plain if odd => {
                let s = (k - 1) / 2;
                !is_tree(f)
                    || max_degree(f) >= 4
                    || !is_in_gamma_p(f, 2 * s - 1)
                    || (branch_vertices(f).len() >= 2 && is_in_gamma_p(f, s * (2 * s - 1)))
            }
            _ => false,
        };
        if hard {
            return Ok(Verdict::NPCompleteKnown);
        }
    }
    let p9_poly = (k == 5 || k == 7 || k >= 9) && is_path(f) && f.n() <= 9;
    let easy = p9_poly
        || (variant == Variant::Plain && k.is_multiple_of(2))
        || (variant != Variant::Plain && k == 4)
        || (variant == Variant::Plain && k == 4);
    Ok(if easy { Verdict::PolynomialKnown } else { Verdict::OpenOrUnknown })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_examples() {
        assert_eq!(classify(&Graph::path(9), 5, Variant::List).unwrap(), Verdict::PolynomialKnown);
        assert_eq!(classify(&Graph::star(4), 5, Variant::Extension).unwrap(), Verdict::NPCompleteKnown);
        assert_eq!(classify(&Graph::subdivided_claw([2, 2, 2]), 5, Variant::Plain).unwrap(), Verdict::OpenOrUnknown);
        assert_eq!(classify(&Graph::cycle(4), 7, Variant::Plain).unwrap(), Verdict::NPCompleteKnown);
        assert_eq!(classify(&Graph::cycle(4), 6, Variant::List).unwrap(), Verdict::NPCompleteKnown);
        assert_eq!(classify(&Graph::cycle(4), 6, Variant::Plain).unwrap(), Verdict::PolynomialKnown);
        assert_eq!(classify(&Graph::path(10), 5, Variant::List).unwrap(), Verdict::OpenOrUnknown);
        assert_eq!(classify(&Graph::path(5), 8, Variant::List).unwrap(), Verdict::OpenOrUnknown);
        assert!(classify(&Graph::empty(2), 5, Variant::List).is_err());
    }

    #[test]
    fn claw_subgraphs() {
        assert!(is_subdivided_claw_subgraph(&Graph::path(6)));
        assert!(is_subdivided_claw_subgraph(&Graph::subdivided_claw([1, 3, 4])));
        assert!(!is_subdivided_claw_subgraph(&Graph::star(4)));
        assert!(!is_subdivided_claw_subgraph(&Graph::cycle(5)));
        // two branch vertices: an H shape
        let h = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap();
        assert!(!is_subdivided_claw_subgraph(&h));
    }
}
