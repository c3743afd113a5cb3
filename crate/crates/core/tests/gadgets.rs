use std::collections::BTreeSet;
use std::ops::ControlFlow;

use cyclehom::gadgets::even::reflect;
use cyclehom::gadgets::sources::{
    all_graphs, formula_satisfiable, graph_colorable, hypergraph_extendable, small_hypergraphs, small_monotone_formulas,
    small_nae_formulas,
};
use cyclehom::gadgets::*;
use cyclehom::graph::{girth, is_bipartite, is_in_gamma_p, is_triangle_free, max_degree, min_branch_distance};
use cyclehom::oracle::{enumerate_all, for_each_coloring, solve_exact};
use cyclehom::{ColorSet, Graph, TargetGraph};

fn oracle_sat(inst: &GadgetInstance) -> bool {
    solve_exact(&inst.graph, &inst.effective_lists(), &TargetGraph::cycle(inst.k)).is_some()
}

/// Pairs (first color, last color) over all list colorings of a path.
fn end_pairs(lists: &[ColorSet], k: usize) -> BTreeSet<(usize, usize)> {
    let g = Graph::path(lists.len());
    let mut out = BTreeSet::new();
    let _ = for_each_coloring::<()>(&g, lists, &TargetGraph::cycle(k), |f| {
        out.insert((f[0], f[f.len() - 1]));
        ControlFlow::Continue(())
    });
    out
}

#[test]
fn q_paths_have_the_three_properties() {
    for s in 3..=5 {
        let k = 2 * s;
        for g in [4, 6] {
            for which in QPath::ALL {
                let i = which.color();
                let lists = q_path_lists(s, g, which);
                assert!(lists.len() > g, "s={s} g={g} Q{i} too short");
                let pairs = end_pairs(&lists, k);
                for c in [1, 3, 5] {
                    assert!(pairs.contains(&(1, c)), "s={s} g={g} Q{i}: a=1 cannot reach {c}");
                    assert_eq!(pairs.contains(&(3, c)), c != i, "s={s} g={g} Q{i}: a=3, b={c}");
                }
                // the mirrored path: 1 and 3 swap roles, 5 becomes 2s-1
                let mirrored: Vec<ColorSet> = lists.iter().map(|&l| reflect(s, l)).collect();
                let pairs = end_pairs(&mirrored, k);
                let phi = |c: usize| (4 + k - c) % k;
                for c in [1, 3, 5] {
                    assert!(pairs.contains(&(3, phi(c))));
                    assert_eq!(pairs.contains(&(1, phi(c))), c != i);
                }
            }
        }
    }
}

#[test]
fn chain_outputs_agree_and_attain_every_color() {
    for k in [5, 7] {
        for d in 1..=3 {
            let inst = build_chain_gadget(d, k).unwrap();
            let g = &inst.graph;
            assert!(max_degree(g) <= 3 && is_triangle_free(g));
            let all = enumerate_all(g, &inst.effective_lists(), &TargetGraph::cycle(k)).unwrap();
            let mut seen = BTreeSet::new();
            for f in &all {
                let c = f[inst.outputs[0]];
                assert!(inst.outputs.iter().all(|&o| f[o] == c), "k={k} d={d}");
                seen.insert(c);
            }
            assert_eq!(seen.len(), k);
        }
    }
}

#[test]
fn subdivision_matches_colorability() {
    for n in 1..=5 {
        for g in all_graphs(n) {
            let inst = subdivide_instance(&g, 2).unwrap();
            assert!(is_in_gamma_p(&inst.graph, 3));
            if let Some(x) = girth(&g) {
                assert_eq!(girth(&inst.graph), Some(3 * x));
            }
            assert_eq!(oracle_sat(&inst), graph_colorable(&g, 5));
        }
    }
    for g in [Graph::complete(6), Graph::petersen()] {
        let inst = subdivide_instance(&g, 2).unwrap();
        assert_eq!(oracle_sat(&inst), graph_colorable(&g, 5));
    }
}

#[test]
fn subdivided_k6_is_not_c5_colorable() {
    let inst = subdivide_instance(&Graph::complete(6), 2).unwrap();
    assert!(!oracle_sat(&inst));
}

#[test]
fn nonrainbow_matches_brute_force() {
    for s in [2, 3] {
        for h in small_hypergraphs() {
            let inst = nonrainbow_to_extension(&h, s).unwrap();
            assert!(is_bipartite(&inst.graph));
            assert!(is_in_gamma_p(&inst.graph, s));
            assert_eq!(oracle_sat(&inst), hypergraph_extendable(&h), "s={s} {h:?}");
        }
    }
}

#[test]
fn nae_matches_brute_force() {
    for f in small_nae_formulas() {
        let inst = nae3sat_to_coloring(&f, 2, None).unwrap();
        assert_eq!(oracle_sat(&inst), formula_satisfiable(&f), "{f:?}");
    }
}

#[test]
fn nae_with_larger_targets() {
    let f = small_nae_formulas()[0].clone();
    let inst = nae3sat_to_coloring(&f, 3, None).unwrap();
    assert!(oracle_sat(&inst));
}

#[test]
fn monotone_matches_brute_force() {
    for s in [3, 4] {
        for g in [4, 6] {
            for f in small_monotone_formulas() {
                let inst = monotone3sat_to_listinstance(&f, s, g).unwrap();
                assert!(max_degree(&inst.graph) <= 3);
                assert!(girth(&inst.graph).is_none_or(|x| x > g));
                assert!(min_branch_distance(&inst.graph).is_none_or(|x| x > g));
                assert_eq!(oracle_sat(&inst), formula_satisfiable(&f), "s={s} g={g} {f:?}");
            }
        }
    }
}

#[test]
fn monotone_unsat_formula() {
    let clauses = vec![vec![-1, -4], vec![-1, -2], vec![-2, -3], vec![1, 3], vec![-3, -4], vec![2, 4]];
    let f = Formula::new(4, clauses, FormulaKind::Monotone3).unwrap();
    assert!(!formula_satisfiable(&f));
    let inst = monotone3sat_to_listinstance(&f, 3, 4).unwrap();
    assert!(!oracle_sat(&inst));
}

#[test]
fn degree_reduction_preserves_colorability() {
    let sources = [Graph::star(4), Graph::complete(5), Graph::complete_bipartite(2, 4), Graph::petersen()];
    for k in [5, 7] {
        for g in &sources {
            let inst = reduce_degree(g, k).unwrap();
            assert!(max_degree(&inst.graph) <= 3);
            let direct = solve_exact(g, &cyclehom::ListAssignment::full(g.n(), cyclehom::CycleColors::new(k).unwrap()), &TargetGraph::cycle(k));
            assert_eq!(oracle_sat(&inst), direct.is_some(), "k={k}");
        }
    }
}

#[test]
fn generators_are_deterministic() {
    let f = small_monotone_formulas()[7].clone();
    assert_eq!(monotone3sat_to_listinstance(&f, 3, 4).unwrap(), monotone3sat_to_listinstance(&f, 3, 4).unwrap());
    let h = small_hypergraphs()[100].clone();
    assert_eq!(nonrainbow_to_extension(&h, 2).unwrap(), nonrainbow_to_extension(&h, 2).unwrap());
}

#[test]
fn classifier_examples() {
    assert_eq!(classify(&Graph::path(9), 5, Variant::List).unwrap(), Verdict::PolynomialKnown);
    assert_eq!(classify(&Graph::star(4), 5, Variant::Extension).unwrap(), Verdict::NPCompleteKnown);
    assert_eq!(classify(&Graph::subdivided_claw([3, 3, 3]), 5, Variant::Plain).unwrap(), Verdict::OpenOrUnknown);
}
