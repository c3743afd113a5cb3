//! 2-SAT by strongly connected components, and the encoding of list
//! homomorphism instances whose lists have at most two colors.

use std::fmt::Write as _;
use std::ops::Not;

use crate::error::EncodeError;
use crate::graph::{Graph, Vertex};
use crate::lists::{ListAssignment, TargetGraph};
use crate::oracle::Coloring;

/// Literal: variable index plus polarity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lit(u32);

impl Lit {
    pub fn pos(var: usize) -> Self {
        Lit((var as u32) << 1)
    }

    pub fn neg(var: usize) -> Self {
        Lit((var as u32) << 1 | 1)
    }

    pub fn var(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn is_negated(self) -> bool {
        self.0 & 1 == 1
    }

    fn code(self) -> usize {
        self.0 as usize
    }

    fn dimacs(self) -> i64 {
        let v = self.var() as i64 + 1;
        if self.is_negated() { -v } else { v }
    }
}

impl Not for Lit {
    type Output = Lit;
    fn not(self) -> Lit {
        Lit(self.0 ^ 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Clause {
    Unit(Lit),
    Binary(Lit, Lit),
}

/// Variables, unary/binary clauses, and a map from variables back to
/// `(vertex, color)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwoSatFormula {
    num_vars: usize,
    clauses: Vec<Clause>,
    decode: Vec<Option<(Vertex, usize)>>,
    num_vertices: usize,
}

impl TwoSatFormula {
    pub fn new(num_vars: usize) -> Self {
        TwoSatFormula { num_vars, clauses: Vec::new(), decode: vec![None; num_vars], num_vertices: 0 }
    }

    /// Fresh variable meaning "vertex `v` gets `color`".
    pub fn add_vertex_var(&mut self, v: Vertex, color: usize) -> usize {
        debug_assert!(!self.decode.contains(&Some((v, color))), "decode map must stay injective");
        self.num_vars += 1;
        self.decode.push(Some((v, color)));
        self.num_vertices = self.num_vertices.max(v + 1);
        self.num_vars - 1
    }

    pub fn add_unit(&mut self, a: Lit) {
        debug_assert!(a.var() < self.num_vars);
        self.clauses.push(Clause::Unit(a));
    }

    pub fn add_binary(&mut self, a: Lit, b: Lit) {
        debug_assert!(a.var() < self.num_vars && b.var() < self.num_vars);
        self.clauses.push(Clause::Binary(a, b));
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn var_meaning(&self, var: usize) -> Option<(Vertex, usize)> {
        self.decode[var]
    }

    pub fn set_num_vertices(&mut self, n: usize) {
        self.num_vertices = self.num_vertices.max(n);
    }

    /// DIMACS CNF text; variable `i` is written as `i + 1`.
    pub fn to_dimacs(&self) -> String {
        let mut s = String::new();
        for (i, d) in self.decode.iter().enumerate() {
            if let Some((v, c)) = d {
                writeln!(s, "c var {} vertex {v} color {c}", i + 1).unwrap();
            }
        }
        writeln!(s, "p cnf {} {}", self.num_vars, self.clauses.len()).unwrap();
        for cl in &self.clauses {
            match *cl {
                Clause::Unit(a) => writeln!(s, "{} 0", a.dimacs()).unwrap(),
                Clause::Binary(a, b) => writeln!(s, "{} {} 0", a.dimacs(), b.dimacs()).unwrap(),
            }
        }
        s
    }
}

/// Satisfying assignment, or `None`. Deterministic for a given formula.
pub fn solve_2sat(f: &TwoSatFormula) -> Option<Vec<bool>> {
    let nodes = 2 * f.num_vars;
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    for cl in &f.clauses {
        match *cl {
            Clause::Unit(a) => succ[(!a).code()].push(a.code()),
            Clause::Binary(a, b) => {
                succ[(!a).code()].push(b.code());
                succ[(!b).code()].push(a.code());
            }
        }
    }
    let comp = tarjan_scc(&succ);
    let mut out = Vec::with_capacity(f.num_vars);
    for v in 0..f.num_vars {
        let (p, n) = (comp[Lit::pos(v).code()], comp[Lit::neg(v).code()]);
        if p == n {
            return None;
        }
        // Tarjan numbers components in reverse topological order
        out.push(p < n);
    }
    Some(out)
}

fn tarjan_scc(succ: &[Vec<usize>]) -> Vec<usize> {
    const UNSEEN: usize = usize::MAX;
    let n = succ.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut comp = vec![UNSEEN; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let (mut next_index, mut next_comp) = (0, 0);
    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        while let Some(&mut (v, ref mut i)) = call.last_mut() {
            if *i == 0 {
                index[v] = next_index;
                low[v] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if let Some(&w) = succ[v].get(*i) {
                *i += 1;
                if index[w] == UNSEEN {
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().unwrap();
                    on_stack[w] = false;
                    comp[w] = next_comp;
                    if w == v {
                        break;
                    }
                }
                next_comp += 1;
            }
        }
    }
    comp
}

/// Encode a list homomorphism instance with lists of size 1 or 2.
/// Variables are numbered vertex-major, color-minor.
pub fn encode_list_hom(g: &Graph, l: &ListAssignment, target: &TargetGraph) -> Result<TwoSatFormula, EncodeError> {
    encode_except(g, l, target, &vec![false; g.n()])
}

/// Like [`encode_list_hom`], but vertices with `skip[v]` get no variables
/// and their edges no clauses.
pub fn encode_except(g: &Graph, l: &ListAssignment, target: &TargetGraph, skip: &[bool]) -> Result<TwoSatFormula, EncodeError> {
    let mut f = TwoSatFormula::new(0);
    f.set_num_vertices(g.n());
    let mut first_var = vec![usize::MAX; g.n()];
    for v in g.vertices() {
        if skip[v] {
            continue;
        }
        let list = l.get(v);
        match list.len() {
            0 => return Err(EncodeError::EmptyList { vertex: v }),
            1 | 2 => {}
            size => return Err(EncodeError::ListTooLarge { vertex: v, size }),
        }
        first_var[v] = f.num_vars();
        let vars: Vec<usize> = list.iter().map(|c| f.add_vertex_var(v, c)).collect();
        match vars[..] {
            [x] => f.add_unit(Lit::pos(x)),
            [x, y] => {
                f.add_binary(Lit::pos(x), Lit::pos(y));
                f.add_binary(Lit::neg(x), Lit::neg(y));
            }
            _ => unreachable!(),
        }
    }
    for &(u, v) in g.edges() {
        if skip[u] || skip[v] {
            continue;
        }
        for (i, x) in l.get(u).iter().enumerate() {
            for (j, y) in l.get(v).iter().enumerate() {
                if !target.adjacent(x, y) {
                    f.add_binary(Lit::neg(first_var[u] + i), Lit::neg(first_var[v] + j));
                }
            }
        }
    }
    Ok(f)
}

/// Coloring read off a satisfying assignment; vertices without a true
/// variable get color 0.
pub fn decode(f: &TwoSatFormula, assignment: &[bool]) -> Coloring {
    let mut out = vec![0; f.num_vertices];
    for (var, &val) in assignment.iter().enumerate() {
        if let (true, Some((v, c))) = (val, f.decode[var]) {
            out[v] = c;
        }
    }
    out
}

/// Encode, solve and decode in one step.
pub fn solve_small_lists(g: &Graph, l: &ListAssignment, target: &TargetGraph) -> Result<Option<Coloring>, EncodeError> {
    let f = encode_list_hom(g, l, target)?;
    Ok(solve_2sat(&f).map(|a| decode(&f, &a)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lists::{ColorSet, CycleColors};

    fn cs(v: &[usize]) -> ColorSet {
        ColorSet::from_colors(v.iter().copied())
    }

    fn lists(k: usize, ls: &[&[usize]]) -> ListAssignment {
        ListAssignment::from_lists(CycleColors::new(k).unwrap(), ls.iter().map(|l| cs(l)).collect()).unwrap()
    }

    fn eval(f: &TwoSatFormula, a: &[bool]) -> bool {
        let lit = |l: Lit| a[l.var()] != l.is_negated();
        f.clauses().iter().all(|c| match *c {
            Clause::Unit(x) => lit(x),
            Clause::Binary(x, y) => lit(x) || lit(y),
        })
    }

    #[test]
    fn empty_formula() {
        assert_eq!(solve_2sat(&TwoSatFormula::new(0)), Some(vec![]));
    }

    #[test]
    fn contradiction() {
        let mut f = TwoSatFormula::new(1);
        f.add_unit(Lit::pos(0));
        f.add_unit(Lit::neg(0));
        assert_eq!(solve_2sat(&f), None);
    }

    #[test]
    fn forced_pair() {
        let mut f = TwoSatFormula::new(2);
        f.add_binary(Lit::pos(0), Lit::pos(1));
        f.add_binary(Lit::neg(0), Lit::pos(1));
        f.add_binary(Lit::pos(0), Lit::neg(1));
        // truth table: only (T,T) satisfies all three
        assert_eq!(solve_2sat(&f), Some(vec![true, true]));
    }

    #[test]
    fn agrees_with_truth_tables() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let nv = rng.random_range(1..=6);
            let mut f = TwoSatFormula::new(nv);
            for _ in 0..rng.random_range(0..=10) {
                let lit = |r: &mut rand_chacha::ChaCha8Rng| {
                    let v = r.random_range(0..nv);
                    if r.random_bool(0.5) { Lit::pos(v) } else { Lit::neg(v) }
                };
                if rng.random_bool(0.2) {
                    let a = lit(&mut rng);
                    f.add_unit(a);
                } else {
                    let (a, b) = (lit(&mut rng), lit(&mut rng));
                    f.add_binary(a, b);
                }
            }
            let brute = (0..1u32 << nv).any(|m| eval(&f, &(0..nv).map(|i| m >> i & 1 == 1).collect::<Vec<_>>()));
            match solve_2sat(&f) {
                Some(a) => assert!(eval(&f, &a)),
                None => assert!(!brute),
            }
            assert_eq!(solve_2sat(&f).is_some(), brute);
        }
    }

    #[test]
    fn encode_examples() {
        let t = TargetGraph::cycle(5);
        let g = Graph::path(2);
        let f = encode_list_hom(&g, &lists(5, &[&[1, 3], &[2]]), &t).unwrap();
        let a = solve_2sat(&f).unwrap();
        let c = decode(&f, &a);
        assert!([1, 3].contains(&c[0]));
        assert_eq!(c[1], 2);
        let f = encode_list_hom(&g, &lists(5, &[&[1], &[3]]), &t).unwrap();
        assert_eq!(solve_2sat(&f), None);
        let c4 = Graph::cycle(4);
        let f = encode_list_hom(&c4, &lists(5, &[&[1, 2], &[1, 2], &[1, 2], &[1, 2]]), &t).unwrap();
        let c = decode(&f, &solve_2sat(&f).unwrap());
        assert!(c == vec![1, 2, 1, 2] || c == vec![2, 1, 2, 1]);
    }

    #[test]
    fn variable_numbering_is_vertex_major() {
        let g = Graph::path(2);
        let f = encode_list_hom(&g, &lists(5, &[&[3, 1], &[2]]), &TargetGraph::cycle(5)).unwrap();
        assert_eq!(f.var_meaning(0), Some((0, 1)));
        assert_eq!(f.var_meaning(1), Some((0, 3)));
        assert_eq!(f.var_meaning(2), Some((1, 2)));
    }

    #[test]
    fn encode_rejects_large_or_empty_lists() {
        let g = Graph::path(2);
        let t = TargetGraph::cycle(5);
        assert_eq!(
            encode_list_hom(&g, &lists(5, &[&[1, 2, 3], &[2]]), &t),
            Err(EncodeError::ListTooLarge { vertex: 0, size: 3 })
        );
        assert_eq!(encode_list_hom(&g, &lists(5, &[&[1], &[]]), &t), Err(EncodeError::EmptyList { vertex: 1 }));
    }

    #[test]
    fn clause_count_bound() {
        let g = Graph::petersen();
        let l = ListAssignment::from_lists(CycleColors::new(5).unwrap(), vec![cs(&[1, 3]); 10]).unwrap();
        let f = encode_list_hom(&g, &l, &TargetGraph::cycle(5)).unwrap();
        assert!(f.clauses().len() <= 2 * g.n() + 4 * g.m());
    }

    #[test]
    fn dimacs_export() {
        let g = Graph::path(2);
        let f = encode_list_hom(&g, &lists(5, &[&[1], &[3]]), &TargetGraph::cycle(5)).unwrap();
        let text = f.to_dimacs();
        assert!(text.contains("p cnf 2 3\n"));
        assert!(text.contains("1 0\n2 0\n-1 -2 0\n"));
    }
}
