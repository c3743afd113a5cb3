//! Sources of the reductions: CNF formulas and 3-uniform hypergraphs.

use crate::error::GadgetError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormulaKind {
    Sat3,
    /// Not-all-equal 3-SAT with positive literals only.
    Nae3,
    /// Every clause has only positive or only negative literals.
    Monotone3,
}

/// Clauses over variables `1..=num_vars`; literal `-v` is the negation of `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Formula {
    pub num_vars: usize,
    pub clauses: Vec<Vec<i32>>,
    pub kind: FormulaKind,
}

fn malformed(msg: impl Into<String>) -> GadgetError {
    GadgetError::Malformed(msg.into())
}

impl Formula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>, kind: FormulaKind) -> Result<Self, GadgetError> {
        let f = Formula { num_vars, clauses, kind };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<(), GadgetError> {
        for (ci, c) in self.clauses.iter().enumerate() {
            if c.is_empty() || c.len() > 3 {
                return Err(malformed(format!("clause {ci} has {} literals", c.len())));
            }
            for &lit in c {
                if lit == 0 || lit.unsigned_abs() as usize > self.num_vars {
                    return Err(malformed(format!("clause {ci}: literal {lit} out of range")));
                }
            }
            let mut vars: Vec<u32> = c.iter().map(|l| l.unsigned_abs()).collect();
            vars.sort_unstable();
            vars.dedup();
            let distinct = vars.len() == c.len();
            match self.kind {
                FormulaKind::Sat3 => {}
                FormulaKind::Nae3 => {
                    if c.len() != 3 || c.iter().any(|&l| l < 0) || !distinct {
                        return Err(malformed(format!("clause {ci} needs three distinct positive literals")));
                    }
                }
                FormulaKind::Monotone3 => {
                    if c.len() < 2 || !distinct {
                        return Err(malformed(format!("clause {ci} needs 2 or 3 distinct variables")));
                    }
                    if !(c.iter().all(|&l| l > 0) || c.iter().all(|&l| l < 0)) {
                        return Err(malformed(format!("clause {ci} mixes positive and negative literals")));
                    }
                }
            }
        }
        if self.kind == FormulaKind::Monotone3 {
            let mut occ = vec![0; self.num_vars + 1];
            for c in &self.clauses {
                for &l in c {
                    occ[l.unsigned_abs() as usize] += 1;
                }
            }
            if let Some(v) = occ.iter().position(|&o| o > 3) {
                return Err(malformed(format!("variable {v} occurs in more than 3 clauses")));
            }
        }
        Ok(())
    }

    pub fn with_kind(mut self, kind: FormulaKind) -> Result<Self, GadgetError> {
        self.kind = kind;
        self.validate()?;
        Ok(self)
    }

    /// Whether `assignment[v - 1]` satisfies the formula under its kind.
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        let value = |l: i32| assignment[l.unsigned_abs() as usize - 1] == (l > 0);
        self.clauses.iter().all(|c| match self.kind {
            FormulaKind::Nae3 => {
                let t = c.iter().filter(|&&l| value(l)).count();
                t > 0 && t < c.len()
            }
            _ => c.iter().any(|&l| value(l)),
        })
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                out.push_str(&format!("{l} "));
            }
            out.push_str("0\n");
        }
        out
    }
}

/// Parse DIMACS CNF. Comment lines start with `c`.
pub fn parse_dimacs(text: &str, kind: FormulaKind) -> Result<Formula, GadgetError> {
    let mut num_vars = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if parts.len() != 3 || parts[0] != "cnf" {
                return Err(malformed(format!("line {}: bad header", ln + 1)));
            }
            num_vars = Some(parts[1].parse().map_err(|_| malformed(format!("line {}: bad variable count", ln + 1)))?);
            continue;
        }
        for tok in line.split_whitespace() {
            let lit: i32 = tok.parse().map_err(|_| malformed(format!("line {}: bad literal {tok:?}", ln + 1)))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
    }
    if !current.is_empty() {
        clauses.push(current);
    }
    let num_vars = num_vars.ok_or_else(|| malformed("missing `p cnf` header"))?;
    Formula::new(num_vars, clauses, kind)
}

/// 3-uniform hypergraph on `0..n` with an optional precoloring in `{1, 2, 3}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    pub n: usize,
    pub edges: Vec<[usize; 3]>,
    pub precolor: Vec<Option<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<[usize; 3]>, precolor: Vec<Option<usize>>) -> Result<Self, GadgetError> {
        if precolor.len() != n {
            return Err(malformed("precoloring length differs from vertex count"));
        }
        for (i, e) in edges.iter().enumerate() {
            if e.iter().any(|&v| v >= n) {
                return Err(malformed(format!("hyperedge {i} has a vertex outside 0..{n}")));
            }
            if e[0] == e[1] || e[1] == e[2] || e[0] == e[2] {
                return Err(malformed(format!("hyperedge {i} repeats a vertex")));
            }
        }
        if precolor.iter().flatten().any(|c| !(1..=3).contains(c)) {
            return Err(malformed("precolors must be 1, 2 or 3"));
        }
        Ok(Hypergraph { n, edges, precolor })
    }

    /// No hyperedge sees three distinct colors and the precoloring is kept.
    pub fn is_valid_coloring(&self, colors: &[usize]) -> bool {
        colors.len() == self.n
            && self.precolor.iter().zip(colors).all(|(p, c)| p.is_none_or(|p| p == *c))
            && self.edges.iter().all(|e| {
                let [a, b, c] = e.map(|v| colors[v]);
                a == b || b == c || a == c
            })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("h {} {}\n", self.n, self.edges.len());
        for e in &self.edges {
            out.push_str(&format!("e {} {} {}\n", e[0], e[1], e[2]));
        }
        for (v, c) in self.precolor.iter().enumerate() {
            if let Some(c) = c {
                out.push_str(&format!("f {v} {c}\n"));
            }
        }
        out
    }
}

/// Parse `h <n> <m>`, then `e a b c` per hyperedge and `f v color` per
/// precolored vertex. `#` starts a comment.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, GadgetError> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut fixed = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        let nums: Result<Vec<usize>, _> = parts[1..].iter().map(|t| t.parse::<usize>()).collect();
        let nums = nums.map_err(|_| malformed(format!("line {}: expected numbers", ln + 1)))?;
        match (parts[0], nums.as_slice()) {
            ("h", &[vn, _]) => n = Some(vn),
            ("e", &[a, b, c]) => edges.push([a, b, c]),
            ("f", &[v, c]) => fixed.push((v, c)),
            _ => return Err(malformed(format!("line {}: unrecognized {line:?}", ln + 1))),
        }
    }
    let n = n.ok_or_else(|| malformed("missing `h` header"))?;
    let mut precolor = vec![None; n];
    for (v, c) in fixed {
        if v >= n {
            return Err(malformed(format!("precolored vertex {v} outside 0..{n}")));
        }
        precolor[v] = Some(c);
    }
    Hypergraph::new(n, edges, precolor)
}
