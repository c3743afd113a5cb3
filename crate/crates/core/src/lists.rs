//! Color lists over a cycle `C_k`, the shape-aware update rule, reduction to
//! a fixpoint, and generic arc consistency against a fixed target graph.

use std::fmt;
use std::fmt::Write as _;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Index, Sub};

use crate::error::{Infeasible, ListError};
use crate::graph::{Graph, Vertex};

pub const MAX_COLORS: usize = 64;

/// Set of colors `1..=64`; color `c` is bit `c - 1`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSet(u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn from_bits(bits: u64) -> Self {
        ColorSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(c: usize) -> Self {
        debug_assert!((1..=MAX_COLORS).contains(&c));
        ColorSet(1 << (c - 1))
    }

    /// All colors `1..=k`.
    pub fn full(k: usize) -> Self {
        if k >= 64 { ColorSet(u64::MAX) } else { ColorSet((1 << k) - 1) }
    }

    pub fn from_colors(cs: impl IntoIterator<Item = usize>) -> Self {
        cs.into_iter().fold(Self::EMPTY, |acc, c| acc | Self::singleton(c))
    }

    pub fn contains(self, c: usize) -> bool {
        (1..=MAX_COLORS).contains(&c) && self.0 >> (c - 1) & 1 == 1
    }

    pub fn insert(&mut self, c: usize) {
        *self |= Self::singleton(c);
    }

    pub fn remove(&mut self, c: usize) {
        self.0 &= !Self::singleton(c).0;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: ColorSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest color.
    pub fn min_color(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// The only color of a singleton.
    pub fn single(self) -> Option<usize> {
        (self.len() == 1).then(|| self.min_color().unwrap())
    }

    /// Colors in increasing order.
    pub fn iter(self) -> ColorIter {
        ColorIter(self.0)
    }
}

pub struct ColorIter(u64);

impl Iterator for ColorIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let c = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(c + 1)
    }
}

impl IntoIterator for ColorSet {
    type Item = usize;
    type IntoIter = ColorIter;

    fn into_iter(self) -> ColorIter {
        self.iter()
    }
}

impl FromIterator<usize> for ColorSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_colors(iter)
    }
}

impl BitAnd for ColorSet {
    type Output = ColorSet;
    fn bitand(self, rhs: ColorSet) -> ColorSet {
        ColorSet(self.0 & rhs.0)
    }
}

impl BitOr for ColorSet {
    type Output = ColorSet;
    fn bitor(self, rhs: ColorSet) -> ColorSet {
        ColorSet(self.0 | rhs.0)
    }
}

impl Sub for ColorSet {
    type Output = ColorSet;
    fn sub(self, rhs: ColorSet) -> ColorSet {
        ColorSet(self.0 & !rhs.0)
    }
}

impl BitAndAssign for ColorSet {
    fn bitand_assign(&mut self, rhs: ColorSet) {
        self.0 &= rhs.0;
    }
}

impl BitOrAssign for ColorSet {
    fn bitor_assign(&mut self, rhs: ColorSet) {
        self.0 |= rhs.0;
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_char('{')?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                f.write_char(',')?;
            }
            write!(f, "{c}")?;
        }
        f.write_char('}')
    }
}

/// Colors `1..=k` of the cycle `C_k`, with arithmetic mod `k` (0 is `k`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CycleColors {
    k: usize,
}

/// Shape of a list with respect to the goodness definition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ListShape {
    Empty,
    /// `{i}`
    Singleton(usize),
    /// `{i-1, i+1}`
    Pair(usize),
    /// `{i, i-2, i+2}`
    Triple(usize),
    Full,
    Other,
}

impl CycleColors {
    pub fn new(k: usize) -> Result<Self, ListError> {
        if (3..=MAX_COLORS).contains(&k) { Ok(CycleColors { k }) } else { Err(ListError::BadK(k)) }
    }

    pub fn k(self) -> usize {
        self.k
    }

    /// `c + d` reduced into `1..=k`.
    pub fn add(self, c: usize, d: i64) -> usize {
        let k = self.k as i64;
        ((c as i64 - 1 + d).rem_euclid(k) + 1) as usize
    }

    /// `{c + d : d in offsets}`.
    pub fn shifted(self, c: usize, offsets: &[i64]) -> ColorSet {
        offsets.iter().map(|&d| self.add(c, d)).collect()
    }

    /// The two neighbors of `c` on the cycle.
    pub fn neighbors(self, c: usize) -> ColorSet {
        self.shifted(c, &[-1, 1])
    }

    pub fn adjacent(self, a: usize, b: usize) -> bool {
        self.neighbors(a).contains(b)
    }

    pub fn full(self) -> ColorSet {
        ColorSet::full(self.k)
    }

    /// Union of the cycle neighbors of every color in `s`.
    pub fn neighborhood(self, s: ColorSet) -> ColorSet {
        let b = s.bits();
        let k = self.k as u32;
        let mask = ColorSet::full(self.k).bits();
        let up = ((b << 1) | (b >> (k - 1))) & mask;
        let down = ((b >> 1) | (b << (k - 1))) & mask;
        ColorSet::from_bits(up | down)
    }

    pub fn shape(self, l: ColorSet) -> ListShape {
        match l.len() {
            0 => ListShape::Empty,
            n if n == self.k => ListShape::Full,
            1 => ListShape::Singleton(l.min_color().unwrap()),
            2 => (1..=self.k)
                .find(|&i| self.shifted(i, &[-1, 1]) == l)
                .map_or(ListShape::Other, ListShape::Pair),
            3 => (1..=self.k)
                .find(|&i| self.shifted(i, &[0, -2, 2]) == l)
                .map_or(ListShape::Other, ListShape::Triple),
            _ => ListShape::Other,
        }
    }

    /// A list is good if it is a singleton, `{i-1,i+1}`, `{i,i-2,i+2}` or full.
    pub fn is_good_list(self, l: ColorSet) -> bool {
        !matches!(self.shape(l), ListShape::Empty | ListShape::Other)
    }

    /// New list of `v` after updating `v` from `w`.
    pub fn update_list(self, lw: ColorSet, lv: ColorSet) -> ColorSet {
        match self.shape(lw) {
            ListShape::Singleton(i) => self.shifted(i, &[-1, 1]) & lv,
            ListShape::Pair(i) => self.shifted(i, &[0, 2, -2]) & lv,
            ListShape::Triple(i) if matches!(self.shape(lv), ListShape::Triple(_)) => {
                self.shifted(i, &[-1, 1, -3, 3]) & lv
            }
            _ => lv,
        }
    }
}

/// Per-vertex color lists over `C_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ListAssignment {
    colors: CycleColors,
    lists: Vec<ColorSet>,
}

impl ListAssignment {
    pub fn full(n: usize, colors: CycleColors) -> Self {
        ListAssignment { colors, lists: vec![colors.full(); n] }
    }

    pub fn from_lists(colors: CycleColors, lists: Vec<ColorSet>) -> Result<Self, ListError> {
        let full = colors.full();
        for (v, l) in lists.iter().enumerate() {
            if !l.is_subset(full) {
                let color = (*l - full).min_color().unwrap();
                return Err(ListError::ColorOutOfRange { vertex: v, color, k: colors.k() });
            }
        }
        Ok(ListAssignment { colors, lists })
    }

    pub fn colors(&self) -> CycleColors {
        self.colors
    }

    pub fn k(&self) -> usize {
        self.colors.k()
    }

    pub fn n(&self) -> usize {
        self.lists.len()
    }

    pub fn get(&self, v: Vertex) -> ColorSet {
        self.lists[v]
    }

    pub fn set(&mut self, v: Vertex, l: ColorSet) {
        debug_assert!(l.is_subset(self.colors.full()));
        self.lists[v] = l;
    }

    pub fn as_slice(&self) -> &[ColorSet] {
        &self.lists
    }

    pub fn is_good(&self) -> bool {
        self.lists.iter().all(|&l| self.colors.is_good_list(l))
    }

    /// Pointwise inclusion.
    pub fn is_subinstance_of(&self, other: &ListAssignment) -> bool {
        self.lists.len() == other.lists.len() && self.lists.iter().zip(&other.lists).all(|(a, b)| a.is_subset(*b))
    }

    pub fn first_empty(&self) -> Option<Vertex> {
        self.lists.iter().position(|l| l.is_empty())
    }
}

impl Index<Vertex> for ListAssignment {
    type Output = ColorSet;

    fn index(&self, v: Vertex) -> &ColorSet {
        &self.lists[v]
    }
}

/// Update `v` from `w` in place. Returns whether the list of `v` shrank.
pub fn update(g: &Graph, l: &mut ListAssignment, v: Vertex, w: Vertex) -> bool {
    debug_assert!(g.has_edge(v, w), "update along a non-edge");
    let before = l.get(v);
    let after = l.colors.update_list(l.get(w), before);
    l.set(v, after);
    after != before
}

/// Perform effective updates until none is left. Edges are scanned in
/// lexicographic order, each in both directions.
pub fn reduce(g: &Graph, l: &ListAssignment) -> Result<ListAssignment, Infeasible> {
    reduce_within(g, l, None)
}

/// [`reduce`] restricted to the subgraph induced by `mask`.
pub fn reduce_within(g: &Graph, l: &ListAssignment, mask: Option<&[bool]>) -> Result<ListAssignment, Infeasible> {
    let mut out = l.clone();
    let inside = |v: Vertex| mask.is_none_or(|m| m[v]);
    if let Some(v) = (0..out.n()).find(|&v| inside(v) && out.get(v).is_empty()) {
        return Err(Infeasible { vertex: v });
    }
    loop {
        let mut changed = false;
        for &(a, b) in g.edges() {
            if !inside(a) || !inside(b) {
                continue;
            }
            for (v, w) in [(b, a), (a, b)] {
                if update(g, &mut out, v, w) {
                    changed = true;
                    if out.get(v).is_empty() {
                        return Err(Infeasible { vertex: v });
                    }
                }
            }
        }
        if !changed {
            return Ok(out);
        }
    }
}

/// Fixed target graph with vertices (colors) `1..=size`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TargetGraph {
    adj: Vec<ColorSet>,
}

impl TargetGraph {
    pub fn cycle(k: usize) -> Self {
        let cc = CycleColors::new(k).expect("cycle length in 3..=64");
        TargetGraph { adj: (1..=k).map(|c| cc.neighbors(c)).collect() }
    }

    /// Path `1 - 2 - ... - t`.
    pub fn path(t: usize) -> Self {
        assert!((1..=MAX_COLORS).contains(&t));
        let adj = (1..=t)
            .map(|c| {
                let mut s = ColorSet::EMPTY;
                if c > 1 {
                    s.insert(c - 1);
                }
                if c < t {
                    s.insert(c + 1);
                }
                s
            })
            .collect();
        TargetGraph { adj }
    }

    /// Target from a graph: vertex `i` becomes color `i + 1`.
    pub fn from_graph(h: &Graph) -> Self {
        assert!(h.n() <= MAX_COLORS);
        TargetGraph { adj: h.vertices().map(|v| h.neighbors(v).iter().map(|&u| u + 1).collect()).collect() }
    }

    pub fn size(&self) -> usize {
        self.adj.len()
    }

    pub fn full(&self) -> ColorSet {
        ColorSet::full(self.size())
    }

    pub fn neighbors(&self, c: usize) -> ColorSet {
        self.adj[c - 1]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        (1..=self.size()).contains(&a) && self.adj[a - 1].contains(b)
    }

    /// Colors adjacent to at least one color of `s`.
    pub fn support(&self, s: ColorSet) -> ColorSet {
        s.iter().fold(ColorSet::EMPTY, |acc, c| acc | self.adj[c - 1])
    }
}

/// Arc consistency on raw lists: drop every color of `L(v)` that has no
/// adjacent color in some neighbor's list. `dirty` seeds the work queue.
pub fn propagate(g: &Graph, lists: &mut [ColorSet], target: &TargetGraph, dirty: &[Vertex]) -> Result<(), Infeasible> {
    let mut queued = vec![false; g.n()];
    let mut queue: std::collections::VecDeque<Vertex> = std::collections::VecDeque::new();
    for &v in dirty {
        if lists[v].is_empty() {
            return Err(Infeasible { vertex: v });
        }
        if !queued[v] {
            queued[v] = true;
            queue.push_back(v);
        }
    }
    while let Some(w) = queue.pop_front() {
        queued[w] = false;
        let sup = target.support(lists[w]);
        for &v in g.neighbors(w) {
            let before = lists[v];
            let after = before & sup;
            if after != before {
                if after.is_empty() {
                    lists[v] = after;
                    return Err(Infeasible { vertex: v });
                }
                lists[v] = after;
                if !queued[v] {
                    queued[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    Ok(())
}

/// Standard arc consistency against `target`, which must be at least as
/// large as the colors in use.
pub fn arc_consistency(g: &Graph, l: &ListAssignment, target: &TargetGraph) -> Result<ListAssignment, Infeasible> {
    let mut out = l.clone();
    let all: Vec<Vertex> = g.vertices().collect();
    propagate(g, &mut out.lists, target, &all)?;
    Ok(out)
}

/// Parse `v: c1 c2 ...` lines; vertices not mentioned get the full list.
/// A line for the same vertex twice intersects the lists.
pub fn parse_lists(text: &str, n: usize, k: usize) -> Result<ListAssignment, ListError> {
    let colors = CycleColors::new(k)?;
    let mut lists = vec![colors.full(); n];
    let mut seen = vec![false; n];
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let perr = |msg: &str| ListError::Parse { line: i + 1, msg: msg.to_string() };
        let (head, rest) = line.split_once(':').ok_or_else(|| perr("expected `v: c1 c2 ...`"))?;
        let v: usize = head.trim().parse().map_err(|_| perr("bad vertex id"))?;
        if v >= n {
            return Err(ListError::VertexOutOfRange { vertex: v, n });
        }
        let mut set = ColorSet::EMPTY;
        for tok in rest.split_whitespace() {
            let c: usize = tok.parse().map_err(|_| perr("bad color"))?;
            if !(1..=k).contains(&c) {
                return Err(ListError::ColorOutOfRange { vertex: v, color: c, k });
            }
            set.insert(c);
        }
        lists[v] = if seen[v] { lists[v] & set } else { set };
        seen[v] = true;
    }
    Ok(ListAssignment { colors, lists })
}

/// Write every list that is not full.
pub fn write_lists(l: &ListAssignment) -> String {
    let full = l.colors.full();
    let mut s = String::new();
    for (v, &set) in l.lists.iter().enumerate() {
        if set != full {
            write!(s, "{v}:").unwrap();
            for c in set {
                write!(s, " {c}").unwrap();
            }
            s.push('\n');
        }
    }
    s
}
