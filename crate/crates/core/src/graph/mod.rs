//! Simple undirected graphs on at most 63 vertices, with vertex subsets
//! represented as single-word bitsets.
//!
//! Everything downstream (the subset recursion, building sets, the toric
//! routes) indexes tables by the raw bit pattern of a [`VertexSubset`], so the
//! 63-vertex ceiling is a hard representation limit, not a tunable cap.

mod graph6;
pub mod enumerate;

pub use graph6::{encode_graph6, parse_graph6};

use std::fmt;

use crate::error::{Error, Result};

/// Hard upper bound on host graph order imposed by the `u64` subset encoding.
pub const MAX_VERTICES: usize = 63;

// ============================================================
// VertexSubset
// ============================================================

/// A set of vertices of a host graph, stored as the bits of a `u64`.
///
/// Ordering is canonical for this crate: by cardinality first, then by the
/// numeric value of the bit pattern. Building-set elements, complex vertex
/// labels and poset elements are all sorted this way.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSubset(u64);

impl VertexSubset {
    pub const EMPTY: VertexSubset = VertexSubset(0);

    /// The full subset `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 0 {
            VertexSubset(0)
        } else {
            VertexSubset(u64::MAX >> (64 - n))
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSubset(1 << v)
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSubset(bits)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        let mut bits = 0u64;
        for v in vs {
            debug_assert!(v < MAX_VERTICES);
            bits |= 1 << v;
        }
        VertexSubset(bits)
    }

    #[inline(always)]
    pub fn bits(self) -> u64 {
        self.0
    }

    /// Number of vertices in the subset.
    #[inline(always)]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline(always)]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline(always)]
    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    #[inline(always)]
    pub fn with(self, v: usize) -> Self {
        VertexSubset(self.0 | 1 << v)
    }

    #[inline(always)]
    pub fn without(self, v: usize) -> Self {
        VertexSubset(self.0 & !(1 << v))
    }

    #[inline(always)]
    pub fn union(self, other: Self) -> Self {
        VertexSubset(self.0 | other.0)
    }

    #[inline(always)]
    pub fn intersection(self, other: Self) -> Self {
        VertexSubset(self.0 & other.0)
    }

    #[inline(always)]
    pub fn difference(self, other: Self) -> Self {
        VertexSubset(self.0 & !other.0)
    }

    #[inline(always)]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline(always)]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest vertex, if any.
    pub fn min_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Vertices in ascending order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    /// Every subset `J ⊆ self`, including `self` and the empty set.
    ///
    /// Order is descending by bit pattern (standard submask walk); callers
    /// that need canonical order must sort.
    pub fn subsets(self) -> SubsetIter {
        SubsetIter { mask: self.0, cur: self.0, done: false }
    }
}

// Debug delegates to Display so assertion diffs stay readable.
impl fmt::Debug for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for v in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

impl PartialOrd for VertexSubset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: cardinality, then numeric bit value.
impl Ord for VertexSubset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.len(), self.0).cmp(&(other.len(), other.0))
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

pub struct SubsetIter {
    mask: u64,
    cur: u64,
    done: bool,
}

impl Iterator for SubsetIter {
    type Item = VertexSubset;
    fn next(&mut self) -> Option<VertexSubset> {
        if self.done {
            return None;
        }
        let out = VertexSubset(self.cur);
        if self.cur == 0 {
            self.done = true;
        } else {
            self.cur = (self.cur - 1) & self.mask;
        }
        Some(out)
    }
}

// ============================================================
// SimpleGraph
// ============================================================

/// Finite simple undirected graph with vertices `0..n`, `n <= 63`.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<VertexSubset>,
}

impl SimpleGraph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::unsupported(format!(
                "host graphs are limited to {MAX_VERTICES} vertices, got {n}"
            )));
        }
        Ok(SimpleGraph { n, adj: vec![VertexSubset::EMPTY; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Insert edge `{u, v}`; re-adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::malformed(format!(
                "edge ({u}, {v}) has an endpoint outside 0..{}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::malformed(format!("loop edge ({u}, {u}) is not allowed")));
        }
        self.adj[u] = self.adj[u].with(v);
        self.adj[v] = self.adj[v].with(u);
        Ok(())
    }

    #[inline(always)]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// The full vertex set as a subset.
    pub fn vertices(&self) -> VertexSubset {
        VertexSubset::full(self.n)
    }

    #[inline(always)]
    pub fn neighbors(&self, v: usize) -> VertexSubset {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The subgraph induced on `I`, with vertices relabelled `0..|I|` in
    /// ascending order of their original indices.
    pub fn induced_subgraph(&self, i_set: VertexSubset) -> Result<SimpleGraph> {
        if !i_set.is_subset_of(self.vertices()) {
            return Err(Error::domain(format!(
                "subset {i_set} is not contained in the vertex set of the host"
            )));
        }
        let verts: Vec<usize> = i_set.iter().collect();
        let mut g = SimpleGraph::new(verts.len())?;
        for (new_u, &u) in verts.iter().enumerate() {
            for (new_v, &v) in verts.iter().enumerate().skip(new_u + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(new_u, new_v)?;
                }
            }
        }
        Ok(g)
    }

    /// Connected components of the subgraph induced on `I`, as subsets of the
    /// *host* vertex set, ordered by smallest member.
    pub fn components_within(&self, i_set: VertexSubset) -> Vec<VertexSubset> {
        let mut rest = i_set;
        let mut comps = Vec::new();
        while let Some(seed) = rest.min_vertex() {
            let mut comp = VertexSubset::singleton(seed);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut grow = VertexSubset::EMPTY;
                for v in frontier.iter() {
                    grow = grow.union(self.adj[v].intersection(rest));
                }
                frontier = grow.difference(comp);
                comp = comp.union(frontier);
            }
            rest = rest.difference(comp);
            comps.push(comp);
        }
        comps
    }

    /// Is the subgraph induced on `I` connected? The empty subset counts as
    /// disconnected.
    pub fn is_connected_within(&self, i_set: VertexSubset) -> bool {
        if i_set.is_empty() {
            return false;
        }
        let seed = i_set.min_vertex().unwrap();
        let mut comp = VertexSubset::singleton(seed);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut grow = VertexSubset::EMPTY;
            for v in frontier.iter() {
                grow = grow.union(self.adj[v].intersection(i_set));
            }
            frontier = grow.difference(comp);
            comp = comp.union(frontier);
        }
        comp == i_set
    }

    /// Whole-graph connectivity (empty graph counts as disconnected).
    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// Disjoint union, `other`'s vertices shifted up by `self.n`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> Result<SimpleGraph> {
        let mut g = SimpleGraph::new(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n)?;
        }
        Ok(g)
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

// ============================================================
// Generators
// ============================================================

/// The four graph families with known closed-form invariants.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GraphFamily {
    /// Path `P_n` on `n` vertices (`n - 1` edges).
    Path,
    /// Cycle `C_n`; requires `n = 0` or `n >= 3`.
    Cycle,
    /// Complete graph `K_n`.
    Complete,
    /// Star `K_{1, n-1}` on `n` vertices with centre `0`.
    Star,
}

impl GraphFamily {
    pub fn name(self) -> &'static str {
        match self {
            GraphFamily::Path => "path",
            GraphFamily::Cycle => "cycle",
            GraphFamily::Complete => "complete",
            GraphFamily::Star => "star",
        }
    }
}

impl std::str::FromStr for GraphFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(GraphFamily::Path),
            "cycle" => Ok(GraphFamily::Cycle),
            "complete" => Ok(GraphFamily::Complete),
            "star" => Ok(GraphFamily::Star),
            other => Err(Error::malformed(format!(
                "unknown graph family {other:?} (expected path, cycle, complete or star)"
            ))),
        }
    }
}

/// Build a member of one of the standard families on `n` vertices.
pub fn generate(family: GraphFamily, n: usize) -> Result<SimpleGraph> {
    let mut g = SimpleGraph::new(n)?;
    match family {
        GraphFamily::Path => {
            for v in 1..n {
                g.add_edge(v - 1, v)?;
            }
        }
        GraphFamily::Cycle => {
            if n == 1 || n == 2 {
                return Err(Error::unsupported(format!(
                    "cycle graphs need at least 3 vertices (or 0 for the empty graph), got {n}"
                )));
            }
            for v in 1..n {
                g.add_edge(v - 1, v)?;
            }
            if n >= 3 {
                g.add_edge(n - 1, 0)?;
            }
        }
        GraphFamily::Complete => {
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v)?;
                }
            }
        }
        GraphFamily::Star => {
            for v in 1..n {
                g.add_edge(0, v)?;
            }
        }
    }
    Ok(g)
}

// ============================================================
// Edge-list text format
// ============================================================

/// Parse the plain-text edge-list format.
///
/// The first non-comment, non-blank line holds the vertex count `n`; each
/// further such line holds one edge `u v` with `0 <= u, v < n`, `u != v`.
/// Lines starting with `#` are comments. Duplicate edges are idempotent.
pub fn parse_edge_list(text: &str) -> Result<SimpleGraph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));

    let header = lines
        .next()
        .ok_or_else(|| Error::malformed("edge list is empty: expected a vertex count line"))?;
    let n: usize = header.parse().map_err(|_| {
        Error::malformed(format!("expected a vertex count on the first line, got {header:?}"))
    })?;
    let mut g = SimpleGraph::new(n)?;

    for line in lines {
        let mut tok = line.split_whitespace();
        let (u, v) = match (tok.next(), tok.next(), tok.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::malformed(format!(
                    "expected an edge line with exactly two vertex indices, got {line:?}"
                )))
            }
        };
        let u: usize = u
            .parse()
            .map_err(|_| Error::malformed(format!("bad vertex index {u:?} on line {line:?}")))?;
        let v: usize = v
            .parse()
            .map_err(|_| Error::malformed(format!("bad vertex index {v:?} on line {line:?}")))?;
        g.add_edge(u, v)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_basics() {
        let s = VertexSubset::from_vertices([0, 2, 5]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(2));
        assert!(!s.contains(1));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2, 5]);
        assert_eq!(s.to_string(), "{0,2,5}");
        assert_eq!(VertexSubset::EMPTY.to_string(), "{}");
        assert_eq!(VertexSubset::full(3).bits(), 0b111);
        assert_eq!(VertexSubset::full(0), VertexSubset::EMPTY);
    }

    #[test]
    fn subset_canonical_order_is_cardinality_then_value() {
        let mut v = vec![
            VertexSubset::from_bits(0b100),
            VertexSubset::from_bits(0b011),
            VertexSubset::from_bits(0b001),
            VertexSubset::from_bits(0b111),
        ];
        v.sort();
        let bits: Vec<u64> = v.iter().map(|s| s.bits()).collect();
        assert_eq!(bits, vec![0b001, 0b100, 0b011, 0b111]);
    }

    #[test]
    fn subset_enumeration_covers_the_powerset() {
        let m = VertexSubset::from_bits(0b1011);
        let subs: Vec<u64> = m.subsets().map(|s| s.bits()).collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.contains(&0));
        assert!(subs.contains(&0b1011));
        for s in &subs {
            assert_eq!(s & !0b1011, 0);
        }
    }

    #[test]
    fn graph_construction_and_validation() {
        let mut g = SimpleGraph::new(4).unwrap();
        g.add_edge(0, 1).unwrap();
        g.add_edge(0, 1).unwrap(); // idempotent
        g.add_edge(1, 2).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(matches!(g.add_edge(1, 1), Err(Error::MalformedInput(_))));
        assert!(matches!(g.add_edge(0, 4), Err(Error::MalformedInput(_))));
        assert!(matches!(SimpleGraph::new(64), Err(Error::UnsupportedInstance(_))));
        assert!(SimpleGraph::new(63).is_ok());
    }

    #[test]
    fn generators() {
        let p4 = generate(GraphFamily::Path, 4).unwrap();
        assert_eq!(p4.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        let c5 = generate(GraphFamily::Cycle, 5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!(c5.degree(0) == 2 && c5.degree(4) == 2);
        let k4 = generate(GraphFamily::Complete, 4).unwrap();
        assert_eq!(k4.edge_count(), 6);
        let s5 = generate(GraphFamily::Star, 5).unwrap();
        assert_eq!(s5.degree(0), 4);
        assert_eq!(s5.edge_count(), 4);
        assert!(matches!(generate(GraphFamily::Cycle, 1), Err(Error::UnsupportedInstance(_))));
        assert!(matches!(generate(GraphFamily::Cycle, 2), Err(Error::UnsupportedInstance(_))));
        assert_eq!(generate(GraphFamily::Cycle, 0).unwrap().vertex_count(), 0);
        assert_eq!(generate(GraphFamily::Cycle, 3).unwrap().edge_count(), 3);
    }

    #[test]
    fn edge_list_parsing() {
        let g = parse_edge_list("# a path\n4\n0 1\n1 2\n2 3\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        let single = parse_edge_list("1\n").unwrap();
        assert_eq!(single.vertex_count(), 1);
        assert_eq!(single.edge_count(), 0);
        assert!(matches!(parse_edge_list(""), Err(Error::MalformedInput(_))));
        assert!(matches!(parse_edge_list("x\n"), Err(Error::MalformedInput(_))));
        assert!(matches!(parse_edge_list("3\n0 3\n"), Err(Error::MalformedInput(_))));
        assert!(matches!(parse_edge_list("3\n1 1\n"), Err(Error::MalformedInput(_))));
        assert!(matches!(parse_edge_list("3\n0 1 2\n"), Err(Error::MalformedInput(_))));
    }

    #[test]
    fn induced_subgraph_relabels_in_ascending_order() {
        // P_5 restricted to {0, 2, 3} -> vertices 0,1,2 with one edge (1,2).
        let p5 = generate(GraphFamily::Path, 5).unwrap();
        let h = p5.induced_subgraph(VertexSubset::from_vertices([0, 2, 3])).unwrap();
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edges(), vec![(1, 2)]);
        // Restricting to the full vertex set is the identity.
        assert_eq!(p5.induced_subgraph(p5.vertices()).unwrap(), p5);
        assert!(p5.induced_subgraph(VertexSubset::singleton(7)).is_err());
    }

    #[test]
    fn components_and_connectivity() {
        let p5 = generate(GraphFamily::Path, 5).unwrap();
        let comps = p5.components_within(VertexSubset::from_vertices([0, 1, 3, 4]));
        assert_eq!(
            comps,
            vec![VertexSubset::from_vertices([0, 1]), VertexSubset::from_vertices([3, 4])]
        );
        assert!(p5.is_connected_within(p5.vertices()));
        assert!(!p5.is_connected_within(VertexSubset::from_vertices([0, 2])));
        assert!(p5.is_connected_within(VertexSubset::singleton(2)));
        // Convention: the empty subset is disconnected.
        assert!(!p5.is_connected_within(VertexSubset::EMPTY));
        assert!(!SimpleGraph::new(0).unwrap().is_connected());
        let comps = p5.components_within(VertexSubset::EMPTY);
        assert!(comps.is_empty());
    }

    #[test]
    fn disjoint_union_shifts_labels() {
        let p2 = generate(GraphFamily::Path, 2).unwrap();
        let g = p2.disjoint_union(&p2).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges(), vec![(0, 1), (2, 3)]);
        assert_eq!(g.components_within(g.vertices()).len(), 2);
    }
}
