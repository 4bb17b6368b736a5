//! Building sets on a finite host, nested sets, and the nested set complex
//! with the subcomplexes used by the toric Betti computations.
//!
//! A building set `B` on host `{0, .., host_size-1}` contains every
//! singleton and is closed under unions of intersecting members. The
//! *graphical* building set of a graph `G` consists of the vertex subsets
//! inducing connected subgraphs. A nested set is a subset `N` of
//! `B \ {full}` such that (N1) any two members are nested or disjoint and
//! (N2) no union of two or more pairwise disjoint members lies in `B`.
//!
//! For a graphical building set the nested set complex is flag: a collection
//! is nested as soon as every *pair* meets by inclusion or separation, so the
//! complex is the clique complex of the pairwise-meet graph and its facets
//! come from maximal-clique enumeration. For custom building sets (and as an
//! independent cross-check in tests) a direct enumeration over the N1/N2
//! definition is kept alongside.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSubset};

/// Cap on host order for building-set enumeration (`2^n` candidate subsets).
pub const BUILDING_SET_HOST_CAP: usize = 20;

/// Cap on nested-set-complex vertex count: facet search uses 128-bit sets.
pub const COMPLEX_VERTEX_CAP: usize = 128;

/// Cap on the face-enumeration work `Σ_facets 2^|facet|`.
pub const FACE_ENUMERATION_CAP: u128 = 1 << 23;

// ============================================================
// Building sets
// ============================================================

/// A building set on `{0, .., host_size - 1}` with canonical element order
/// (cardinality, then bit value).
#[derive(Clone, Debug)]
pub struct BuildingSet {
    host_size: usize,
    elements: Vec<VertexSubset>,
    members: HashSet<u64>,
    /// Present when the set was built as the graphical building set of a
    /// graph; enables the flag (clique-complex) construction.
    graph: Option<SimpleGraph>,
}

impl BuildingSet {
    pub fn host_size(&self) -> usize {
        self.host_size
    }

    /// Elements in canonical order.
    pub fn elements(&self) -> &[VertexSubset] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, set: VertexSubset) -> bool {
        self.members.contains(&set.bits())
    }

    /// A building set is connected when the full host set is a member.
    pub fn is_connected(&self) -> bool {
        self.host_size > 0 && self.contains(VertexSubset::full(self.host_size))
    }

    /// Elements other than the full host set, canonical order.
    pub fn proper_elements(&self) -> Vec<VertexSubset> {
        let full = VertexSubset::full(self.host_size);
        self.elements.iter().copied().filter(|&e| e != full).collect()
    }

    /// The underlying graph when this is a graphical building set.
    pub fn graph(&self) -> Option<&SimpleGraph> {
        self.graph.as_ref()
    }

    /// Validate and wrap a custom (not necessarily graphical) building set.
    pub fn custom(host_size: usize, elements: &[VertexSubset]) -> Result<BuildingSet> {
        if !is_building_set(host_size, elements) {
            return Err(Error::domain(
                "collection is not a building set on the given host \
                 (needs every singleton and closure under unions of \
                 intersecting members)"
                    .to_string(),
            ));
        }
        let mut elements: Vec<VertexSubset> = elements.to_vec();
        elements.sort();
        elements.dedup();
        let members = elements.iter().map(|e| e.bits()).collect();
        Ok(BuildingSet { host_size, elements, members, graph: None })
    }
}

/// The graphical building set `B(G)`: all nonempty vertex subsets inducing a
/// connected subgraph.
pub fn graphical_building_set(g: &SimpleGraph) -> Result<BuildingSet> {
    let n = g.vertex_count();
    if n > BUILDING_SET_HOST_CAP {
        return Err(Error::resource(format!(
            "building-set enumeration scans 2^{n} subsets; host cap is \
             {BUILDING_SET_HOST_CAP} vertices"
        )));
    }
    let mut elements = Vec::new();
    for bits in 1u64..1 << n {
        let set = VertexSubset::from_bits(bits);
        if g.is_connected_within(set) {
            elements.push(set);
        }
    }
    elements.sort();
    let members = elements.iter().map(|e| e.bits()).collect();
    Ok(BuildingSet { host_size: n, elements, members, graph: Some(g.clone()) })
}

/// Does the collection form a building set on `{0, .., host_size-1}`?
pub fn is_building_set(host_size: usize, elements: &[VertexSubset]) -> bool {
    let full = VertexSubset::full(host_size);
    let members: HashSet<u64> = elements.iter().map(|e| e.bits()).collect();
    for &e in elements {
        if e.is_empty() || !e.is_subset_of(full) {
            return false;
        }
    }
    for v in 0..host_size {
        if !members.contains(&VertexSubset::singleton(v).bits()) {
            return false;
        }
    }
    for (idx, &x) in elements.iter().enumerate() {
        for &y in &elements[idx + 1..] {
            if !x.intersection(y).is_empty() && !members.contains(&x.union(y).bits()) {
                return false;
            }
        }
    }
    true
}

/// How two building-set members meet as candidate nested-set partners.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MeetKind {
    /// One contains the other.
    Inclusion,
    /// Disjoint with union outside `B` (for graphical `B`: the union induces
    /// a disconnected subgraph).
    Separation,
    /// Neither: overlapping without containment, or disjoint with union in
    /// `B`. Such a pair can never lie in a common nested set.
    NoMeet,
}

/// Classify how `x` and `y` meet with respect to `b`.
pub fn pairwise_meet(b: &BuildingSet, x: VertexSubset, y: VertexSubset) -> MeetKind {
    if x.is_subset_of(y) || y.is_subset_of(x) {
        MeetKind::Inclusion
    } else if x.is_disjoint(y) && !b.contains(x.union(y)) {
        MeetKind::Separation
    } else {
        MeetKind::NoMeet
    }
}

/// Full nested-set test (N1 and the unabridged N2) for a collection of
/// members of `b`. Members must be proper (not the full host set) and in
/// `b`; violations are `DomainError`s.
pub fn is_nested_set(b: &BuildingSet, collection: &[VertexSubset]) -> Result<bool> {
    let full = VertexSubset::full(b.host_size());
    let mut seen = HashSet::new();
    for &e in collection {
        if !b.contains(e) {
            return Err(Error::domain(format!("{e} is not a member of the building set")));
        }
        if e == full {
            return Err(Error::domain(
                "the full host set cannot belong to a nested set".to_string(),
            ));
        }
        if !seen.insert(e.bits()) {
            return Err(Error::domain(format!("duplicate member {e} in candidate nested set")));
        }
    }
    let k = collection.len();
    if k > 20 {
        return Err(Error::resource(format!(
            "nested-set test enumerates 2^{k} subcollections; cap is 20 members"
        )));
    }
    // N1: pairwise nested or disjoint.
    for i in 0..k {
        for j in i + 1..k {
            let (x, y) = (collection[i], collection[j]);
            if !x.is_subset_of(y) && !y.is_subset_of(x) && !x.is_disjoint(y) {
                return Ok(false);
            }
        }
    }
    // N2: no union of >= 2 pairwise disjoint members may lie in b.
    let mut disjoint_with = vec![0u32; k]; // bitmask over indices
    for i in 0..k {
        for j in 0..k {
            if i != j && collection[i].is_disjoint(collection[j]) {
                disjoint_with[i] |= 1 << j;
            }
        }
    }
    for mask in 1u32..1 << k {
        if mask.count_ones() < 2 {
            continue;
        }
        let mut pairwise = true;
        let mut union = VertexSubset::EMPTY;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            if mask & !disjoint_with[i] & !(1 << i) != 0 {
                pairwise = false;
                break;
            }
            union = union.union(collection[i]);
        }
        if pairwise && b.contains(union) {
            return Ok(false);
        }
    }
    Ok(true)
}

// ============================================================
// Simplicial complexes
// ============================================================

/// A finite abstract simplicial complex, stored by facets.
///
/// Vertices carry [`VertexSubset`] labels (building-set elements or poset
/// elements) in canonical order; facets are sorted index lists with no
/// mutual containment, sorted lexicographically. Every vertex appears in
/// some facet. The complex with no vertices is "empty" but still has the
/// empty face, which is how reduced homology sees it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<VertexSubset>,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// The empty complex (no vertices; only the empty face).
    pub fn empty() -> SimplicialComplex {
        SimplicialComplex { labels: Vec::new(), facets: Vec::new() }
    }

    /// Normalising constructor: sorts facets, drops duplicates and dominated
    /// faces, and checks labels/indices.
    pub fn new(labels: Vec<VertexSubset>, faces: Vec<Vec<usize>>) -> Result<SimplicialComplex> {
        if labels.len() > COMPLEX_VERTEX_CAP {
            return Err(Error::resource(format!(
                "complex has {} vertices; cap is {COMPLEX_VERTEX_CAP}",
                labels.len()
            )));
        }
        for w in labels.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::domain(
                    "vertex labels must be strictly increasing in canonical order".to_string(),
                ));
            }
        }
        let mut masks: Vec<u128> = Vec::with_capacity(faces.len());
        for f in &faces {
            let mut mask = 0u128;
            for &v in f {
                if v >= labels.len() {
                    return Err(Error::domain(format!(
                        "facet vertex index {v} out of range 0..{}",
                        labels.len()
                    )));
                }
                mask |= 1 << v;
            }
            if mask != 0 {
                masks.push(mask);
            }
        }
        let facets = prune_to_maximal(masks);
        let complex = SimplicialComplex { labels, facets };
        complex.check_coverage()?;
        Ok(complex)
    }

    fn check_coverage(&self) -> Result<()> {
        let mut covered = vec![false; self.labels.len()];
        for f in &self.facets {
            for &v in f {
                covered[v] = true;
            }
        }
        if let Some(v) = covered.iter().position(|&c| !c) {
            return Err(Error::domain(format!(
                "vertex {v} ({}) lies in no facet; isolated vertices must be \
                 listed as singleton facets",
                self.labels[v]
            )));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[VertexSubset] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> VertexSubset {
        self.labels[v]
    }

    /// Facets as sorted index lists, lexicographically sorted.
    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Dimension (largest facet size minus one); the empty complex has
    /// dimension -1.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    /// All facets the same size? (Vacuously true for the empty complex.)
    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(f) => self.facets.iter().all(|g| g.len() == f.len()),
        }
    }

    /// Proper faces grouped by dimension: entry `d` lists the `d`-faces as
    /// sorted index lists in lexicographic order. The empty face is implied
    /// and not listed. Fails with `ResourceLimit` when the enumeration work
    /// `Σ 2^|facet|` exceeds [`FACE_ENUMERATION_CAP`].
    pub fn faces_by_dimension(&self) -> Result<Vec<Vec<Vec<usize>>>> {
        let work: u128 = self.facets.iter().map(|f| 1u128 << f.len()).sum();
        if work > FACE_ENUMERATION_CAP {
            return Err(Error::resource(format!(
                "face enumeration needs ~{work} subset visits; cap is {FACE_ENUMERATION_CAP}"
            )));
        }
        let top = self.dim();
        if top < 0 {
            return Ok(Vec::new());
        }
        let mut by_dim: Vec<HashSet<u128>> = vec![HashSet::new(); top as usize + 1];
        for f in &self.facets {
            for sub in 1u32..1 << f.len() {
                let mut mask = 0u128;
                let mut m = sub;
                while m != 0 {
                    let i = m.trailing_zeros() as usize;
                    m &= m - 1;
                    mask |= 1 << f[i];
                }
                by_dim[sub.count_ones() as usize - 1].insert(mask);
            }
        }
        Ok(by_dim
            .into_iter()
            .map(|set| {
                let mut faces: Vec<Vec<usize>> = set.into_iter().map(mask_to_indices).collect();
                faces.sort();
                faces
            })
            .collect())
    }

    /// The full subcomplex on the vertices whose label satisfies `keep`.
    pub fn induced_subcomplex(&self, keep: impl Fn(&VertexSubset) -> bool) -> SimplicialComplex {
        let kept: Vec<usize> = (0..self.labels.len()).filter(|&v| keep(&self.labels[v])).collect();
        let mut old_to_new: HashMap<usize, usize> = HashMap::new();
        for (new, &old) in kept.iter().enumerate() {
            old_to_new.insert(old, new);
        }
        let labels: Vec<VertexSubset> = kept.iter().map(|&v| self.labels[v]).collect();
        let mut masks: Vec<u128> = Vec::new();
        for f in &self.facets {
            let mut mask = 0u128;
            for &v in f {
                if let Some(&nv) = old_to_new.get(&v) {
                    mask |= 1 << nv;
                }
            }
            if mask != 0 {
                masks.push(mask);
            }
        }
        SimplicialComplex { labels, facets: prune_to_maximal(masks) }
    }

    /// Canonical JSON form: `{"vertex_labels": [[..]..], "facets": [[..]..]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let labels: Vec<Vec<usize>> =
            self.labels.iter().map(|l| l.iter().collect::<Vec<usize>>()).collect();
        serde_json::json!({ "vertex_labels": labels, "facets": self.facets })
    }
}

fn mask_to_indices(mask: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Deduplicate and drop masks contained in another; return sorted index
/// lists in lexicographic order.
fn prune_to_maximal(mut masks: Vec<u128>) -> Vec<Vec<usize>> {
    masks.sort();
    masks.dedup();
    let mut maximal: Vec<u128> = Vec::new();
    for &m in &masks {
        if !masks.iter().any(|&other| other != m && m & !other == 0) {
            maximal.push(m);
        }
    }
    let mut out: Vec<Vec<usize>> = maximal.into_iter().map(mask_to_indices).collect();
    out.sort();
    out
}

// ============================================================
// Nested set complex
// ============================================================

/// The nested set complex of a connected building set: vertices are the
/// proper elements, faces are the nested sets.
///
/// Graphical building sets take the flag route (maximal cliques of the
/// pairwise-meet graph); custom ones fall back to direct enumeration.
pub fn nested_set_complex(b: &BuildingSet) -> Result<SimplicialComplex> {
    if b.host_size() == 0 {
        return Err(Error::domain("building set on an empty host has no nested set complex"));
    }
    if !b.is_connected() {
        return Err(Error::domain(
            "nested set complex requires a connected building set \
             (full host set must be a member)",
        ));
    }
    if b.graph.is_some() {
        nested_set_complex_flag(b)
    } else {
        nested_set_complex_by_enumeration(b)
    }
}

fn meet_adjacency(b: &BuildingSet, vertices: &[VertexSubset]) -> Result<Vec<u128>> {
    if vertices.len() > COMPLEX_VERTEX_CAP {
        return Err(Error::resource(format!(
            "nested set complex on {} vertices; cap is {COMPLEX_VERTEX_CAP}",
            vertices.len()
        )));
    }
    let mut adj = vec![0u128; vertices.len()];
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if pairwise_meet(b, vertices[i], vertices[j]) != MeetKind::NoMeet {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    Ok(adj)
}

fn nested_set_complex_flag(b: &BuildingSet) -> Result<SimplicialComplex> {
    let vertices = b.proper_elements();
    if vertices.is_empty() {
        return Ok(SimplicialComplex::empty());
    }
    let adj = meet_adjacency(b, &vertices)?;
    let mut cliques = Vec::new();
    let all = if vertices.len() == 128 { !0u128 } else { (1u128 << vertices.len()) - 1 };
    bron_kerbosch(&adj, 0, all, 0, &mut cliques);
    let complex = SimplicialComplex { labels: vertices, facets: prune_to_maximal(cliques) };
    debug_assert!(complex.check_coverage().is_ok());
    Ok(complex)
}

/// Direct construction from the definition: depth-first extension over
/// pairwise-meeting collections, keeping those that pass the full nested-set
/// test. Exponential in the worst case; intended for custom building sets
/// and as the independent cross-check for the flag route.
pub fn nested_set_complex_by_enumeration(b: &BuildingSet) -> Result<SimplicialComplex> {
    if b.host_size() == 0 {
        return Err(Error::domain("building set on an empty host has no nested set complex"));
    }
    if !b.is_connected() {
        return Err(Error::domain(
            "nested set complex requires a connected building set \
             (full host set must be a member)",
        ));
    }
    let vertices = b.proper_elements();
    if vertices.is_empty() {
        return Ok(SimplicialComplex::empty());
    }
    let adj = meet_adjacency(b, &vertices)?;
    // Enumerate pairwise-compatible collections (cliques), then keep the
    // faces that satisfy the full definition.
    let mut faces: Vec<u128> = Vec::new();
    let mut stack: Vec<(usize, u128, Vec<VertexSubset>)> = vec![(0, 0, Vec::new())];
    while let Some((start, mask, sets)) = stack.pop() {
        for v in start..vertices.len() {
            if mask != 0 && adj[v] & mask != mask {
                continue; // v must meet every chosen vertex
            }
            let mut next_sets = sets.clone();
            next_sets.push(vertices[v]);
            if is_nested_set(b, &next_sets)? {
                let next_mask = mask | 1 << v;
                faces.push(next_mask);
                stack.push((v + 1, next_mask, next_sets));
            }
        }
    }
    let complex = SimplicialComplex { labels: vertices, facets: prune_to_maximal(faces) };
    complex.check_coverage()?;
    Ok(complex)
}

/// Bron–Kerbosch maximal-clique enumeration with pivoting on 128-bit sets.
fn bron_kerbosch(adj: &[u128], r: u128, mut p: u128, mut x: u128, out: &mut Vec<u128>) {
    if p == 0 && x == 0 {
        if r != 0 {
            out.push(r);
        }
        return;
    }
    // Pivot: vertex of p ∪ x with the most neighbours in p.
    let mut pivot = usize::MAX;
    let mut best = -1i64;
    let mut pux = p | x;
    while pux != 0 {
        let u = pux.trailing_zeros() as usize;
        pux &= pux - 1;
        let cnt = (adj[u] & p).count_ones() as i64;
        if cnt > best {
            best = cnt;
            pivot = u;
        }
    }
    let mut candidates = p & !adj[pivot];
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        let vbit = 1u128 << v;
        bron_kerbosch(adj, r | vbit, p & adj[v], x & adj[v], out);
        p &= !vbit;
        x |= vbit;
    }
}

// ============================================================
// Parity subcomplexes
// ============================================================

fn connected_even_host(g: &SimpleGraph, what: &str) -> Result<()> {
    let n = g.vertex_count();
    if n == 0 || n % 2 == 1 || !g.is_connected() {
        return Err(Error::domain(format!(
            "{what} needs a connected host of even order >= 2, got {} vertices, {}",
            n,
            if g.is_connected() { "connected" } else { "disconnected" }
        )));
    }
    Ok(())
}

/// Subcomplex of the nested set complex on the even-cardinality proper
/// elements. Host must be connected of even order.
pub fn k_even(g: &SimpleGraph) -> Result<SimplicialComplex> {
    connected_even_host(g, "even-part subcomplex")?;
    let delta = nested_set_complex(&graphical_building_set(g)?)?;
    Ok(delta.induced_subcomplex(|l| l.len() % 2 == 0))
}

/// Subcomplex of the nested set complex on the odd-cardinality proper
/// elements. Host must be connected of even order.
pub fn k_odd(g: &SimpleGraph) -> Result<SimplicialComplex> {
    connected_even_host(g, "odd-part subcomplex")?;
    let delta = nested_set_complex(&graphical_building_set(g)?)?;
    Ok(delta.induced_subcomplex(|l| l.len() % 2 == 1))
}

/// The subcomplex on vertices `I ⊆ T` of odd cardinality, for an
/// even-cardinality `T ⊆ V(G)`. (`T` empty gives the empty complex.)
pub fn kpp_t(g: &SimpleGraph, t: VertexSubset) -> Result<SimplicialComplex> {
    if !t.is_subset_of(g.vertices()) {
        return Err(Error::domain(format!("{t} is not a vertex subset of the host")));
    }
    if t.len() % 2 == 1 {
        return Err(Error::domain(format!("parity subcomplex needs |T| even, got |{t}| odd")));
    }
    if !g.is_connected() || g.vertex_count() == 0 {
        return Err(Error::domain("parity subcomplex needs a connected nonempty host"));
    }
    let delta = nested_set_complex(&graphical_building_set(g)?)?;
    Ok(delta.induced_subcomplex(|l| l.is_subset_of(t) && l.len() % 2 == 1))
}

// ============================================================
// Even poset and order complex
// ============================================================

/// The poset of proper nonempty vertex subsets all of whose induced
/// components have even order, ordered by inclusion and graded by
/// half-cardinality.
#[derive(Clone, Debug)]
pub struct EvenPoset {
    host_order: usize,
    elements: Vec<VertexSubset>,
}

impl EvenPoset {
    /// Elements in canonical order.
    pub fn elements(&self) -> &[VertexSubset] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn host_order(&self) -> usize {
        self.host_order
    }

    /// Order relation (inclusion).
    pub fn leq(&self, a: VertexSubset, b: VertexSubset) -> bool {
        a.is_subset_of(b)
    }

    /// Rank of an element: half its cardinality, 1-based from the bottom
    /// rank of single even components.
    pub fn rank(&self, a: VertexSubset) -> usize {
        a.len() / 2
    }
}

/// Build the even-component poset of a connected graph of even order.
pub fn even_poset(g: &SimpleGraph) -> Result<EvenPoset> {
    connected_even_host(g, "even-component poset")?;
    let n = g.vertex_count();
    if n > BUILDING_SET_HOST_CAP {
        return Err(Error::resource(format!(
            "even-component poset scans 2^{n} subsets; host cap is \
             {BUILDING_SET_HOST_CAP} vertices"
        )));
    }
    let full = VertexSubset::full(n);
    let mut elements = Vec::new();
    for bits in 1u64..(1 << n) - 1 {
        let set = VertexSubset::from_bits(bits);
        debug_assert!(set != full);
        if g.components_within(set).iter().all(|c| c.len() % 2 == 0) {
            elements.push(set);
        }
    }
    elements.sort();
    Ok(EvenPoset { host_order: n, elements })
}

/// The order complex of the poset: vertices are elements, faces are chains,
/// facets are the maximal chains.
pub fn order_complex(p: &EvenPoset) -> SimplicialComplex {
    let n = p.len();
    if n == 0 {
        return SimplicialComplex::empty();
    }
    // Hasse diagram: covers[i] lists j with elements[i] ⊂ elements[j] and
    // nothing strictly between.
    let el = &p.elements;
    let mut above: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            if i != j && el[i].is_subset_of(el[j]) && el[i] != el[j] {
                above[i].push(j);
            }
        }
    }
    let mut covers: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for &j in &above[i] {
            let strictly_between = above[i]
                .iter()
                .any(|&k| k != j && el[k].is_subset_of(el[j]) && el[k] != el[j]);
            if !strictly_between {
                covers[i].push(j);
            }
        }
    }
    let is_minimal: Vec<bool> =
        (0..n).map(|i| !(0..n).any(|j| j != i && el[j].is_subset_of(el[i]))).collect();
    // Maximal chains = paths in the Hasse diagram from minimal elements to
    // maximal ones (no outgoing cover).
    let mut chains: Vec<u128> = Vec::new();
    let mut stack: Vec<(usize, u128)> = (0..n)
        .filter(|&i| is_minimal[i])
        .map(|i| (i, 1u128 << i))
        .collect();
    while let Some((at, mask)) = stack.pop() {
        if covers[at].is_empty() {
            chains.push(mask);
        } else {
            for &next in &covers[at] {
                stack.push((next, mask | 1 << next));
            }
        }
    }
    SimplicialComplex { labels: el.clone(), facets: prune_to_maximal(chains) }
}

// ============================================================
// f- and h-vectors
// ============================================================

/// Face-count vector `[f_{-1}, f_0, ..., f_{dim}]` with `f_{-1} = 1`.
pub fn f_vector(k: &SimplicialComplex) -> Result<Vec<u64>> {
    let faces = k.faces_by_dimension()?;
    let mut f = vec![1u64];
    f.extend(faces.iter().map(|fs| fs.len() as u64));
    Ok(f)
}

/// h-vector of a pure complex: `h_k = Σ_{i=0..k} (-1)^{k-i} C(d-i, k-i)
/// f_{i-1}` where `d = dim + 1`. `DomainError` for non-pure complexes.
pub fn h_vector(k: &SimplicialComplex) -> Result<Vec<i64>> {
    if !k.is_pure() {
        return Err(Error::domain(
            "h-vector is defined here only for pure complexes".to_string(),
        ));
    }
    let f = f_vector(k)?;
    let d = f.len() - 1; // dim + 1
    let mut h = Vec::with_capacity(d + 1);
    for kk in 0..=d {
        let mut acc: i64 = 0;
        for i in 0..=kk {
            let c = binom_i64(d - i, kk - i);
            let term = c * f[i] as i64;
            if (kk - i) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        h.push(acc);
    }
    Ok(h)
}

fn binom_i64(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let mut r = 1i64;
    for i in 0..k.min(n - k) {
        r = r * (n - i) as i64 / (i + 1) as i64;
    }
    r
}
