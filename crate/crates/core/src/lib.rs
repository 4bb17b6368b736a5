//! a-number invariants of simple graphs and rational Betti numbers of the
//! real toric manifolds associated with graph associahedra.
//!
//! The centre of the crate is a signed subset recursion on a host graph `G`:
//! `sa(∅) = 1`, `sa` is multiplicative over connected components, `sa`
//! vanishes on odd-order connected subgraphs, and for connected `G` of even
//! order `sa(G) = -Σ_{I ⊊ V} sa(G|_I)`. The numbers `a_i(G) = Σ_{|I|=2i}
//! |sa(G|_I)|` coincide with the rational Betti numbers `β_{2i}` (complex
//! case: of the toric manifold over the graph associahedron) and `β_i` (real
//! case), which this crate also computes by an entirely independent route:
//! simplicial homology of subcomplexes of the nested set complex of the
//! graphical building set, sliced out by a mod-2 characteristic matrix.
//! Agreement of the two routes is the crate's main correctness instrument;
//! the `verify` machinery and the acceptance test suite exercise it.
//!
//! Module map:
//! - [`graph`]: bitset vertex subsets, simple graphs, graph6 and edge-list
//!   formats, family generators, small-order isomorphism-class enumeration.
//! - [`sequences`]: Catalan numbers and ballot-style differences, Euler
//!   zigzag numbers, closed forms for paths, cycles, complete graphs, stars.
//! - [`invariants`]: the signed recursion over all `2^n` subsets (fast
//!   subset-sum accumulation plus a naive reference), a-vectors, the
//!   alternating total, component convolution.
//! - [`buildingset`]: graphical building sets, nested sets, the nested set
//!   complex, its even/odd/parity subcomplexes, the even-subset poset and its
//!   order complex, f- and h-vectors.
//! - [`homology`]: boundary matrices and exact reduced rational homology of
//!   the complexes above (integer elimination, no floating point).
//! - [`toric`]: mod-2 characteristic matrices, the subset bijection between
//!   coordinate subsets and even vertex subsets, the homology-side Betti
//!   computations, product fast path, and cross-method verification.
//! - [`cli`]: the `anumber` command-line interface.

pub mod error;
pub mod graph;
pub mod sequences;
pub mod invariants;
pub mod buildingset;
pub mod homology;
pub mod toric;
pub mod cli;

pub use error::{Error, Result};
pub use graph::{SimpleGraph, VertexSubset};
