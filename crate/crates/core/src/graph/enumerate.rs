//! Exhaustive enumeration of connected graphs on few vertices, one canonical
//! representative per isomorphism class.
//!
//! Intended for building verification corpora, not as a general isomorphism
//! facility: every labelled graph is canonicalised by brute force over all
//! `n!` relabellings, which is desk-scale only for `n <= 6` (on 6 vertices
//! that is 26 704 connected labelled graphs x 720 permutations).

use super::SimpleGraph;
use crate::error::{Error, Result};

/// Largest order for which the brute-force sweep is supported.
pub const MAX_ENUMERATION_VERTICES: usize = 6;

/// Index of edge `{u, v}` (`u < v`) in the packed edge mask; the order is the
/// graph6 column-major order `(0,1), (0,2), (1,2), (0,3), ...`.
#[inline]
fn edge_index(u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    v * (v - 1) / 2 + u
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    heap_permute(&mut perm, n, &mut out);
    out
}

fn heap_permute(perm: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(perm.clone());
        return;
    }
    for i in 0..k {
        heap_permute(perm, k - 1, out);
        if k % 2 == 0 {
            perm.swap(i, k - 1);
        } else {
            perm.swap(0, k - 1);
        }
    }
}

fn relabel(mask: u32, perm: &[usize]) -> u32 {
    let mut out = 0u32;
    let mut m = mask;
    while m != 0 {
        let idx = m.trailing_zeros() as usize;
        m &= m - 1;
        // invert edge_index: find v with v(v-1)/2 <= idx < v(v+1)/2
        let mut v = 1;
        while (v + 1) * v / 2 <= idx {
            v += 1;
        }
        let u = idx - v * (v - 1) / 2;
        let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
        out |= 1 << edge_index(a, b);
    }
    out
}

fn mask_to_graph(mask: u32, n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(n).expect("n <= 6");
    for v in 1..n {
        for u in 0..v {
            if mask >> edge_index(u, v) & 1 == 1 {
                g.add_edge(u, v).expect("valid edge");
            }
        }
    }
    g
}

/// All connected graphs on exactly `n` vertices, one per isomorphism class,
/// in ascending order of canonical edge mask. `n = 0` yields nothing (the
/// empty graph counts as disconnected).
pub fn connected_graphs_up_to_iso(n: usize) -> Result<Vec<SimpleGraph>> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::resource(format!(
            "exhaustive isomorphism-class enumeration is supported up to \
             {MAX_ENUMERATION_VERTICES} vertices, got {n} \
             (brute-force canonicalisation over n! relabellings)"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let perms = permutations(n);
    let nedges = n * (n - 1) / 2;
    let mut out = Vec::new();
    for mask in 0u32..1 << nedges {
        let g = mask_to_graph(mask, n);
        if !g.is_connected() {
            continue;
        }
        // Keep the graph only when it is its own canonical (maximal) form.
        let canonical = perms.iter().map(|p| relabel(mask, p)).max().unwrap();
        if canonical == mask {
            out.push(g);
        }
    }
    Ok(out)
}
