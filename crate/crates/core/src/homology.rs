//! Reduced simplicial homology over the rationals.
//!
//! Betti numbers come from ranks of the augmented boundary matrices:
//! `β̃_d = f_d − rank ∂_d − rank ∂_{d+1}` with `f_{-1} = 1` for the empty
//! face, so the complex with no vertices has a single unit of homology in
//! degree `-1`. Ranks are computed by exact fraction-free elimination on
//! sparse integer columns: each incoming column is reduced against the
//! pivot whose pivot row matches its least row (cross-multiplying by the
//! gcd-reduced pivot pair, then stripping the content), which strictly
//! increases the least row and so terminates. Arithmetic runs in `i64`
//! with overflow checks and falls back to arbitrary precision for the
//! whole matrix if any step would overflow.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::buildingset::SimplicialComplex;
use crate::error::Result;

// ============================================================
// Betti vectors
// ============================================================

/// Reduced rational Betti numbers indexed from degree `-1` upward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiVector {
    /// `ranks[0]` is degree `-1`; `ranks[d + 1]` is degree `d`.
    ranks: Vec<u64>,
}

impl BettiVector {
    fn from_ranks(ranks: Vec<u64>) -> BettiVector {
        BettiVector { ranks }
    }

    /// `β̃_degree`, zero outside the stored range.
    pub fn get(&self, degree: isize) -> u64 {
        if degree < -1 {
            return 0;
        }
        *self.ranks.get((degree + 1) as usize).unwrap_or(&0)
    }

    /// All stored ranks starting at degree `-1`.
    pub fn from_degree_minus_one(&self) -> &[u64] {
        &self.ranks
    }

    /// Total reduced rank over all degrees.
    pub fn total(&self) -> u64 {
        self.ranks.iter().sum()
    }

    /// Largest degree with nonzero rank, or `None` if all vanish.
    pub fn top_nonzero_degree(&self) -> Option<isize> {
        self.ranks
            .iter()
            .rposition(|&r| r != 0)
            .map(|idx| idx as isize - 1)
    }

    /// `Σ (-1)^d β̃_d` over `d ≥ -1` (the reduced Euler characteristic,
    /// equal to the ordinary one minus 1).
    pub fn reduced_euler(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(idx, &r)| if idx % 2 == 0 { -(r as i64) } else { r as i64 })
            .sum()
    }
}

// ============================================================
// Boundary matrices
// ============================================================

/// Sparse integer matrix stored by columns; each column lists
/// `(row, value)` sorted by row.
#[derive(Clone, Debug)]
pub struct SparseMatrix {
    rows: usize,
    cols: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: Vec<Vec<(usize, i64)>>) -> SparseMatrix {
        for col in &cols {
            debug_assert!(col.windows(2).all(|w| w[0].0 < w[1].0));
            debug_assert!(col.iter().all(|&(r, v)| r < rows && v != 0));
        }
        SparseMatrix { rows, cols }
    }

    pub fn row_count(&self) -> usize {
        self.rows
    }

    pub fn col_count(&self) -> usize {
        self.cols.len()
    }

    pub fn columns(&self) -> &[Vec<(usize, i64)>] {
        &self.cols
    }
}

fn face_mask(face: &[usize]) -> u128 {
    face.iter().fold(0u128, |m, &v| m | 1 << v)
}

fn boundary_matrices_from(faces: &[Vec<Vec<usize>>]) -> Vec<SparseMatrix> {
    let mut mats = Vec::with_capacity(faces.len());
    if faces.is_empty() {
        return mats;
    }
    // ∂_0 maps each vertex to the empty face with coefficient +1.
    mats.push(SparseMatrix::new(1, vec![vec![(0, 1)]; faces[0].len()]));
    for d in 1..faces.len() {
        let index: HashMap<u128, usize> = faces[d - 1]
            .iter()
            .enumerate()
            .map(|(i, f)| (face_mask(f), i))
            .collect();
        let mut cols = Vec::with_capacity(faces[d].len());
        for f in &faces[d] {
            let mask = face_mask(f);
            let mut col: Vec<(usize, i64)> = f
                .iter()
                .enumerate()
                .map(|(i, &v)| {
                    let row = index[&(mask ^ (1 << v))];
                    (row, if i % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable_by_key(|e| e.0);
            cols.push(col);
        }
        mats.push(SparseMatrix::new(faces[d - 1].len(), cols));
    }
    mats
}

/// Augmented boundary matrices `∂_0, .., ∂_dim` of a complex (`∂_d` maps
/// `d`-chains to `(d-1)`-chains; `∂_0` is the augmentation to the empty
/// face). The empty complex yields no matrices.
pub fn boundary_matrices(k: &SimplicialComplex) -> Result<Vec<SparseMatrix>> {
    Ok(boundary_matrices_from(&k.faces_by_dimension()?))
}

// ============================================================
// Exact rank
// ============================================================

fn strip_content_i64(col: &mut [(usize, i64)]) {
    let mut g: i64 = 0;
    for &(_, v) in col.iter() {
        g = g.gcd(&v);
    }
    if g > 1 {
        for e in col.iter_mut() {
            e.1 /= g;
        }
    }
}

/// `a * c - b * p` for sorted sparse columns; `None` on overflow.
fn combine_i64(c: &[(usize, i64)], a: i64, p: &[(usize, i64)], b: i64) -> Option<Vec<(usize, i64)>> {
    let mut out = Vec::with_capacity(c.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < c.len() || j < p.len() {
        let (row, val) = if j >= p.len() || (i < c.len() && c[i].0 < p[j].0) {
            let e = c[i];
            i += 1;
            (e.0, a.checked_mul(e.1)?)
        } else if i >= c.len() || p[j].0 < c[i].0 {
            let e = p[j];
            j += 1;
            (e.0, b.checked_mul(e.1)?.checked_neg()?)
        } else {
            let (ec, ep) = (c[i], p[j]);
            i += 1;
            j += 1;
            (ec.0, a.checked_mul(ec.1)?.checked_sub(b.checked_mul(ep.1)?)?)
        };
        if val != 0 {
            out.push((row, val));
        }
    }
    Some(out)
}

fn rank_exact_i64(cols: &[Vec<(usize, i64)>]) -> Option<u64> {
    // Pivot columns keyed by their least row index.
    let mut pivots: HashMap<usize, Vec<(usize, i64)>> = HashMap::new();
    for col in cols {
        let mut c = col.clone();
        strip_content_i64(&mut c);
        loop {
            let Some(&(r, v)) = c.first() else { break };
            let Some(p) = pivots.get(&r) else { break };
            let pv = p[0].1;
            let g = pv.gcd(&v);
            c = combine_i64(&c, pv / g, p, v / g)?;
            debug_assert!(c.first().map_or(true, |&(nr, _)| nr > r));
            strip_content_i64(&mut c);
        }
        if !c.is_empty() {
            pivots.insert(c[0].0, c);
        }
    }
    Some(pivots.len() as u64)
}

fn strip_content_big(col: &mut [(usize, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, v) in col.iter() {
        g = g.gcd(v);
    }
    if g > BigInt::from(1) {
        for e in col.iter_mut() {
            e.1 = &e.1 / &g;
        }
    }
}

fn combine_big(
    c: &[(usize, BigInt)],
    a: &BigInt,
    p: &[(usize, BigInt)],
    b: &BigInt,
) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(c.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < c.len() || j < p.len() {
        let (row, val) = if j >= p.len() || (i < c.len() && c[i].0 < p[j].0) {
            let e = &c[i];
            i += 1;
            (e.0, a * &e.1)
        } else if i >= c.len() || p[j].0 < c[i].0 {
            let e = &p[j];
            j += 1;
            (e.0, -(b * &e.1))
        } else {
            let (ec, ep) = (&c[i], &p[j]);
            i += 1;
            j += 1;
            (ec.0, a * &ec.1 - b * &ep.1)
        };
        if !val.is_zero() {
            out.push((row, val));
        }
    }
    out
}

fn rank_exact_big(cols: &[Vec<(usize, i64)>]) -> u64 {
    let mut pivots: HashMap<usize, Vec<(usize, BigInt)>> = HashMap::new();
    for col in cols {
        let mut c: Vec<(usize, BigInt)> =
            col.iter().map(|&(r, v)| (r, BigInt::from(v))).collect();
        strip_content_big(&mut c);
        loop {
            let Some((r, v)) = c.first().map(|(r, v)| (*r, v.clone())) else { break };
            let Some(p) = pivots.get(&r) else { break };
            let pv = p[0].1.clone();
            let g = pv.gcd(&v);
            c = combine_big(&c, &(&pv / &g), p, &(&v / &g));
            debug_assert!(c.first().map_or(true, |&(nr, _)| nr > r));
            strip_content_big(&mut c);
        }
        if !c.is_empty() {
            pivots.insert(c[0].0, c);
        }
    }
    pivots.len() as u64
}

/// Exact rank over the rationals of a sparse integer matrix.
pub fn matrix_rank(m: &SparseMatrix) -> u64 {
    match rank_exact_i64(m.columns()) {
        Some(rank) => rank,
        None => rank_exact_big(m.columns()),
    }
}

// ============================================================
// Betti numbers and Euler characteristics
// ============================================================

/// Reduced rational Betti numbers of a complex, degree `-1` upward.
pub fn reduced_betti(k: &SimplicialComplex) -> Result<BettiVector> {
    let faces = k.faces_by_dimension()?;
    if faces.is_empty() {
        // Only the empty face: one unit of homology in degree -1.
        return Ok(BettiVector::from_ranks(vec![1]));
    }
    let mats = boundary_matrices_from(&faces);
    let ranks: Vec<u64> = mats.iter().map(matrix_rank).collect();
    let dims = faces.len();
    let mut betti = Vec::with_capacity(dims + 1);
    betti.push(1 - ranks[0]); // degree -1: f_{-1} - rank ∂_0
    for d in 0..dims {
        let fd = faces[d].len() as u64;
        let out_rank = ranks[d];
        let in_rank = if d + 1 < dims { ranks[d + 1] } else { 0 };
        let b = fd
            .checked_sub(out_rank + in_rank)
            .expect("boundary ranks exceed face count");
        betti.push(b);
    }
    let result = BettiVector::from_ranks(betti);
    debug_assert_eq!(
        result.reduced_euler(),
        euler_from_faces(&faces) - 1,
        "Euler-Poincare mismatch"
    );
    Ok(result)
}

fn euler_from_faces(faces: &[Vec<Vec<usize>>]) -> i64 {
    faces
        .iter()
        .enumerate()
        .map(|(d, fs)| if d % 2 == 0 { fs.len() as i64 } else { -(fs.len() as i64) })
        .sum()
}

/// Ordinary Euler characteristic `Σ (-1)^d f_d` over `d ≥ 0` (the empty
/// complex has characteristic 0).
pub fn euler_characteristic(k: &SimplicialComplex) -> Result<i64> {
    Ok(euler_from_faces(&k.faces_by_dimension()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::buildingset::{graphical_building_set, k_even, k_odd, nested_set_complex};
    use crate::error::Error;
    use crate::graph::{generate, GraphFamily, VertexSubset};
    use num_rational::BigRational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn vs(vals: &[usize]) -> VertexSubset {
        VertexSubset::from_vertices(vals.iter().copied())
    }

    fn singleton_labels(n: usize) -> Vec<VertexSubset> {
        (0..n).map(VertexSubset::singleton).collect()
    }

    fn complex_of(family: GraphFamily, n: usize) -> SimplicialComplex {
        let g = generate(family, n).unwrap();
        nested_set_complex(&graphical_building_set(&g).unwrap()).unwrap()
    }

    #[test]
    fn empty_complex_concentrates_in_degree_minus_one() {
        let b = reduced_betti(&SimplicialComplex::empty()).unwrap();
        assert_eq!(b.get(-1), 1);
        assert_eq!(b.total(), 1);
        assert_eq!(b.top_nonzero_degree(), Some(-1));
        assert_eq!(b.reduced_euler(), -1);
    }

    #[test]
    fn isolated_points() {
        // Three points: two units in degree 0. (This is k_even of the
        // 4-path.)
        let k = k_even(&generate(GraphFamily::Path, 4).unwrap()).unwrap();
        let b = reduced_betti(&k).unwrap();
        assert_eq!(b.get(-1), 0);
        assert_eq!(b.get(0), 2);
        assert_eq!(b.total(), 2);
    }

    #[test]
    fn pentagon_is_a_circle() {
        let b = reduced_betti(&complex_of(GraphFamily::Path, 3)).unwrap();
        assert_eq!(b.get(0), 0);
        assert_eq!(b.get(1), 1);
        assert_eq!(b.total(), 1);
    }

    #[test]
    fn odd_part_of_p4_is_a_wedge_of_two_circles() {
        let k = k_odd(&generate(GraphFamily::Path, 4).unwrap()).unwrap();
        let b = reduced_betti(&k).unwrap();
        assert_eq!(b.get(0), 0);
        assert_eq!(b.get(1), 2);
        assert_eq!(b.get(2), 0);
        assert_eq!(b.total(), 2);
    }

    #[test]
    fn polytope_boundaries_are_spheres() {
        // Nested set complexes of connected building sets on 4 vertices are
        // boundaries of 3-dimensional polytopes: homology of S^2.
        for family in [GraphFamily::Complete, GraphFamily::Path, GraphFamily::Cycle] {
            let b = reduced_betti(&complex_of(family, 4)).unwrap();
            assert_eq!(b.get(0), 0, "{family:?}");
            assert_eq!(b.get(1), 0, "{family:?}");
            assert_eq!(b.get(2), 1, "{family:?}");
            assert_eq!(b.total(), 1, "{family:?}");
        }
    }

    #[test]
    fn full_simplex_is_contractible() {
        let k = SimplicialComplex::new(singleton_labels(4), vec![vec![0, 1, 2, 3]]).unwrap();
        let b = reduced_betti(&k).unwrap();
        assert_eq!(b.total(), 0);
        assert_eq!(b.top_nonzero_degree(), None);
    }

    // The 6-vertex projective plane: integral H_1 is pure torsion, so all
    // rational Betti numbers vanish. A mod-2 or floating computation would
    // get this wrong, which makes it a sharp test of exactness.
    #[test]
    fn projective_plane_has_no_rational_homology() {
        let facets = vec![
            vec![0, 1, 4],
            vec![0, 1, 5],
            vec![0, 2, 3],
            vec![0, 2, 5],
            vec![0, 3, 4],
            vec![1, 2, 3],
            vec![1, 2, 4],
            vec![1, 3, 5],
            vec![2, 4, 5],
            vec![3, 4, 5],
        ];
        let k = SimplicialComplex::new(singleton_labels(6), facets).unwrap();
        assert_eq!(euler_characteristic(&k).unwrap(), 1);
        let b = reduced_betti(&k).unwrap();
        assert_eq!(b.total(), 0);
    }

    #[test]
    fn boundary_of_boundary_vanishes() {
        for k in [
            complex_of(GraphFamily::Path, 4),
            complex_of(GraphFamily::Complete, 4),
            k_odd(&generate(GraphFamily::Path, 4).unwrap()).unwrap(),
        ] {
            let mats = boundary_matrices(&k).unwrap();
            for d in 1..mats.len() {
                let lower = &mats[d - 1];
                let upper = &mats[d];
                assert_eq!(lower.col_count(), upper.row_count());
                for col in upper.columns() {
                    let mut acc = vec![0i64; lower.row_count()];
                    for &(mid, v) in col {
                        for &(row, w) in &lower.columns()[mid] {
                            acc[row] += v * w;
                        }
                    }
                    assert!(acc.iter().all(|&x| x == 0), "∂∘∂ ≠ 0 at dimension {d}");
                }
            }
        }
    }

    #[test]
    fn euler_poincare_identity() {
        for k in [
            complex_of(GraphFamily::Path, 3),
            complex_of(GraphFamily::Path, 5),
            complex_of(GraphFamily::Cycle, 5),
            k_odd(&generate(GraphFamily::Cycle, 4).unwrap()).unwrap(),
            k_even(&generate(GraphFamily::Cycle, 6).unwrap()).unwrap(),
        ] {
            let b = reduced_betti(&k).unwrap();
            assert_eq!(b.reduced_euler(), euler_characteristic(&k).unwrap() - 1);
        }
    }

    // --- rank oracle: dense Gaussian elimination over big rationals ---

    fn rational_rank(rows: usize, cols: &[Vec<(usize, i64)>]) -> u64 {
        let mut m: Vec<Vec<BigRational>> =
            vec![vec![BigRational::from(BigInt::from(0)); cols.len()]; rows];
        for (j, col) in cols.iter().enumerate() {
            for &(i, v) in col {
                m[i][j] = BigRational::from(BigInt::from(v));
            }
        }
        let mut rank = 0u64;
        let mut row = 0usize;
        for col in 0..cols.len() {
            if row >= rows {
                break;
            }
            let pivot = (row..rows).find(|&r| !m[r][col].is_zero());
            let Some(p) = pivot else { continue };
            m.swap(row, p);
            let pv = m[row][col].clone();
            for r in 0..rows {
                if r != row && !m[r][col].is_zero() {
                    let factor = &m[r][col] / &pv;
                    for c in col..cols.len() {
                        let sub = &factor * &m[row][c];
                        m[r][c] = &m[r][c] - &sub;
                    }
                }
            }
            row += 1;
            rank += 1;
        }
        rank
    }

    #[test]
    fn sparse_rank_matches_rational_elimination_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
        for _ in 0..60 {
            let rows = rng.gen_range(1..=24);
            let ncols = rng.gen_range(1..=24);
            let mut cols = Vec::with_capacity(ncols);
            for _ in 0..ncols {
                let mut col: Vec<(usize, i64)> = Vec::new();
                for r in 0..rows {
                    if rng.gen_bool(0.25) {
                        let v = rng.gen_range(-6..=6i64);
                        if v != 0 {
                            col.push((r, v));
                        }
                    }
                }
                cols.push(col);
            }
            let m = SparseMatrix::new(rows, cols.clone());
            assert_eq!(matrix_rank(&m), rational_rank(rows, &cols));
            assert_eq!(rank_exact_big(&cols), rational_rank(rows, &cols));
        }
    }

    #[test]
    fn rank_of_actual_boundary_matrices_matches_oracle() {
        for k in [complex_of(GraphFamily::Path, 4), complex_of(GraphFamily::Cycle, 5)] {
            for m in boundary_matrices(&k).unwrap() {
                assert_eq!(matrix_rank(&m), rational_rank(m.row_count(), m.columns()));
            }
        }
    }

    // Entries near 2^40 force the checked i64 path to bail out and the
    // arbitrary-precision fallback to take over.
    #[test]
    fn bigint_fallback_on_large_entries() {
        let big = 1i64 << 40;
        let cols = vec![
            vec![(0, big), (1, 1), (2, 3)],
            vec![(0, big + 1), (1, big - 1), (2, 7)],
            vec![(0, 5), (1, big + 3), (2, big)],
        ];
        assert!(rank_exact_i64(&cols).is_none());
        let m = SparseMatrix::new(3, cols.clone());
        assert_eq!(matrix_rank(&m), rational_rank(3, &cols));
    }

    #[test]
    fn resource_cap_propagates() {
        // One facet on 25 vertices exceeds the face-enumeration budget.
        let k = SimplicialComplex::new(singleton_labels(25), vec![(0..25).collect()]).unwrap();
        assert!(matches!(reduced_betti(&k), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn betti_vector_accessors() {
        let k = SimplicialComplex::new(
            vec![vs(&[0]), vs(&[1]), vs(&[2])],
            vec![vec![0, 1], vec![0, 2], vec![1, 2]],
        )
        .unwrap();
        let b = reduced_betti(&k).unwrap();
        assert_eq!(b.from_degree_minus_one(), &[0, 0, 1]);
        assert_eq!(b.get(5), 0);
        assert_eq!(b.get(-3), 0);
        assert_eq!(b.top_nonzero_degree(), Some(1));
    }
}
