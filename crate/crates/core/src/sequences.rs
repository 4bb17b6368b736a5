//! Integer sequences behind the closed-form invariants: Catalan numbers,
//! ballot-style Catalan triangle entries, Euler zigzag numbers, and the
//! per-family closed forms for paths, cycles, complete graphs and stars.
//!
//! All values are exact `BigInt`s. The zigzag numbers come from the
//! boustrophedon (Seidel–Entringer) triangle, a pure integer recurrence; the
//! brute-force alternating-permutation count lives in the tests as an
//! independent oracle.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::GraphFamily;

/// Exact binomial coefficient; zero when `k` is out of range.
pub fn binomial(n: usize, k: isize) -> BigInt {
    if k < 0 || k as usize > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// `Catalan(k) = C(2k, k) / (k + 1)`.
pub fn catalan(k: usize) -> BigInt {
    binomial(2 * k, k as isize) / BigInt::from(k + 1)
}

/// Catalan-triangle (ballot difference) entry `C(n, i) - C(n, i-1)` for
/// `0 <= i <= floor(n/2)`.
pub fn catalan_triangle(n: usize, i: usize) -> Result<BigInt> {
    if i > n / 2 {
        return Err(Error::domain(format!(
            "catalan_triangle({n}, {i}) needs 0 <= i <= floor(n/2) = {}",
            n / 2
        )));
    }
    Ok(binomial(n, i as isize) - binomial(n, i as isize - 1))
}

/// Euler zigzag numbers `A_0..=A_max` (number of alternating permutations,
/// starting 1, 1, 1, 2, 5, 16, 61, 272, 1385, ...).
#[derive(Clone, Debug)]
pub struct ZigzagTable {
    values: Vec<BigInt>,
}

impl ZigzagTable {
    /// Fill the table via the boustrophedon triangle: `T(0,0) = 1`,
    /// `T(n,0) = 0` and `T(n,k) = T(n,k-1) + T(n-1,n-k)`; then
    /// `A_n = T(n,n)`.
    pub fn up_to(max: usize) -> ZigzagTable {
        let mut values = Vec::with_capacity(max + 1);
        let mut row: Vec<BigInt> = vec![BigInt::one()];
        values.push(BigInt::one()); // A_0
        for n in 1..=max {
            let mut next: Vec<BigInt> = Vec::with_capacity(n + 1);
            next.push(BigInt::zero());
            for k in 1..=n {
                let t = next[k - 1].clone() + &row[n - k];
                next.push(t);
            }
            values.push(next[n].clone());
            row = next;
        }
        ZigzagTable { values }
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, k: usize) -> &BigInt {
        &self.values[k]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// Single zigzag number `A_k`.
pub fn zigzag(k: usize) -> BigInt {
    ZigzagTable::up_to(k).get(k).clone()
}

/// Closed form for `a_i` of the family member on `n` vertices.
///
/// - path:     `C(n, i) - C(n, i-1)`
/// - cycle:    `C(n, i)` when `2i < n`, half the central binomial
///             `C(2i, i)/2` when `2i = n` (and 1 for the empty graph)
/// - complete: `C(n, 2i) * A_{2i}`
/// - star:     `C(n-1, 2i-1) * A_{2i-1}` for `i >= 1`, and 1 for `i = 0`
///
/// Requires `0 <= i <= floor(n/2)`. The cycle column is defined for all
/// `n >= 0` even though cycle *graphs* need `n = 0` or `n >= 3`; the `n = 1,
/// 2` rows degenerate to the single-vertex and single-edge values.
pub fn closed_form_a(family: GraphFamily, n: usize, i: usize) -> Result<BigInt> {
    if i > n / 2 {
        return Err(Error::domain(format!(
            "closed_form_a({}, {n}, {i}) needs 0 <= i <= floor(n/2) = {}",
            family.name(),
            n / 2
        )));
    }
    Ok(match family {
        GraphFamily::Path => catalan_triangle(n, i)?,
        GraphFamily::Cycle => {
            if n == 0 {
                BigInt::one()
            } else if 2 * i < n {
                binomial(n, i as isize)
            } else {
                binomial(2 * i, i as isize) / BigInt::from(2)
            }
        }
        GraphFamily::Complete => binomial(n, 2 * i as isize) * zigzag(2 * i),
        GraphFamily::Star => {
            if i == 0 {
                BigInt::one()
            } else {
                binomial(n - 1, 2 * i as isize - 1) * zigzag(2 * i - 1)
            }
        }
    })
}

/// Full closed-form a-vector `[a_0, ..., a_{floor(n/2)}]`.
pub fn closed_form_a_vector(family: GraphFamily, n: usize) -> Result<Vec<BigInt>> {
    (0..=n / 2).map(|i| closed_form_a(family, n, i)).collect()
}

/// Closed form for the alternating total `b = Σ (-1)^i a_i` of the family
/// member on `n` vertices. Zero for even `n >= 2`; for odd `n = 2m + 1`:
///
/// - path:     `(-1)^m Catalan(m)`
/// - cycle:    `(-1)^m C(2m, m)`
/// - complete: `(-1)^m A_{2m+1}`
/// - star:     `(-1)^m A_{2m}`
///
/// and 1 for the empty graph (`n = 0`).
pub fn closed_form_b(family: GraphFamily, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    if n % 2 == 0 {
        return BigInt::zero();
    }
    let m = (n - 1) / 2;
    let magnitude = match family {
        GraphFamily::Path => catalan(m),
        GraphFamily::Cycle => binomial(2 * m, m as isize),
        GraphFamily::Complete => zigzag(2 * m + 1),
        GraphFamily::Star => zigzag(2 * m),
    };
    if m % 2 == 0 {
        magnitude
    } else {
        -magnitude
    }
}
