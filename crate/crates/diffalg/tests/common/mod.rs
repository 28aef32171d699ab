//! Independent oracles for the acceptance tests.
//!
//! Everything here is deliberately written from scratch in plain
//! textbook style — no code is shared with the library's elimination
//! engine — so that agreement between the two is evidence, not
//! tautology.

// textbook elimination reads more plainly with explicit index loops
#![allow(clippy::needless_range_loop)]

use diffalg::algebra::Algebra;
use diffalg::rat::Rat;
use num::{One, Zero};

/// Rank by forward Gaussian elimination with exact division.
pub fn oracle_rank(mut rows: Vec<Vec<Rat>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    for col in 0..cols {
        // find a pivot row at or below `rank`
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank][col].clone();
        for r in (rank + 1)..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &lead;
            for c in col..cols {
                let delta = &factor * &rows[rank][c];
                rows[r][c] = &rows[r][c] - &delta;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Dimension of the solution space of a homogeneous system.
pub fn oracle_nullity(rows: &[Vec<Rat>], cols: usize) -> usize {
    cols - oracle_rank(rows.to_vec())
}

/// Whether `target` lies in the row space of `rows`.
pub fn oracle_in_span(rows: &[Vec<Rat>], target: &[Rat]) -> bool {
    let base = oracle_rank(rows.to_vec());
    let mut extended = rows.to_vec();
    extended.push(target.to_vec());
    oracle_rank(extended) == base
}

/// Coefficients expressing `target` as a combination of `basis` vectors,
/// by textbook Gauss-Jordan on the transposed augmented system. Free
/// coefficients default to zero; returns None when inconsistent.
pub fn oracle_coords(basis: &[Vec<Rat>], target: &[Rat]) -> Option<Vec<Rat>> {
    let k = basis.len();
    if k == 0 {
        return target.iter().all(Zero::is_zero).then(Vec::new);
    }
    let ambient = basis[0].len();
    let mut m: Vec<Vec<Rat>> = (0..ambient)
        .map(|j| {
            let mut row: Vec<Rat> = basis.iter().map(|b| b[j].clone()).collect();
            row.push(target[j].clone());
            row
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0;
    for col in 0..k {
        let Some(p) = (rank..ambient).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let lead = m[rank][col].clone();
        for r in 0..ambient {
            if r != rank && !m[r][col].is_zero() {
                let factor = &m[r][col] / &lead;
                for c in col..=k {
                    let delta = &factor * &m[rank][c];
                    m[r][c] = &m[r][c] - &delta;
                }
            }
        }
        pivots.push((rank, col));
        rank += 1;
        if rank == ambient {
            break;
        }
    }
    for r in rank..ambient {
        if !m[r][k].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); k];
    for (r, c) in pivots {
        x[c] = &m[r][k] / &m[r][c];
    }
    Some(x)
}

/// The Leibniz constraint system for derivations, rebuilt directly from
/// the structure constants. A matrix M with entries m[k][q] (unknown
/// k*n+q when flattened row-major, acting by (M a)_k = sum_q m[k][q] a_q)
/// is a derivation iff for every basis pair (i, j) and output index k
///   sum_l c[i][j][l] m[k][l] = sum_p m[p][i] c[p][j][k]
///                            + sum_q m[q][j] c[i][q][k],
/// which is d(e_i e_j) = d(e_i) e_j + e_i d(e_j) read off coordinatewise.
pub fn oracle_leibniz_rows(alg: &Algebra) -> Vec<Vec<Rat>> {
    let n = alg.dim();
    let c = alg.structure_constants();
    let mut rows = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = vec![Rat::zero(); n * n];
                // d(e_i e_j)_k = sum_l c[i][j][l] * m[k][l]
                for l in 0..n {
                    if !c[i][j][l].is_zero() {
                        row[k * n + l] = &row[k * n + l] + &c[i][j][l];
                    }
                }
                // minus (d(e_i) e_j)_k = sum_p m[p][i] c[p][j][k]
                for p in 0..n {
                    if !c[p][j][k].is_zero() {
                        row[p * n + i] = &row[p * n + i] - &c[p][j][k];
                    }
                }
                // minus (e_i d(e_j))_k = sum_q m[q][j] c[i][q][k]
                for q in 0..n {
                    if !c[i][q][k].is_zero() {
                        row[q * n + j] = &row[q * n + j] - &c[i][q][k];
                    }
                }
                rows.push(row);
            }
        }
    }
    rows
}

/// Oracle dimension of the derivation space.
pub fn oracle_der_dim(alg: &Algebra) -> usize {
    let n = alg.dim();
    oracle_nullity(&oracle_leibniz_rows(alg), n * n)
}

/// Oracle multiplication of coordinate vectors via the raw constants.
pub fn oracle_mul(alg: &Algebra, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = alg.dim();
    let c = alg.structure_constants();
    let mut out = vec![Rat::zero(); n];
    for i in 0..n {
        if a[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if b[j].is_zero() {
                continue;
            }
            let scale = &a[i] * &b[j];
            for k in 0..n {
                if !c[i][j][k].is_zero() {
                    out[k] = &out[k] + &(&scale * &c[i][j][k]);
                }
            }
        }
    }
    out
}

/// Applies a flattened endomorphism (row-major n x n) to a coordinate
/// vector, independent of the library's matrix type.
pub fn oracle_apply(n: usize, flat: &[Rat], v: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); n];
    for k in 0..n {
        for q in 0..n {
            if !flat[k * n + q].is_zero() && !v[q].is_zero() {
                out[k] = &out[k] + &(&flat[k * n + q] * &v[q]);
            }
        }
    }
    out
}

/// Checks the Leibniz identity for one flattened endomorphism on one
/// basis pair, going through the raw structure constants only.
pub fn oracle_is_derivation(alg: &Algebra, flat: &[Rat]) -> bool {
    let n = alg.dim();
    for i in 0..n {
        for j in 0..n {
            let mut e_i = vec![Rat::zero(); n];
            e_i[i] = Rat::one();
            let mut e_j = vec![Rat::zero(); n];
            e_j[j] = Rat::one();
            let product = oracle_mul(alg, &e_i, &e_j);
            let lhs = oracle_apply(n, flat, &product);
            let d_i = oracle_apply(n, flat, &e_i);
            let d_j = oracle_apply(n, flat, &e_j);
            let rhs: Vec<Rat> = oracle_mul(alg, &d_i, &e_j)
                .iter()
                .zip(oracle_mul(alg, &e_i, &d_j))
                .map(|(x, y)| x + &y)
                .collect();
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}
