//! Dense matrices over the rationals with exact elimination.
//!
//! The elimination engine is [`RowReducer`], an incremental reduced
//! row-echelon maintainer. Constraint systems in this crate are tall and
//! sparse, so rows are absorbed one at a time and inner loops skip zero
//! entries; rows that are dependent on what has already been seen cost
//! little.

use crate::rat::{rat, Rat};
use num::{One, Zero};
use std::fmt;

/// Row-major dense matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Rat>>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![vec![Rat::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.data[i][i] = Rat::one();
        }
        m
    }

    /// Builds from explicit rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rat>>) -> Self {
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "ragged rows: expected width {cols}"
        );
        Matrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    /// Convenience constructor from small integers, mostly for tests.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&n| rat(n)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r][c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r]
    }

    pub fn row_vecs(&self) -> &[Vec<Rat>] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(Rat::is_zero))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.data[i][j].is_zero() {
                    t.data[j][i] = self.data[i][j].clone();
                }
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        let mut out = vec![Rat::zero(); self.rows];
        for (o, row) in out.iter_mut().zip(&self.data) {
            for (k, x) in v.iter().enumerate() {
                if !x.is_zero() && !row[k].is_zero() {
                    *o += &row[k] * x;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !other.data[i][j].is_zero() {
                    out.data[i][j] += &other.data[i][j];
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !other.data[i][j].is_zero() {
                    out.data[i][j] -= &other.data[i][j];
                }
            }
        }
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix::from_rows(self.cols, data)
    }

    /// Entries in row-major order, e.g. for treating an endomorphism
    /// matrix as a single coordinate vector.
    pub fn flatten_row_major(&self) -> Vec<Rat> {
        self.data.iter().flat_map(|r| r.iter().cloned()).collect()
    }

    /// Inverse of [`flatten_row_major`][Matrix::flatten_row_major].
    pub fn from_flat(rows: usize, cols: usize, flat: &[Rat]) -> Matrix {
        assert_eq!(flat.len(), rows * cols, "flat length mismatch");
        if cols == 0 {
            return Matrix::zero(rows, 0);
        }
        Matrix::from_rows(cols, flat.chunks(cols).map(|c| c.to_vec()).collect())
    }

    /// Unique reduced row-echelon form; the row space is preserved.
    pub fn rref(&self) -> Matrix {
        let mut red = RowReducer::new(self.cols);
        for row in &self.data {
            red.absorb(row.clone());
        }
        let rank = red.rank();
        let mut m = red.into_matrix();
        // keep the original row count: pad with zero rows
        while m.rows < self.rows.max(rank) {
            m.data.push(vec![Rat::zero(); m.cols]);
            m.rows += 1;
        }
        m
    }

    pub fn rank(&self) -> usize {
        let mut red = RowReducer::new(self.cols);
        for row in &self.data {
            red.absorb(row.clone());
        }
        red.rank()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Rat::one();
        }
        let mut m = self.data.clone();
        let mut sign = Rat::one();
        let mut prev = Rat::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return Rat::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        sign * m[n - 1][n - 1].clone()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.data {
            let cells: Vec<String> = row.iter().map(crate::rat::format_rational).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `dst -= c * src`, skipping zero entries of `src`.
fn row_axpy_sub(dst: &mut [Rat], c: &Rat, src: &[Rat]) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d -= c * s;
        }
    }
}

/// Incremental reduced row-echelon maintainer.
///
/// Invariant after every `absorb`: stored rows have strictly increasing
/// pivot columns, each pivot entry is 1 and is the only nonzero entry in
/// its column.
pub struct RowReducer {
    cols: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl RowReducer {
    pub fn new(cols: usize) -> Self {
        RowReducer {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    /// Reduces `row` against the current basis and inserts the remainder
    /// if it is nonzero. Returns true when the rank grew.
    pub fn absorb(&mut self, mut row: Vec<Rat>) -> bool {
        assert_eq!(row.len(), self.cols, "row width mismatch");
        for (i, &p) in self.pivots.iter().enumerate() {
            if !row[p].is_zero() {
                let c = std::mem::replace(&mut row[p], Rat::zero());
                // pivot entry of rows[i] is 1; subtract c * rows[i]
                for (k, s) in self.rows[i].iter().enumerate() {
                    if k != p && !s.is_zero() {
                        row[k] -= &c * s;
                    }
                }
            }
        }
        let lead = match row.iter().position(|x| !x.is_zero()) {
            Some(l) => l,
            None => return false,
        };
        let inv = row[lead].clone().recip();
        if !inv.is_one() {
            for x in row.iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        for i in 0..self.rows.len() {
            if !self.rows[i][lead].is_zero() {
                let c = self.rows[i][lead].clone();
                row_axpy_sub(&mut self.rows[i], &c, &row);
            }
        }
        let pos = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(pos, lead);
        self.rows.insert(pos, row);
        true
    }

    pub fn into_matrix(self) -> Matrix {
        Matrix::from_rows(self.cols, self.rows)
    }

    /// Basis of `{x : Rx = 0}` for the absorbed row space `R`, one row per
    /// free column, re-canonicalized.
    pub fn kernel_rows(&self) -> Vec<Vec<Rat>> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for f in 0..self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for (i, &p) in self.pivots.iter().enumerate() {
                if !self.rows[i][f].is_zero() {
                    v[p] = -self.rows[i][f].clone();
                }
            }
            out.push(v);
        }
        out
    }
}

/// Exact coefficients `c` with `c^T * basis = target`, or `None` when the
/// target is outside the row space. When the basis rows are dependent an
/// arbitrary representative is returned (free coefficients set to zero).
pub fn solve_in_span(basis: &Matrix, target: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(basis.cols(), target.len(), "target width mismatch");
    let k = basis.rows();
    // augmented transposed system: [basis^T | target]
    let mut red = RowReducer::new(k + 1);
    for (j, t) in target.iter().enumerate() {
        let mut row: Vec<Rat> = (0..k).map(|i| basis.at(i, j).clone()).collect();
        row.push(t.clone());
        red.absorb(row);
    }
    if red.pivots().contains(&k) {
        return None; // inconsistent: pivot in the augmented column
    }
    let mut coeffs = vec![Rat::zero(); k];
    for (i, &p) in red.pivots().iter().enumerate() {
        coeffs[p] = red.rows()[i][k].clone();
    }
    Some(coeffs)
}

/// First index with a nonzero entry, if any.
pub fn leading_index(v: &[Rat]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;
    use proptest::prelude::*;

    #[test]
    fn rref_identity_is_fixed_point() {
        let id = Matrix::identity(2);
        assert_eq!(id.rref(), id);
    }

    #[test]
    fn rref_proportional_rows_collapse() {
        let m = Matrix::from_ints(&[&[2, 4], &[1, 2]]);
        let expect = Matrix::from_ints(&[&[1, 2], &[0, 0]]);
        assert_eq!(m.rref(), expect);
    }

    #[test]
    fn rref_invertible_gives_identity() {
        // deterministic pseudo-random 5x5 with det != 0 checked by the
        // independent Bareiss determinant
        let m = Matrix::from_ints(&[
            &[2, -1, 0, 3, 1],
            &[1, 1, 1, 0, -2],
            &[0, 4, -1, 1, 1],
            &[3, 0, 2, -1, 0],
            &[1, -2, 1, 1, 1],
        ]);
        assert!(!m.det().is_zero());
        assert_eq!(m.rref(), Matrix::identity(5));
    }

    #[test]
    fn det_singular_is_zero() {
        let m = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
        assert!(m.det().is_zero());
    }

    #[test]
    fn det_matches_cofactor_expansion_3x3() {
        let m = Matrix::from_ints(&[&[1, 2, 3], &[0, -1, 4], &[2, 2, 1]]);
        // cofactor oracle: 1*(-1*1-4*2) - 2*(0*1-4*2) + 3*(0*2 - (-1)*2)
        let expect = rat(1) * rat(-9) - rat(2) * rat(-8) + rat(3) * rat(2);
        assert_eq!(m.det(), expect);
    }

    #[test]
    fn kernel_rows_are_killed() {
        let m = Matrix::from_ints(&[&[1, 1, 0]]);
        let mut red = RowReducer::new(3);
        for r in m.row_vecs() {
            red.absorb(r.clone());
        }
        let kernel = red.kernel_rows();
        assert_eq!(kernel.len(), 2);
        for v in &kernel {
            assert!(m.mul_vec(v).iter().all(Rat::is_zero));
        }
    }

    #[test]
    fn solve_in_span_finds_unit_and_zero() {
        let basis = Matrix::from_ints(&[&[1, 2, 0], &[0, 0, 1]]);
        let c = solve_in_span(&basis, &[rat(1), rat(2), rat(0)]).unwrap();
        assert_eq!(c, vec![rat(1), rat(0)]);
        let z = solve_in_span(&basis, &[rat(0), rat(0), rat(0)]).unwrap();
        assert_eq!(z, vec![rat(0), rat(0)]);
    }

    #[test]
    fn solve_in_span_detects_outside_targets() {
        let basis = Matrix::from_ints(&[&[1, 2, 0], &[0, 0, 1]]);
        let target = [rat(0), rat(1), rat(0)];
        assert!(solve_in_span(&basis, &target).is_none());
        // oracle: stacking the target must raise the rank
        let stacked = basis.vstack(&Matrix::from_rows(3, vec![target.to_vec()]));
        assert_eq!(stacked.rank(), basis.rank() + 1);
    }

    #[test]
    fn empty_shapes_are_fine() {
        let m = Matrix::zero(0, 3);
        assert_eq!(m.rref().rows(), 0);
        assert_eq!(m.rank(), 0);
        let m = Matrix::zero(3, 0);
        assert_eq!(m.rank(), 0);
        assert_eq!(Matrix::zero(0, 0).det(), Rat::one());
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-4i64..=4, 1i64..=3).prop_map(|(p, q)| ratio(p, q))
    }

    fn small_matrix(max_dim: usize) -> impl Strategy<Value = Matrix> {
        (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(small_rat(), c), r)
                .prop_map(move |rows| Matrix::from_rows(c, rows))
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in small_matrix(5)) {
            let r = m.rref();
            prop_assert_eq!(r.rref(), r);
        }

        #[test]
        fn rref_preserves_row_space(m in small_matrix(4)) {
            let r = m.rref();
            for row in m.row_vecs() {
                prop_assert!(solve_in_span(&r, row).is_some());
            }
            for row in r.row_vecs() {
                if row.iter().any(|x| !x.is_zero()) {
                    prop_assert!(solve_in_span(&m, row).is_some());
                }
            }
        }

        #[test]
        fn rank_plus_nullity_is_cols(m in small_matrix(5)) {
            let mut red = RowReducer::new(m.cols());
            for row in m.row_vecs() {
                red.absorb(row.clone());
            }
            let nullity = red.kernel_rows().len();
            prop_assert_eq!(red.rank() + nullity, m.cols());
            for v in red.kernel_rows() {
                prop_assert!(m.mul_vec(&v).iter().all(Rat::is_zero));
            }
        }
    }
}
