//! Subspaces of Q^n with a canonical basis.
//!
//! Every subspace is stored as the reduced row-echelon basis of its span,
//! so structural equality of the basis matrices decides equality of
//! subspaces and every construction is deterministic.

use super::matrix::{Matrix, RowReducer};
use crate::rat::Rat;
use num::Zero;

/// A linear subspace of Q^ambient with canonical (RREF) basis rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The zero subspace of Q^ambient.
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zero(0, ambient),
            pivots: Vec::new(),
        }
    }

    /// All of Q^ambient.
    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn spanned_by(ambient: usize, vectors: &[Vec<Rat>]) -> Self {
        let mut red = RowReducer::new(ambient);
        for v in vectors {
            red.absorb(v.clone());
        }
        Subspace::from_reducer(red)
    }

    pub(crate) fn from_reducer(red: RowReducer) -> Self {
        let ambient = red.cols();
        let pivots = red.pivots().to_vec();
        Subspace {
            ambient,
            basis: red.into_matrix(),
            pivots,
        }
    }

    /// Solution space of `rows * x = 0`.
    pub fn kernel_of(ambient: usize, rows: &[Vec<Rat>]) -> Self {
        let mut red = RowReducer::new(ambient);
        for r in rows {
            red.absorb(r.clone());
        }
        // free-column kernel vectors are independent but not echelon-normal;
        // run them through a second reducer for the canonical basis
        Subspace::spanned_by(ambient, &red.kernel_rows())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vector(&self, i: usize) -> &[Rat] {
        self.basis.row(i)
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Rat]> {
        (0..self.dim()).map(|i| self.basis.row(i))
    }

    /// Coefficients of `v` in the canonical basis, or `None` when `v` lies
    /// outside the subspace. Pivot columns of an RREF basis read the
    /// coefficients off directly; a full multiplication then verifies
    /// membership.
    pub fn coordinates_of(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        let coeffs: Vec<Rat> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (r, b) in residual.iter_mut().zip(self.basis.row(i)) {
                if !b.is_zero() {
                    *r -= c * b;
                }
            }
        }
        residual.iter().all(Rat::is_zero).then_some(coeffs)
    }

    /// Reconstructs the ambient vector with the given basis coefficients.
    pub fn from_coordinates(&self, coeffs: &[Rat]) -> Vec<Rat> {
        assert_eq!(coeffs.len(), self.dim(), "coefficient count mismatch");
        let mut v = vec![Rat::zero(); self.ambient];
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (x, b) in v.iter_mut().zip(self.basis.row(i)) {
                if !b.is_zero() {
                    *x += c * b;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.coordinates_of(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        other.basis_vectors().all(|v| self.contains(v))
    }

    /// U + W.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let mut red = RowReducer::new(self.ambient);
        for v in self.basis_vectors() {
            red.absorb(v.to_vec());
        }
        for v in other.basis_vectors() {
            red.absorb(v.to_vec());
        }
        Subspace::from_reducer(red)
    }

    /// U ∩ W via the kernel of the side-by-side coefficient system: a
    /// vector lies in both spans exactly when some coefficient pair
    /// (a, b) satisfies `sum a_i u_i - sum b_j w_j = 0`.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let k = self.dim();
        let l = other.dim();
        if k == 0 || l == 0 {
            return Subspace::zero(self.ambient);
        }
        let mut red = RowReducer::new(k + l);
        for c in 0..self.ambient {
            let mut row = Vec::with_capacity(k + l);
            for i in 0..k {
                row.push(self.basis.at(i, c).clone());
            }
            for j in 0..l {
                row.push(-other.basis.at(j, c).clone());
            }
            red.absorb(row);
        }
        let vectors: Vec<Vec<Rat>> = red
            .kernel_rows()
            .into_iter()
            .map(|ab| self.from_coordinates(&ab[..k]))
            .collect();
        Subspace::spanned_by(self.ambient, &vectors)
    }
}
