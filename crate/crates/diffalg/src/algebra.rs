//! Finite-dimensional associative unital algebras over the rationals,
//! presented by structure constants.
//!
//! A presentation stores `c[i][j][k]` = coefficient of `e_k` in the product
//! `e_i * e_j`, together with the coordinates of the unit. Everything the
//! rest of the crate does — derivations, covector modules, double duals —
//! reduces to finite linear systems read off these constants.

use crate::linalg::{Matrix, RowReducer, Subspace};
use crate::rat::{format_rational, Rat};
use num::{One, Signed, Zero};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Malformed presentation data (wrong lengths); checked at construction.
/// The dimension is the number of basis names.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("unit vector has {got} coordinates, expected {expected}")]
    UnitLength { expected: usize, got: usize },
    #[error("structure constant table is not {expected}x{expected}x{expected}")]
    ConstantTable { expected: usize },
}

/// An algebraic law that the structure constants fail to satisfy.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureDefect {
    #[error("associativity fails on basis triple ({i}, {j}, {k}): (e{i}*e{j})*e{k} != e{i}*(e{j}*e{k})")]
    NonAssociative { i: usize, j: usize, k: usize },
    #[error("declared unit is not a left unit on basis element {index}")]
    NotLeftUnit { index: usize },
    #[error("declared unit is not a right unit on basis element {index}")]
    NotRightUnit { index: usize },
}

/// Arithmetic attempted between elements of different algebras.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("elements belong to different algebras")]
pub struct AlgebraMismatch;

/// An associative unital algebra over Q given by structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    basis_names: Vec<String>,
    unit: Vec<Rat>,
    constants: Vec<Vec<Vec<Rat>>>,
}

impl Algebra {
    /// Builds an algebra after checking the table shapes. Algebraic laws
    /// (associativity, unit law) are checked separately by [`validate`];
    /// construction does not assume them.
    ///
    /// [`validate`]: Algebra::validate
    pub fn new(
        basis_names: Vec<String>,
        unit: Vec<Rat>,
        constants: Vec<Vec<Vec<Rat>>>,
    ) -> Result<Arc<Self>, ShapeError> {
        let dim = basis_names.len();
        if unit.len() != dim {
            return Err(ShapeError::UnitLength {
                expected: dim,
                got: unit.len(),
            });
        }
        let square = constants.len() == dim
            && constants
                .iter()
                .all(|row| row.len() == dim && row.iter().all(|cell| cell.len() == dim));
        if !square {
            return Err(ShapeError::ConstantTable { expected: dim });
        }
        Ok(Arc::new(Algebra {
            dim,
            basis_names,
            unit,
            constants,
        }))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn unit_coords(&self) -> &[Rat] {
        &self.unit
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<Rat>>] {
        &self.constants
    }

    /// Product in coordinates: `(a*b)_k = sum a_i b_j c[i][j][k]`.
    pub fn mul_coords(&self, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        assert_eq!(a.len(), self.dim, "left factor has wrong dimension");
        assert_eq!(b.len(), self.dim, "right factor has wrong dimension");
        let mut out = vec![Rat::zero(); self.dim];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai * bj;
                for (k, t) in self.constants[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] += &c * t;
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication `x -> a*x` in the algebra basis.
    pub fn left_mul_matrix(&self, a: &[Rat]) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim);
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for (k, t) in self.constants[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        let v = m.at(k, j) + ai * t;
                        m.set(k, j, v);
                    }
                }
            }
        }
        m
    }

    /// Matrix of right multiplication `x -> x*a` in the algebra basis.
    pub fn right_mul_matrix(&self, a: &[Rat]) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim);
        for i in 0..self.dim {
            for (j, aj) in a.iter().enumerate() {
                if aj.is_zero() {
                    continue;
                }
                for (k, t) in self.constants[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        let v = m.at(k, i) + aj * t;
                        m.set(k, i, v);
                    }
                }
            }
        }
        m
    }

    /// Checks associativity on every basis triple and the two-sided unit
    /// law, reporting the first violation found.
    pub fn validate(&self) -> Result<(), StructureDefect> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij: Vec<Rat> = self.constants[i][j].clone();
                for k in 0..n {
                    // (e_i e_j) e_k with e_i(e_j e_k)
                    let jk: &[Rat] = &self.constants[j][k];
                    let mut left = vec![Rat::zero(); n];
                    for (l, c) in ij.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for (m, t) in self.constants[l][k].iter().enumerate() {
                            if !t.is_zero() {
                                left[m] += c * t;
                            }
                        }
                    }
                    let mut right = vec![Rat::zero(); n];
                    for (l, c) in jk.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for (m, t) in self.constants[i][l].iter().enumerate() {
                            if !t.is_zero() {
                                right[m] += c * t;
                            }
                        }
                    }
                    if left != right {
                        return Err(StructureDefect::NonAssociative { i, j, k });
                    }
                }
            }
        }
        for index in 0..n {
            let mut e = vec![Rat::zero(); n];
            e[index] = Rat::one();
            if self.mul_coords(&self.unit, &e) != e {
                return Err(StructureDefect::NotLeftUnit { index });
            }
            if self.mul_coords(&e, &self.unit) != e {
                return Err(StructureDefect::NotRightUnit { index });
            }
        }
        Ok(())
    }

    /// The center `Z = { z : z*e_t = e_t*z for every basis element }`,
    /// computed as the kernel of the stacked commutator system.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let mut rows = Vec::with_capacity(n * n);
        for t in 0..n {
            for k in 0..n {
                // coefficient of z_j in (z*e_t - e_t*z)_k
                let row: Vec<Rat> = (0..n)
                    .map(|j| &self.constants[j][t][k] - &self.constants[t][j][k])
                    .collect();
                rows.push(row);
            }
        }
        Subspace::kernel_of(n, &rows)
    }

    /// The radical, i.e. the kernel of the trace form
    /// `T(x, y) = trace(L_x L_y)`. Over a field of characteristic zero
    /// this kernel is exactly the nilpotent radical (Dickson's criterion).
    pub fn radical(&self) -> Subspace {
        let n = self.dim;
        let left: Vec<Matrix> = (0..n)
            .map(|i| {
                let mut e = vec![Rat::zero(); n];
                e[i] = Rat::one();
                self.left_mul_matrix(&e)
            })
            .collect();
        let mut gram = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let mut tr = Rat::zero();
                for k in 0..n {
                    for l in 0..n {
                        let a = left[i].at(k, l);
                        if !a.is_zero() {
                            let b = left[j].at(l, k);
                            if !b.is_zero() {
                                tr += a * b;
                            }
                        }
                    }
                }
                row.push(tr);
            }
            gram.push(row);
        }
        Subspace::kernel_of(n, &gram)
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical().is_zero()
    }

    /// Smallest unital subalgebra containing the given generators:
    /// span-and-multiply until the dimension stops growing.
    pub fn subalgebra_closure(&self, generators: &[Vec<Rat>]) -> Subspace {
        let mut red = RowReducer::new(self.dim);
        red.absorb(self.unit.clone());
        for g in generators {
            red.absorb(g.clone());
        }
        loop {
            let current: Vec<Vec<Rat>> = red.rows().to_vec();
            let before = red.rank();
            for a in &current {
                for b in &current {
                    red.absorb(self.mul_coords(a, b));
                }
            }
            if red.rank() == before {
                return Subspace::from_reducer(red);
            }
        }
    }

    /// Renders coordinates as a signed combination of named basis elements.
    pub fn format_element(&self, coords: &[Rat]) -> String {
        let mut out = String::new();
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c < &Rat::zero() { "-" } else { "+" };
            if out.is_empty() {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if mag.is_one() {
                out.push_str(&self.basis_names[i]);
            } else {
                out.push_str(&format!("{}*{}", format_rational(&mag), self.basis_names[i]));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn element(self: &Arc<Self>, coords: Vec<Rat>) -> AlgebraElement {
        assert_eq!(coords.len(), self.dim, "coordinate length mismatch");
        AlgebraElement {
            algebra: Arc::clone(self),
            coords,
        }
    }

    pub fn basis_element(self: &Arc<Self>, i: usize) -> AlgebraElement {
        let mut coords = vec![Rat::zero(); self.dim];
        coords[i] = Rat::one();
        self.element(coords)
    }

    pub fn unit_element(self: &Arc<Self>) -> AlgebraElement {
        self.element(self.unit.clone())
    }
}

/// An element of a specific [`Algebra`], carrying its parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    algebra: Arc<Algebra>,
    coords: Vec<Rat>,
}

impl AlgebraElement {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    fn same_parent(&self, other: &AlgebraElement) -> Result<(), AlgebraMismatch> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || *self.algebra == *other.algebra {
            Ok(())
        } else {
            Err(AlgebraMismatch)
        }
    }

    pub fn checked_mul(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraMismatch> {
        self.same_parent(other)?;
        Ok(self
            .algebra
            .element(self.algebra.mul_coords(&self.coords, &other.coords)))
    }

    pub fn checked_add(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraMismatch> {
        self.same_parent(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(self.algebra.element(coords))
    }

    pub fn checked_sub(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraMismatch> {
        self.same_parent(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(self.algebra.element(coords))
    }

    pub fn scale(&self, c: &Rat) -> AlgebraElement {
        self.algebra
            .element(self.coords.iter().map(|x| x * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rat::is_zero)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.algebra.format_element(&self.coords))
    }
}

impl std::ops::Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_mul(rhs).expect("algebra mismatch in product")
    }
}

impl std::ops::Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_add(rhs).expect("algebra mismatch in sum")
    }
}

impl std::ops::Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_sub(rhs).expect("algebra mismatch in difference")
    }
}
