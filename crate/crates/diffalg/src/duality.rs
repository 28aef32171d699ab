//! Covectors, differential forms, and the double dual.
//!
//! For a differential algebra (A, V) with center Z, the covector module
//! V⁺ consists of the Z-linear maps V → A. It carries left and right
//! A-actions `(aω)(v) = a·ω(v)` and `(ωa)(v) = ω(v)·a`. Differentials
//! `da : v ↦ v(a)` generate the form module Ω = span{a·d(b)·c}. The double
//! dual V^× consists of the A-bilinear maps V⁺ → A; evaluation embeds V
//! into V^× and the differential-restriction map π retracts it, splitting
//! V^× into a copy of V plus the annihilator N of the forms.
//!
//! Hom spaces are represented by value tables: a map out of a space with
//! basis u_1..u_q into A is the concatenation of the q coordinate vectors
//! of its values, a point of K^(q·n). Every construction below is then the
//! kernel of an explicit linear system over the rationals.

use crate::algebra::{Algebra, AlgebraElement};
use crate::derivation::DiffAlgebra;
use crate::linalg::{Matrix, RowReducer, Subspace};
use crate::rat::Rat;
use num::Zero;
use std::sync::Arc;
use thiserror::Error;

/// A structural identity that the theory guarantees failed to hold while
/// assembling the duality data. This cannot happen for an honestly
/// constructed differential algebra; it is reported (rather than asserted)
/// so that deliberately corrupted inputs surface as diagnosable failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualityDefect {
    #[error("left multiplication by basis element {index} leaves the covector module")]
    LeftActionEscapes { index: usize },
    #[error("right multiplication by basis element {index} leaves the covector module")]
    RightActionEscapes { index: usize },
    #[error("the differential of basis element {index} falls outside the covector module")]
    DifferentialEscapes { index: usize },
    #[error("a differential form falls outside the covector module (form basis index {index})")]
    FormEscapes { index: usize },
    #[error("evaluation at vector basis element {index} is not bilinear on the covector module")]
    EmbeddingEscapes { index: usize },
    #[error("the evaluation embedding has a kernel of dimension {kernel_dim}")]
    EmbeddingNotInjective { kernel_dim: usize },
    #[error("double-dual basis element {index} does not contract to a derivation in V")]
    HatOutsideV { index: usize },
    #[error("center action by basis element {index} leaves the double dual")]
    CenterActionEscapes { index: usize },
}

/// A Z-linear map V → A, stored as its value table: block `i` holds the
/// coordinates of ω(v_i) for the canonical basis v_i of V.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Covector {
    algebra: Arc<Algebra>,
    dim_v: usize,
    values: Vec<Rat>,
}

impl Covector {
    pub fn from_ambient(algebra: Arc<Algebra>, dim_v: usize, values: Vec<Rat>) -> Self {
        assert_eq!(values.len(), dim_v * algebra.dim(), "value table length");
        Covector {
            algebra,
            dim_v,
            values,
        }
    }

    /// The full value table, block `i` = coordinates of ω(v_i).
    pub fn ambient(&self) -> &[Rat] {
        &self.values
    }

    pub fn value_on_basis(&self, i: usize) -> &[Rat] {
        let n = self.algebra.dim();
        &self.values[i * n..(i + 1) * n]
    }

    /// Value on the vector with the given coefficients in the V basis.
    pub fn value_at(&self, coeffs: &[Rat]) -> Vec<Rat> {
        assert_eq!(coeffs.len(), self.dim_v, "coefficient count mismatch");
        let n = self.algebra.dim();
        let mut out = vec![Rat::zero(); n];
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(self.value_on_basis(i)) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Rat::is_zero)
    }
}

/// Value table of the differential `da : v ↦ v(a)` on the basis of V.
pub fn differential_coords(da: &DiffAlgebra, a: &[Rat]) -> Vec<Rat> {
    let mut out = Vec::with_capacity(da.dim_v() * da.algebra().dim());
    for i in 0..da.dim_v() {
        out.extend(da.v_endo(i).mul_vec(a));
    }
    out
}

/// The differential of an algebra element as a covector.
pub fn differential(da: &DiffAlgebra, a: &AlgebraElement) -> Covector {
    Covector::from_ambient(
        Arc::clone(da.algebra()),
        da.dim_v(),
        differential_coords(da, a.coords()),
    )
}

/// The pairing `<v, ω> = ω(v)` for a vector given as a flattened
/// endomorphism lying in V.
pub fn pairing(da: &DiffAlgebra, v_flat: &[Rat], omega: &Covector) -> AlgebraElement {
    let coeffs = da
        .vspace()
        .coordinates_of(v_flat)
        .expect("pairing is defined for vectors in V");
    da.algebra().element(omega.value_at(&coeffs))
}

/// The space of A-bilinear maps into A from a module presented by value
/// tables: `module_dim` basis elements, with the left and right action of
/// each algebra basis element given as matrices in that basis. Returns the
/// kernel of the constraints `w(e_t·u_μ) = e_t·w(u_μ)` and
/// `w(u_μ·e_t) = w(u_μ)·e_t` inside K^(module_dim·n).
pub(crate) fn bilinear_maps(
    alg: &Algebra,
    module_dim: usize,
    left_action: &[Matrix],
    right_action: &[Matrix],
) -> Subspace {
    let n = alg.dim();
    let ambient = module_dim * n;
    let mut reducer = RowReducer::new(ambient);
    for t in 0..n {
        let mut e = vec![Rat::zero(); n];
        e[t] = num::One::one();
        let lt = alg.left_mul_matrix(&e);
        let rt = alg.right_mul_matrix(&e);
        for mu in 0..module_dim {
            for k in 0..n {
                // w(e_t u_mu)_k - (e_t w(u_mu))_k = 0
                let mut row = vec![Rat::zero(); ambient];
                for nu in 0..module_dim {
                    let c = left_action[t].at(nu, mu);
                    if !c.is_zero() {
                        row[nu * n + k] += c;
                    }
                }
                for q in 0..n {
                    let c = lt.at(k, q);
                    if !c.is_zero() {
                        row[mu * n + q] -= c;
                    }
                }
                reducer.absorb(row);

                // w(u_mu e_t)_k - (w(u_mu) e_t)_k = 0
                let mut row = vec![Rat::zero(); ambient];
                for nu in 0..module_dim {
                    let c = right_action[t].at(nu, mu);
                    if !c.is_zero() {
                        row[nu * n + k] += c;
                    }
                }
                for q in 0..n {
                    let c = rt.at(k, q);
                    if !c.is_zero() {
                        row[mu * n + q] -= c;
                    }
                }
                reducer.absorb(row);
            }
        }
    }
    Subspace::spanned_by(ambient, &reducer.kernel_rows())
}

/// The covector module V⁺ with its bimodule actions and the form module Ω.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CovectorModule {
    algebra: Arc<Algebra>,
    dim_v: usize,
    basis: Subspace,
    left_action: Vec<Matrix>,
    right_action: Vec<Matrix>,
    forms: Subspace,
}

impl CovectorModule {
    /// Solves the Z-linearity constraints for V⁺ = Hom_Z(V, A), expands
    /// the two A-actions in the resulting basis, and spans the form module
    /// from the generators `e_r · d(e_f) · e_g`.
    pub fn build(da: &DiffAlgebra) -> Result<Self, DualityDefect> {
        let alg = da.algebra();
        let n = alg.dim();
        let m = da.dim_v();
        let ambient = m * n;

        // Z-linearity: omega(z_s * v_i) = z_s * omega(v_i), expanding the
        // left side through the center-action table of the diff algebra
        let mut rows = Vec::new();
        for s in 0..da.center().dim() {
            let left = alg.left_mul_matrix(da.center().basis_vector(s));
            for i in 0..m {
                let expansion = da.z_action(s, i);
                for k in 0..n {
                    let mut row = vec![Rat::zero(); ambient];
                    for (j, c) in expansion.iter().enumerate() {
                        if !c.is_zero() {
                            row[j * n + k] += c;
                        }
                    }
                    for q in 0..n {
                        let c = left.at(k, q);
                        if !c.is_zero() {
                            row[i * n + q] -= c;
                        }
                    }
                    rows.push(row);
                }
            }
        }
        let basis = Subspace::kernel_of(ambient, &rows);

        let mut module = CovectorModule {
            algebra: Arc::clone(alg),
            dim_v: m,
            basis,
            left_action: Vec::new(),
            right_action: Vec::new(),
            forms: Subspace::zero(ambient),
        };

        // expand a*omega and omega*a in the V+ basis
        for t in 0..n {
            let mut e = vec![Rat::zero(); n];
            e[t] = num::One::one();
            let mut lcols = Vec::with_capacity(module.dim());
            let mut rcols = Vec::with_capacity(module.dim());
            for omega in module.basis.basis_vectors() {
                let image = module.act_left(&e, omega);
                lcols.push(
                    module
                        .basis
                        .coordinates_of(&image)
                        .ok_or(DualityDefect::LeftActionEscapes { index: t })?,
                );
                let image = module.act_right(&e, omega);
                rcols.push(
                    module
                        .basis
                        .coordinates_of(&image)
                        .ok_or(DualityDefect::RightActionEscapes { index: t })?,
                );
            }
            module.left_action.push(columns_to_matrix(module.dim(), &lcols));
            module.right_action.push(columns_to_matrix(module.dim(), &rcols));
        }

        // forms: the span of e_r * d(e_f) * e_g over all basis triples
        let mut generators = Vec::with_capacity(n * n * n);
        for f in 0..n {
            let mut ef = vec![Rat::zero(); n];
            ef[f] = num::One::one();
            let d = differential_coords(da, &ef);
            for r in 0..n {
                let mut er = vec![Rat::zero(); n];
                er[r] = num::One::one();
                let rd = module.act_left(&er, &d);
                for g in 0..n {
                    let mut eg = vec![Rat::zero(); n];
                    eg[g] = num::One::one();
                    generators.push(module.act_right(&eg, &rd));
                }
            }
        }
        module.forms = Subspace::spanned_by(ambient, &generators);
        Ok(module)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    /// The covector module V⁺ in value-table coordinates.
    pub fn vplus(&self) -> &Subspace {
        &self.basis
    }

    /// The form module Ω ⊆ V⁺.
    pub fn forms(&self) -> &Subspace {
        &self.forms
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// Matrix of ω ↦ e_t·ω in the V⁺ basis.
    pub fn left_action(&self, t: usize) -> &Matrix {
        &self.left_action[t]
    }

    /// Matrix of ω ↦ ω·e_t in the V⁺ basis.
    pub fn right_action(&self, t: usize) -> &Matrix {
        &self.right_action[t]
    }

    /// Pointwise left action on a value table: block i becomes a·ω(v_i).
    /// Independent of the expanded action matrices (used to cross-check
    /// them).
    pub fn act_left(&self, a: &[Rat], omega: &[Rat]) -> Vec<Rat> {
        let n = self.algebra.dim();
        let mut out = Vec::with_capacity(omega.len());
        for i in 0..self.dim_v {
            out.extend(self.algebra.mul_coords(a, &omega[i * n..(i + 1) * n]));
        }
        out
    }

    /// Pointwise right action on a value table: block i becomes ω(v_i)·a.
    pub fn act_right(&self, a: &[Rat], omega: &[Rat]) -> Vec<Rat> {
        let n = self.algebra.dim();
        let mut out = Vec::with_capacity(omega.len());
        for i in 0..self.dim_v {
            out.extend(self.algebra.mul_coords(&omega[i * n..(i + 1) * n], a));
        }
        out
    }

    /// The classical dual Hom_Z(V, Z) as a subspace of V⁺: covectors whose
    /// values land in the center.
    pub fn vstar(&self, da: &DiffAlgebra) -> Subspace {
        let n = self.algebra.dim();
        let ambient = self.dim_v * n;
        // the subspace of value tables with every block inside Z
        let mut spanning = Vec::new();
        for i in 0..self.dim_v {
            for z in da.center().basis_vectors() {
                let mut v = vec![Rat::zero(); ambient];
                v[i * n..(i + 1) * n].clone_from_slice(z);
                spanning.push(v);
            }
        }
        self.basis
            .intersect(&Subspace::spanned_by(ambient, &spanning))
    }

    /// Wraps an ambient value table as a covector.
    pub fn covector(&self, values: Vec<Rat>) -> Covector {
        Covector::from_ambient(Arc::clone(&self.algebra), self.dim_v, values)
    }
}

fn columns_to_matrix(rows: usize, cols: &[Vec<Rat>]) -> Matrix {
    let mut m = Matrix::zero(rows, cols.len());
    for (j, col) in cols.iter().enumerate() {
        for (i, x) in col.iter().enumerate() {
            if !x.is_zero() {
                m.set(i, j, x.clone());
            }
        }
    }
    m
}

/// The double dual V^× = A-bilinear maps V⁺ → A, with the evaluation
/// embedding j, the retraction π, and the decomposition data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleDual {
    basis: Subspace,
    j_matrix: Matrix,
    pi_matrix: Matrix,
    n_space: Subspace,
    center_act: Vec<Matrix>,
}

impl DoubleDual {
    /// Solves the bilinearity constraints for V^×, builds `j` (evaluation
    /// at vectors), `π` (contraction against differentials), N = Ker π,
    /// and the center action.
    pub fn build(da: &DiffAlgebra, cm: &CovectorModule) -> Result<Self, DualityDefect> {
        let alg = da.algebra();
        let n = alg.dim();
        let m = da.dim_v();
        let p = cm.dim();
        let ambient = p * n;

        let basis = bilinear_maps(alg, p, &cm.left_action, &cm.right_action);
        let q = basis.dim();

        // j: column i is the table omega_mu |-> omega_mu(v_i)
        let mut j_cols = Vec::with_capacity(m);
        for i in 0..m {
            let mut table = vec![Rat::zero(); ambient];
            for (mu, omega) in cm.vplus().basis_vectors().enumerate() {
                table[mu * n..(mu + 1) * n].clone_from_slice(&omega[i * n..(i + 1) * n]);
            }
            j_cols.push(
                basis
                    .coordinates_of(&table)
                    .ok_or(DualityDefect::EmbeddingEscapes { index: i })?,
            );
        }
        let j_matrix = columns_to_matrix(q, &j_cols);
        if j_matrix.rank() != m {
            return Err(DualityDefect::EmbeddingNotInjective {
                kernel_dim: m - j_matrix.rank(),
            });
        }

        // pi: contract each w against the differentials d(e_f); the map
        // a |-> w(da) is a derivation lying in V and pi reads its
        // coordinates there
        let mut diff_coords = Vec::with_capacity(n);
        for f in 0..n {
            let mut ef = vec![Rat::zero(); n];
            ef[f] = num::One::one();
            diff_coords.push(
                cm.vplus()
                    .coordinates_of(&differential_coords(da, &ef))
                    .ok_or(DualityDefect::DifferentialEscapes { index: f })?,
            );
        }
        let mut pi_cols = Vec::with_capacity(q);
        for (kappa, w) in basis.basis_vectors().enumerate() {
            // endo matrix of a |-> w(da): column f = sum_mu lambda_{f,mu} w_mu
            let mut endo = Matrix::zero(n, n);
            for (f, lambda) in diff_coords.iter().enumerate() {
                for (mu, c) in lambda.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for k in 0..n {
                        let x = &w[mu * n + k];
                        if !x.is_zero() {
                            let v = endo.at(k, f) + c * x;
                            endo.set(k, f, v);
                        }
                    }
                }
            }
            pi_cols.push(
                da.vspace()
                    .coordinates_of(&endo.flatten_row_major())
                    .ok_or(DualityDefect::HatOutsideV { index: kappa })?,
            );
        }
        let pi_matrix = columns_to_matrix(m, &pi_cols);

        // N = Ker pi, mapped back to value-table coordinates
        let mut red = RowReducer::new(q);
        for r in 0..m {
            red.absorb(pi_matrix.row(r).to_vec());
        }
        let n_vectors: Vec<Vec<Rat>> = red
            .kernel_rows()
            .into_iter()
            .map(|kappa_coords| basis.from_coordinates(&kappa_coords))
            .collect();
        let n_space = Subspace::spanned_by(ambient, &n_vectors);

        // center action: s*w has value table block mu = z_s * w(omega_mu)
        let mut center_act = Vec::with_capacity(da.center().dim());
        for (s, z) in da.center().basis_vectors().enumerate() {
            let mut cols = Vec::with_capacity(q);
            for w in basis.basis_vectors() {
                let mut table = Vec::with_capacity(ambient);
                for mu in 0..p {
                    table.extend(alg.mul_coords(z, &w[mu * n..(mu + 1) * n]));
                }
                cols.push(
                    basis
                        .coordinates_of(&table)
                        .ok_or(DualityDefect::CenterActionEscapes { index: s })?,
                );
            }
            center_act.push(columns_to_matrix(q, &cols));
        }

        Ok(DoubleDual {
            basis,
            j_matrix,
            pi_matrix,
            n_space,
            center_act,
        })
    }

    /// V^× in value-table coordinates over the V⁺ basis.
    pub fn vcross(&self) -> &Subspace {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// Matrix of the evaluation embedding j : V → V^× (columns indexed by
    /// the V basis, in V^× coordinates).
    pub fn j_matrix(&self) -> &Matrix {
        &self.j_matrix
    }

    /// Matrix of the retraction π : V^× → V.
    pub fn pi_matrix(&self) -> &Matrix {
        &self.pi_matrix
    }

    /// N = Ker π in value-table coordinates.
    pub fn n_space(&self) -> &Subspace {
        &self.n_space
    }

    /// Matrix of w ↦ z_s·w in the V^× basis.
    pub fn center_action(&self, s: usize) -> &Matrix {
        &self.center_act[s]
    }

    /// The idempotent ϖ = j∘π on V^× coordinates.
    pub fn idempotent(&self) -> Matrix {
        self.j_matrix.mul(&self.pi_matrix)
    }

    /// Im j in value-table coordinates.
    pub fn image_of_vectors(&self) -> Subspace {
        let vectors: Vec<Vec<Rat>> = (0..self.j_matrix.cols())
            .map(|i| {
                let col: Vec<Rat> = (0..self.j_matrix.rows())
                    .map(|r| self.j_matrix.at(r, i).clone())
                    .collect();
                self.basis.from_coordinates(&col)
            })
            .collect();
        Subspace::spanned_by(self.basis.ambient_dim(), &vectors)
    }

    /// The annihilator of the forms inside V^×: bilinear maps vanishing on
    /// every differential form. Computed from the form module directly —
    /// an independent route to the same space as Ker π.
    pub fn annihilator_of_forms(&self, cm: &CovectorModule) -> Result<Subspace, DualityDefect> {
        let n = cm.algebra().dim();
        let p = cm.dim();
        let ambient = p * n;
        let mut rows = Vec::new();
        for (index, form) in cm.forms().basis_vectors().enumerate() {
            let lambda = cm
                .vplus()
                .coordinates_of(form)
                .ok_or(DualityDefect::FormEscapes { index })?;
            for k in 0..n {
                let mut row = vec![Rat::zero(); ambient];
                for (mu, c) in lambda.iter().enumerate() {
                    if !c.is_zero() {
                        row[mu * n + k] = c.clone();
                    }
                }
                rows.push(row);
            }
        }
        Ok(self.basis.intersect(&Subspace::kernel_of(ambient, &rows)))
    }

    /// Evaluates a double-dual element (value table over the V⁺ basis) on
    /// a covector given in V⁺ coordinates.
    pub fn evaluate(&self, alg: &Algebra, w: &[Rat], omega_coords: &[Rat]) -> Vec<Rat> {
        let n = alg.dim();
        let mut out = vec![Rat::zero(); n];
        for (mu, c) in omega_coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(&w[mu * n..(mu + 1) * n]) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
        out
    }
}
