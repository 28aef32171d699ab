//! Derivations, the polar correspondence, and differential algebras.
//!
//! A derivation is a linear self-map obeying the Leibniz rule. Subsets of
//! the algebra and subsets of the derivation space are related by a pair of
//! annihilator ("polar") operators that form a Galois connection: the polar
//! of a set of elements is the space of derivations killing them, and the
//! polar of a set of derivations is the subalgebra of elements they kill.
//! A differential algebra is an algebra together with a polar-closed space
//! of derivations; its constants and center then give the scalars acting on
//! everything downstream.

use crate::algebra::{Algebra, AlgebraElement};
use crate::linalg::{Matrix, Subspace};
use crate::rat::Rat;
use num::{One, Zero};
use std::sync::Arc;
use thiserror::Error;

/// A map claimed to be a derivation fails the Leibniz rule on the given
/// basis pair.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("Leibniz rule fails on basis pair ({i}, {j}): v(e{i}*e{j}) != v(e{i})*e{j} + e{i}*v(e{j})")]
pub struct LeibnizViolation {
    pub i: usize,
    pub j: usize,
}

/// A linear self-map of an algebra, acting on coordinate vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearEndo {
    algebra: Arc<Algebra>,
    matrix: Matrix,
}

impl LinearEndo {
    pub fn new(algebra: Arc<Algebra>, matrix: Matrix) -> Self {
        let n = algebra.dim();
        assert_eq!((matrix.rows(), matrix.cols()), (n, n), "endo shape mismatch");
        LinearEndo { algebra, matrix }
    }

    pub fn from_flat(algebra: Arc<Algebra>, flat: &[Rat]) -> Self {
        let n = algebra.dim();
        LinearEndo::new(algebra, Matrix::from_flat(n, n, flat))
    }

    pub fn zero(algebra: Arc<Algebra>) -> Self {
        let n = algebra.dim();
        LinearEndo::new(algebra, Matrix::zero(n, n))
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, coords: &[Rat]) -> Vec<Rat> {
        self.matrix.mul_vec(coords)
    }

    pub fn apply_element(&self, x: &AlgebraElement) -> AlgebraElement {
        self.algebra.element(self.apply(x.coords()))
    }

    /// Row-major coordinates in the n^2-dimensional space of endomorphisms.
    pub fn flatten(&self) -> Vec<Rat> {
        self.matrix.flatten_row_major()
    }

    pub fn compose(&self, inner: &LinearEndo) -> LinearEndo {
        LinearEndo::new(Arc::clone(&self.algebra), self.matrix.mul(&inner.matrix))
    }

    pub fn sub(&self, other: &LinearEndo) -> LinearEndo {
        LinearEndo::new(Arc::clone(&self.algebra), self.matrix.sub(&other.matrix))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// The first basis pair violating the Leibniz rule, if any.
    pub fn leibniz_defect(&self) -> Option<LeibnizViolation> {
        let n = self.algebra.dim();
        let alg = &self.algebra;
        let images: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                let mut e = vec![Rat::zero(); n];
                e[i] = Rat::one();
                self.apply(&e)
            })
            .collect();
        for i in 0..n {
            for j in 0..n {
                let mut ei = vec![Rat::zero(); n];
                ei[i] = Rat::one();
                let mut ej = vec![Rat::zero(); n];
                ej[j] = Rat::one();
                let product: Vec<Rat> = alg.structure_constants()[i][j].clone();
                let lhs = self.apply(&product);
                let mut rhs = alg.mul_coords(&images[i], &ej);
                for (r, x) in rhs.iter_mut().zip(alg.mul_coords(&ei, &images[j])) {
                    *r += x;
                }
                if lhs != rhs {
                    return Some(LeibnizViolation { i, j });
                }
            }
        }
        None
    }
}

/// A [`LinearEndo`] verified to satisfy the Leibniz rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    endo: LinearEndo,
}

impl Derivation {
    pub fn new(endo: LinearEndo) -> Result<Self, LeibnizViolation> {
        match endo.leibniz_defect() {
            Some(defect) => Err(defect),
            None => Ok(Derivation { endo }),
        }
    }

    pub fn from_flat(algebra: Arc<Algebra>, flat: &[Rat]) -> Result<Self, LeibnizViolation> {
        Derivation::new(LinearEndo::from_flat(algebra, flat))
    }

    /// The inner derivation `ad_a : x -> a*x - x*a`.
    pub fn inner(a: &AlgebraElement) -> Self {
        let alg = a.algebra();
        let m = alg.left_mul_matrix(a.coords()).sub(&alg.right_mul_matrix(a.coords()));
        Derivation::new(LinearEndo::new(Arc::clone(alg), m))
            .expect("commutator maps always satisfy the Leibniz rule")
    }

    pub fn endo(&self) -> &LinearEndo {
        &self.endo
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        self.endo.algebra()
    }

    pub fn apply(&self, coords: &[Rat]) -> Vec<Rat> {
        self.endo.apply(coords)
    }

    pub fn flatten(&self) -> Vec<Rat> {
        self.endo.flatten()
    }

    /// `[u, v] = uv - vu`; the commutator of derivations is a derivation.
    pub fn bracket(&self, other: &Derivation) -> Derivation {
        let uv = self.endo.compose(&other.endo);
        let vu = other.endo.compose(&self.endo);
        Derivation::new(uv.sub(&vu))
            .expect("commutator of derivations satisfies the Leibniz rule")
    }
}

/// The action `(a, v) -> av` with `(av)(b) = a * v(b)`: left multiplication
/// composed after the map. The result is generally NOT a derivation; it is
/// one when `a` is central.
pub fn element_action(a: &AlgebraElement, v: &Derivation) -> LinearEndo {
    let left = a.algebra().left_mul_matrix(a.coords());
    LinearEndo::new(
        Arc::clone(a.algebra()),
        left.mul(v.endo().matrix()),
    )
}

/// All derivations of the algebra, as a subspace of flattened
/// endomorphisms: the kernel of the Leibniz system
/// `v(e_i e_j) - v(e_i) e_j - e_i v(e_j) = 0` over all basis pairs.
pub fn der_basis(alg: &Algebra) -> Subspace {
    let n = alg.dim();
    let c = alg.structure_constants();
    let mut rows = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = vec![Rat::zero(); n * n];
                // v(e_i e_j)_k = sum_l c[i][j][l] M[k][l]
                for l in 0..n {
                    if !c[i][j][l].is_zero() {
                        row[k * n + l] += &c[i][j][l];
                    }
                }
                // (v(e_i) e_j)_k = sum_p M[p][i] c[p][j][k]
                for p in 0..n {
                    if !c[p][j][k].is_zero() {
                        row[p * n + i] -= &c[p][j][k];
                    }
                }
                // (e_i v(e_j))_k = sum_q M[q][j] c[i][q][k]
                for q in 0..n {
                    if !c[i][q][k].is_zero() {
                        row[q * n + j] -= &c[i][q][k];
                    }
                }
                rows.push(row);
            }
        }
    }
    Subspace::kernel_of(n * n, &rows)
}

/// Span of the inner derivations `ad_{e_i}`.
pub fn inner_derivations(alg: &Arc<Algebra>) -> Subspace {
    let n = alg.dim();
    let vectors: Vec<Vec<Rat>> = (0..n)
        .map(|i| Derivation::inner(&alg.basis_element(i)).flatten())
        .collect();
    Subspace::spanned_by(n * n, &vectors)
}

/// Polar of a set of elements: the derivations (within all of Der A)
/// vanishing on the given subspace of the algebra.
pub fn polar_of_elements(alg: &Algebra, elements: &Subspace) -> Subspace {
    let n = alg.dim();
    assert_eq!(elements.ambient_dim(), n, "polar input must live in the algebra");
    let der = der_basis(alg);
    // v(s)_k = sum_q M[k][q] s_q = 0 for every s in the span and every k
    let mut rows = Vec::with_capacity(elements.dim() * n);
    for s in elements.basis_vectors() {
        for k in 0..n {
            let mut row = vec![Rat::zero(); n * n];
            for (q, sq) in s.iter().enumerate() {
                if !sq.is_zero() {
                    row[k * n + q] = sq.clone();
                }
            }
            rows.push(row);
        }
    }
    der.intersect(&Subspace::kernel_of(n * n, &rows))
}

/// Polar of a set of derivations: the elements killed by every map in the
/// given subspace of flattened endomorphisms.
pub fn polar_of_derivations(alg: &Algebra, derivations: &Subspace) -> Subspace {
    let n = alg.dim();
    assert_eq!(
        derivations.ambient_dim(),
        n * n,
        "polar input must live in the endomorphism space"
    );
    let mut rows = Vec::with_capacity(derivations.dim() * n);
    for w in derivations.basis_vectors() {
        for k in 0..n {
            rows.push(w[k * n..(k + 1) * n].to_vec());
        }
    }
    Subspace::kernel_of(n, &rows)
}

/// An algebra equipped with a polar-closed space of derivations `V`, its
/// constants `C` (the elements killed by all of `V`), the center `Z`, and
/// the expansion table of the center action on the basis of `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffAlgebra {
    algebra: Arc<Algebra>,
    vspace: Subspace,
    center: Subspace,
    constants: Subspace,
    v_endos: Vec<Matrix>,
    /// `z_action[s][i]` = coefficients of `z_s * v_i` in the basis of `V`.
    z_action: Vec<Vec<Vec<Rat>>>,
}

impl DiffAlgebra {
    /// Closes the seed under the double polar and assembles the package.
    /// Any subspace of derivations is admissible; the closure `seed^cc` is
    /// what becomes `V`.
    pub fn from_seed(algebra: &Arc<Algebra>, seed: &Subspace) -> Self {
        let constants_of_seed = polar_of_derivations(algebra, seed);
        DiffAlgebra::from_constants(algebra, &constants_of_seed)
    }

    /// Builds the differential algebra with `V` = polar of the given
    /// subspace of elements. The result is automatically polar-closed.
    pub fn from_constants(algebra: &Arc<Algebra>, elements: &Subspace) -> Self {
        let vspace = polar_of_elements(algebra, elements);
        let constants = polar_of_derivations(algebra, &vspace);
        let center = algebra.center();
        let n = algebra.dim();
        let v_endos: Vec<Matrix> = vspace
            .basis_vectors()
            .map(|flat| Matrix::from_flat(n, n, flat))
            .collect();
        let z_action = center
            .basis_vectors()
            .map(|s| {
                let left = algebra.left_mul_matrix(s);
                v_endos
                    .iter()
                    .map(|m| {
                        vspace
                            .coordinates_of(&left.mul(m).flatten_row_major())
                            .expect("the center action must preserve a polar-closed module")
                    })
                    .collect()
            })
            .collect();
        DiffAlgebra {
            algebra: Arc::clone(algebra),
            vspace,
            center,
            constants,
            v_endos,
            z_action,
        }
    }

    /// The differential algebra on the full derivation space.
    pub fn full(algebra: &Arc<Algebra>) -> Self {
        let der = der_basis(algebra);
        DiffAlgebra::from_seed(algebra, &der)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    /// The derivation module `V`, in flattened-endomorphism coordinates.
    pub fn vspace(&self) -> &Subspace {
        &self.vspace
    }

    pub fn center(&self) -> &Subspace {
        &self.center
    }

    pub fn constants(&self) -> &Subspace {
        &self.constants
    }

    pub fn dim_v(&self) -> usize {
        self.vspace.dim()
    }

    /// The i-th basis vector of `V` as a matrix acting on coordinates.
    pub fn v_endo(&self, i: usize) -> &Matrix {
        &self.v_endos[i]
    }

    /// Expansion of `z_s * v_i` in the basis of `V`.
    pub fn z_action(&self, s: usize, i: usize) -> &[Rat] {
        &self.z_action[s][i]
    }

    /// Test hook: deliberately corrupt one entry of the center-action
    /// table, so downstream consistency checks can demonstrate detection
    /// of a broken scalar action.
    #[doc(hidden)]
    pub fn corrupt_z_action_entry(&mut self, s: usize, i: usize, k: usize, value: Rat) {
        self.z_action[s][i][k] = value;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{dual_numbers, matrix_algebra, upper_triangular};
    use crate::rat::rat;

    fn e(n: usize, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); n];
        v[i] = Rat::one();
        v
    }

    #[test]
    fn the_field_has_no_derivations() {
        let q = matrix_algebra(1).unwrap();
        assert_eq!(der_basis(&q).dim(), 0);
    }

    #[test]
    fn matrix_algebra_derivations_are_inner() {
        let a = matrix_algebra(2).unwrap();
        let der = der_basis(&a);
        assert_eq!(der.dim(), 3);
        let inner = inner_derivations(&a);
        assert_eq!(inner.dim(), 3);
        assert_eq!(der, inner);
    }

    #[test]
    fn dual_number_derivations_scale_the_nilpotent() {
        let a = dual_numbers();
        let der = der_basis(&a);
        assert_eq!(der.dim(), 1);
        // the canonical generator is x * d/dx: kills 1, fixes x
        let v = Derivation::from_flat(Arc::clone(&a), der.basis_vector(0)).unwrap();
        assert_eq!(v.apply(&e(2, 0)), e(2, 0).iter().map(|_| rat(0)).collect::<Vec<_>>());
        assert_eq!(v.apply(&e(2, 1)), e(2, 1));
    }

    #[test]
    fn derivations_kill_the_unit() {
        for alg in [
            matrix_algebra(2).unwrap(),
            dual_numbers(),
            upper_triangular(2).unwrap(),
        ] {
            let der = der_basis(&alg);
            for flat in der.basis_vectors() {
                let v = Derivation::from_flat(Arc::clone(&alg), flat).unwrap();
                assert!(v.apply(alg.unit_coords()).iter().all(|x| x.is_zero()));
            }
        }
    }

    #[test]
    fn leibniz_violation_is_reported_with_its_pair() {
        let a = matrix_algebra(2).unwrap();
        // transposition-like map: not a derivation of M2
        let m = Matrix::identity(4);
        match Derivation::new(LinearEndo::new(Arc::clone(&a), m)) {
            Err(LeibnizViolation { i, j }) => {
                assert!(i < 4 && j < 4);
            }
            Ok(_) => panic!("the identity map is not a derivation"),
        }
    }

    #[test]
    fn bracket_is_alternating_and_jacobi() {
        let a = matrix_algebra(2).unwrap();
        let der = der_basis(&a);
        let vs: Vec<Derivation> = der
            .basis_vectors()
            .map(|f| Derivation::from_flat(Arc::clone(&a), f).unwrap())
            .collect();
        for v in &vs {
            assert!(v.bracket(v).endo().is_zero());
        }
        for u in &vs {
            for v in &vs {
                for w in &vs {
                    let lhs = u.bracket(&v.bracket(w));
                    let mid = v.bracket(&w.bracket(u));
                    let rhs = w.bracket(&u.bracket(v));
                    let total = lhs
                        .endo()
                        .matrix()
                        .add(mid.endo().matrix())
                        .add(rhs.endo().matrix());
                    assert!(total.is_zero(), "Jacobi identity");
                }
            }
        }
    }

    #[test]
    fn bracket_of_inner_is_inner_of_commutator() {
        let a = matrix_algebra(2).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let x = a.basis_element(i);
                let y = a.basis_element(j);
                let lhs = Derivation::inner(&x).bracket(&Derivation::inner(&y));
                let xy = &x * &y;
                let yx = &y * &x;
                let rhs = Derivation::inner(&(&xy - &yx));
                assert_eq!(lhs.endo().matrix(), rhs.endo().matrix());
            }
        }
    }

    #[test]
    fn polar_of_unit_is_everything_polar_of_all_is_nothing() {
        let a = matrix_algebra(2).unwrap();
        let der = der_basis(&a);
        let unit_line = Subspace::spanned_by(4, &[a.unit_coords().to_vec()]);
        assert_eq!(polar_of_elements(&a, &unit_line), der);
        assert_eq!(polar_of_elements(&a, &Subspace::full(4)).dim(), 0);
    }

    #[test]
    fn polar_of_derivations_recovers_constants() {
        let a = matrix_algebra(2).unwrap();
        let der = der_basis(&a);
        let c = polar_of_derivations(&a, &der);
        assert_eq!(c.dim(), 1);
        assert!(c.contains(a.unit_coords()));

        let d = dual_numbers();
        let c = polar_of_derivations(&d, &der_basis(&d));
        assert_eq!(c.dim(), 1);
        assert!(c.contains(d.unit_coords()));

        // empty condition: polar of the zero space is the whole algebra
        assert_eq!(
            polar_of_derivations(&a, &Subspace::zero(16)),
            Subspace::full(4)
        );
    }

    #[test]
    fn triple_polar_collapse_for_elements() {
        let a = upper_triangular(2).unwrap();
        let n = a.dim();
        let subsets = [
            Subspace::zero(n),
            Subspace::spanned_by(n, &[e(n, 1)]),
            Subspace::spanned_by(n, &[a.unit_coords().to_vec(), e(n, 2)]),
            Subspace::full(n),
        ];
        for s in &subsets {
            let sc = polar_of_elements(&a, s);
            let scc = polar_of_derivations(&a, &sc);
            let sccc = polar_of_elements(&a, &scc);
            assert_eq!(sccc, sc);
        }
    }

    #[test]
    fn triple_polar_collapse_for_derivations() {
        let a = matrix_algebra(2).unwrap();
        let der = der_basis(&a);
        let single = Subspace::spanned_by(16, &[der.basis_vector(0).to_vec()]);
        for w in [Subspace::zero(16), single, der.clone()] {
            let wc = polar_of_derivations(&a, &w);
            let wcc = polar_of_elements(&a, &wc);
            let wccc = polar_of_derivations(&a, &wcc);
            assert_eq!(wccc, wc);
        }
    }

    #[test]
    fn full_diff_algebra_is_closed() {
        let a = matrix_algebra(2).unwrap();
        let da = DiffAlgebra::full(&a);
        assert_eq!(da.vspace(), &der_basis(&a));
        assert_eq!(da.constants().dim(), 1);
        // V = C^c and C = V^c
        assert_eq!(&polar_of_elements(&a, da.constants()), da.vspace());
        assert_eq!(&polar_of_derivations(&a, da.vspace()), da.constants());
    }

    #[test]
    fn zero_seed_collapses_v() {
        let a = matrix_algebra(2).unwrap();
        let da = DiffAlgebra::from_seed(&a, &Subspace::zero(16));
        assert_eq!(da.dim_v(), 0);
        assert_eq!(da.constants().dim(), 4);
    }

    #[test]
    fn seed_and_constants_routes_agree() {
        let a = dual_numbers();
        for c0 in [
            Subspace::zero(2),
            Subspace::spanned_by(2, &[e(2, 1)]),
            Subspace::full(2),
        ] {
            let via_constants = DiffAlgebra::from_constants(&a, &c0);
            let via_seed = DiffAlgebra::from_seed(&a, &polar_of_elements(&a, &c0));
            assert_eq!(via_constants, via_seed);
        }
    }

    #[test]
    fn single_inner_seed_closes_to_a_module() {
        let a = matrix_algebra(2).unwrap();
        let ad = Derivation::inner(&a.basis_element(0)); // ad_{E11}
        let seed = Subspace::spanned_by(16, &[ad.flatten()]);
        let da = DiffAlgebra::from_seed(&a, &seed);
        // the closure contains the seed and is closed under double polar
        assert!(da.vspace().contains(&ad.flatten()));
        let again = DiffAlgebra::from_seed(&a, da.vspace());
        assert_eq!(again.vspace(), da.vspace());
        // frozen by the independent double-polar computation: ad_{E11}
        // already generates a closed 1-dimensional module
        assert_eq!(da.dim_v(), 1);
    }

    #[test]
    fn center_action_table_is_consistent() {
        let a = dual_numbers();
        let da = DiffAlgebra::full(&a);
        assert_eq!(da.center().dim(), 2);
        assert_eq!(da.dim_v(), 1);
        for s in 0..2 {
            for i in 0..1 {
                let coeffs = da.z_action(s, i);
                // oracle: expand the product directly
                let left = a.left_mul_matrix(da.center().basis_vector(s));
                let prod = left.mul(da.v_endo(i)).flatten_row_major();
                assert_eq!(da.vspace().from_coordinates(coeffs), prod);
            }
        }
    }

    #[test]
    fn element_action_is_leibniz_only_for_central_elements() {
        let a = matrix_algebra(2).unwrap();
        let v = Derivation::inner(&a.basis_element(2)); // ad_{E21}
        // unit acts as the identity
        let same = element_action(&a.unit_element(), &v);
        assert_eq!(same.matrix(), v.endo().matrix());
        assert!(same.leibniz_defect().is_none());
        // a central multiple stays a derivation
        let central = a.unit_element().scale(&rat(5));
        assert!(element_action(&central, &v).leibniz_defect().is_none());
        // a non-central multiple generally does not
        let skew = element_action(&a.basis_element(1), &v); // E12 * ad_{E21}
        assert!(skew.leibniz_defect().is_some());
    }
}
