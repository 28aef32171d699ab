//! Regular covectors, the restriction homomorphism, and reflexivity.
//!
//! The annihilator N of the form module singles out the regular covectors
//! R = {ω ∈ V⁺ : w(ω) = 0 for every w ∈ N} — equivalently the double
//! annihilator of Ω. A differential algebra is reflexive when R = V⁺, or
//! equivalently when N = 0; this module computes both sides independently,
//! builds the dual R⁺ of the regular covectors together with the
//! restriction map β : V^× → R⁺, factors β through the quotient by N, and
//! can certify a claimed basis of V as free over the center, which forces
//! the evaluation embedding to be an isomorphism.

use crate::derivation::DiffAlgebra;
use crate::duality::{
    bilinear_maps, differential_coords, CovectorModule, DoubleDual, DualityDefect,
};
use crate::linalg::{solve_in_span, Matrix, RowReducer, Subspace};
use crate::rat::Rat;
use num::{One, Zero};
use thiserror::Error;

/// A structural identity of the regular-covector theory failed. As with
/// [`DualityDefect`], honest inputs never produce these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReflexivityDefect {
    #[error(transparent)]
    Duality(#[from] DualityDefect),
    #[error("regular covector {index} falls outside the covector module")]
    RegularOutsideModule { index: usize },
    #[error("left multiplication by basis element {index} does not preserve the regular covectors")]
    LeftRegularEscapes { index: usize },
    #[error("right multiplication by basis element {index} does not preserve the regular covectors")]
    RightRegularEscapes { index: usize },
    #[error("restriction of double-dual element {index} is not bilinear on the regular covectors")]
    RestrictionEscapes { index: usize },
    #[error("the restriction map does not factor through the quotient by N")]
    FactorizationMismatch,
    #[error("the factor of the restriction map through the quotient is not injective")]
    FactorNotInjective,
    #[error("the differential of basis element {index} is not a regular covector")]
    DifferentialNotRegular { index: usize },
    #[error("contraction of regular-dual element {index} does not land in the derivation module")]
    RegularHatOutsideV { index: usize },
    #[error("the retraction of the regular dual does not invert the monomorphism")]
    RetractionFails,
    #[error("the two reflexivity criteria disagree (regular covectors vs annihilator kernel)")]
    EquivalenceBroken,
    #[error("expansion of basis vector {index} in the claimed free basis failed")]
    ExpansionSolveFails { index: usize },
    #[error("dual covector {index} falls outside the covector module")]
    DualBasisOutsideModule { index: usize },
    #[error("dual covector {index} fails its defining evaluations")]
    DualBasisEvaluation { index: usize },
    #[error("dual covector {index} takes a value outside the center")]
    DualBasisValueOutsideCenter { index: usize },
    #[error("the dual-basis expansion fails on covector module basis element {index}")]
    ExpansionIdentityFails { index: usize },
    #[error("dual covector {index} is not central in the bimodule")]
    DualBasisNotCentral { index: usize },
    #[error("the module is free but the evaluation embedding is not an isomorphism")]
    EmbeddingNotIso,
}

/// R = the covectors annihilated by every element of N; since N is the
/// annihilator of the forms, R is the double annihilator of Ω.
pub fn regular_covectors(cm: &CovectorModule, dd: &DoubleDual) -> Subspace {
    let n = cm.algebra().dim();
    let p = cm.dim();
    // unknowns: coefficients over the V+ basis
    let mut rows = Vec::with_capacity(dd.n_space().dim() * n);
    for w in dd.n_space().basis_vectors() {
        for k in 0..n {
            rows.push((0..p).map(|mu| w[mu * n + k].clone()).collect());
        }
    }
    let coeff_space = Subspace::kernel_of(p, &rows);
    let vectors: Vec<Vec<Rat>> = coeff_space
        .basis_vectors()
        .map(|c| cm.vplus().from_coordinates(c))
        .collect();
    Subspace::spanned_by(cm.vplus().ambient_dim(), &vectors)
}

/// The dual of the regular covectors along with the restriction map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionData {
    /// R⁺: bilinear maps R → A, as value tables over the basis of R.
    pub r_plus: Subspace,
    /// β : V^× → R⁺, restriction of a bilinear map to R.
    pub beta: Matrix,
}

/// Builds R⁺ with the same bilinearity machinery as the double dual (with
/// the actions restricted to R) and the matrix of the restriction map.
pub fn build_r_plus(
    da: &DiffAlgebra,
    cm: &CovectorModule,
    dd: &DoubleDual,
    r: &Subspace,
) -> Result<RestrictionData, ReflexivityDefect> {
    let alg = da.algebra();
    let n = alg.dim();
    let r_dim = r.dim();

    // coordinates of the R basis inside V+, for evaluating restrictions
    let mut lambda = Vec::with_capacity(r_dim);
    for (index, rho) in r.basis_vectors().enumerate() {
        lambda.push(
            cm.vplus()
                .coordinates_of(rho)
                .ok_or(ReflexivityDefect::RegularOutsideModule { index })?,
        );
    }

    // actions restricted to R
    let mut left = Vec::with_capacity(n);
    let mut right = Vec::with_capacity(n);
    for t in 0..n {
        let mut e = vec![Rat::zero(); n];
        e[t] = Rat::one();
        let mut lcols = Vec::with_capacity(r_dim);
        let mut rcols = Vec::with_capacity(r_dim);
        for rho in r.basis_vectors() {
            lcols.push(
                r.coordinates_of(&cm.act_left(&e, rho))
                    .ok_or(ReflexivityDefect::LeftRegularEscapes { index: t })?,
            );
            rcols.push(
                r.coordinates_of(&cm.act_right(&e, rho))
                    .ok_or(ReflexivityDefect::RightRegularEscapes { index: t })?,
            );
        }
        left.push(columns_to_matrix(r_dim, &lcols));
        right.push(columns_to_matrix(r_dim, &rcols));
    }

    let r_plus = bilinear_maps(alg, r_dim, &left, &right);

    // beta: restrict each double-dual basis element to R
    let mut beta_cols = Vec::with_capacity(dd.dim());
    for (index, w) in dd.vcross().basis_vectors().enumerate() {
        let mut table = Vec::with_capacity(r_dim * n);
        for coeffs in &lambda {
            table.extend(dd.evaluate(alg, w, coeffs));
        }
        beta_cols.push(
            r_plus
                .coordinates_of(&table)
                .ok_or(ReflexivityDefect::RestrictionEscapes { index })?,
        );
    }
    let beta = columns_to_matrix(r_plus.dim(), &beta_cols);
    Ok(RestrictionData { r_plus, beta })
}

/// Kernel of the restriction map, in double-dual value-table coordinates.
/// Independent route to the same subspace as N = Ker π.
pub fn beta_kernel(dd: &DoubleDual, rd: &RestrictionData) -> Subspace {
    let q = dd.dim();
    let mut red = RowReducer::new(q);
    for row in 0..rd.beta.rows() {
        red.absorb(rd.beta.row(row).to_vec());
    }
    let vectors: Vec<Vec<Rat>> = red
        .kernel_rows()
        .into_iter()
        .map(|c| dd.vcross().from_coordinates(&c))
        .collect();
    Subspace::spanned_by(dd.vcross().ambient_dim(), &vectors)
}

/// The canonical factorization β = i ∘ ρ of the restriction map through
/// the quotient by N, with the retraction that exhibits the image as a
/// direct summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaFactorization {
    /// ρ : V^× → V^×/N; the quotient is realized as V through the
    /// retraction π, so ρ is π's matrix.
    pub rho: Matrix,
    /// i : V → R⁺, the injective factor with i∘ρ = β.
    pub i_mono: Matrix,
    /// π_R : R⁺ → V, contraction against the differentials inside R;
    /// satisfies π_R ∘ i = identity.
    pub pi_r: Matrix,
}

/// Factors β through the quotient by its kernel and verifies the
/// factorization identities exactly.
pub fn factor_beta(
    da: &DiffAlgebra,
    dd: &DoubleDual,
    r: &Subspace,
    rd: &RestrictionData,
) -> Result<BetaFactorization, ReflexivityDefect> {
    let m = da.dim_v();
    let n = da.algebra().dim();
    let rho = dd.pi_matrix().clone();
    let i_mono = rd.beta.mul(dd.j_matrix());
    if i_mono.mul(&rho) != rd.beta {
        return Err(ReflexivityDefect::FactorizationMismatch);
    }
    if i_mono.rank() != m {
        return Err(ReflexivityDefect::FactorNotInjective);
    }

    // pi_R: contract regular-dual elements against the differentials,
    // which are regular covectors (forms annihilate N)
    let mut diff_in_r = Vec::with_capacity(n);
    for f in 0..n {
        let mut e = vec![Rat::zero(); n];
        e[f] = Rat::one();
        diff_in_r.push(
            r.coordinates_of(&differential_coords(da, &e))
                .ok_or(ReflexivityDefect::DifferentialNotRegular { index: f })?,
        );
    }
    let mut cols = Vec::with_capacity(rd.r_plus.dim());
    for (index, x) in rd.r_plus.basis_vectors().enumerate() {
        let mut endo = Matrix::zero(n, n);
        for (f, coeffs) in diff_in_r.iter().enumerate() {
            for (kappa, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for k in 0..n {
                    let v = &x[kappa * n + k];
                    if !v.is_zero() {
                        let updated = endo.at(k, f) + c * v;
                        endo.set(k, f, updated);
                    }
                }
            }
        }
        cols.push(
            da.vspace()
                .coordinates_of(&endo.flatten_row_major())
                .ok_or(ReflexivityDefect::RegularHatOutsideV { index })?,
        );
    }
    let pi_r = columns_to_matrix(m, &cols);
    if pi_r.mul(&i_mono) != Matrix::identity(m) {
        return Err(ReflexivityDefect::RetractionFails);
    }
    Ok(BetaFactorization { rho, i_mono, pi_r })
}

/// Outcome of checking a claimed free basis of V over the center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FreeBasisVerdict {
    /// The claimed vectors are a free basis; carries the dual covectors
    /// ω^i (value tables over the canonical V basis) with
    /// ω^i(b_k) = δ^i_k · 1.
    Free { dual_basis: Vec<Vec<Rat>> },
    /// A claimed vector does not lie in V.
    NotInModule { index: usize },
    /// The center multiples of the claimed vectors do not span V.
    NotSpanning { spanned_dim: usize },
    /// A nontrivial relation Σ s_i b_i = 0 with center coefficients;
    /// `relation[i]` holds the coordinates of s_i in the algebra.
    NotFree { relation: Vec<Vec<Rat>> },
}

/// Verifies that the claimed vectors form a free basis of V over the
/// center: no nontrivial center-linear relation, and center multiples
/// spanning V. On success the dual basis is constructed and its defining
/// evaluations, the expansion identity ω = Σ ω^i·ω(b_i), the centrality
/// a·ω^i = ω^i·a, and bijectivity of the evaluation embedding are all
/// verified exactly.
pub fn check_free_basis(
    da: &DiffAlgebra,
    cm: &CovectorModule,
    dd: &DoubleDual,
    claimed: &[Vec<Rat>],
) -> Result<FreeBasisVerdict, ReflexivityDefect> {
    let alg = da.algebra();
    let n = alg.dim();
    let m = da.dim_v();
    let k = claimed.len();
    let z = da.center().dim();

    let mut claimed_coords = Vec::with_capacity(k);
    for (index, b) in claimed.iter().enumerate() {
        match da.vspace().coordinates_of(b) {
            Some(c) => claimed_coords.push(c),
            None => return Ok(FreeBasisVerdict::NotInModule { index }),
        }
    }

    // columns of the relation map: (i, alpha) -> flatten(z_alpha * b_i)
    let mut phi = Vec::with_capacity(k * z);
    for b in claimed {
        let endo = Matrix::from_flat(n, n, b);
        for s in da.center().basis_vectors() {
            phi.push(alg.left_mul_matrix(s).mul(&endo).flatten_row_major());
        }
    }

    // freeness: no nonzero sigma with sum sigma_(i,alpha) z_alpha b_i = 0
    let relation_rows: Vec<Vec<Rat>> = (0..n * n)
        .map(|c| phi.iter().map(|col| col[c].clone()).collect())
        .collect();
    let relations = Subspace::kernel_of(k * z, &relation_rows);
    if !relations.is_zero() {
        let sigma = relations.basis_vector(0);
        let relation = (0..k)
            .map(|i| {
                let mut s = vec![Rat::zero(); n];
                for (alpha, zvec) in da.center().basis_vectors().enumerate() {
                    let c = &sigma[i * z + alpha];
                    if !c.is_zero() {
                        for (x, y) in s.iter_mut().zip(zvec) {
                            *x += c * y;
                        }
                    }
                }
                s
            })
            .collect();
        return Ok(FreeBasisVerdict::NotFree { relation });
    }

    // spanning: center multiples of the claimed vectors must fill V
    let span = Subspace::spanned_by(n * n, &phi);
    if &span != da.vspace() {
        return Ok(FreeBasisVerdict::NotSpanning {
            spanned_dim: span.dim(),
        });
    }

    // expansion of each canonical basis vector v_j = sum_i s_ji b_i with
    // center coefficients; unique because the phi columns are independent
    let phi_matrix = Matrix::from_rows(n * n, phi.clone());
    let mut sigma_for = Vec::with_capacity(m);
    for (index, v) in da.vspace().basis_vectors().enumerate() {
        sigma_for.push(
            solve_in_span(&phi_matrix, v)
                .ok_or(ReflexivityDefect::ExpansionSolveFails { index })?,
        );
    }

    // dual covectors: omega^i(v_j) = s_ji, assembled from the center basis
    let mut dual_basis = Vec::with_capacity(k);
    for i in 0..k {
        let mut table = vec![Rat::zero(); m * n];
        for (j, sigma) in sigma_for.iter().enumerate() {
            for (alpha, zvec) in da.center().basis_vectors().enumerate() {
                let c = &sigma[i * z + alpha];
                if c.is_zero() {
                    continue;
                }
                for (slot, x) in table[j * n..(j + 1) * n].iter_mut().zip(zvec) {
                    *slot += c * x;
                }
            }
        }
        dual_basis.push(table);
    }

    for (i, table) in dual_basis.iter().enumerate() {
        if cm.vplus().coordinates_of(table).is_none() {
            return Err(ReflexivityDefect::DualBasisOutsideModule { index: i });
        }
        let omega = cm.covector(table.clone());
        for (kk, coords) in claimed_coords.iter().enumerate() {
            let value = omega.value_at(coords);
            let expected = if i == kk {
                alg.unit_coords().to_vec()
            } else {
                vec![Rat::zero(); n]
            };
            if value != expected {
                return Err(ReflexivityDefect::DualBasisEvaluation { index: i });
            }
        }
        for j in 0..m {
            if !da.center().contains(&table[j * n..(j + 1) * n]) {
                return Err(ReflexivityDefect::DualBasisValueOutsideCenter { index: i });
            }
        }
    }

    // expansion identity: omega = sum_i omega^i * omega(b_i)
    for (mu, omega) in cm.vplus().basis_vectors().enumerate() {
        let cov = cm.covector(omega.to_vec());
        let mut total = vec![Rat::zero(); m * n];
        for (i, table) in dual_basis.iter().enumerate() {
            let a_i = cov.value_at(&claimed_coords[i]);
            for (t, x) in total.iter_mut().zip(cm.act_right(&a_i, table)) {
                *t += x;
            }
        }
        if total != omega {
            return Err(ReflexivityDefect::ExpansionIdentityFails { index: mu });
        }
    }

    // centrality: a * omega^i = omega^i * a for every basis element
    for (i, table) in dual_basis.iter().enumerate() {
        for t in 0..n {
            let mut e = vec![Rat::zero(); n];
            e[t] = Rat::one();
            if cm.act_left(&e, table) != cm.act_right(&e, table) {
                return Err(ReflexivityDefect::DualBasisNotCentral { index: i });
            }
        }
    }

    // a free module makes the evaluation embedding an isomorphism
    if dd.dim() != m || dd.j_matrix().rank() != m {
        return Err(ReflexivityDefect::EmbeddingNotIso);
    }

    Ok(FreeBasisVerdict::Free { dual_basis })
}

/// Everything the reflexivity pipeline produces for one differential
/// algebra, with the two independent criteria cross-checked.
#[derive(Debug, Clone)]
pub struct ReflexivityReport {
    pub covectors: CovectorModule,
    pub double_dual: DoubleDual,
    /// R ⊆ V⁺, the regular covectors.
    pub r_space: Subspace,
    pub restriction: RestrictionData,
    /// Kernel of β in double-dual coordinates; equals N.
    pub beta_kernel: Subspace,
    pub factorization: BetaFactorization,
    pub is_reflexive: bool,
    /// A covector outside R, present exactly when not reflexive.
    pub non_regular_witness: Option<Vec<Rat>>,
    /// Whether the underlying algebra is semisimple (sufficient condition
    /// for reflexivity, not necessary).
    pub semisimple_hint: bool,
}

/// Runs covectors → double dual → regular covectors → restriction map and
/// decides reflexivity by both criteria (R = V⁺ and N = 0), which must
/// agree.
pub fn reflexivity_report(da: &DiffAlgebra) -> Result<ReflexivityReport, ReflexivityDefect> {
    let cm = CovectorModule::build(da)?;
    let dd = DoubleDual::build(da, &cm)?;
    let r = regular_covectors(&cm, &dd);
    let rd = build_r_plus(da, &cm, &dd, &r)?;
    let kernel = beta_kernel(&dd, &rd);
    let fact = factor_beta(da, &dd, &r, &rd)?;

    let by_annihilator = dd.n_space().is_zero();
    let by_regulars = &r == cm.vplus();
    if by_annihilator != by_regulars {
        return Err(ReflexivityDefect::EquivalenceBroken);
    }
    let witness = if by_regulars {
        None
    } else {
        cm.vplus()
            .basis_vectors()
            .find(|omega| !r.contains(omega))
            .map(|omega| omega.to_vec())
    };
    let semisimple_hint = da.algebra().is_semisimple();
    Ok(ReflexivityReport {
        covectors: cm,
        double_dual: dd,
        r_space: r,
        restriction: rd,
        beta_kernel: kernel,
        factorization: fact,
        is_reflexive: by_regulars,
        non_regular_witness: witness,
        semisimple_hint,
    })
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
