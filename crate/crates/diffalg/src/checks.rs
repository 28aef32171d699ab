//! The executable invariant suite.
//!
//! Every structural theorem the crate relies on is restated here as an
//! exact, finite check against one differential algebra: the polar
//! operators collapse after three applications, constants form a unital
//! subalgebra, the covector module is a genuine bimodule, differentials
//! obey the Leibniz rule with the constants as kernel, the double dual
//! splits as V ⊕ N with N the annihilator of the forms (computed twice,
//! independently), the restriction map factors through the quotient by N,
//! and both reflexivity criteria agree. Checks are reported in a fixed
//! order with a witness message on failure; a check that cannot run
//! because an earlier stage failed is reported as failed, never silently
//! skipped.

use crate::algebra::Algebra;
use crate::derivation::{
    der_basis, polar_of_derivations, polar_of_elements, DiffAlgebra,
};
use crate::duality::{differential_coords, CovectorModule, DoubleDual, DualityDefect};
use crate::linalg::{Matrix, Subspace};
use crate::rat::Rat;
use crate::reflexivity::{
    beta_kernel, build_r_plus, check_free_basis, factor_beta, regular_covectors,
    FreeBasisVerdict,
};
use num::{One, Zero};

/// Outcome of one named invariant check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
}

impl CheckResult {
    fn pass(name: &'static str, details: impl Into<String>) -> Self {
        CheckResult {
            name,
            passed: true,
            details: details.into(),
        }
    }

    fn fail(name: &'static str, details: impl Into<String>) -> Self {
        CheckResult {
            name,
            passed: false,
            details: details.into(),
        }
    }
}

/// Fixed order of the full suite.
pub const SUITE_NAMES: &[&str] = &[
    "polar-triple-collapse",
    "polar-of-derivations-is-unital-subalgebra",
    "polar-of-elements-is-lie-closed",
    "derivation-module-polar-closed",
    "derivation-module-scalar-closure",
    "covector-module-bimodule-actions",
    "differential-leibniz",
    "differential-kernel-is-constants",
    "forms-submodule-stable",
    "double-dual-center-actions",
    "evaluation-embedding-injective",
    "projection-retracts-embedding",
    "double-dual-splits",
    "kernel-matches-form-annihilator",
    "reflexivity-two-routes-agree",
    "restriction-kernel-matches",
    "forms-are-regular",
    "regular-dual-retraction",
    "semisimple-implies-reflexive",
    "free-basis-certificate",
];

pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.passed)
}

fn unit_vec(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    v
}

/// Sample subspaces of the algebra for polar round-trips.
fn element_subsets(alg: &Algebra) -> Vec<Subspace> {
    let n = alg.dim();
    let mut out = vec![
        Subspace::zero(n),
        Subspace::spanned_by(n, &[alg.unit_coords().to_vec()]),
        Subspace::full(n),
    ];
    for i in 0..n.min(2) {
        out.push(Subspace::spanned_by(n, &[unit_vec(n, i)]));
    }
    out
}

/// Sample subspaces of the derivation space for polar round-trips.
fn derivation_subsets(alg: &Algebra, da: &DiffAlgebra) -> Vec<Subspace> {
    let nn = alg.dim() * alg.dim();
    let mut out = vec![Subspace::zero(nn), der_basis(alg), da.vspace().clone()];
    if da.dim_v() > 0 {
        out.push(Subspace::spanned_by(
            nn,
            &[da.vspace().basis_vector(0).to_vec()],
        ));
    }
    out
}

/// Runs the complete invariant suite against one differential algebra.
pub fn run_suite(da: &DiffAlgebra) -> Vec<CheckResult> {
    let mut results = Vec::new();
    let alg = da.algebra().clone();
    let n = alg.dim();

    // ---- polar layer ----
    {
        let name = "polar-triple-collapse";
        let mut failure = None;
        for (idx, s) in element_subsets(&alg).iter().enumerate() {
            let sc = polar_of_elements(&alg, s);
            let scc = polar_of_derivations(&alg, &sc);
            let sccc = polar_of_elements(&alg, &scc);
            if sccc != sc {
                failure = Some(format!("element subset #{idx} breaks the collapse"));
                break;
            }
        }
        if failure.is_none() {
            for (idx, w) in derivation_subsets(&alg, da).iter().enumerate() {
                let wc = polar_of_derivations(&alg, w);
                let wcc = polar_of_elements(&alg, &wc);
                let wccc = polar_of_derivations(&alg, &wcc);
                if wccc != wc {
                    failure = Some(format!("derivation subset #{idx} breaks the collapse"));
                    break;
                }
            }
        }
        results.push(match failure {
            None => CheckResult::pass(name, "polar of polar of polar equals polar"),
            Some(msg) => CheckResult::fail(name, msg),
        });
    }

    {
        let name = "polar-of-derivations-is-unital-subalgebra";
        let mut failure = None;
        'outer: for (idx, w) in derivation_subsets(&alg, da).iter().enumerate() {
            let p = polar_of_derivations(&alg, w);
            if !p.contains(alg.unit_coords()) {
                failure = Some(format!("polar of derivation subset #{idx} misses the unit"));
                break;
            }
            for u in p.basis_vectors() {
                for v in p.basis_vectors() {
                    if !p.contains(&alg.mul_coords(u, v)) {
                        failure =
                            Some(format!("polar of derivation subset #{idx} is not closed"));
                        break 'outer;
                    }
                }
            }
        }
        results.push(match failure {
            None => CheckResult::pass(name, "contains the unit and is multiplicatively closed"),
            Some(msg) => CheckResult::fail(name, msg),
        });
    }

    {
        let name = "polar-of-elements-is-lie-closed";
        let mut failure = None;
        'outer: for (idx, s) in element_subsets(&alg).iter().enumerate() {
            let w = polar_of_elements(&alg, s);
            let endos: Vec<Matrix> = w
                .basis_vectors()
                .map(|f| Matrix::from_flat(n, n, f))
                .collect();
            for a in &endos {
                for b in &endos {
                    let bracket = a.mul(b).sub(&b.mul(a));
                    if !w.contains(&bracket.flatten_row_major()) {
                        failure = Some(format!(
                            "bracket escapes the polar of element subset #{idx}"
                        ));
                        break 'outer;
                    }
                }
            }
        }
        results.push(match failure {
            None => CheckResult::pass(name, "closed under the commutator bracket"),
            Some(msg) => CheckResult::fail(name, msg),
        });
    }

    {
        let name = "derivation-module-polar-closed";
        let c = polar_of_derivations(&alg, da.vspace());
        let v_again = polar_of_elements(&alg, &c);
        let ok = &c == da.constants() && &v_again == da.vspace();
        results.push(if ok {
            CheckResult::pass(name, "V equals its double polar and C is its polar")
        } else {
            CheckResult::fail(name, "double polar does not return the stored module")
        });
    }

    {
        let name = "derivation-module-scalar-closure";
        let mut failure = None;
        'outer: for s in 0..da.center().dim() {
            let left = alg.left_mul_matrix(da.center().basis_vector(s));
            for i in 0..da.dim_v() {
                let product = left.mul(da.v_endo(i)).flatten_row_major();
                match da.vspace().coordinates_of(&product) {
                    Some(coords) if coords == da.z_action(s, i) => {}
                    Some(_) => {
                        failure = Some(format!(
                            "stored expansion of z_{s}*v_{i} disagrees with recomputation"
                        ));
                        break 'outer;
                    }
                    None => {
                        failure = Some(format!("z_{s}*v_{i} escapes the module"));
                        break 'outer;
                    }
                }
            }
        }
        results.push(match failure {
            None => CheckResult::pass(name, "center multiples stay in V with the stored table"),
            Some(msg) => CheckResult::fail(name, msg),
        });
    }

    // ---- covector module ----
    let cm = match CovectorModule::build(da) {
        Ok(cm) => cm,
        Err(defect) => {
            results.push(CheckResult::fail(
                "covector-module-bimodule-actions",
                defect.to_string(),
            ));
            mark_unevaluated(&mut results);
            return results;
        }
    };

    {
        let name = "covector-module-bimodule-actions";
        let mut failure = None;
        'outer: for a in 0..n {
            let ea = unit_vec(n, a);
            // matrix route must agree with the pointwise action
            for (mu, omega) in cm.vplus().basis_vectors().enumerate() {
                let col: Vec<Rat> = (0..cm.dim())
                    .map(|nu| cm.left_action(a).at(nu, mu).clone())
                    .collect();
                if cm.vplus().from_coordinates(&col) != cm.act_left(&ea, omega) {
                    failure = Some(format!("left action matrix wrong at basis element {a}"));
                    break 'outer;
                }
                let col: Vec<Rat> = (0..cm.dim())
                    .map(|nu| cm.right_action(a).at(nu, mu).clone())
                    .collect();
                if cm.vplus().from_coordinates(&col) != cm.act_right(&ea, omega) {
                    failure = Some(format!("right action matrix wrong at basis element {a}"));
                    break 'outer;
                }
            }
            // (a omega) b = a (omega b) as matrices
            for b in 0..n {
                let lhs = cm.right_action(b).mul(cm.left_action(a));
                let rhs = cm.left_action(a).mul(cm.right_action(b));
                if lhs != rhs {
                    failure = Some(format!("actions fail to commute for pair ({a}, {b})"));
                    break 'outer;
                }
            }
        }
        results.push(match failure {
            None => CheckResult::pass(name, "both actions preserve the module and commute"),
            Some(msg) => CheckResult::fail(name, msg),
        });
    }

    {
        let name = "differential-leibniz";
        let mut failure = None;
        'outer: for a in 0..n {
            let d_a = differential_coords(da, &unit_vec(n, a));
            for b in 0..n {
                let ab = alg.mul_coords(&unit_vec(n, a), &unit_vec(n, b));
                let lhs = differential_coords(da, &ab);
                let d_b = differential_coords(da, &unit_vec(n, b));
                let rhs: Vec<Rat> = cm
                    .act_right(&unit_vec(n, b), &d_a)
                    .iter()
                    .zip(cm.act_left(&unit_vec(n, a), &d_b))
                    .map(|(x, y)| x + y)
                    .collect();
                if lhs != rhs {
                    failure = Some(format!("product rule fails on basis pair ({a}, {b})"));
                    break 'outer;
                }
            }
        }
        results.push(match failure {
            None => CheckResult::pass(name, "d(ab) = da*b + a*db on every basis pair"),
            Some(msg) => CheckResult::fail(name, msg),
        });
    }

    {
        let name = "differential-kernel-is-constants";
        let m = da.dim_v();
        let rows: Vec<Vec<Rat>> = (0..m * n)
            .map(|row| {
                (0..n)
                    .map(|f| differential_coords(da, &unit_vec(n, f))[row].clone())
                    .collect()
            })
            .collect();
        let kernel = Subspace::kernel_of(n, &rows);
        results.push(if &kernel == da.constants() {
            CheckResult::pass(name, "elements with zero differential are the constants")
        } else {
            CheckResult::fail(
                name,
                format!(
                    "kernel has dimension {} but the constants have dimension {}",
                    kernel.dim(),
                    da.constants().dim()
                ),
            )
        });
    }

    {
        let name = "forms-submodule-stable";
        let mut failure = None;
        if !cm.vplus().contains_subspace(cm.forms()) {
            failure = Some("forms are not covectors".to_string());
        } else {
            'outer: for t in 0..n {
                let e = unit_vec(n, t);
                for omega in cm.forms().basis_vectors() {
                    if !cm.forms().contains(&cm.act_left(&e, omega))
                        || !cm.forms().contains(&cm.act_right(&e, omega))
                    {
                        failure = Some(format!("basis element {t} moves a form outside"));
                        break 'outer;
                    }
                }
            }
        }
        results.push(match failure {
            None => CheckResult::pass(name, "the form module absorbs both actions"),
            Some(msg) => CheckResult::fail(name, msg),
        });
    }

    // ---- double dual ----
    let dd = match DoubleDual::build(da, &cm) {
        Ok(dd) => dd,
        Err(defect) => {
            let name = match defect {
                DualityDefect::CenterActionEscapes { .. } => "double-dual-center-actions",
                DualityDefect::EmbeddingEscapes { .. }
                | DualityDefect::EmbeddingNotInjective { .. } => "evaluation-embedding-injective",
                _ => "projection-retracts-embedding",
            };
            results.push(CheckResult::fail(name, defect.to_string()));
            mark_unevaluated(&mut results);
            return results;
        }
    };

    {
        let name = "double-dual-center-actions";
        let mut failure = None;
        'outer: for (s, z) in da.center().basis_vectors().enumerate() {
            for (kappa, w) in dd.vcross().basis_vectors().enumerate() {
                // pointwise z*w and w*z agree for central z
                let mut left_table = Vec::with_capacity(w.len());
                let mut right_table = Vec::with_capacity(w.len());
                for mu in 0..cm.dim() {
                    left_table.extend(alg.mul_coords(z, &w[mu * n..(mu + 1) * n]));
                    right_table.extend(alg.mul_coords(&w[mu * n..(mu + 1) * n], z));
                }
                if left_table != right_table {
                    failure = Some(format!(
                        "center element {s} acts differently from the two sides on w_{kappa}"
                    ));
                    break 'outer;
                }
                // matrix route agrees and stays inside
                let col: Vec<Rat> = (0..dd.dim())
                    .map(|nu| dd.center_action(s).at(nu, kappa).clone())
                    .collect();
                if dd.vcross().from_coordinates(&col) != left_table {
                    failure = Some(format!("center action matrix wrong at ({s}, {kappa})"));
                    break 'outer;
                }
            }
        }
        // bilinearity through a different evaluation path
        if failure.is_none() {
            'bilinear: for (kappa, w) in dd.vcross().basis_vectors().enumerate() {
                for t in 0..n {
                    for mu in 0..cm.dim() {
                        let moved: Vec<Rat> = (0..cm.dim())
                            .map(|nu| cm.left_action(t).at(nu, mu).clone())
                            .collect();
                        let lhs = dd.evaluate(&alg, w, &moved);
                        let rhs = alg.mul_coords(&unit_vec(n, t), &w[mu * n..(mu + 1) * n]);
                        if lhs != rhs {
                            failure =
                                Some(format!("w_{kappa} is not left-bilinear at ({t}, {mu})"));
                            break 'bilinear;
                        }
                    }
                }
            }
        }
        results.push(match failure {
            None => CheckResult::pass(name, "central scalars act consistently on both sides"),
            Some(msg) => CheckResult::fail(name, msg),
        });
    }

    {
        let name = "evaluation-embedding-injective";
        let rank = dd.j_matrix().rank();
        results.push(if rank == da.dim_v() {
            CheckResult::pass(name, format!("embedding has full rank {rank}"))
        } else {
            CheckResult::fail(
                name,
                format!("rank {rank} is below the module dimension {}", da.dim_v()),
            )
        });
    }

    {
        let name = "projection-retracts-embedding";
        let product = dd.pi_matrix().mul(dd.j_matrix());
        results.push(if product == Matrix::identity(da.dim_v()) {
            CheckResult::pass(name, "contraction inverts evaluation on the module")
        } else {
            CheckResult::fail(name, "the composite is not the identity")
        });
    }

    {
        let name = "double-dual-splits";
        let idem = dd.idempotent();
        let image = dd.image_of_vectors();
        let meet = image.intersect(dd.n_space());
        let ok = idem.mul(&idem) == idem
            && image.dim() + dd.n_space().dim() == dd.dim()
            && meet.is_zero();
        results.push(if ok {
            CheckResult::pass(
                name,
                format!(
                    "dim {} = {} (image) + {} (kernel), idempotent verified",
                    dd.dim(),
                    image.dim(),
                    dd.n_space().dim()
                ),
            )
        } else {
            CheckResult::fail(name, "the direct-sum bookkeeping fails")
        });
    }

    {
        let name = "kernel-matches-form-annihilator";
        match dd.annihilator_of_forms(&cm) {
            Ok(ann) => results.push(if &ann == dd.n_space() {
                CheckResult::pass(name, "two independent systems give the same subspace")
            } else {
                CheckResult::fail(
                    name,
                    format!(
                        "annihilator dim {} vs kernel dim {}",
                        ann.dim(),
                        dd.n_space().dim()
                    ),
                )
            }),
            Err(defect) => results.push(CheckResult::fail(name, defect.to_string())),
        }
    }

    // ---- reflexivity ----
    let r = regular_covectors(&cm, &dd);

    {
        let name = "reflexivity-two-routes-agree";
        let by_regulars = &r == cm.vplus();
        let by_kernel = dd.n_space().is_zero();
        results.push(if by_regulars == by_kernel {
            CheckResult::pass(
                name,
                format!(
                    "reflexive = {} by both the closure and the kernel criterion",
                    by_kernel
                ),
            )
        } else {
            CheckResult::fail(
                name,
                format!("closure criterion says {by_regulars}, kernel criterion says {by_kernel}"),
            )
        });
    }

    let rd = match build_r_plus(da, &cm, &dd, &r) {
        Ok(rd) => rd,
        Err(defect) => {
            results.push(CheckResult::fail(
                "restriction-kernel-matches",
                defect.to_string(),
            ));
            mark_unevaluated(&mut results);
            return results;
        }
    };

    {
        let name = "restriction-kernel-matches";
        let kernel = beta_kernel(&dd, &rd);
        results.push(if &kernel == dd.n_space() {
            CheckResult::pass(name, "restriction kernel equals the retraction kernel")
        } else {
            CheckResult::fail(
                name,
                format!(
                    "restriction kernel dim {} vs retraction kernel dim {}",
                    kernel.dim(),
                    dd.n_space().dim()
                ),
            )
        });
    }

    {
        let name = "forms-are-regular";
        results.push(if r.contains_subspace(cm.forms()) {
            CheckResult::pass(name, "every differential form is a regular covector")
        } else {
            CheckResult::fail(name, "a form escapes the regular covectors")
        });
    }

    {
        let name = "regular-dual-retraction";
        match factor_beta(da, &dd, &r, &rd) {
            Ok(fact) => {
                let ok = fact.i_mono.mul(&fact.rho) == rd.beta
                    && fact.i_mono.rank() == da.dim_v()
                    && fact.pi_r.mul(&fact.i_mono) == Matrix::identity(da.dim_v());
                results.push(if ok {
                    CheckResult::pass(
                        name,
                        "restriction factors injectively and retracts onto the module",
                    )
                } else {
                    CheckResult::fail(name, "a factorization identity fails")
                });
            }
            Err(defect) => results.push(CheckResult::fail(name, defect.to_string())),
        }
    }

    {
        let name = "semisimple-implies-reflexive";
        let semisimple = alg.is_semisimple();
        let reflexive = dd.n_space().is_zero();
        results.push(if !semisimple || reflexive {
            CheckResult::pass(
                name,
                if semisimple {
                    "semisimple and reflexive"
                } else {
                    "not semisimple; nothing implied"
                },
            )
        } else {
            CheckResult::fail(name, "semisimple algebra with a nonzero annihilator")
        });
    }

    {
        let name = "free-basis-certificate";
        let claimed: Vec<Vec<Rat>> = da.vspace().basis_vectors().map(|v| v.to_vec()).collect();
        match check_free_basis(da, &cm, &dd, &claimed) {
            Ok(FreeBasisVerdict::Free { dual_basis }) => {
                let reflexive = dd.n_space().is_zero();
                results.push(if reflexive {
                    CheckResult::pass(
                        name,
                        format!(
                            "free over the center with a verified dual basis of size {}",
                            dual_basis.len()
                        ),
                    )
                } else {
                    CheckResult::fail(name, "certified free but the pipeline says non-reflexive")
                });
            }
            Ok(other) => {
                let reason = match other {
                    FreeBasisVerdict::NotFree { .. } => "canonical basis is not free over the center",
                    FreeBasisVerdict::NotSpanning { .. } => "center multiples do not span",
                    FreeBasisVerdict::NotInModule { .. } => "claimed vector outside the module",
                    FreeBasisVerdict::Free { .. } => unreachable!(),
                };
                results.push(CheckResult::pass(
                    name,
                    format!("{reason}; no certificate to verify"),
                ));
            }
            Err(defect) => results.push(CheckResult::fail(name, defect.to_string())),
        }
    }

    results
}

/// Marks every suite check that has not produced a result yet as failed;
/// called when an upstream construction error makes the rest unevaluable.
fn mark_unevaluated(results: &mut Vec<CheckResult>) {
    for name in SUITE_NAMES {
        if !results.iter().any(|r| r.name == *name) {
            results.push(CheckResult::fail(
                name,
                "not evaluated: an earlier stage failed",
            ));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{by_name, catalog, random_algebra};
    use crate::rat::rat;

    #[test]
    fn suite_passes_on_small_catalog_entries() {
        for name in ["rationals", "m2", "dual-numbers", "ut2", "group-c2"] {
            let entry = by_name(name).unwrap();
            let da = DiffAlgebra::full(&entry.algebra);
            let results = run_suite(&da);
            assert_eq!(results.len(), SUITE_NAMES.len());
            for (r, expected) in results.iter().zip(SUITE_NAMES) {
                assert_eq!(&r.name, expected);
                assert!(r.passed, "{name}: {} failed: {}", r.name, r.details);
            }
        }
    }

    #[test]
    fn suite_passes_on_a_random_algebra() {
        let alg = random_algebra(11, 6);
        let da = DiffAlgebra::full(&alg);
        assert!(all_passed(&run_suite(&da)));
    }

    #[test]
    fn corrupted_scalar_table_fails_gracefully() {
        let entry = by_name("dual-numbers").unwrap();
        let mut da = DiffAlgebra::full(&entry.algebra);
        da.corrupt_z_action_entry(1, 0, 0, rat(1));
        let results = run_suite(&da);
        assert_eq!(results.len(), SUITE_NAMES.len());
        assert!(!all_passed(&results));
        let scalar = results
            .iter()
            .find(|r| r.name == "derivation-module-scalar-closure")
            .unwrap();
        assert!(!scalar.passed);
        assert!(scalar.details.contains("z_1*v_0"));
    }

    #[test]
    fn every_catalog_entry_is_listed_once() {
        // suite order is deterministic and covers the declared names
        let entry = catalog().into_iter().next().unwrap();
        let da = DiffAlgebra::full(&entry.algebra);
        let names: Vec<&str> = run_suite(&da).iter().map(|r| r.name).collect();
        assert_eq!(names, SUITE_NAMES.to_vec());
    }
}
