//! Deciding reflexivity: when is every covector regular, equivalently
//! when does the double dual collapse back onto the module itself?
//!
//! Run with: cargo run --example reflexivity_verdicts

use diffalg::catalog::{by_name, matrix_algebra};
use diffalg::derivation::DiffAlgebra;
use diffalg::reflexivity::{check_free_basis, reflexivity_report, FreeBasisVerdict};
use diffalg::rat::Rat;

fn main() {
    // Three algebras with three different stories.
    for name in ["m2", "dual-numbers", "poly3"] {
        let alg = by_name(name).expect("catalog entry exists").algebra;
        let da = DiffAlgebra::full(&alg);
        let report = reflexivity_report(&da).expect("construction is consistent");

        println!("{name}:");
        println!("  dim V+ = {}", report.covectors.dim());
        println!("  dim R  = {} (regular covectors)", report.r_space.dim());
        println!("  dim N  = {}", report.double_dual.n_space().dim());
        println!("  reflexive: {}", report.is_reflexive);

        // The verdict comes from two independent routes that must agree:
        // R exhausts the covectors iff the annihilator N vanishes.
        assert_eq!(
            report.r_space == *report.covectors.vplus(),
            report.double_dual.n_space().is_zero()
        );

        // Is the canonical module basis free over the center? Freeness
        // forces reflexivity, but not conversely.
        let basis: Vec<Vec<Rat>> = da.vspace().basis_vectors().map(|v| v.to_vec()).collect();
        let verdict = check_free_basis(&da, &report.covectors, &report.double_dual, &basis)
            .expect("construction is consistent");
        match verdict {
            FreeBasisVerdict::Free { dual_basis } => {
                println!("  free over the center; dual basis of size {}", dual_basis.len());
            }
            FreeBasisVerdict::NotFree { relation } => {
                println!("  not free: a nontrivial relation exists");
                for (i, coeffs) in relation.iter().enumerate() {
                    let pretty = alg.format_element(
                        &report_center_to_ambient(&da, coeffs),
                    );
                    if !coeffs.iter().all(num::Zero::is_zero) {
                        println!("    coefficient on v_{i}: {pretty}");
                    }
                }
            }
            FreeBasisVerdict::NotSpanning { spanned_dim } => {
                println!("  center multiples span only dimension {spanned_dim}");
            }
            FreeBasisVerdict::NotInModule { index } => {
                println!("  claimed vector {index} is not in the module");
            }
        }
        println!();
    }

    // The key contrast: Q[x]/(x^3) is reflexive even though its module
    // has no free basis, while M3 is reflexive because its inner
    // derivation basis is free.
    let m3 = matrix_algebra(3).expect("size within bounds");
    let da = DiffAlgebra::full(&m3);
    let report = reflexivity_report(&da).expect("construction is consistent");
    println!(
        "m3: dim V = {}, dim V+ = {}, reflexive: {}",
        da.dim_v(),
        report.covectors.dim(),
        report.is_reflexive
    );
}

/// Expands center coordinates into ambient algebra coordinates.
fn report_center_to_ambient(da: &DiffAlgebra, coeffs: &[Rat]) -> Vec<Rat> {
    da.center().from_coordinates(coeffs)
}
