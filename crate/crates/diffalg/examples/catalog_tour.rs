//! A tour of the built-in catalog: every entry is validated, its
//! invariants are computed from scratch, and the results are printed as
//! a table alongside the frozen expectations.
//!
//! Run with: cargo run --example catalog_tour

use diffalg::catalog::catalog;
use diffalg::derivation::{der_basis, DiffAlgebra};
use diffalg::reflexivity::reflexivity_report;

fn main() {
    println!(
        "{:<12} {:>4} {:>7} {:>8} {:>5} {:>5} {:>5} {:>4} {:>10}",
        "name", "dim", "center", "radical", "der", "V+", "Vx", "N", "reflexive"
    );
    for entry in catalog() {
        let alg = &entry.algebra;
        alg.validate().expect("catalog entries are associative");

        let der = der_basis(alg);
        let da = DiffAlgebra::full(alg);
        let report = reflexivity_report(&da).expect("construction is consistent");

        println!(
            "{:<12} {:>4} {:>7} {:>8} {:>5} {:>5} {:>5} {:>4} {:>10}",
            entry.name,
            alg.dim(),
            alg.center().dim(),
            alg.radical().dim(),
            der.dim(),
            report.covectors.dim(),
            report.double_dual.dim(),
            report.double_dual.n_space().dim(),
            report.is_reflexive,
        );

        // The frozen expectations document each entry; recomputation must
        // agree with them.
        let expected = entry.expected.as_ref().expect("catalog entries are documented");
        assert_eq!(der.dim(), expected.derivations, "{}", entry.name);
        assert_eq!(alg.center().dim(), expected.center, "{}", entry.name);
        assert_eq!(alg.radical().dim(), expected.radical, "{}", entry.name);
        assert_eq!(report.is_reflexive, expected.reflexive, "{}", entry.name);
    }
    println!("\nall catalog entries match their frozen expectations");
}
