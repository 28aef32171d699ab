//! The covector bimodule: maps from the derivation module into the
//! algebra that are linear over the center, with algebra elements acting
//! on both sides.
//!
//! Run with: cargo run --example covectors_and_forms

use diffalg::catalog::matrix_algebra;
use diffalg::derivation::DiffAlgebra;
use diffalg::duality::{differential_coords, CovectorModule};
use diffalg::rat::rat;

fn main() {
    let m2 = matrix_algebra(2).expect("size within bounds");
    let da = DiffAlgebra::full(&m2);
    let cm = CovectorModule::build(&da).expect("construction is consistent");

    // Covectors are stored as value tables: one algebra element per
    // module basis vector. For M2 the module is 3-dimensional and every
    // linear map V -> A is a covector (the center is the scalars), so
    // dim V+ = 3 * 4 = 12.
    println!("M2: dim V = {}", da.dim_v());
    println!("    dim V+ = {}", cm.dim());
    println!("    dim forms = {}", cm.forms().dim());

    // The two actions: (a*w)(v) = a * w(v) and (w*a)(v) = w(v) * a.
    // They commute with each other but differ from one another —
    // the bimodule is genuinely two-sided.
    let e11 = vec![rat(1), rat(0), rat(0), rat(0)];
    let omega = differential_coords(&da, &[rat(0), rat(1), rat(0), rat(0)]); // d(E12)

    let left = cm.act_left(&e11, &omega);
    let right = cm.act_right(&e11, &omega);
    println!("E11 * d(E12) == d(E12) * E11: {}", left == right);
    assert_ne!(left, right, "the two actions differ on this pair");

    // Both results are still covectors: the module is stable.
    assert!(cm.vplus().contains(&left));
    assert!(cm.vplus().contains(&right));
    println!("both products remain covectors");

    // Mixed associativity (a*w)*b = a*(w*b) holds as an exact identity of
    // action matrices.
    for a in 0..m2.dim() {
        for b in 0..m2.dim() {
            let lhs = cm.right_action(b).mul(cm.left_action(a));
            let rhs = cm.left_action(a).mul(cm.right_action(b));
            assert_eq!(lhs, rhs);
        }
    }
    println!("(a*w)*b = a*(w*b) verified for all basis pairs");

    // Differential forms: the sub-bimodule generated by the
    // differentials. For M2 the forms already exhaust the covectors.
    println!(
        "forms coincide with all covectors: {}",
        cm.forms() == cm.vplus()
    );

    // Covectors linear over the whole algebra (not just the center) form
    // the smaller space V*.
    let vstar = cm.vstar(&da);
    println!("    dim V* = {} (A-linear covectors)", vstar.dim());
}
