//! Exact linear algebra over the rationals: matrices, canonical echelon
//! form, kernels, and the subspace lattice.
//!
//! Run with: cargo run --example exact_linalg

use diffalg::linalg::{Matrix, RowReducer, Subspace};
use diffalg::rat::{format_rational, rat, ratio};

fn main() {
    // A 3x3 matrix with fractional entries. All arithmetic is exact:
    // there is no epsilon anywhere in this crate.
    let m = Matrix::from_rows(
        3,
        vec![
            vec![ratio(1, 2), rat(1), rat(0)],
            vec![rat(1), rat(2), rat(0)],
            vec![rat(0), rat(3), ratio(-1, 3)],
        ],
    );
    println!("rank    = {}", m.rank());
    println!("det     = {}", format_rational(&m.det()));

    // The reducer maintains a canonical reduced echelon basis as rows
    // arrive, so equality of row spaces is literal equality of bases.
    let mut reducer = RowReducer::new(4);
    for row in [
        vec![rat(1), rat(2), rat(3), rat(4)],
        vec![rat(2), rat(4), rat(6), rat(8)], // dependent: absorbed as no-op
        vec![rat(0), rat(1), rat(1), rat(0)],
    ] {
        let grew = reducer.absorb(row);
        println!("absorbed a row, rank grew: {grew}");
    }

    // Subspaces are stored by canonical basis, so lattice operations are
    // exact and order-independent.
    let a = Subspace::spanned_by(
        3,
        &[vec![rat(1), rat(0), rat(0)], vec![rat(0), rat(1), rat(0)]],
    );
    let b = Subspace::spanned_by(
        3,
        &[vec![rat(0), rat(1), rat(1)], vec![rat(1), rat(0), rat(1)]],
    );
    let meet = a.intersect(&b);
    let join = a.sum(&b);
    println!("dim a = {}, dim b = {}", a.dim(), b.dim());
    println!("dim (a meet b) = {}", meet.dim());
    println!("dim (a join b) = {}", join.dim());
    // The modular identity for dimensions holds exactly.
    assert_eq!(meet.dim() + join.dim(), a.dim() + b.dim());

    // Kernels: solutions of a homogeneous system, again canonical.
    let kernel = Subspace::kernel_of(3, &[vec![rat(1), rat(1), rat(1)]]);
    println!("kernel of [1 1 1] has dimension {}", kernel.dim());
    for v in kernel.basis_vectors() {
        let pretty: Vec<String> = v.iter().map(format_rational).collect();
        println!("  basis vector [{}]", pretty.join(", "));
    }
}
