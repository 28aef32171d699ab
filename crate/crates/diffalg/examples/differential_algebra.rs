//! Building a differential algebra: an algebra together with a module of
//! derivations closed under the double polar, its constants, and the
//! differential map.
//!
//! Run with: cargo run --example differential_algebra

use diffalg::catalog::dual_numbers;
use diffalg::derivation::DiffAlgebra;
use diffalg::duality::{differential, differential_coords};
use diffalg::rat::rat;

fn main() {
    // The dual numbers Q[x]/(x^2). Their derivation space is spanned by
    // x * d/dx, and the full module V = Der A gives a one-dimensional
    // differential structure.
    let alg = dual_numbers();
    let da = DiffAlgebra::full(&alg);

    println!("dual numbers: dim A = {}", alg.dim());
    println!("  module V     dim {}", da.dim_v());
    println!("  constants C  dim {}", da.constants().dim());
    println!("  center Z     dim {}", da.center().dim());

    // The differential of an element a is the covector v -> v(a), stored
    // as its table of values on the module basis. d(1) = 0 and d(x) is
    // the generator pairing V with A.
    let one = alg.unit_element();
    let x = alg.basis_element(1);

    let d_one = differential(&da, &one);
    println!("d(1) is zero: {}", d_one.is_zero());

    let d_x = differential(&da, &x);
    for i in 0..da.dim_v() {
        println!("d(x)(v_{}) = {}", i, alg.format_element(d_x.value_on_basis(i)));
    }

    // The product rule, exactly: d(x*x) = dx*x + x*dx = 0 because x^2 = 0
    // forces both sides to the zero covector.
    let x_squared = &x * &x;
    println!("x*x = {x_squared}");
    let d_xsq = differential_coords(&da, &[rat(0), rat(0)]);
    println!("d(x*x) table is all zero: {}", d_xsq.iter().all(|c| c == &rat(0)));

    // Constants are precisely the kernel of d: here the scalars.
    println!(
        "constants basis: {}",
        alg.format_element(da.constants().basis_vector(0))
    );

    // The same module can be described from the other side: prescribe the
    // constants and take every derivation vanishing on them.
    let from_constants = DiffAlgebra::from_constants(&alg, da.constants());
    assert_eq!(from_constants.vspace(), da.vspace());
    println!("rebuilding from the constants recovers the same module");
}
