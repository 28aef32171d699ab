//! Derivations, inner derivations, and the polar correspondence between
//! sets of elements and sets of derivations.
//!
//! Run with: cargo run --example derivations_and_polars

use diffalg::catalog::{matrix_algebra, truncated_poly};
use diffalg::derivation::{
    der_basis, inner_derivations, polar_of_derivations, polar_of_elements, Derivation,
};
use diffalg::linalg::Subspace;
use diffalg::rat::rat;

fn main() {
    // For the full 2x2 matrix algebra every derivation is inner:
    // d = [a, -] for some matrix a, and the space of such d is
    // 3-dimensional (a is determined up to the scalar center).
    let m2 = matrix_algebra(2).expect("size within bounds");
    let der = der_basis(&m2);
    let inner = inner_derivations(&m2);
    println!("M2: dim Der = {}, dim Inner = {}", der.dim(), inner.dim());
    assert_eq!(der, inner);

    // A concrete inner derivation: ad_E11 = [E11, -].
    let e11 = m2.basis_element(0);
    let ad = Derivation::inner(&e11);
    let image = ad.apply(&[rat(0), rat(1), rat(0), rat(0)]); // applies to E12
    println!("ad_E11(E12) = {}", m2.format_element(&image));

    // Truncated polynomials Q[x]/(x^3): derivations are f(x) * d/dx with
    // f in the ideal (x), a 2-dimensional space.
    let poly3 = truncated_poly(3).expect("order within bounds");
    let der3 = der_basis(&poly3);
    println!("Q[x]/(x^3): dim Der = {}", der3.dim());

    // The polar correspondence. For a set S of elements, S^c is the
    // space of derivations vanishing on S; for a set W of derivations,
    // W^c is the space of elements killed by all of W. Three applications
    // collapse to one — the defining identity of a Galois connection.
    let span_x = Subspace::spanned_by(3, &[vec![rat(0), rat(1), rat(0)]]);
    let killers_of_x = polar_of_elements(&poly3, &span_x);
    println!("derivations vanishing on x: dim = {}", killers_of_x.dim());

    let fixed = polar_of_derivations(&poly3, &killers_of_x);
    println!("elements killed by those:   dim = {}", fixed.dim());

    let triple = polar_of_elements(&poly3, &fixed);
    assert_eq!(triple, killers_of_x);
    println!("S^ccc = S^c verified");

    // The polar of any set of derivations is a unital subalgebra: it
    // contains 1 and is closed under products.
    assert!(fixed.contains(poly3.unit_coords()));
    for u in fixed.basis_vectors() {
        for v in fixed.basis_vectors() {
            assert!(fixed.contains(&poly3.mul_coords(u, v)));
        }
    }
    println!("polar of a derivation set is a unital subalgebra: verified");
}
