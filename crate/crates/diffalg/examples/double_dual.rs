//! The double dual: bilinear maps from the covector module back into the
//! algebra, the evaluation embedding, and the canonical splitting.
//!
//! Run with: cargo run --example double_dual

use diffalg::catalog::truncated_poly;
use diffalg::derivation::DiffAlgebra;
use diffalg::duality::{CovectorModule, DoubleDual};
use diffalg::linalg::Matrix;

fn main() {
    // Q[x]/(x^4): a commutative local algebra whose differential
    // structure is rich enough to show every space in the tower.
    let alg = truncated_poly(4).expect("order within bounds");
    let da = DiffAlgebra::full(&alg);
    let cm = CovectorModule::build(&da).expect("construction is consistent");
    let dd = DoubleDual::build(&da, &cm).expect("construction is consistent");

    println!("Q[x]/(x^4)");
    println!("  dim V   = {}", da.dim_v());
    println!("  dim V+  = {}", cm.dim());
    println!("  dim Vx  = {}", dd.dim());
    println!("  dim N   = {}", dd.n_space().dim());

    // Every module vector v gives a bilinear map 'evaluate at v'; the
    // matrix j of this embedding has full column rank.
    println!("  rank j  = {}", dd.j_matrix().rank());
    assert_eq!(dd.j_matrix().rank(), da.dim_v());

    // The contraction pi recovers v from its double-dual image: pi . j
    // is exactly the identity on V.
    let retract = dd.pi_matrix().mul(dd.j_matrix());
    assert_eq!(retract, Matrix::identity(da.dim_v()));
    println!("  pi . j = id verified");

    // j . pi is an idempotent projecting the double dual onto the image
    // of V along N, splitting it as (image of V) + N.
    let idem = dd.idempotent();
    assert_eq!(idem.mul(&idem), idem);
    let image = dd.image_of_vectors();
    assert_eq!(image.dim() + dd.n_space().dim(), dd.dim());
    assert!(image.intersect(dd.n_space()).is_zero());
    println!(
        "  split:  {} = {} + {}",
        dd.dim(),
        image.dim(),
        dd.n_space().dim()
    );

    // N has a second, independent description: the bilinear maps that
    // annihilate every differential form. The two computations agree.
    let ann = dd
        .annihilator_of_forms(&cm)
        .expect("construction is consistent");
    assert_eq!(&ann, dd.n_space());
    println!("  N = annihilator of the forms, by two independent systems");

    // Central elements act on the double dual on either side, and the two
    // actions agree because the scalars are central.
    for s in 0..da.center().dim() {
        let act = dd.center_action(s);
        assert_eq!(act.rows(), dd.dim());
    }
    println!("  center action matrices: {} of them", da.center().dim());
}
