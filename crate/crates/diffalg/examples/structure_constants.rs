//! Defining an algebra by structure constants and exploring it: the
//! Gaussian rationals Q(i) and a non-commutative contrast case.
//!
//! Run with: cargo run --example structure_constants

use diffalg::algebra::Algebra;
use diffalg::catalog::upper_triangular;
use diffalg::rat::rat;

fn main() {
    // Q(i) = Q[x]/(x^2 + 1): basis {1, i}, products
    //   1*1 = 1, 1*i = i, i*1 = i, i*i = -1.
    // constants[a][b][k] is the coefficient of basis element k in e_a*e_b.
    let constants = vec![
        vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]],
        vec![vec![rat(0), rat(1)], vec![rat(-1), rat(0)]],
    ];
    let gauss = Algebra::new(
        vec!["1".into(), "i".into()],
        vec![rat(1), rat(0)],
        constants,
    )
    .expect("shape is consistent");

    // validate() proves associativity and the unit laws by enumerating
    // every basis triple; for a field extension it must succeed.
    gauss.validate().expect("Q(i) is an associative algebra");
    println!("Q(i): dimension {}", gauss.dim());
    println!("  center dimension  {}", gauss.center().dim());
    println!("  radical dimension {}", gauss.radical().dim());
    println!("  semisimple        {}", gauss.is_semisimple());

    // Element arithmetic with pretty-printing.
    let i = gauss.basis_element(1);
    let one = gauss.unit_element();
    let z = &one + &i; // 1 + i
    let w = &z * &z; // (1 + i)^2 = 2i
    println!("  (1 + i)^2 = {w}");
    let minus_one = &i * &i;
    println!("  i * i = {minus_one}");

    // Contrast: upper-triangular 2x2 matrices are associative but far
    // from semisimple; the strictly upper part is the radical.
    let ut2 = upper_triangular(2).expect("size within bounds");
    ut2.validate().expect("triangular matrices are associative");
    println!("upper-triangular 2x2: dimension {}", ut2.dim());
    println!("  center dimension  {}", ut2.center().dim());
    println!("  radical dimension {}", ut2.radical().dim());
    println!("  semisimple        {}", ut2.is_semisimple());

    // Multiplication is exact matrix composition under the hood: the
    // left-multiplication operator of a basis element.
    let l = ut2.left_mul_matrix(&[rat(1), rat(0), rat(0)]);
    println!(
        "  left multiplication by {} is a {}x{} rational matrix of rank {}",
        ut2.basis_names()[0],
        l.rows(),
        l.cols(),
        l.rank()
    );
}
