//! A seeded survey of random algebras: generate reproducible examples,
//! run the invariant suite on each, and tally what the differential
//! structure looks like across the sample.
//!
//! Run with: cargo run --release --example fuzz_survey

use diffalg::catalog::random_algebra;
use diffalg::checks::{all_passed, run_suite};
use diffalg::derivation::DiffAlgebra;
use diffalg::reflexivity::reflexivity_report;

fn main() {
    let sample = 40u64;
    let mut semisimple = 0usize;
    let mut reflexive = 0usize;
    let mut free_module = 0usize;
    let mut nonzero_module = 0usize;

    for seed in 1..=sample {
        // Deterministic: the same seed always yields the same algebra.
        let alg = random_algebra(seed, 6);
        let da = DiffAlgebra::full(&alg);
        let report = reflexivity_report(&da).expect("construction is consistent");

        let suite = run_suite(&da);
        assert!(all_passed(&suite), "seed {seed} broke an invariant");

        if alg.is_semisimple() {
            semisimple += 1;
        }
        if report.is_reflexive {
            reflexive += 1;
        }
        if da.dim_v() > 0 {
            nonzero_module += 1;
        }
        if da.dim_v() > 0 && report.double_dual.dim() == da.dim_v() {
            free_module += 1;
        }

        println!(
            "seed {seed:>3}: dim {} der {} reflexive {}",
            alg.dim(),
            da.dim_v(),
            report.is_reflexive
        );
    }

    println!("\nsurveyed {sample} seeded algebras");
    println!("  semisimple          {semisimple}");
    println!("  nonzero module      {nonzero_module}");
    println!("  reflexive           {reflexive}");
    println!("  double dual = V     {free_module}");
    println!("  invariant suite     all passed");
}
