//! The JSON interchange format: writing an algebra to disk as exact
//! rational strings and reading it back without loss.
//!
//! Run with: cargo run --example interchange_files

use diffalg::catalog::quaternion_algebra;
use diffalg::report::{AlgebraFile, Report, SeedSpec};

fn main() {
    // Serialize the quaternions: every scalar becomes a string such as
    // "1", "-1", or "3/4", so nothing is rounded.
    let q = quaternion_algebra();
    let file = AlgebraFile::from_algebra(&q);
    let json = file.to_json();
    println!("--- quaternions as interchange JSON (first lines) ---");
    for line in json.lines().take(12) {
        println!("{line}");
    }
    println!("    ...");

    // Round trip: parse the JSON, rebuild the algebra, compare exactly.
    let parsed = AlgebraFile::from_json(&json).expect("the writer emits valid JSON");
    let rebuilt = parsed.to_algebra().expect("the writer emits a valid algebra");
    assert_eq!(rebuilt.structure_constants(), q.structure_constants());
    assert_eq!(rebuilt.unit_coords(), q.unit_coords());
    println!("round trip is exact");

    // Reports serialize the same way: deterministic bytes, fit for
    // diffing between runs or machines.
    let report = Report::generate(Some("quaternions".into()), &q, &SeedSpec::FullDer)
        .expect("quaternions build cleanly");
    let again = Report::generate(Some("quaternions".into()), &q, &SeedSpec::FullDer)
        .expect("quaternions build cleanly");
    assert_eq!(report.to_json(), again.to_json());
    println!("reports are byte-identical across runs");

    println!("--- report summary ---");
    print!("{}", report.to_text());
}
