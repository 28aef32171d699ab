//! Command-line front end: validate algebra files, print reports, and run
//! the invariant suite.
//!
//! Exit codes: 0 on success, 1 when validation or an invariant check
//! fails, 2 on usage or parse errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use diffalg::algebra::Algebra;
use diffalg::catalog::{by_name, catalog, random_algebra};
use diffalg::checks::run_suite;
use diffalg::derivation::DiffAlgebra;
use diffalg::rat::{parse_rational, Rat};
use diffalg::report::{AlgebraFile, Report, ReportError, SeedSpec};

#[derive(Parser)]
#[command(
    name = "diffalg",
    version,
    about = "Exact differential structure of finite-dimensional algebras over the rationals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an algebra file and verify associativity and the unit laws
    Validate {
        /// JSON file with dim, basis names, unit, and structure constants
        file: PathBuf,
    },
    /// Build the differential apparatus and print a deterministic report
    Report {
        /// Algebra file path, or a catalog name (optionally prefixed `catalog:`)
        target: String,
        /// Module seed: `full-der`, `derivations:<file>`, or `constants:<file>`
        #[arg(long, default_value = "full-der")]
        seed_spec: String,
        /// Emit JSON (the default)
        #[arg(long, conflicts_with = "text")]
        json: bool,
        /// Emit fixed-format text instead of JSON
        #[arg(long)]
        text: bool,
    },
    /// Run the invariant suite on a target, `all` for the whole catalog
    Check {
        /// Algebra file path, catalog name, or `all`
        target: String,
        /// Also run the suite on this many seeded random algebras
        #[arg(long, default_value_t = 0)]
        fuzz: u64,
    },
}

/// Process-level outcome distinct from a clean pass.
enum Failure {
    /// Domain-level failure: invalid algebra, failed check, bad seed.
    Domain(String),
    /// Usage or parse failure: missing file, malformed JSON or rational.
    Usage(String),
}

impl Failure {
    fn code(&self) -> ExitCode {
        match self {
            Failure::Domain(_) => ExitCode::from(1),
            Failure::Usage(_) => ExitCode::from(2),
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Domain(m) | Failure::Usage(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Validate { file } => cmd_validate(&file),
        Command::Report {
            target,
            seed_spec,
            json: _,
            text,
        } => cmd_report(&target, &seed_spec, text),
        Command::Check { target, fuzz } => cmd_check(&target, fuzz),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            failure.code()
        }
    }
}

/// Reads and parses an algebra file without validating the axioms.
fn load_file(path: &Path) -> Result<Arc<Algebra>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let file = AlgebraFile::from_json(&text)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    file.to_algebra()
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Resolves a target string to a named algebra: an explicit `catalog:`
/// reference, an existing file, or a bare catalog name.
fn resolve_target(target: &str) -> Result<(String, Arc<Algebra>), Failure> {
    if let Some(name) = target.strip_prefix("catalog:") {
        let entry = by_name(name)
            .ok_or_else(|| Failure::Usage(format!("no catalog entry named `{name}`")))?;
        return Ok((entry.name.to_string(), entry.algebra));
    }
    let path = Path::new(target);
    if path.exists() {
        return Ok((target.to_string(), load_file(path)?));
    }
    if let Some(entry) = by_name(target) {
        return Ok((entry.name.to_string(), entry.algebra));
    }
    Err(Failure::Usage(format!(
        "`{target}` is neither a file nor a catalog entry"
    )))
}

/// Checks associativity and the unit laws, mapping defects to exit 1.
fn validate_algebra(label: &str, algebra: &Algebra) -> Result<(), Failure> {
    algebra
        .validate()
        .map_err(|defect| Failure::Domain(format!("{label}: {defect}")))
}

fn cmd_validate(file: &Path) -> Result<(), Failure> {
    let algebra = load_file(file)?;
    validate_algebra(&file.display().to_string(), &algebra)?;
    println!(
        "ok: associative unital algebra of dimension {} with basis {}",
        algebra.dim(),
        algebra.basis_names().join(", ")
    );
    Ok(())
}

/// Parses a JSON file of rational-string vectors.
fn load_vectors(path: &str) -> Result<Vec<Vec<Rat>>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
    let raw: Vec<Vec<String>> = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    raw.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, s)| {
                    parse_rational(s)
                        .map_err(|e| Failure::Usage(format!("{path}: entry [{i}][{j}]: {e}")))
                })
                .collect()
        })
        .collect()
}

fn parse_seed_spec(spec: &str) -> Result<SeedSpec, Failure> {
    if spec == "full-der" {
        Ok(SeedSpec::FullDer)
    } else if let Some(path) = spec.strip_prefix("derivations:") {
        Ok(SeedSpec::Derivations(load_vectors(path)?))
    } else if let Some(path) = spec.strip_prefix("constants:") {
        Ok(SeedSpec::Constants(load_vectors(path)?))
    } else {
        Err(Failure::Usage(format!(
            "unknown seed spec `{spec}` (expected `full-der`, `derivations:<file>`, or `constants:<file>`)"
        )))
    }
}

fn cmd_report(target: &str, seed_spec: &str, text: bool) -> Result<(), Failure> {
    let (name, algebra) = resolve_target(target)?;
    validate_algebra(&name, &algebra)?;
    let seed = parse_seed_spec(seed_spec)?;
    let report = Report::generate(Some(name), &algebra, &seed).map_err(|e| match e {
        ReportError::SeedShape { .. } => Failure::Usage(e.to_string()),
        ReportError::SeedNotDerivation { .. } | ReportError::Structure(_) => {
            Failure::Domain(e.to_string())
        }
    })?;
    if text {
        print!("{}", report.to_text());
    } else {
        print!("{}", report.to_json());
    }
    if report.all_checks_passed() {
        Ok(())
    } else {
        Err(Failure::Domain("invariant checks failed".to_string()))
    }
}

fn cmd_check(target: &str, fuzz: u64) -> Result<(), Failure> {
    let mut targets: Vec<(String, Arc<Algebra>)> = Vec::new();
    if target == "all" {
        for entry in catalog() {
            targets.push((entry.name.to_string(), entry.algebra));
        }
    } else {
        let (name, algebra) = resolve_target(target)?;
        validate_algebra(&name, &algebra)?;
        targets.push((name, algebra));
    }
    for seed in 1..=fuzz {
        targets.push((format!("fuzz-{seed}"), random_algebra(seed, 6)));
    }

    let mut passed = 0usize;
    let mut failed = 0usize;
    for (name, algebra) in &targets {
        let da = DiffAlgebra::full(algebra);
        for result in run_suite(&da) {
            if result.passed {
                passed += 1;
                println!("pass {name} {}", result.name);
            } else {
                failed += 1;
                println!("FAIL {name} {}: {}", result.name, result.details);
            }
        }
    }
    println!(
        "checks: {passed} passed, {failed} failed across {} target(s)",
        targets.len()
    );
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Domain(format!("{failed} check(s) failed")))
    }
}
