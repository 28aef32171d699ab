//! Serializable reports and the on-disk algebra format.
//!
//! An [`AlgebraFile`] is the JSON interchange form of an algebra: every
//! scalar is an exact rational string, so files round-trip without loss.
//! A [`Report`] bundles the dimensions of every space the pipeline
//! constructs, the reflexivity verdict, and the outcome of the invariant
//! suite. Serialization is deterministic — the same input yields the same
//! bytes — so reports can be diffed and archived.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Algebra, ShapeError};
use crate::checks::{run_suite, CheckResult};
use crate::derivation::{Derivation, DiffAlgebra, LeibnizViolation};
use crate::linalg::Subspace;
use crate::rat::{format_rational, parse_rational, Rat, RationalParseError};
use crate::reflexivity::{reflexivity_report, ReflexivityDefect};

/// How to pick the derivation module V when building a differential
/// algebra: the full derivation space, the closure of an explicit list of
/// derivations, or the polar of a prescribed set of constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeedSpec {
    /// Use every derivation of the algebra.
    FullDer,
    /// Close the span of these endomorphisms (flattened row-major n×n
    /// matrices); each must satisfy the Leibniz rule.
    Derivations(Vec<Vec<Rat>>),
    /// Use all derivations vanishing on the span of these elements.
    Constants(Vec<Vec<Rat>>),
}

impl SeedSpec {
    /// Builds the differential algebra this spec describes.
    pub fn realize(&self, algebra: &Arc<Algebra>) -> Result<DiffAlgebra, ReportError> {
        let n = algebra.dim();
        match self {
            SeedSpec::FullDer => Ok(DiffAlgebra::full(algebra)),
            SeedSpec::Derivations(mats) => {
                for (index, flat) in mats.iter().enumerate() {
                    if flat.len() != n * n {
                        return Err(ReportError::SeedShape {
                            index,
                            got: flat.len(),
                            want: n * n,
                        });
                    }
                    Derivation::from_flat(algebra.clone(), flat)
                        .map_err(|source| ReportError::SeedNotDerivation { index, source })?;
                }
                let seed = Subspace::spanned_by(n * n, mats);
                Ok(DiffAlgebra::from_seed(algebra, &seed))
            }
            SeedSpec::Constants(elements) => {
                for (index, e) in elements.iter().enumerate() {
                    if e.len() != n {
                        return Err(ReportError::SeedShape {
                            index,
                            got: e.len(),
                            want: n,
                        });
                    }
                }
                let span = Subspace::spanned_by(n, elements);
                Ok(DiffAlgebra::from_constants(algebra, &span))
            }
        }
    }
}

/// Report generation failed before any mathematics could be checked.
#[derive(Debug, Error)]
pub enum ReportError {
    /// A seed entry has the wrong number of coordinates.
    #[error("seed entry {index} has {got} coordinates, expected {want}")]
    SeedShape {
        index: usize,
        got: usize,
        want: usize,
    },
    /// A seed matrix is not a derivation.
    #[error("seed matrix {index} is not a derivation: {source}")]
    SeedNotDerivation {
        index: usize,
        source: LeibnizViolation,
    },
    /// The pipeline itself detected an internal inconsistency.
    #[error(transparent)]
    Structure(#[from] ReflexivityDefect),
}

/// Dimensions attached to the algebra and its derivation module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraSummary {
    pub name: Option<String>,
    pub dim: usize,
    pub semisimple: bool,
    pub center: usize,
    pub radical: usize,
    pub derivations: usize,
    pub module: usize,
    pub constants: usize,
}

/// Dimensions of the duality tower over the module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualitySummary {
    pub covectors: usize,
    pub central_covectors: usize,
    pub forms: usize,
    pub double_dual: usize,
    pub kernel: usize,
    pub regular_covectors: usize,
    pub regular_dual: usize,
}

/// One line of the invariant suite, in serializable form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

impl From<CheckResult> for CheckLine {
    fn from(r: CheckResult) -> Self {
        CheckLine {
            name: r.name.to_string(),
            passed: r.passed,
            details: r.details,
        }
    }
}

/// Everything the toolkit can say about one differential algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub algebra: AlgebraSummary,
    pub duality: DualitySummary,
    pub reflexive: bool,
    /// Value table (exact rational strings) of a covector that is not
    /// regular, present exactly when the algebra is not reflexive.
    pub non_regular_witness: Option<Vec<String>>,
    pub checks: Vec<CheckLine>,
}

impl Report {
    /// Runs the full pipeline and invariant suite for one algebra.
    pub fn generate(
        name: Option<String>,
        algebra: &Arc<Algebra>,
        seed: &SeedSpec,
    ) -> Result<Report, ReportError> {
        let da = seed.realize(algebra)?;
        let full = reflexivity_report(&da)?;
        let checks: Vec<CheckLine> = run_suite(&da).into_iter().map(CheckLine::from).collect();
        Ok(Report {
            algebra: AlgebraSummary {
                name,
                dim: algebra.dim(),
                semisimple: algebra.is_semisimple(),
                center: algebra.center().dim(),
                radical: algebra.radical().dim(),
                derivations: crate::derivation::der_basis(algebra).dim(),
                module: da.dim_v(),
                constants: da.constants().dim(),
            },
            duality: DualitySummary {
                covectors: full.covectors.dim(),
                central_covectors: full.covectors.vstar(&da).dim(),
                forms: full.covectors.forms().dim(),
                double_dual: full.double_dual.dim(),
                kernel: full.double_dual.n_space().dim(),
                regular_covectors: full.r_space.dim(),
                regular_dual: full.restriction.r_plus.dim(),
            },
            reflexive: full.is_reflexive,
            non_regular_witness: full
                .non_regular_witness
                .map(|w| w.iter().map(format_rational).collect()),
            checks,
        })
    }

    /// Whether every invariant check passed.
    pub fn all_checks_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Deterministic pretty-printed JSON, terminated by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    /// Fixed-format human-readable rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let a = &self.algebra;
        let label = a.name.as_deref().unwrap_or("(unnamed)");
        let kind = if a.semisimple {
            "semisimple"
        } else {
            "not semisimple"
        };
        out.push_str(&format!("algebra {label}: dim {}, {kind}\n", a.dim));
        out.push_str(&format!("  center dim       {}\n", a.center));
        out.push_str(&format!("  radical dim      {}\n", a.radical));
        out.push_str(&format!("  derivations dim  {}\n", a.derivations));
        out.push_str(&format!("  module dim       {}\n", a.module));
        out.push_str(&format!("  constants dim    {}\n", a.constants));
        let d = &self.duality;
        out.push_str("duality tower\n");
        out.push_str(&format!("  covectors          {}\n", d.covectors));
        out.push_str(&format!("  central covectors  {}\n", d.central_covectors));
        out.push_str(&format!("  forms              {}\n", d.forms));
        out.push_str(&format!("  double dual        {}\n", d.double_dual));
        out.push_str(&format!("  kernel             {}\n", d.kernel));
        out.push_str(&format!("  regular covectors  {}\n", d.regular_covectors));
        out.push_str(&format!("  regular dual       {}\n", d.regular_dual));
        out.push_str(&format!(
            "reflexive: {}\n",
            if self.reflexive { "yes" } else { "no" }
        ));
        if let Some(w) = &self.non_regular_witness {
            out.push_str(&format!("  non-regular covector: [{}]\n", w.join(", ")));
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        out.push_str(&format!(
            "checks: {} passed, {} failed\n",
            self.checks.len() - failed,
            failed
        ));
        for c in &self.checks {
            let tag = if c.passed { "pass" } else { "FAIL" };
            out.push_str(&format!("  [{tag}] {}: {}\n", c.name, c.details));
        }
        out
    }
}

/// JSON interchange format for an algebra given by structure constants.
/// All scalars are exact rational strings such as `"2"` or `"-3/4"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub basis_names: Vec<String>,
    pub unit: Vec<String>,
    pub structure_constants: Vec<Vec<Vec<String>>>,
}

/// Why an [`AlgebraFile`] does not describe an algebra.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraFileError {
    #[error("`dim` is {dim} but `basis_names` has {got} entries")]
    NameCount { dim: usize, got: usize },
    #[error("bad rational in `unit[{index}]`: {source}")]
    UnitEntry {
        index: usize,
        source: RationalParseError,
    },
    #[error("bad rational in `structure_constants[{i}][{j}][{k}]`: {source}")]
    ConstantEntry {
        i: usize,
        j: usize,
        k: usize,
        source: RationalParseError,
    },
    #[error(transparent)]
    Shape(#[from] ShapeError),
}

impl AlgebraFile {
    /// Renders an algebra into the interchange form.
    pub fn from_algebra(alg: &Algebra) -> Self {
        AlgebraFile {
            dim: alg.dim(),
            basis_names: alg.basis_names().to_vec(),
            unit: alg.unit_coords().iter().map(format_rational).collect(),
            structure_constants: alg
                .structure_constants()
                .iter()
                .map(|plane| {
                    plane
                        .iter()
                        .map(|row| row.iter().map(format_rational).collect())
                        .collect()
                })
                .collect(),
        }
    }

    /// Parses the rational strings and assembles the algebra. Shape
    /// problems and malformed scalars are reported with their position.
    pub fn to_algebra(&self) -> Result<Arc<Algebra>, AlgebraFileError> {
        if self.basis_names.len() != self.dim {
            return Err(AlgebraFileError::NameCount {
                dim: self.dim,
                got: self.basis_names.len(),
            });
        }
        let mut unit = Vec::with_capacity(self.unit.len());
        for (index, s) in self.unit.iter().enumerate() {
            unit.push(
                parse_rational(s).map_err(|source| AlgebraFileError::UnitEntry { index, source })?,
            );
        }
        let mut constants = Vec::with_capacity(self.structure_constants.len());
        for (i, plane) in self.structure_constants.iter().enumerate() {
            let mut rows = Vec::with_capacity(plane.len());
            for (j, row) in plane.iter().enumerate() {
                let mut out = Vec::with_capacity(row.len());
                for (k, s) in row.iter().enumerate() {
                    out.push(parse_rational(s).map_err(|source| {
                        AlgebraFileError::ConstantEntry { i, j, k, source }
                    })?);
                }
                rows.push(out);
            }
            constants.push(rows);
        }
        Ok(Algebra::new(self.basis_names.clone(), unit, constants)?)
    }

    /// Deterministic pretty-printed JSON, terminated by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("algebra serialization");
        s.push('\n');
        s
    }

    /// Parses the interchange JSON (structure only; scalars are parsed by
    /// [`AlgebraFile::to_algebra`]).
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}
