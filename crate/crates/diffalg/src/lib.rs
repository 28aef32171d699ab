//! Exact differential calculus on finite-dimensional associative unital
//! algebras over the rationals.
//!
//! Everything starts from a structure-constant table: an algebra with
//! basis `e_0, ..., e_{n-1}` and products `e_i e_j = sum_k c[i][j][k] e_k`.
//! From that single input the crate constructs, with no floating point
//! anywhere:
//!
//! - the derivation space and its polar correspondence with subsets of
//!   the algebra (a Galois connection whose closed objects are the
//!   differential structures),
//! - differential algebras `(A, V)`: a derivation module `V` closed under
//!   the double polar, its constants `C`, and the differential `d`,
//! - the covector bimodule `V+` of center-linear maps `V -> A`, the
//!   differential forms inside it, and the two-sided algebra actions,
//! - the double dual `Vx` of bilinear maps `V+ -> A`, the evaluation
//!   embedding `j`, the contraction `pi` with `pi . j = id`, and the
//!   canonical splitting `Vx = V (+) N`,
//! - the regular covectors `R`, the restricted dual, and an exact
//!   decision procedure for reflexivity (`R = V+`, equivalently `N = 0`),
//!   including free-basis certificates with explicit dual bases.
//!
//! The mathematical claims behind each construction are restated as
//! executable checks in [`checks`], runnable over the built-in
//! [`catalog`] and seeded random algebras. The `examples/` directory is
//! the guided tour; the `diffalg` binary wraps validation, reporting,
//! and the invariant suite for files in the JSON interchange format of
//! [`report::AlgebraFile`].
//!
//! ```
//! use diffalg::catalog::matrix_algebra;
//! use diffalg::derivation::DiffAlgebra;
//! use diffalg::reflexivity::reflexivity_report;
//!
//! let m2 = matrix_algebra(2).unwrap();
//! let da = DiffAlgebra::full(&m2);
//! let report = reflexivity_report(&da).unwrap();
//! assert!(report.is_reflexive);
//! assert_eq!(report.covectors.dim(), 12);
//! ```

pub mod algebra;
pub mod catalog;
pub mod checks;
pub mod derivation;
pub mod duality;
pub mod linalg;
pub mod rat;
pub mod reflexivity;
pub mod report;

pub use algebra::{Algebra, AlgebraElement};
pub use derivation::{Derivation, DiffAlgebra};
pub use duality::{Covector, CovectorModule, DoubleDual};
pub use linalg::{Matrix, Subspace};
pub use rat::Rat;
pub use reflexivity::{reflexivity_report, ReflexivityReport};
pub use report::{AlgebraFile, Report, SeedSpec};
