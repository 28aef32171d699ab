//! Exact linear algebra over the rationals.

mod matrix;
mod subspace;

pub use matrix::{leading_index, solve_in_span, Matrix, RowReducer};
pub use subspace::Subspace;
