//! Exact linear algebra over the rationals and over truncated Laurent series.

mod qmatrix;
mod series_matrix;

pub use qmatrix::{polarized_invariant_q, QMatrix, Subspace};
pub use series_matrix::{constant, sparse, CharPolyCoeffs, SeriesMatrix};
