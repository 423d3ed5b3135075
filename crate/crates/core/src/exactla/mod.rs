//! Exact linear algebra over ℚ or F_p.

pub mod field;
pub mod matrix;
pub mod subspace;

pub use field::{Field, Scalar};
pub use matrix::{unit_vector, Matrix, SparseRow};
pub use subspace::{inverse, kernel, quotient, rank, solve_affine, Quotient, Subspace};
