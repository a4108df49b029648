//! Exact linear algebra over F2 and F2\[U\].
//!
//! This crate is the arithmetic bedrock of the workspace: bit-packed F2
//! vectors, deterministic affine solvers with retrievable nullspaces, echelon
//! subspace bookkeeping, and sparse F2\[U\] matrices with a Euclidean Smith
//! normal form.  Everything is exact; no floating point is involved anywhere.

pub mod bits;
pub mod f2;
pub mod umatrix;
pub mod upoly;

pub use bits::BitRow;
pub use f2::{nullspace_basis, nullspace_f2, rref, solve_affine, solve_f2, F2Matrix, Subspace};
pub use umatrix::{compose_sparse, snf_over_u, Snf, UMatrix};
pub use upoly::UPoly;
