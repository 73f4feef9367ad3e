//! Exact computer algebra for Poisson structures on matrix coordinate rings.
//!
//! The crate provides the semiclassical-limit, KKS and associated-graded
//! brackets on `O(M_n)`, the quantized coordinate ring `O_t(M_n)` with PBW
//! normal forms, characteristic-polynomial invariants, a degree-graded
//! centralizer solver, and the rank and leaf-dimension computations for the
//! semiclassical structure.

pub mod algebra;
pub mod centralizer;
pub mod error;
pub mod invariants;
pub mod leafrank;
pub mod linalg;
pub mod perm;
pub mod poisson;
pub mod quantum;

pub use error::{Error, Result};
