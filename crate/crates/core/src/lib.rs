//! Exact constructions of generalized complex structures from Lie-theoretic data.
#![allow(clippy::needless_range_loop, clippy::type_complexity)]

pub mod admissible;
pub mod bracket;
pub mod certificate;
pub mod cli;
pub mod gcslin;
pub mod leftinv;
pub mod liealg;
pub mod linalg;
pub mod rootsys;
pub mod scalar;

pub use linalg::{Matrix, Subspace, Vector};
pub use scalar::{FieldSpec, Scalar, ScalarError};
