//! Exact computations with real low-dimensional Jacobi-Lie bialgebras.

pub mod bialgebra;
pub mod catalog;
pub mod classify;
pub mod display;
pub mod document;
pub mod equivalence;
pub mod exec;
pub mod expr;
pub mod error;
pub mod kernels;
pub mod linalg;
pub mod ring;
pub mod scalar;
pub mod tables;
pub mod tensor;

pub use bialgebra::JacobiLieBialgebra;
pub use error::{Error, Result};
pub use linalg::{Matrix, Vector};
pub use scalar::Scalar;
pub use tensor::{ResidualGrid, StructureTensor};
