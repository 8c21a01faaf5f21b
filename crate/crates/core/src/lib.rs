//! Exact computer algebra for the coordinate ring of quantum matrices.
//!
//! The crate provides PBW normal forms for quantum matrices and quantum
//! affine spaces, quantum minors, reduction modulo the ideal generated by the
//! 2x2 quantum minors, the embedding `X_ij -> y_i (x) z_j` into a tensor
//! product of quantum affine spaces, its coinvariant description, the
//! torus-invariant primes containing that ideal, and a truncated linear
//! algebra oracle checking all of these degree by degree.

pub mod cli;
pub mod detid;
pub mod error;
pub mod hspec;
pub mod maps;
pub mod ncalg;
pub mod oracle;
pub mod parse;
pub mod scalar;

pub use error::{Error, Result};
pub use ncalg::{Algebra, Generator, NCPoly, Word};
pub use scalar::{LaurentScalar, RatScalar, Rational};
