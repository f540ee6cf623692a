//! Exact-arithmetic toolkit for finite-dimensional right Leibniz algebras:
//! non-abelian tensor and exterior products, second relative homology by
//! several independent methods, dimension bounds, a small classification of
//! low-defect pairs, and relative stem covers.
//!
//! All computations are over the rationals or a prime field GF(p) and are
//! exact; there is no floating point anywhere in the crate.

pub mod algebra;
pub mod classify;
pub mod cover;
pub mod error;
pub mod homology;
pub mod io;
pub mod matrix;
pub mod scalar;
pub mod subspace;
pub mod tensor;

pub use algebra::{Ideal, LeibnizAlgebra, Pair};
pub use error::{Error, Result};
pub use matrix::{Matrix, RowReducer, Vector};
pub use scalar::{Field, Scalar};
pub use subspace::{greedy_complement, quotient_basis, Subspace};
