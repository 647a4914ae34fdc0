//! Finite-dimensional split Lie-Rinehart algebras `(L, A)` over ℚ.
//!
//! An instance is given by graded bases of `L` and `A` and four sparse tables
//! of structure constants. From it the crate validates the axioms, computes
//! the connection classes of roots and weights, builds the associated ideals
//! and decompositions, and decides tightness and (in a restricted regime)
//! simplicity.

pub mod combinators;
pub mod connect;
pub mod decomp;
pub mod error;
pub mod exactlin;
pub mod fixtures;
pub mod format;
pub mod model;
pub mod simple;

pub use error::{Error, Result};
