//! Exact computations for quasismooth weighted Fano 3-fold hypersurfaces
//! `X_d ⊂ P(a1,...,a5)`.
//!
//! The crate covers the whole pipeline behind the degree-of-irrationality
//! classification: weighted monomials, the quasismooth / well-formed /
//! terminal predicates, the bounded family search, symbolic coordinate-change
//! normal forms, diagonal symmetry groups and the final verdict engine.
//!
//! Coordinates are always `x, y, z, t, w` with weights `a1 <= ... <= a5`.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod exactmath;
pub mod irrational;
pub mod membership;
pub mod singular;
pub mod symalg;
pub mod symmetry;
pub mod wspace;

pub use error::{Error, Result};
pub use exactmath::Rational;
pub use wspace::{Monomial, WeightSystem};
