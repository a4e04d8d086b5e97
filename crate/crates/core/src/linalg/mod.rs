//! Exact linear algebra over the rationals.

pub mod matrix;
pub mod rat;
pub mod subspace;

pub use matrix::{Matrix, Rref};
pub use rat::{format_rat, frac, int, parse_rat, Rat};
pub use subspace::{kernel, Subspace};
