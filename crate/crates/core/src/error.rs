use thiserror::Error;

use crate::linalg::Rat;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which hypothesis of the abelian-complement construction failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplementClause {
    /// `ind n - ind(g, n)` is not zero.
    NonzeroComplexity,
    /// The supplied covector is not regular for the ideal.
    NotIdealRegular,
    /// No sampled extension of the covector is regular for the algebra.
    NoRegularExtension,
    /// The reduced algebra `g_nu / n_nu^nat` is not abelian.
    ReducedNotAbelian,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("subspace is not contained in the outer subspace")]
    NotContained,

    #[error("ragged matrix: row {row} has {got} entries, expected {expected}")]
    RaggedMatrix { row: usize, expected: usize, got: usize },

    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("inconsistent brackets [e{i}, e{j}] and [e{j}, e{i}]")]
    AntisymmetryConflict { i: usize, j: usize },

    #[error("bracket [e{i}, e{i}] must vanish")]
    NonzeroSelfBracket { i: usize },

    #[error("Jacobi identity fails on (e{i}, e{j}, e{k}); residual {}", fmt_vec(.residual))]
    JacobiViolation { i: usize, j: usize, k: usize, residual: Vec<Rat> },

    #[error("subspace is not an ideal: [e{i}, b{j}] leaves it")]
    NotAnIdeal { i: usize, j: usize },

    #[error("subspace is not a subalgebra: [b{i}, b{j}] leaves it")]
    NotASubalgebra { i: usize, j: usize },

    #[error("not a representation: rho([e{i}, e{j}]) != [rho(e{i}), rho(e{j})]")]
    NotARepresentation { i: usize, j: usize },

    #[error("not a 2-cocycle: {0}")]
    NotACocycle(String),

    #[error("unknown catalog name {0:?}")]
    UnknownName(String),

    #[error("tau does not extend nu on n_nu")]
    NotAnExtension,

    #[error("tau([n_nu, g_nu]) does not vanish; cocycle does not factor")]
    FactorizationFailure,

    #[error("[g_nu, n_nu] is not contained in n_nu^nat")]
    IdealityViolation,

    #[error("complexity disagrees on a generic witness: ind n - ind(g,n) = {from_indices}, dim of slice = {from_slice}")]
    GenericityDisagreement { from_indices: i64, from_slice: usize },

    #[error("hypothesis not met: {0:?}")]
    HypothesisNotMet(ComplementClause),

    #[error("assertion failed: {0}")]
    AssertionFailed(String),

    #[error("no witness found after {tried} candidates: {reason}")]
    WitnessNotFound { tried: usize, reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

fn fmt_vec(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(|r| r.to_string()).collect();
    format!("({})", parts.join(", "))
}
