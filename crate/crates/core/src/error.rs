use thiserror::Error;

use crate::field::FieldSpec;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldSpec, right: FieldSpec },

    #[error("unsupported field {0}")]
    UnsupportedField(FieldSpec),

    #[error("cannot parse scalar literal {literal:?}: {reason}")]
    BadLiteral { literal: String, reason: String },

    #[error("structure tensor must be {expected}x{expected}x{expected}")]
    BadTensorShape { expected: usize },

    #[error("antisymmetry fails at ({i},{j}) component {k}: c[i][j][k] + c[j][i][k] = {residue}")]
    Antisymmetry {
        i: usize,
        j: usize,
        k: usize,
        residue: String,
    },

    #[error("Jacobi identity fails on basis triple ({i},{j},{l}) component {k}: residue {residue}")]
    Jacobi {
        i: usize,
        j: usize,
        l: usize,
        k: usize,
        residue: String,
    },

    #[error("algebra is not solvable")]
    NotSolvable,

    #[error("subspace is not an ideal")]
    NotIdeal,

    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,

    #[error("ideal is not abelian")]
    NotAbelian,

    #[error("subalgebra is not nilpotent")]
    NotNilpotent,

    #[error("representation is not a Lie homomorphism on basis pair ({i},{j})")]
    NotRepresentation { i: usize, j: usize },

    #[error("module is reducible: found a proper submodule of dimension {submodule_dim}")]
    Reducible { submodule_dim: usize },

    #[error("enumeration budget exceeded: {required} candidates required, budget {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("probe sequence exhausted after {probes} probes")]
    ProbeExhausted { probes: usize },

    #[error("operation requires a finite prime field")]
    RequiresPrimeField,

    #[error("postcondition violated: {0}")]
    Postcondition(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown identifier {0:?}")]
    UnknownId(String),
}

pub type Result<T> = std::result::Result<T, Error>;
