use std::collections::BTreeSet;

use thiserror::Error;

/// Errors produced across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("polynomial {0:?} is not primitive over GF({1})")]
    NotPrimitive(Vec<u32>, u32),
    #[error("polynomial must be monic of degree {expected}, got coefficients {coeffs:?}")]
    DegreeMismatch { expected: u32, coeffs: Vec<u32> },
    #[error("field size {0} exceeds the supported maximum of 65536")]
    FieldTooLarge(u64),
    #[error("no default primitive polynomial for q = {0}")]
    NoDefaultPolynomial(u64),
    #[error("element code {code} out of range for GF({q})")]
    ElementOutOfRange { code: u32, q: u32 },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,

    #[error("generator matrix has no nonzero row")]
    ZeroMatrix,
    #[error("degenerate code: coordinate {0} is zero in every codeword")]
    DegenerateCode(usize),
    #[error("vector length {got} does not match code length {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("coordinate {0} out of range")]
    IndexOutOfRange(usize),
    #[error("enumeration of {needed} items exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("rank check failed: {0}")]
    RankError(String),

    #[error("minimum distance is 1: coordinate {0} has no recovery set")]
    DistanceOne(usize),
    #[error("test set search stopped before covering coordinates {0:?}")]
    Incomplete(BTreeSet<usize>),
    #[error("recovery set of coordinate {coord} contains erased coordinate {erased}")]
    RecoverySetErased { coord: usize, erased: usize },
    #[error("completed vector is not a codeword")]
    NotACodeword,
    #[error("repair stalled; unrecoverable coordinates {0:?}")]
    Stalled(BTreeSet<usize>),
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
