// SPDX-License-Identifier: Apache-2.0
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidCase(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid partition {0:?} for this family")]
    InvalidPartition(Vec<usize>),
    #[error("h is not dominant: simple root {index} takes value {value}")]
    NotDominant { index: usize, value: String },
    #[error("malformed tableau: {0}")]
    MalformedTableau(String),
    #[error("zero denominator: root set is not a positive system")]
    ZeroDenominator,
    #[error("lambda-degenerate: P_(L∩K)(λ) = 0 at λ = {0}")]
    LambdaDegenerate(String),
    #[error("too-large: 2^{required_log2} subsets exceed the term cap {cap}")]
    TooLarge { required_log2: u32, cap: u64 },
    #[error("non-integer-quotient: {0}")]
    NonIntegerQuotient(String),
    #[error("orthogonality-violated: ρ_n(l) is not orthogonal to Δ⁺(l∩k)")]
    OrthogonalityViolated,
    #[error("no real form {index} (the case has {count})")]
    NoSuchForm { index: usize, count: usize },
    #[error("automorphism hypothesis fails: {0}")]
    SigmaHypothesis(String),
    #[error("invalid parity: {0}")]
    InvalidParity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
