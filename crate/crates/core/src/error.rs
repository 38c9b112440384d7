use thiserror::Error;

/// Errors surfaced by the kernel. Violated mathematical invariants inside
/// the constructions themselves are bugs and panic instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole: denominator {denom} vanishes at alpha = {at}")]
    Pole { denom: String, at: String },

    #[error("cannot parse scalar from {0:?}")]
    ParseScalar(String),

    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("elements belong to different algebras: {0} vs {1}")]
    AlgebraMismatch(String, String),

    #[error("subspace is not closed under the bracket")]
    NotBracketClosed,

    #[error("ad h does not preserve the subspace")]
    NotInvariant,

    #[error("group element does not preserve the subspace")]
    NotPreserved,

    #[error("non-simple parameter: alpha = {0} (requires alpha not in {{0, -1}})")]
    NonSimpleParameter(String),

    #[error("unknown algebra {0:?}")]
    UnknownAlgebra(String),

    #[error("unknown case {case:?} for {algebra}")]
    UnknownCase { algebra: String, case: String },

    #[error("construction error in {algebra}: {detail}")]
    Construction { algebra: String, detail: String },

    #[error("{0} is not an ad-eigenvector for the given h")]
    NotEigenvector(String),

    #[error("no sl(2)-triple completion: {0}")]
    NoTriple(String),

    #[error("inconsistent eigenvalue multiplicities: {0}")]
    BadLadder(String),

    #[error("sign of {0} is ambiguous over Q(alpha); pass a concrete --alpha")]
    SymbolicSign(String),

    #[error("data table error in {file}: {detail}")]
    Table { file: String, detail: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
