use std::fmt;

/// Errors surfaced by the kernel. Everything that can go wrong on valid-shaped
/// input is reported as a value, never a panic; panics are reserved for broken
/// internal invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two objects built over different ground fields were combined.
    FieldMismatch,
    /// Dimensions or gradings of the inputs do not line up.
    ShapeMismatch(String),
    /// A field specification was invalid (e.g. non-prime modulus).
    InvalidField(String),
    DuplicateBasisName(String),
    UnknownBasisName(String),
    /// A quotient generator was not homogeneous.
    NonHomogeneousGenerator(String),
    /// The span of the proposed ideal is not a coideal; carries a witness.
    NotACoideal(String),
    /// The convolution-inverse system for the antipode is inconsistent.
    NoAntipode,
    /// An operation requiring a verified object was handed one that fails its axioms.
    UnverifiedInput(String),
    /// The request falls outside the decidable scope of the kernel.
    Unsupported(String),
    /// A solver reached a state the underlying theory rules out; signals a bug.
    Inconsistent(String),
    /// Spec-file syntax or semantic error with a 1-based line number.
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::FieldMismatch => write!(f, "field mismatch"),
            Error::ShapeMismatch(m) => write!(f, "shape mismatch: {m}"),
            Error::InvalidField(m) => write!(f, "invalid field: {m}"),
            Error::DuplicateBasisName(n) => write!(f, "duplicate basis name: {n}"),
            Error::UnknownBasisName(n) => write!(f, "unknown basis name: {n}"),
            Error::NonHomogeneousGenerator(m) => write!(f, "non-homogeneous generator: {m}"),
            Error::NotACoideal(m) => write!(f, "ideal is not a coideal: {m}"),
            Error::NoAntipode => write!(f, "no antipode: convolution inverse system is inconsistent"),
            Error::UnverifiedInput(m) => write!(f, "unverified input: {m}"),
            Error::Unsupported(m) => write!(f, "unsupported: {m}"),
            Error::Inconsistent(m) => write!(f, "internal inconsistency: {m}"),
            Error::Parse { line, msg } => write!(f, "parse error at line {line}: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
