use thiserror::Error;

/// Failures surfaced by the library.
///
/// `MalformedInput` covers syntactic problems with what the caller handed
/// in; every other variant is a domain error about the arrangement itself.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed-input: {0}")]
    MalformedInput(String),
    #[error("invalid-form: form {index} is the zero vector")]
    InvalidForm { index: usize },
    #[error("duplicate-hyperplane: forms {first} and {second} are proportional")]
    DuplicateHyperplane { first: usize, second: usize },
    #[error("invalid-parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid-index: {index} is outside 1..={count}")]
    InvalidIndex { index: usize, count: usize },
    #[error("not-a-flat: index set {0:?} is not closed")]
    NotAFlat(Vec<usize>),
    #[error("empty-arrangement: the arrangement has no hyperplanes")]
    EmptyArrangement,
    #[error("not-irreducible: the arrangement splits into {blocks} blocks")]
    NotIrreducible { blocks: usize },
    #[error("not-logarithmic: derivation {derivation} fails on form {form}")]
    NotLogarithmic { derivation: usize, form: usize },
    #[error("freeness-required: {0}")]
    FreenessRequired(String),
    #[error("asymmetry: factor {0} has no partner under s -> -s-2")]
    Asymmetry(String),
}

impl Error {
    pub fn is_malformed(&self) -> bool {
        matches!(self, Error::MalformedInput(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
