use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime modulus")]
    NotPrime(u32),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("relation is not admissible: {0}")]
    NonAdmissible(String),
    #[error("algebra is infinite dimensional or too large: new paths remain at length {0}")]
    InfiniteDimensional(usize),
    #[error("objects live over different algebras")]
    MixedAlgebras,
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("invalid module map: {0}")]
    InvalidMap(String),
    #[error("isomorphism test undecided after exhausting the search cap")]
    UndecidedIsomorphism,
    #[error("decomposition undecided: {0}")]
    DecompositionUndecided(String),
    #[error("endomorphism algebra is not split over F_{0}")]
    NotSplit(u32),
    #[error("ambiguous completion during mutation: {0}")]
    AmbiguousCompletion(String),
    #[error("resource cap exceeded: {0}")]
    CapExceeded(String),
    #[error("not found: {0}")]
    NotFound(String),
    #[error("invalid pair: {0}")]
    InvalidPair(String),
}
