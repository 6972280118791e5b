use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty point set")]
    EmptyInput,
    #[error("points have inconsistent lengths: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the zero vector has no primitive direction")]
    ZeroVector,
    #[error("matrix must be square and nonsingular")]
    SingularMatrix,
    #[error("expected a simplex, got a polytope with {vertices} vertices in dimension {dim}")]
    NotSimplex { vertices: usize, dim: usize },
    #[error("expected a {expected}-dimensional polytope, got dimension {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("polytope is not Gorenstein")]
    NotGorenstein,
    #[error("vertex {0:?} does not lie in the given sublattice")]
    NotInLattice(Vec<String>),
    #[error("the given faces do not form a join")]
    NotAJoin,
    #[error("the given faces do not form a Cayley join")]
    NotACayleyJoin,
    #[error("not a face of the polytope")]
    NotAFace,
    #[error("poset is not graded: {0}")]
    NotGraded(String),
    #[error("polytopes with more than {0} vertices are not supported")]
    TooManyVertices(usize),
    #[error("invalid input: {0}")]
    Invalid(String),
    /// A computed quantity violated an identity that is a theorem. Indicates a bug.
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
    /// A theorem-level equivalence check produced a counterexample.
    #[error("falsification: {0}")]
    Falsification(String),
}
