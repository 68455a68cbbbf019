use thiserror::Error;

/// Errors produced by graph construction, spectral analysis, and code
/// classification.
#[derive(Debug, Error)]
pub enum Error {
    /// Intersection array or quotient matrix parameters violate a structural
    /// constraint (wrong lengths, zero entries where positive ones are
    /// required, row sums off, and so on).
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    /// A parameter array failed to produce the expected number of distinct
    /// real eigenvalues.
    #[error("eigenvalue computation failed: {0}")]
    EigenFailure(String),

    /// A scalar passed where an eigenvalue of the graph was required is not
    /// in the spectrum.
    #[error("{0} is not an eigenvalue of the graph")]
    NotAnEigenvalue(String),

    /// The eigenvalues of a quotient matrix are not a subset of the graph
    /// spectrum, so the alleged code cannot be completely regular.
    #[error("quotient spectrum escapes the graph spectrum: {0}")]
    LloydViolation(String),

    /// The graph admits no Q-polynomial ordering, so orderings of code
    /// eigenvalues cannot be ranked against one.
    #[error("graph admits no Q-polynomial ordering")]
    GraphNotQPoly,

    /// An ordering search space exceeds the factorial bound.
    #[error("ordering search over {0} eigenvalues exceeds the supported bound of {1}")]
    SearchSpaceTooLarge(usize, usize),

    /// Parameter reconstruction hit a vanishing denominator that the
    /// termination rule does not cover.
    #[error("degenerate eigenvector data at induction step {0}")]
    DegenerateEigenvector(usize),

    /// Parameter reconstruction failed to terminate within the step bound.
    #[error("parameter reconstruction exceeded {0} induction steps")]
    NonTermination(usize),

    /// Input expansion data is not consistent with any completely regular
    /// code (residual check or final validation failed).
    #[error("expansion data inconsistent: {0}")]
    InconsistentData(String),

    /// A structural fact guaranteed for completely regular codes in this
    /// setting fails, so the input is not what it claims to be.
    #[error("structural lemma violated: {0}")]
    LemmaViolation(String),

    /// The code is empty or covers every vertex; distance partitions and
    /// quotients are undefined or vacuous.
    #[error("trivial code: {0}")]
    TrivialCode(String),

    /// The vertex set is not a subgroup, so coset machinery does not apply.
    #[error("code is not additive: {0}")]
    NotAdditive(String),

    /// A requested construction would exceed the ambient size bound.
    #[error("ambient space too large: {0}")]
    AmbientTooLarge(String),

    /// Input text could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
