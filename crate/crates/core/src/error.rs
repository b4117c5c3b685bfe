use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("division by zero")]
    ZeroDivision,
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("axiom `{axiom}` fails at basis tuple {witness:?}")]
    AxiomFailure { axiom: String, witness: Vec<usize> },
    #[error("antipode is not invertible")]
    AntipodeNotInvertible,
    #[error("not a cocycle: {0}")]
    NotACocycle(String),
    #[error("not lazy: {0}")]
    NotLazy(String),
    #[error("not colinear: {0}")]
    NotColinear(String),
    #[error("not a Galois object: {0}")]
    NotGalois(String),
    #[error("characteristic 2 is not supported here")]
    CharTwo,
    #[error("invalid datum: {0}")]
    InvalidDatum(String),
    #[error("symmetric tensor is not invariant under the group action")]
    NotInvariant,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matched pair axiom fails: {0}")]
    NotMatched(String),
    #[error("algebra map list is not certified complete")]
    IncompleteWitnessSet,
    #[error("incompatible triplet: {0}")]
    IncompatibleTriplet(String),
    #[error("not an r-form: {0}")]
    NotAnRForm(String),
    #[error("not a lazy algebra map: {0}")]
    NotLazyAlgebraMap(String),
    #[error("matched pair has nontrivial actions")]
    NontrivialActions,
    #[error("not a Hopf algebra morphism: {0}")]
    NotAHopfMap(String),
    #[error("search space too large: residual dimension {residual_dim}")]
    SearchSpaceTooLarge { residual_dim: usize },
    #[error("no generator data available for exact enumeration")]
    NoGeneratorData,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, HopfError>;

impl HopfError {
    pub(crate) fn axiom(axiom: &str, witness: Vec<usize>) -> Self {
        HopfError::AxiomFailure {
            axiom: axiom.to_string(),
            witness,
        }
    }
}
