use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined for the zero polynomial: {0}")]
    ZeroPolynomial(&'static str),
    #[error("cyclotomic index must be positive")]
    ZeroCyclotomicIndex,
    #[error("cannot parse polynomial {input:?}: {reason}")]
    PolyParse { input: String, reason: String },
    #[error("coefficient {0} does not fit the integer triple exchange format")]
    TripleOverflow(String),
    #[error("module is not torsion (free rank {free_rank})")]
    NotTorsion { free_rank: usize },
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid singularity descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("invalid braid word: {0}")]
    InvalidBraid(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("Milnor number {milnor} exceeds the enumeration cap {cap}")]
    MilnorCap { milnor: u128, cap: u128 },
}

impl Error {
    /// Whether the error is a violated mathematical precondition, as opposed
    /// to malformed input.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::ZeroPolynomial(_) | Error::NotTorsion { .. } | Error::Unsupported(_) | Error::MilnorCap { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
