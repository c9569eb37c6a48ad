use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative exponent {0}")]
    NegativeExponent(i64),

    #[error("both polynomials are constant in {0}")]
    ConstantInVariable(String),

    #[error("zero denominator: {0}")]
    ZeroDenominator(String),

    #[error("degree {requested} is smaller than the total degree {actual}")]
    DegreeTooSmall { requested: u32, actual: u32 },

    #[error("ideal is not zero-dimensional")]
    PositiveDimensional,

    #[error("inputs share the common factor {factor}")]
    CommonFactor { factor: String },

    #[error("infinite intersection multiplicity: common component {factor} through the origin")]
    InfiniteMultiplicity { factor: String },

    #[error("the origin is not a common zero")]
    NotACommonZero,

    #[error("regular point: the form does not vanish at the origin")]
    RegularPoint,

    #[error("degenerate singularity (det J = 0); use the residue route")]
    Degenerate,

    #[error("curve is not invariant in chart {chart}")]
    NotInvariant { chart: String },

    #[error("non-isolated singularity: {0}")]
    NonIsolated(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("syntax error at {line}:{column}: found {found}, expected one of {expected:?}")]
    Syntax {
        line: usize,
        column: usize,
        found: String,
        expected: Vec<String>,
    },

    #[error("root finder did not converge after {0} iterations")]
    NonConvergence(usize),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// Whether the error stems from input the library declines to handle
    /// rather than from malformed input.
    pub fn is_unsupported(&self) -> bool {
        matches!(
            self,
            Error::Unsupported(_) | Error::NonConvergence(_) | Error::PositiveDimensional
        )
    }
}
