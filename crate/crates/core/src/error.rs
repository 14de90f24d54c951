use thiserror::Error;

/// Every failure the library can report.
///
/// [`Error::code`] gives the stable upper-case identifier used in CLI
/// messages and tests.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NonPrime(u32),
    #[error("generator `{0}` declared more than once")]
    DuplicateGenerator(String),
    #[error("generator `{0}` has odd degree over an odd prime, so its square must vanish (nilpotency 2)")]
    OddDegreeNotSquareZero(String),
    #[error("generator `{name}`: {reason}")]
    BadNilpotency { name: String, reason: String },
    #[error("generator `{0}` has degree 0")]
    BadDegree(String),
    #[error("degree cap {cap} is below the degree {degree} of generator `{name}`")]
    BadDegreeCap { cap: u32, name: String, degree: u32 },
    #[error("monomials belong to different algebras")]
    AlgebraMismatch,
    #[error("cannot parse monomial `{text}` at byte {pos}: {reason}")]
    Parse {
        text: String,
        pos: usize,
        reason: String,
    },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("monomial `{0}` is zero in this algebra")]
    ZeroMonomial(String),
    #[error("weight {weight} of `{class}` is outside 1..={degree}")]
    WeightExceedsDegree {
        class: String,
        weight: u32,
        degree: u32,
    },
    #[error("justification {justification} is not valid for `{class}`: {reason}")]
    BadJustification {
        class: String,
        justification: String,
        reason: String,
    },
    #[error("the product of the sequence vanishes")]
    ZeroProduct,
    #[error("sequence factor `{0}` must appear at least once")]
    ZeroCopies(String),
    #[error("homotopy dimension {hdim} is below the product dimension {top}")]
    HdimBelowTopClass { hdim: i64, top: i64 },
    #[error("no two distinct factors share the minimal weight")]
    IndependenceNotWitnessed,
    #[error("weight assignment is not strict; the swct search needs strict weights")]
    NotStrict,
    #[error("no nonzero monomial within the search budget")]
    EmptySearchSpace,
    #[error("invalid search budget: {0}")]
    BadBudget(String),
    #[error("algebra has no top degree; an explicit degree bound is required")]
    UnboundedAlgebra,
    #[error("{0}")]
    BadParam(String),
    #[error("{0}")]
    UnsupportedCoefficients(String),
    #[error("degree {0} is out of range")]
    DegreeOverflow(u64),
    #[error("sequence has {0} factor copies; brute force is limited to {1}")]
    OracleTooLarge(usize, usize),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonPrime(_) => "NON_PRIME",
            Error::DuplicateGenerator(_) => "DUPLICATE_GENERATOR",
            Error::OddDegreeNotSquareZero(_) => "ODD_DEGREE_NOT_SQUARE_ZERO",
            Error::BadNilpotency { .. } => "BAD_NILPOTENCY",
            Error::BadDegree(_) => "BAD_DEGREE",
            Error::BadDegreeCap { .. } => "BAD_DEGREE_CAP",
            Error::AlgebraMismatch => "ALGEBRA_MISMATCH",
            Error::Parse { .. } => "PARSE_ERROR",
            Error::UnknownGenerator(_) => "UNKNOWN_GENERATOR",
            Error::ZeroMonomial(_) => "ZERO_MONOMIAL",
            Error::WeightExceedsDegree { .. } => "WEIGHT_EXCEEDS_DEGREE",
            Error::BadJustification { .. } => "BAD_JUSTIFICATION",
            Error::ZeroProduct => "ZERO_PRODUCT",
            Error::ZeroCopies(_) => "ZERO_COPIES",
            Error::HdimBelowTopClass { .. } => "HDIM_BELOW_TOP_CLASS",
            Error::IndependenceNotWitnessed => "INDEPENDENCE_NOT_WITNESSED",
            Error::NotStrict => "NOT_STRICT",
            Error::EmptySearchSpace => "EMPTY_SEARCH_SPACE",
            Error::BadBudget(_) => "BAD_BUDGET",
            Error::UnboundedAlgebra => "UNBOUNDED_ALGEBRA",
            Error::BadParam(_) => "BAD_PARAM",
            Error::UnsupportedCoefficients(_) => "UNSUPPORTED_COEFFICIENTS",
            Error::DegreeOverflow(_) => "DEGREE_OVERFLOW",
            Error::OracleTooLarge(..) => "ORACLE_TOO_LARGE",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
