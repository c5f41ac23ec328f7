use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("ray {ray} is not primitive (gcd of its entries is {gcd})")]
    RaysNotPrimitive { ray: usize, gcd: i64 },

    #[error("cone {cone} is not simplicial: {reason}")]
    NotSimplicial { cone: usize, reason: String },

    #[error("fan is not complete: {0}")]
    NotComplete(String),

    #[error("cones {first} and {second} do not meet in a common face")]
    NotAFan { first: usize, second: usize },

    #[error("divisor is not Cartier: no integral form on cone {cone}")]
    NotCartier { cone: usize },

    #[error("Cayley fan needs at least two line bundles, got {0}")]
    DegenerateCayley(usize),

    #[error("degree is not reachable from the variable degrees")]
    NoSolution,

    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("polynomial is not homogeneous: `{first}` and `{second}` have different degrees")]
    NotHomogeneous { first: String, second: String },

    #[error("zero polynomial has no degree")]
    ZeroPolynomial,

    #[error("grading admits a nonzero monomial of degree zero; graded pieces are infinite")]
    UnboundedFiber,

    #[error("empty system: at least one hypersurface is required")]
    EmptySystem,

    #[error("theorem hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("negative Hodge number {value} at p = {p} after the middle correction")]
    NegativeEntry { p: usize, value: i64 },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// Machine-readable code used by the command line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Malformed(_) => "Malformed",
            Error::RaysNotPrimitive { .. } => "RaysNotPrimitive",
            Error::NotSimplicial { .. } => "NotSimplicial",
            Error::NotComplete(_) => "NotComplete",
            Error::NotAFan { .. } => "NotAFan",
            Error::NotCartier { .. } => "NotCartier",
            Error::DegenerateCayley(_) => "DegenerateCayley",
            Error::NoSolution => "NoSolution",
            Error::Syntax { .. } => "SyntaxError",
            Error::UnknownVariable(_) => "UnknownVariable",
            Error::NotHomogeneous { .. } => "NotHomogeneous",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::UnboundedFiber => "UnboundedFiber",
            Error::EmptySystem => "EmptySystem",
            Error::HypothesisViolated(_) => "HypothesisViolated",
            Error::NegativeEntry { .. } => "NegativeEntry",
            Error::Internal(_) => "Internal",
        }
    }

    /// Process exit status: 2 for invalid input, 3 for a violated theorem
    /// hypothesis, 4 for internal inconsistencies.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::HypothesisViolated(_) => 3,
            Error::NegativeEntry { .. } | Error::Internal(_) => 4,
            _ => 2,
        }
    }
}
