use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("zero has no multiplicative order or index")]
    ZeroElement,
    #[error("element does not generate the multiplicative group")]
    NotGenerator,
    #[error("field of order {0} exceeds the supported size")]
    FieldTooLarge(String),
    #[error("cannot parse element {0:?}: {1}")]
    Parse(String, String),

    #[error("l = {0} is not an odd prime")]
    LNotOddPrime(u64),
    #[error("p = {0} is not prime")]
    PNotPrime(u64),
    #[error("e = {e} must be l or 2l (l = {l})")]
    InvalidExponent { e: u64, l: u64 },
    #[error("p = l = {0}: the order of p modulo l is undefined")]
    PDividesL(u64),
    #[error("e = 2l requires an odd characteristic")]
    PEvenWith2l,
    #[error("order of p = {p} modulo l = {l} is {f}, which is odd")]
    OrderNotEven { p: u64, l: u64, f: u64 },
    #[error("q is not congruent to 1 modulo e = {0}")]
    CongruenceFailure(u64),
    #[error("extension multiplier s must be at least 1")]
    InvalidMultiplier,
    #[error("curve coefficients must be nonzero")]
    ZeroCoefficient,

    #[error("index pair ({i}, {j}) matches no case")]
    Unclassifiable { i: u64, j: u64 },
    #[error("case family does not match the curve degree")]
    FamilyMismatch,
    #[error("closed form division is not exact")]
    InexactDivision,
    #[error("{0} is not a perfect square")]
    NotASquare(String),
    #[error("brute force needs about {estimated} operations, budget is {budget}")]
    BudgetExceeded { estimated: u128, budget: u128 },
}

impl Error {
    /// Stable variant name, printed on the diagnostic stream by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::DivisionByZero => "DivisionByZero",
            Error::MixedFields => "MixedFields",
            Error::ZeroElement => "ZeroElement",
            Error::NotGenerator => "NotGenerator",
            Error::FieldTooLarge(_) => "FieldTooLarge",
            Error::Parse(..) => "ParseError",
            Error::LNotOddPrime(_) => "LNotOddPrime",
            Error::PNotPrime(_) => "PNotPrime",
            Error::InvalidExponent { .. } => "InvalidExponent",
            Error::PDividesL(_) => "PDividesL",
            Error::PEvenWith2l => "PEvenWith2l",
            Error::OrderNotEven { .. } => "OrderNotEven",
            Error::CongruenceFailure(_) => "CongruenceFailure",
            Error::InvalidMultiplier => "InvalidMultiplier",
            Error::ZeroCoefficient => "ZeroCoefficient",
            Error::Unclassifiable { .. } => "Unclassifiable",
            Error::FamilyMismatch => "FamilyMismatch",
            Error::InexactDivision => "InexactDivision",
            Error::NotASquare(_) => "NotASquare",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
        }
    }
}
