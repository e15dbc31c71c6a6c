use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(String, String),

    #[error("not divisible")]
    NotDivisible,

    #[error("division by zero")]
    DivisionByZero,

    #[error("negative exponent present")]
    NegativeExponent,

    #[error("not symmetric in the u-variables")]
    NotSymmetric,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("exchange axiom violated: bases {0:?} and {1:?}")]
    ExchangeAxiom(Vec<usize>, Vec<usize>),

    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("loops present")]
    LoopsPresent,

    #[error("malformed flag: {0}")]
    MalformedFlag(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("division by e_{0} failed")]
    RaisingDivision(usize),

    #[error("nonzero terms below codim {0}")]
    BelowCodim(usize),

    #[error("repeated or degenerate evaluation point")]
    DegeneratePoint,

    #[error("interpolation failure: {0}")]
    Interpolation(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("non-integer value where an integer was required: {0}")]
    NonInteger(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Short machine-readable code used in JSON error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ArityMismatch(..) => "arity_mismatch",
            Error::NotDivisible => "not_divisible",
            Error::DivisionByZero => "division_by_zero",
            Error::NegativeExponent => "negative_exponent",
            Error::NotSymmetric => "not_symmetric",
            Error::InvalidPartition(_) => "invalid_partition",
            Error::ExchangeAxiom(..) => "exchange_axiom",
            Error::InvalidMatroid(_) => "invalid_matroid",
            Error::RankMismatch { .. } => "rank_mismatch",
            Error::LoopsPresent => "loops_present",
            Error::MalformedFlag(_) => "malformed_flag",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::SizeMismatch(..) => "size_mismatch",
            Error::RaisingDivision(_) => "raising_division",
            Error::BelowCodim(_) => "below_codim",
            Error::DegeneratePoint => "degenerate_point",
            Error::Interpolation(_) => "interpolation",
            Error::ResourceLimit(_) => "resource_limit",
            Error::NonInteger(_) => "non_integer",
            Error::Hypothesis(_) => "hypothesis",
            Error::Parse(_) => "parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
