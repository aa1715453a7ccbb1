use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("cannot differentiate a series of truncation order 0")]
    EmptyDerivative,

    #[error("series must have constant term {expected}, found {found}")]
    Normalization { expected: f64, found: Complex64 },

    #[error("point {0} lies outside the open unit disk")]
    Domain(Complex64),

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("lambda = {0} is outside (-pi/2, pi/2)")]
    InvalidLambda(f64),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("map is not in signed form (a_n <= 0, b_n >= 0 real): {0}")]
    SignedForm(String),

    #[error("{0} requires a signed-form map")]
    Class(&'static str),

    #[error("|f| = {modulus:e} at z = {z} is below the division guard")]
    NearZero { z: Complex64, modulus: f64 },

    #[error("near-zero denominator at epsilon = {eps}, z = {z}")]
    NearZeroEpsilon { eps: Complex64, z: Complex64 },

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("constraint violated: {0}")]
    Constraint(String),

    #[error("decomposition infeasible: X_1 = {0} < 0")]
    DecompositionInfeasible(f64),

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: String, reason: String },
}
