use thiserror::Error;

use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("p has length {p} but g has length {g}")]
    LengthMismatch { p: usize, g: usize },

    #[error("resource state must have at least one level")]
    Empty,

    #[error("p[{index}] = {value} is negative")]
    NegativeProbability { index: usize, value: Rational },

    #[error("p sums to {0}, expected 1")]
    NotNormalized(Rational),

    #[error("g[{index}] = {value} is not strictly positive")]
    NonPositiveGibbs { index: usize, value: Rational },

    #[error("g sums to {0}, expected 1")]
    GibbsNotNormalized(Rational),

    #[error("invalid Hamiltonian: {0}")]
    InvalidHamiltonian(String),

    #[error("Gibbs weight of level {index} rounds to zero at {precision} digits")]
    PrecisionTooLow { index: usize, precision: u32 },

    #[error("malformed linear program: {0}")]
    MalformedLp(String),

    #[error("kink undefined: state coincides with the Gibbs state")]
    NoKink,

    #[error("proxy must be positive, got {0}")]
    NonPositiveProxy(Rational),

    #[error("epsilon must lie in (0, 1), got {0}")]
    EpsilonOutOfRange(Rational),

    #[error("epsilon {epsilon} makes t negative; it must be below {threshold}")]
    EpsilonTooLarge {
        epsilon: Box<Rational>,
        threshold: Box<Rational>,
    },

    #[error("witness does not fit the states: {0}")]
    InvalidWitness(String),

    #[error("lifted map failed verification: {0}")]
    LiftVerification(String),

    #[error("beta must be positive and finite, got {0}")]
    InvalidBeta(f64),

    #[error("erasure needs at least two levels, got {0}")]
    TooFewLevels(usize),

    #[error("Renyi order must be non-negative and different from 1, got {0}")]
    InvalidRenyiOrder(Rational),

    #[error("unknown {kind} {name:?}")]
    UnknownStrategy { kind: &'static str, name: String },
}
