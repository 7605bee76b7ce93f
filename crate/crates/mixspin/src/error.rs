use crate::coupling::CouplingKind;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{} coupling is singular at R = {r}", kind.cli_name())]
    SingularCoupling { kind: CouplingKind, r: f64 },

    #[error("non-finite {name} = {value}")]
    NonFinite { name: &'static str, value: f64 },

    #[error("temperature must be positive and finite, got T = {0}")]
    NonPositiveTemperature(f64),

    #[error("unsupported spin magnitude s = {0}; this model pairs s = 1/2 with s = 1")]
    UnsupportedSpin(f64),

    #[error("Jacobi eigensolver hit the sweep cap with off-diagonal norm {0:e}")]
    EigenNoConvergence(f64),

    #[error("input is not a unit-trace state: trace = {0}")]
    NotUnitTrace(f64),

    #[error("negativity routes disagree: |sum of negatives - (trace norm - 1)/2| = {0:e}")]
    NegativityRouteMismatch(f64),

    #[error("as-published expression overflowed while evaluating {0}")]
    EvaluationOverflow(&'static str),

    #[error("as-published elements are defined for J0 = 1, got J0 = {0}")]
    PublishedStrength(f64),

    #[error("as-published elements are not defined for the constant coupling")]
    PublishedConstant,

    #[error("invalid sweep spec: {0}")]
    InvalidSpec(String),

    #[error("no threshold crossing in [{lo}, {hi}] at epsilon = {epsilon:e}")]
    NoThreshold { lo: f64, hi: f64, epsilon: f64 },

    #[error("unknown figure preset '{0}'; valid ids: {1}")]
    UnknownPreset(String, &'static str),

    #[error("usage: {0}")]
    Usage(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
