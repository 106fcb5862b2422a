use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum TaijiError {
    #[error("value {0} lies outside the unit interval [0, 1]")]
    OutOfUnitInterval(f64),
    #[error("non-finite input: {0}")]
    NonFinite(f64),
    #[error("triangle leg must be positive, got {0}")]
    NonPositiveLeg(f64),
    #[error("chord abscissa {chord} does not match interpolation abscissa {x}")]
    ChordMismatch { x: f64, chord: f64 },
    #[error("derivative undefined at endpoint x = {0} (vertical tangent)")]
    EndpointSingularity(f64),
    #[error("need at least 2 samples, got {0}")]
    TooFewSamples(usize),
    #[error("adaptive quadrature exceeded depth {depth} on [{lo}, {hi}]")]
    MaxDepthExceeded { depth: u32, lo: f64, hi: f64 },
    #[error("bracket [{lo}, {hi}] does not straddle a sign change")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("integration interval [{lo}, {hi}] is empty or not finite")]
    InvalidInterval { lo: f64, hi: f64 },
    #[error("invalid diagram spec: {0}")]
    InvalidSpec(String),
    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),
    #[error("malformed path data: {0}")]
    MalformedPath(String),
}

pub type Result<T, E = TaijiError> = std::result::Result<T, E>;
