use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid generator index {0}")]
    InvalidGenerator(i64),
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<u8>),
    #[error("edge oriented toward the identity: l(w s) < l(w)")]
    EdgeTowardIdentity,
    #[error("unknown root [{0}]: not in the recorded truncation")]
    UnknownRoot(String),
    #[error("polar undefined: the center has no affine dual line")]
    PolarUndefined,
    #[error("points coincide: no unique line")]
    CoincidentPoints,
    #[error("degenerate line normal (zero or proportional to (1,1,1))")]
    DegenerateLine,
    #[error("point is not in the affine plane x+y+z=1")]
    NotAffine,
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("R or B empty at truncation")]
    Degenerate,
    #[error("input not parabolic biclosed: face {face} has color changes at {positions:?}")]
    NotParabolicBiclosed { face: String, positions: Vec<i64> },
    #[error("snakes meet at a vertex; use weak_sep_lines for finite sets")]
    FiniteOutcome,
    #[error("color requested outside the truncation")]
    OutsideTruncation,
    #[error("parse error: {0}")]
    Parse(String),
}
