use thiserror::Error;

use crate::scomplex::Simplex;

/// Unified error type for every fallible operation in the crate.
///
/// `SizeLimit` marks refusals of inputs beyond the documented desk-scale
/// caps; `NonRegularStep` and `Internal` mark violations of invariants that
/// are guaranteed for valid (shifted) inputs and therefore indicate a bug
/// if they ever fire.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: u32, n: u32 },

    #[error("duplicate vertex {vertex} in face")]
    DuplicateVertex { vertex: u32 },

    #[error("{what} supports at most {limit}, got {got}")]
    SizeLimit {
        what: &'static str,
        limit: u64,
        got: u64,
    },

    #[error("{arg} is not a face of the complex")]
    NotAFace { arg: Simplex },

    #[error("not shifted: face {face} with {v} replaced by {v_prime} is not a face")]
    NotShifted { face: Simplex, v: u32, v_prime: u32 },

    #[error("ghost vertex {vertex} (in the ground set but not a face)")]
    GhostVertex { vertex: u32 },

    #[error("index supports {left} and {right} overlap")]
    OverlappingSupports { left: Simplex, right: Simplex },

    #[error("invalid parameter: {0}")]
    BadParameter(String),

    #[error("invalid glue specification: {0}")]
    BadGlue(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("denominator has zero constant term, power series undefined")]
    NonInvertibleDenominator,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("non-regular step at {face}: {missing} is not available to subtract")]
    NonRegularStep { face: Simplex, missing: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
