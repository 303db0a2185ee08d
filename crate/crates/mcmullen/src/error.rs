//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors surfaced by the symbolic, numeric and raster layers.
#[derive(Debug, Error)]
pub enum McmError {
    #[error("symbol {0} is outside the index set for n = {1}")]
    InvalidSymbol(i32, u32),

    #[error("invalid itinerary: {0}")]
    InvalidItinerary(String),

    #[error("degree n = {0} is not supported (need n >= 3)")]
    UnsupportedDegree(u32),

    #[error("angles generate the same cut ray")]
    SameCutRay,

    #[error("lambda must be nonzero")]
    ZeroLambda,

    #[error("parameter outside the sector-coding domain: {0}")]
    OutsideCodingDomain(String),

    #[error("point is not certified escaping: {0}")]
    NotEscaping(String),

    #[error("target lies on a critical value ray (branch cut)")]
    BranchCut,

    #[error("no inverse-branch candidate landed in the requested sector")]
    BranchInconsistency,

    #[error("Newton iteration failed: {0}")]
    NewtonFailure(String),

    #[error("numeric iteration did not converge: {0}")]
    NumericFailure(String),

    #[error("result indeterminate: {0}")]
    Indeterminate(String),

    #[error("cut ray touches the critical orbit (graph is touchable)")]
    TouchableRay,

    #[error("operation refused: {0}")]
    Refused(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, McmError>;
