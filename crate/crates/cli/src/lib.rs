//! JSON wire formats, input grammars, and command implementations for the
//! conelab binary. Everything the binary emits round-trips through the
//! typed documents in [`json`]; output bytes are stable across runs.

pub mod commands;
pub mod json;
pub mod parse;

use std::fmt;

/// Process-level outcome classes, mapped to exit codes in main.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Exit 3: arguments or input documents that fail to parse or validate.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Exit 1: a verification that ran to completion and failed.
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    /// Exit 3: filesystem trouble reading or writing documents.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::VerificationFailed(_) => 1,
            CliError::InvalidInput(_) | CliError::Io(_) => 3,
        }
    }

    pub fn invalid(e: impl fmt::Display) -> Self {
        CliError::InvalidInput(e.to_string())
    }
}

/// Safety cap on ball radii (construction and deserialization alike),
/// overridable through CONELAB_MAX_RADIUS.
pub fn max_ball_radius() -> u32 {
    std::env::var("CONELAB_MAX_RADIUS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(10)
}
