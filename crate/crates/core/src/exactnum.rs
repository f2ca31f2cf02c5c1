//! Exact numeric kernel: arbitrary-precision rationals, base-n fractions
//! (values of the form s/nᵗ), and quadratic irrationals (p + q√d)/r with
//! decidable, zero-tolerance comparison.

mod nadic;
mod quad;
mod rational;

pub use nadic::{Dyadic, NAdic};
pub use quad::QuadIrr;
pub use rational::{power_of, Rational};

use alloc::string::String;
use core::fmt;

/// Errors from constructing or combining exact numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactError {
    /// A rational was given a zero denominator.
    ZeroDenominator,
    /// Base of an n-adic number must be at least 2.
    InvalidBase(u32),
    /// Arithmetic on n-adic numbers with different bases.
    BaseMismatch(u32, u32),
    /// The rational has a denominator not supported by the requested base.
    NotBaseRepresentable(String),
    /// Radicand of a quadratic irrational must be squarefree and at least 2.
    NotSquarefree(u32),
    /// The radical coefficient q of a quadratic irrational must be nonzero.
    ZeroRadicalCoefficient,
    /// Scaling a quadratic irrational by zero would produce a rational.
    ZeroScale,
    /// A string did not parse as a rational.
    ParseRational(String),
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::ZeroDenominator => write!(f, "zero denominator"),
            ExactError::InvalidBase(n) => write!(f, "invalid base {n}, need n >= 2"),
            ExactError::BaseMismatch(a, b) => write!(f, "base mismatch: {a} vs {b}"),
            ExactError::NotBaseRepresentable(s) => {
                write!(f, "{s} is not representable in the requested base")
            }
            ExactError::NotSquarefree(d) => {
                write!(f, "radicand {d} must be squarefree and >= 2")
            }
            ExactError::ZeroRadicalCoefficient => {
                write!(f, "radical coefficient must be nonzero")
            }
            ExactError::ZeroScale => write!(f, "scale factor must be nonzero"),
            ExactError::ParseRational(s) => write!(f, "cannot parse {s:?} as a rational"),
        }
    }
}

impl core::error::Error for ExactError {}
