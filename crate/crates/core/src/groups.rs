//! Exact engines for the three groups: BS(1,n) as affine maps of the line,
//! Thompson's group F as piecewise-linear homeomorphisms of [0,1] with dyadic
//! breakpoints and power-of-two slopes, and H∞ by normal-form rewriting.

mod bs;
mod hinf;
mod pl;
mod word;

pub use bs::BSElement;
pub use hinf::HInfElement;
pub use pl::{bump, BumpDirection, DyadicInterval, PLMap};
pub use word::{parse_letters, render_letters, Letter};

use alloc::string::String;
use core::fmt;

/// Group elements in canonical form. `mul` and `inverse` assume both
/// operands belong to the same group instance (for BS(1,n): the same base);
/// the fallible per-group methods check this explicitly.
pub trait GroupElement: Clone + Eq + Ord + fmt::Debug {
    fn mul(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    fn is_identity(&self) -> bool;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    /// BS(1,n) elements over different bases cannot be combined.
    BaseMismatch(u32, u32),
    /// The operation is undefined on the identity.
    IdentityInput,
    /// Evaluation point outside the domain [0,1].
    OutOfDomain(String),
    /// Breakpoint list fails a piecewise-linear invariant.
    InvalidBreakpoints(String),
    /// Interval bounds must satisfy 0 <= lo < hi <= 1.
    InvalidInterval(String),
    /// H∞ exponent arithmetic exceeded the fixed-width range.
    ExponentOverflow,
    /// H∞ generator indices are 1-based.
    InvalidGeneratorIndex(i64),
    /// Unknown letter in a two-generator word.
    BadLetter(char),
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::BaseMismatch(a, b) => write!(f, "base mismatch: {a} vs {b}"),
            GroupError::IdentityInput => write!(f, "operation undefined on the identity"),
            GroupError::OutOfDomain(t) => write!(f, "point {t} outside [0,1]"),
            GroupError::InvalidBreakpoints(why) => write!(f, "invalid breakpoints: {why}"),
            GroupError::InvalidInterval(why) => write!(f, "invalid interval: {why}"),
            GroupError::ExponentOverflow => write!(f, "exponent overflow"),
            GroupError::InvalidGeneratorIndex(i) => {
                write!(f, "invalid generator index {i}, need a nonzero signed index")
            }
            GroupError::BadLetter(c) => write!(f, "unknown letter {c:?}, expected a, A, b or B"),
        }
    }
}

impl core::error::Error for GroupError {}

impl From<crate::exactnum::ExactError> for GroupError {
    fn from(e: crate::exactnum::ExactError) -> Self {
        match e {
            crate::exactnum::ExactError::BaseMismatch(a, b) => GroupError::BaseMismatch(a, b),
            other => GroupError::InvalidBreakpoints(alloc::format!("{other}")),
        }
    }
}
