//! Positive-cone oracles on the three groups: parameter cones on BS(1,n)
//! indexed by a quadratic irrational, enumeration cones on Thompson's F,
//! and sign-sequence cones on H∞, together with conjugation actions and a
//! finite cone-axiom checker.

mod axioms;
mod enumcone;
mod signseq;
mod smirnov;

pub use axioms::{cone_axiom_check, AxiomCheckReport, AxiomViolation};
pub use enumcone::{enum_rational, unit_rationals, EnumCone, EnumDecision};
pub use signseq::{extend_prefix_cone, SignSeqCone};
pub use smirnov::SmirnovCone;

use core::fmt;

use crate::groups::GroupElement;

/// Side of a positive cone: every nonidentity element is either positive
/// or negative, exclusively.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Pos => write!(f, "pos"),
            Sign::Neg => write!(f, "neg"),
        }
    }
}

/// Total sign function on the nonidentity elements of one group.
/// Callers must not pass the identity.
pub trait SignOracle<E> {
    fn element_sign(&self, g: &E) -> Sign;
}

/// A cone family with a computable conjugation action h·P = hPh⁻¹.
pub trait ConjugableCone: Clone + Eq + fmt::Display {
    type Element: GroupElement + fmt::Display;

    fn checked_sign(&self, g: &Self::Element) -> Result<Sign, ConeError>;

    /// hPh⁻¹; fails only on structural mismatch (e.g. different base).
    fn conjugated_by(&self, h: &Self::Element) -> Result<Self, ConeError>;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeError {
    /// Signs are defined only away from the identity.
    IdentityInput,
    /// Cone and element live over different BS(1,n) bases.
    BaseMismatch(u32, u32),
    /// Enumeration prefix entries must be distinct rationals in (0,1).
    InvalidPrefix(alloc::string::String),
}

impl fmt::Display for ConeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConeError::IdentityInput => write!(f, "the identity has no sign"),
            ConeError::BaseMismatch(a, b) => write!(f, "base mismatch: {a} vs {b}"),
            ConeError::InvalidPrefix(why) => write!(f, "invalid enumeration prefix: {why}"),
        }
    }
}

impl core::error::Error for ConeError {}
