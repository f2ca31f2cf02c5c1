//! Finite approximations of the space of left-orderings: Cayley balls with
//! shortest words, cone restrictions (the finite trace of a cone in the
//! product topology), and condensation witnesses at finite resolution.

mod ball;
mod resolution;
mod restrict;

pub use ball::{cayley_ball, Ball, BallLetter, BallMember, Generator};
pub use resolution::{signseq_condensed_at_resolution, smirnov_condensed_at_resolution};
pub use restrict::{restrict_cone, ConeRestriction};

use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TopologyError {
    /// A ball needs at least one generator.
    NoGenerators,
    /// Generators must be nonidentity.
    IdentityGenerator(String),
    /// A deserialized ball failed validation.
    MalformedBall(String),
}

impl fmt::Display for TopologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologyError::NoGenerators => write!(f, "generator list is empty"),
            TopologyError::IdentityGenerator(label) => {
                write!(f, "generator {label:?} is the identity")
            }
            TopologyError::MalformedBall(why) => write!(f, "malformed ball: {why}"),
        }
    }
}

impl core::error::Error for TopologyError {}
