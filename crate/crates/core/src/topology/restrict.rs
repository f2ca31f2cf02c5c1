use alloc::vec::Vec;

use crate::cones::{Sign, SignOracle};
use crate::groups::GroupElement;

use super::Ball;

/// The finite trace of a cone on a ball: one sign per nonidentity member,
/// aligned with the ball's member order (identity omitted).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeRestriction {
    signs: Vec<Sign>,
}

impl ConeRestriction {
    /// Sign of the member at a ball index; None at the identity.
    pub fn sign_at(&self, member_index: usize) -> Option<Sign> {
        if member_index == 0 {
            None
        } else {
            self.signs.get(member_index - 1).copied()
        }
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }
}

/// Total sign assignment of an oracle on a ball.
pub fn restrict_cone<E, O>(oracle: &O, ball: &Ball<E>) -> ConeRestriction
where
    E: GroupElement,
    O: SignOracle<E>,
{
    let signs = ball
        .members()
        .iter()
        .skip(1)
        .map(|m| oracle.element_sign(&m.element))
        .collect();
    ConeRestriction { signs }
}
