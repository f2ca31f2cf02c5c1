use alloc::vec::Vec;
use core::fmt;

use crate::groups::HInfElement;

use super::{ConeError, ConjugableCone, Sign, SignOracle};

/// Positive cone on H∞ encoded by an eventually constant bit sequence
/// ε₁ε₂…: bit i records whether the generator xᵢ is positive. Because each
/// subgroup generated by x₁,…,xⱼ is convex in the next one, the sign of a
/// normal form is read off at its top index.
///
/// Canonical form: the stored prefix never ends with the tail bit, so
/// structural equality is equality of sequences.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignSeqCone {
    prefix: Vec<bool>,
    tail: bool,
}

impl SignSeqCone {
    pub fn new(mut prefix: Vec<bool>, tail: bool) -> Self {
        while prefix.last() == Some(&tail) {
            prefix.pop();
        }
        SignSeqCone { prefix, tail }
    }

    pub fn constant(tail: bool) -> Self {
        SignSeqCone { prefix: Vec::new(), tail }
    }

    pub fn prefix(&self) -> &[bool] {
        &self.prefix
    }

    pub fn tail(&self) -> bool {
        self.tail
    }

    /// εᵢ for a 1-based position.
    pub fn bit(&self, position: u32) -> bool {
        debug_assert!(position >= 1);
        self.prefix
            .get(position as usize - 1)
            .copied()
            .unwrap_or(self.tail)
    }

    /// Sign from the top index: positive exponent with bit 1, or negative
    /// exponent with bit 0.
    pub fn sign(&self, w: &HInfElement) -> Result<Sign, ConeError> {
        let top = w.top_index().ok_or(ConeError::IdentityInput)?;
        let leading = w.exponent(top);
        let positive = (leading > 0) == self.bit(top);
        Ok(if positive { Sign::Pos } else { Sign::Neg })
    }

    /// wPw⁻¹. Each letter xⱼ^±1 of w with j ≥ 2 flips bit j−1, so position
    /// p flips exactly when the exponent of x_{p+1} is odd; x₁ acts
    /// trivially. Only finitely many bits change, all below the top index.
    pub fn conjugate(&self, w: &HInfElement) -> SignSeqCone {
        let top = match w.top_index() {
            Some(t) => t as usize,
            None => return self.clone(),
        };
        let width = self.prefix.len().max(top.saturating_sub(1));
        let mut bits: Vec<bool> = (1..=width as u32).map(|i| self.bit(i)).collect();
        for position in 1..top {
            if w.exponent(position as u32 + 1) % 2 != 0 {
                bits[position - 1] = !bits[position - 1];
            }
        }
        SignSeqCone::new(bits, self.tail)
    }

    /// Smallest 1-based position where two cones disagree, if any.
    pub fn first_difference(&self, other: &Self) -> Option<u32> {
        if self == other {
            return None;
        }
        let width = self.prefix.len().max(other.prefix.len()) as u32 + 1;
        (1..=width).find(|&i| self.bit(i) != other.bit(i))
    }

    /// Positions where the two cones disagree, up to the end of both
    /// prefixes; complete when the tails agree.
    pub fn differing_positions(&self, other: &Self) -> Vec<u32> {
        let width = self.prefix.len().max(other.prefix.len()) as u32 + 1;
        (1..=width).filter(|&i| self.bit(i) != other.bit(i)).collect()
    }
}

/// The cone on H∞ restricting to a finite prefix cone on the subgroup
/// generated by x₁,…,xⱼ, extended beyond by a constant tail. Each coset of
/// the convex subgroup keeps a single sign, so the extension is the
/// lexicographic one.
pub fn extend_prefix_cone(prefix: Vec<bool>, tail: bool) -> SignSeqCone {
    SignSeqCone::new(prefix, tail)
}

impl ConjugableCone for SignSeqCone {
    type Element = HInfElement;

    fn checked_sign(&self, g: &HInfElement) -> Result<Sign, ConeError> {
        self.sign(g)
    }

    fn conjugated_by(&self, h: &HInfElement) -> Result<Self, ConeError> {
        Ok(self.conjugate(h))
    }
}

impl SignOracle<HInfElement> for SignSeqCone {
    fn element_sign(&self, g: &HInfElement) -> Sign {
        self.sign(g).expect("nonidentity element")
    }
}

impl fmt::Display for SignSeqCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P[eps=")?;
        for &b in &self.prefix {
            write!(f, "{}", if b { 1 } else { 0 })?;
        }
        write!(f, "|{}^inf]", if self.tail { 1 } else { 0 })
    }
}
