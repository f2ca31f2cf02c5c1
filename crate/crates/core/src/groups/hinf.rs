use alloc::vec::Vec;
use core::fmt;

use super::{GroupElement, GroupError};

/// Element of H∞ = ⟨x₁, x₂, … | xᵢxᵢ₋₁xᵢ⁻¹ = xᵢ₋₁⁻¹, xᵢxⱼ = xⱼxᵢ for
/// |i−j| > 1⟩ in the normal form x₁^a₁ x₂^a₂ ⋯ xₘ^aₘ with aₘ ≠ 0.
///
/// Multiplying on the right by a letter xᵢ^ε only changes aᵢ: the letter
/// commutes with every block of index > i+1 and picks up one sign flip for
/// each crossing of an xᵢ₊₁ letter, so aᵢ becomes aᵢ + ε·(−1)^aᵢ₊₁.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HInfElement {
    exps: Vec<i64>,
}

fn strip_trailing_zeros(exps: &mut Vec<i64>) {
    while exps.last() == Some(&0) {
        exps.pop();
    }
}

/// Adds a whole run xᵢ^count to the accumulator (index is 1-based). Valid
/// because consecutive insertions of the same generator leave aᵢ₊₁ untouched.
fn insert_run(acc: &mut Vec<i64>, index: usize, count: i64) -> Result<(), GroupError> {
    if acc.len() < index {
        acc.resize(index, 0);
    }
    let above = acc.get(index).copied().unwrap_or(0);
    let signed = if above % 2 == 0 { count } else { -count };
    acc[index - 1] = acc[index - 1]
        .checked_add(signed)
        .ok_or(GroupError::ExponentOverflow)?;
    Ok(())
}

impl HInfElement {
    pub fn identity() -> Self {
        HInfElement { exps: Vec::new() }
    }

    /// The generator x_index; indices are 1-based.
    pub fn generator(index: u32) -> Result<Self, GroupError> {
        if index == 0 {
            return Err(GroupError::InvalidGeneratorIndex(0));
        }
        let mut exps = alloc::vec![0i64; index as usize];
        exps[index as usize - 1] = 1;
        Ok(HInfElement { exps })
    }

    pub fn from_exponents(mut exps: Vec<i64>) -> Self {
        strip_trailing_zeros(&mut exps);
        HInfElement { exps }
    }

    /// Reads a word as signed generator indices, e.g. [2, -1] = x₂x₁⁻¹.
    pub fn from_word(letters: &[i64]) -> Result<Self, GroupError> {
        let mut acc: Vec<i64> = Vec::new();
        for &l in letters {
            if l == 0 {
                return Err(GroupError::InvalidGeneratorIndex(0));
            }
            let index = l.unsigned_abs() as usize;
            insert_run(&mut acc, index, l.signum())?;
            strip_trailing_zeros(&mut acc);
        }
        strip_trailing_zeros(&mut acc);
        Ok(HInfElement { exps: acc })
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exps
    }

    pub fn exponent(&self, index: u32) -> i64 {
        if index == 0 {
            return 0;
        }
        self.exps.get(index as usize - 1).copied().unwrap_or(0)
    }

    /// Largest index with nonzero exponent (1-based); None for the identity.
    pub fn top_index(&self) -> Option<u32> {
        if self.exps.is_empty() {
            None
        } else {
            Some(self.exps.len() as u32)
        }
    }

    pub fn is_identity(&self) -> bool {
        self.exps.is_empty()
    }

    /// Normal form of self·other, inserting other's word left to right.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, GroupError> {
        let mut acc = self.exps.clone();
        for (i, &count) in other.exps.iter().enumerate() {
            if count != 0 {
                insert_run(&mut acc, i + 1, count)?;
            }
        }
        strip_trailing_zeros(&mut acc);
        Ok(HInfElement { exps: acc })
    }

    /// Inverse by inserting the reversed word with negated exponents.
    pub fn checked_inverse(&self) -> Result<Self, GroupError> {
        let mut acc: Vec<i64> = Vec::new();
        for (i, &count) in self.exps.iter().enumerate().rev() {
            if count != 0 {
                let neg = count.checked_neg().ok_or(GroupError::ExponentOverflow)?;
                insert_run(&mut acc, i + 1, neg)?;
            }
        }
        strip_trailing_zeros(&mut acc);
        Ok(HInfElement { exps: acc })
    }
}

impl GroupElement for HInfElement {
    fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("exponents within range")
    }

    fn inverse(&self) -> Self {
        self.checked_inverse().expect("exponents within range")
    }

    fn is_identity(&self) -> bool {
        HInfElement::is_identity(self)
    }
}

impl fmt::Display for HInfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "id");
        }
        let mut first = true;
        for (i, &a) in self.exps.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if a == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, a)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(exps: &[i64]) -> HInfElement {
        HInfElement::from_exponents(exps.to_vec())
    }

    #[test]
    fn relation_rearranged() {
        // x₂·x₁ = x₁⁻¹x₂
        let x1 = HInfElement::generator(1).unwrap();
        let x2 = HInfElement::generator(2).unwrap();
        assert_eq!(x2.mul(&x1), el(&[-1, 1]));
    }

    #[test]
    fn same_generator_accumulates() {
        let x1 = HInfElement::generator(1).unwrap();
        assert_eq!(x1.mul(&x1), el(&[2]));
    }

    #[test]
    fn mixed_product() {
        // (x₁x₂)·x₁ = x₂
        let u = el(&[1, 1]);
        let x1 = HInfElement::generator(1).unwrap();
        assert_eq!(u.mul(&x1), el(&[0, 1]));
    }

    #[test]
    fn distant_generators_commute() {
        let x1 = HInfElement::generator(1).unwrap();
        let x3 = HInfElement::generator(3).unwrap();
        assert_eq!(x1.mul(&x3), x3.mul(&x1));
    }

    #[test]
    fn word_evaluation() {
        assert_eq!(HInfElement::from_word(&[2, 1]).unwrap(), el(&[-1, 1]));
        assert_eq!(HInfElement::from_word(&[1, -1]).unwrap(), HInfElement::identity());
        assert!(HInfElement::from_word(&[0]).is_err());
    }

    #[test]
    fn inverses() {
        let x1 = HInfElement::generator(1).unwrap();
        assert_eq!(x1.inverse(), el(&[-1]));
        assert_eq!(HInfElement::identity().inverse(), HInfElement::identity());
        for exps in [&[1i64, 1][..], &[2, -3, 1], &[0, 5], &[-1, 0, 2]] {
            let u = el(exps);
            assert!(u.mul(&u.inverse()).is_identity(), "u = {u}");
            assert!(u.inverse().mul(&u).is_identity(), "u = {u}");
        }
    }

    #[test]
    fn top_index_and_display() {
        assert_eq!(el(&[2, 0, -1]).top_index(), Some(3));
        assert_eq!(HInfElement::identity().top_index(), None);
        assert_eq!(el(&[2, 0, -1]).to_string(), "x1^2*x3^-1");
        assert_eq!(HInfElement::identity().to_string(), "id");
    }
}
