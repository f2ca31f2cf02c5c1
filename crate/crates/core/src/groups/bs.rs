use core::fmt;

use crate::exactnum::{power_of, NAdic, QuadIrr, Rational};

use super::{GroupElement, GroupError, Letter};

/// Element of BS(1,n) = ⟨a, b | bab⁻¹ = aⁿ⟩ in its faithful affine form
/// x ↦ nʳ·x + c, with c a base-n fraction in lowest terms. The pair (r, c)
/// is a complete invariant: (0, 0) is the identity.
///
/// The generators act as a: x ↦ x + 1 and b: x ↦ n·x, and products compose
/// with the left factor outermost.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BSElement {
    base: u32,
    slope_exp: i64,
    shift: NAdic,
}

impl BSElement {
    pub fn new(base: u32, slope_exp: i64, shift: NAdic) -> Result<Self, GroupError> {
        if shift.base() != base {
            return Err(GroupError::BaseMismatch(base, shift.base()));
        }
        Ok(BSElement { base, slope_exp, shift })
    }

    pub fn identity(base: u32) -> Self {
        BSElement { base, slope_exp: 0, shift: NAdic::zero(base) }
    }

    /// The translation generator a: x ↦ x + 1.
    pub fn gen_a(base: u32) -> Self {
        BSElement { base, slope_exp: 0, shift: NAdic::from_int(base, 1) }
    }

    /// The scaling generator b: x ↦ n·x.
    pub fn gen_b(base: u32) -> Self {
        BSElement { base, slope_exp: 1, shift: NAdic::zero(base) }
    }

    fn letter(base: u32, l: Letter) -> Self {
        match l {
            Letter::A => Self::gen_a(base),
            Letter::AInv => Self::gen_a(base).inverse(),
            Letter::B => Self::gen_b(base),
            Letter::BInv => Self::gen_b(base).inverse(),
        }
    }

    /// Evaluates a word left-to-right, leftmost letter outermost.
    pub fn from_word(word: &[Letter], base: u32) -> Self {
        word.iter()
            .fold(Self::identity(base), |acc, &l| acc.mul(&Self::letter(base, l)))
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn slope_exp(&self) -> i64 {
        self.slope_exp
    }

    pub fn shift(&self) -> &NAdic {
        &self.shift
    }

    pub fn is_identity(&self) -> bool {
        self.slope_exp == 0 && self.shift.is_zero()
    }

    /// The slope nʳ as an exact rational.
    pub fn slope(&self) -> Rational {
        power_of(self.base, self.slope_exp)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, GroupError> {
        if self.base != other.base {
            return Err(GroupError::BaseMismatch(self.base, other.base));
        }
        let slope_exp = self
            .slope_exp
            .checked_add(other.slope_exp)
            .ok_or(GroupError::ExponentOverflow)?;
        let shift = other
            .shift
            .scale_pow(self.slope_exp)
            .checked_add(&self.shift)?;
        Ok(BSElement { base: self.base, slope_exp, shift })
    }

    pub fn inverse(&self) -> Self {
        BSElement {
            base: self.base,
            slope_exp: -self.slope_exp,
            shift: self.shift.neg().scale_pow(-self.slope_exp),
        }
    }

    /// The unique fixed point c/(1 - nʳ) when r ≠ 0; translations have none.
    pub fn fixed_point(&self) -> Result<Option<Rational>, GroupError> {
        if self.is_identity() {
            return Err(GroupError::IdentityInput);
        }
        if self.slope_exp == 0 {
            return Ok(None);
        }
        let denom = &Rational::one() - &self.slope();
        Ok(Some(&self.shift.value() / &denom))
    }

    /// nʳ·x + c at a rational point.
    pub fn apply(&self, x: &Rational) -> Rational {
        &(&self.slope() * x) + &self.shift.value()
    }

    /// nʳ·α + c at a quadratic irrational; the result stays irrational.
    pub fn apply_quad(&self, alpha: &QuadIrr) -> QuadIrr {
        alpha
            .affine(&self.slope(), &self.shift.value())
            .expect("slope is a nonzero power of the base")
    }
}

impl GroupElement for BSElement {
    fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("elements of the same BS(1,n)")
    }

    fn inverse(&self) -> Self {
        BSElement::inverse(self)
    }

    fn is_identity(&self) -> bool {
        BSElement::is_identity(self)
    }
}

impl fmt::Display for BSElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "x");
        }
        if self.slope_exp == 0 {
            write!(f, "x")?;
        } else {
            write!(f, "{}^{}*x", self.base, self.slope_exp)?;
        }
        if self.shift.is_zero() {
            Ok(())
        } else if self.shift.is_negative() {
            write!(f, " - {}", self.shift.neg())
        } else {
            write!(f, " + {}", self.shift)
        }
    }
}
