use core::cmp::Ordering;
use core::fmt;

use crate::exactnum::{ExactError, QuadIrr};
use crate::groups::BSElement;

use super::{ConeError, ConjugableCone, Sign, SignOracle};

/// Positive cone P on BS(1,n) determined by an irrational parameter α:
/// an element g is positive exactly when its affine action moves α up.
///
/// For a map nʳ·x + c with r ≠ 0 that test is decided by which side of the
/// fixed point c/(1−nʳ) the parameter lies on, combined with the sign of
/// nʳ − 1; for a translation (r = 0) it is the sign of c. Conjugation moves
/// the parameter: hPh⁻¹ is the cone of the image of α under h.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SmirnovCone {
    base: u32,
    alpha: QuadIrr,
}

impl SmirnovCone {
    pub fn new(base: u32, alpha: QuadIrr) -> Result<Self, ExactError> {
        if base < 2 {
            return Err(ExactError::InvalidBase(base));
        }
        Ok(SmirnovCone { base, alpha })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn alpha(&self) -> &QuadIrr {
        &self.alpha
    }

    /// Sign of a nonidentity element via the fixed-point case analysis.
    pub fn sign(&self, g: &BSElement) -> Result<Sign, ConeError> {
        if g.base() != self.base {
            return Err(ConeError::BaseMismatch(self.base, g.base()));
        }
        if g.is_identity() {
            return Err(ConeError::IdentityInput);
        }
        if g.slope_exp() == 0 {
            return Ok(if g.shift().is_positive() { Sign::Pos } else { Sign::Neg });
        }
        let fixed = g
            .fixed_point()
            .expect("nonidentity")
            .expect("slope exponent nonzero");
        let expanding = g.slope_exp() > 0;
        match self.alpha.cmp_rational(&fixed) {
            Ordering::Greater => Ok(if expanding { Sign::Pos } else { Sign::Neg }),
            Ordering::Less => Ok(if expanding { Sign::Neg } else { Sign::Pos }),
            Ordering::Equal => unreachable!("irrational parameter never equals a fixed point"),
        }
    }

    /// Same sign computed from the displaced parameter; used to cross-check
    /// the fixed-point route.
    pub fn sign_from_action(&self, g: &BSElement) -> Result<Sign, ConeError> {
        if g.base() != self.base {
            return Err(ConeError::BaseMismatch(self.base, g.base()));
        }
        if g.is_identity() {
            return Err(ConeError::IdentityInput);
        }
        match g.apply_quad(&self.alpha).cmp_quad(&self.alpha) {
            Ordering::Greater => Ok(Sign::Pos),
            Ordering::Less => Ok(Sign::Neg),
            Ordering::Equal => unreachable!("nonidentity affine maps move every irrational"),
        }
    }

    /// hPh⁻¹, the cone with parameter moved by h.
    pub fn conjugate(&self, h: &BSElement) -> Result<SmirnovCone, ConeError> {
        if h.base() != self.base {
            return Err(ConeError::BaseMismatch(self.base, h.base()));
        }
        Ok(SmirnovCone { base: self.base, alpha: h.apply_quad(&self.alpha) })
    }
}

impl ConjugableCone for SmirnovCone {
    type Element = BSElement;

    fn checked_sign(&self, g: &BSElement) -> Result<Sign, ConeError> {
        self.sign(g)
    }

    fn conjugated_by(&self, h: &BSElement) -> Result<Self, ConeError> {
        self.conjugate(h)
    }
}

impl SignOracle<BSElement> for SmirnovCone {
    fn element_sign(&self, g: &BSElement) -> Sign {
        self.sign(g).expect("nonidentity element over the same base")
    }
}

impl fmt::Display for SmirnovCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P[n={}, alpha={}]", self.base, self.alpha)
    }
}
