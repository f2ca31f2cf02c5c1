use alloc::string::ToString;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::cones::{Sign, SmirnovCone};
use crate::exactnum::{NAdic, QuadIrr, Rational};
use crate::groups::BSElement;

use super::cert::{CertBody, Certificate, Check, Rel, Transcript, VerifyError};
use super::WitnessError;

/// A map nʳ·x + c with r > 0 whose fixed point lies strictly between two
/// irrational parameters, so it is negative in the lower cone and positive
/// in the upper one. This separates the cones and witnesses that the
/// parameter-to-cone assignment is injective.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorCert {
    pub base: u32,
    pub lower: QuadIrr,
    pub upper: QuadIrr,
    pub separator: BSElement,
}

impl SeparatorCert {
    pub(crate) fn build_checks(&self) -> Result<Vec<Check>, VerifyError> {
        let mut t = Transcript::new();
        self.append_checks(&mut t)?;
        Ok(t.finish())
    }

    pub(crate) fn append_checks(&self, t: &mut Transcript) -> Result<(), VerifyError> {
        t.assert_rel(
            self.lower.cmp_quad(&self.upper) == Ordering::Less,
            "parameters strictly ordered",
            self.lower.to_string(),
            Rel::Lt,
            self.upper.to_string(),
        )?;
        t.assert_rel(
            self.separator.base() == self.base,
            "separator lives over the right base",
            self.separator.base().to_string(),
            Rel::Eq,
            self.base.to_string(),
        )?;
        t.assert_rel(
            self.separator.slope_exp() > 0,
            "separator slope exponent positive",
            self.separator.slope_exp().to_string(),
            Rel::Gt,
            "0".to_string(),
        )?;
        let fixed = self
            .separator
            .fixed_point()
            .map_err(|e| VerifyError::Malformed(alloc::format!("{e}")))?
            .expect("positive slope exponent has a fixed point");
        t.assert_rel(
            self.lower.cmp_rational(&fixed) == Ordering::Less,
            "fixed point above the lower parameter",
            self.lower.to_string(),
            Rel::Lt,
            fixed.to_string(),
        )?;
        t.assert_rel(
            self.upper.cmp_rational(&fixed) == Ordering::Greater,
            "fixed point below the upper parameter",
            fixed.to_string(),
            Rel::Lt,
            self.upper.to_string(),
        )?;
        let lower_cone = SmirnovCone::new(self.base, self.lower.clone())
            .map_err(|e| VerifyError::Malformed(alloc::format!("{e}")))?;
        let upper_cone = SmirnovCone::new(self.base, self.upper.clone())
            .map_err(|e| VerifyError::Malformed(alloc::format!("{e}")))?;
        let lower_sign = lower_cone
            .sign(&self.separator)
            .map_err(|e| VerifyError::Malformed(alloc::format!("{e}")))?;
        let upper_sign = upper_cone
            .sign(&self.separator)
            .map_err(|e| VerifyError::Malformed(alloc::format!("{e}")))?;
        t.assert_rel(
            lower_sign == Sign::Neg,
            "separator negative in the lower cone",
            lower_sign.to_string(),
            Rel::Eq,
            Sign::Neg.to_string(),
        )?;
        t.assert_rel(
            upper_sign == Sign::Pos,
            "separator positive in the upper cone",
            upper_sign.to_string(),
            Rel::Eq,
            Sign::Pos.to_string(),
        )?;
        Ok(())
    }
}

/// Finds the separating element for lower < upper over BS(1,n): with r
/// fixed at 1, scan t = 0, 1, 2, … and take the first denominator
/// D = nᵗ(n−1) admitting an integer m with lower < m/D < upper (smallest
/// |m| on ties); the result is nx − m/nᵗ⁻¹·…, i.e. shift −m/nᵗ. The scan
/// terminates because 1/D eventually drops below upper − lower, which
/// forces such an m to exist.
pub fn separate_smirnov(
    lower: &QuadIrr,
    upper: &QuadIrr,
    base: u32,
) -> Result<BSElement, WitnessError> {
    if base < 2 {
        return Err(WitnessError::Exact(crate::exactnum::ExactError::InvalidBase(base)));
    }
    match lower.cmp_quad(upper) {
        Ordering::Less => {}
        Ordering::Equal => {
            return Err(WitnessError::EqualParameters(alloc::format!("{lower}")));
        }
        Ordering::Greater => {
            return Err(WitnessError::NotOrdered(alloc::format!("{lower} vs {upper}")));
        }
    }
    let mut t: u32 = 0;
    loop {
        // D = n^t (n - 1)
        let d_int = BigInt::from(base).pow(t) * BigInt::from(base - 1);
        let d_rat = Rational::from_bigint(d_int.clone());
        let scaled_lower = lower
            .affine(&d_rat, &Rational::zero())
            .expect("nonzero scale");
        let scaled_upper = upper
            .affine(&d_rat, &Rational::zero())
            .expect("nonzero scale");
        let m_min = scaled_lower.floor_bigint() + BigInt::from(1);
        let m_max = scaled_upper.floor_bigint();
        if m_min <= m_max {
            // Smallest |m| in [m_min, m_max]; the range is contiguous, so a
            // sign tie can only happen through zero, which then wins.
            let m = if m_min.is_positive() {
                m_min
            } else if m_max.is_negative() {
                m_max
            } else {
                BigInt::zero()
            };
            // n·x − m/nᵗ has fixed point m/(nᵗ(n−1)) = m/D.
            let shift = NAdic::new(base, -m, t).expect("base checked");
            let g = BSElement::new(base, 1, shift).expect("matching base");
            return Ok(g);
        }
        t += 1;
    }
}

/// Separator plus its transcript.
pub fn separator_certificate(
    lower: &QuadIrr,
    upper: &QuadIrr,
    base: u32,
) -> Result<Certificate, WitnessError> {
    let separator = separate_smirnov(lower, upper, base)?;
    let body = CertBody::Separator(SeparatorCert {
        base,
        lower: lower.clone(),
        upper: upper.clone(),
        separator,
    });
    Ok(Certificate::seal(body)?)
}
