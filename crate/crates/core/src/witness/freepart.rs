use alloc::string::ToString;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::cones::SmirnovCone;
use crate::exactnum::QuadIrr;
use crate::groups::BSElement;

use super::cert::{CertBody, Certificate, Check, Rel, Transcript, VerifyError};
use super::separator::{separate_smirnov, SeparatorCert};
use super::WitnessError;

/// Witness that conjugating a parameter cone of BS(1,n) by a nonidentity
/// element produces a different cone: conjugation moves the irrational
/// parameter (a nonidentity affine map has only rational fixed points), and
/// a separator between the two parameters discriminates the cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BsFreePartCert {
    pub base: u32,
    pub alpha: QuadIrr,
    pub conjugator: BSElement,
    pub alpha_image: QuadIrr,
    pub discriminator: BSElement,
}

impl BsFreePartCert {
    pub(crate) fn build_checks(&self) -> Result<Vec<Check>, VerifyError> {
        let mut t = Transcript::new();
        t.assert_rel(
            !self.conjugator.is_identity(),
            "conjugator is not the identity",
            self.conjugator.to_string(),
            Rel::Ne,
            BSElement::identity(self.base).to_string(),
        )?;
        t.assert_rel(
            self.conjugator.base() == self.base,
            "conjugator lives over the right base",
            self.conjugator.base().to_string(),
            Rel::Eq,
            self.base.to_string(),
        )?;
        let image = self.conjugator.apply_quad(&self.alpha);
        t.assert_rel(
            image == self.alpha_image,
            "conjugated parameter recomputed",
            image.to_string(),
            Rel::Eq,
            self.alpha_image.to_string(),
        )?;
        t.assert_rel(
            self.alpha_image != self.alpha,
            "conjugation moves the parameter",
            self.alpha_image.to_string(),
            Rel::Ne,
            self.alpha.to_string(),
        )?;
        // The discriminator is a separator for the ordered pair.
        let (lower, upper) = match self.alpha.cmp_quad(&self.alpha_image) {
            Ordering::Less => (self.alpha.clone(), self.alpha_image.clone()),
            Ordering::Greater => (self.alpha_image.clone(), self.alpha.clone()),
            Ordering::Equal => {
                return Err(VerifyError::Failed {
                    claim: "conjugation moves the parameter".into(),
                    lhs: self.alpha.to_string(),
                    rel: Rel::Ne,
                    rhs: self.alpha_image.to_string(),
                })
            }
        };
        let sep = SeparatorCert {
            base: self.base,
            lower,
            upper,
            separator: self.discriminator.clone(),
        };
        sep.append_checks(&mut t)?;
        let cone = SmirnovCone::new(self.base, self.alpha.clone())
            .map_err(|e| VerifyError::Malformed(alloc::format!("{e}")))?;
        let conjugated = SmirnovCone::new(self.base, self.alpha_image.clone())
            .map_err(|e| VerifyError::Malformed(alloc::format!("{e}")))?;
        let s0 = cone
            .sign(&self.discriminator)
            .map_err(|e| VerifyError::Malformed(alloc::format!("{e}")))?;
        let s1 = conjugated
            .sign(&self.discriminator)
            .map_err(|e| VerifyError::Malformed(alloc::format!("{e}")))?;
        t.assert_rel(
            s0 != s1,
            "discriminator separates the cone from its conjugate",
            s0.to_string(),
            Rel::Ne,
            s1.to_string(),
        )?;
        Ok(t.finish())
    }
}

/// Builds the free-part witness for a parameter cone and a nonidentity
/// conjugator.
pub fn bs_freepart_witness(
    alpha: &QuadIrr,
    base: u32,
    conjugator: &BSElement,
) -> Result<Certificate, WitnessError> {
    if conjugator.is_identity() {
        return Err(WitnessError::IdentityInput);
    }
    if conjugator.base() != base {
        return Err(WitnessError::Group(crate::groups::GroupError::BaseMismatch(
            base,
            conjugator.base(),
        )));
    }
    let alpha_image = conjugator.apply_quad(alpha);
    let (lower, upper) = match alpha.cmp_quad(&alpha_image) {
        Ordering::Less => (alpha, &alpha_image),
        Ordering::Greater => (&alpha_image, alpha),
        Ordering::Equal => unreachable!("nonidentity affine maps move every irrational"),
    };
    let discriminator = separate_smirnov(lower, upper, base)?;
    let body = CertBody::BsFreePart(BsFreePartCert {
        base,
        alpha: alpha.clone(),
        conjugator: conjugator.clone(),
        alpha_image,
        discriminator,
    });
    Ok(Certificate::seal(body)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::NAdic;
    use crate::witness::verify_certificate;
    use num_bigint::BigInt;

    fn root2() -> QuadIrr {
        QuadIrr::sqrt(2).unwrap()
    }

    #[test]
    fn translation_conjugator() {
        let cert = bs_freepart_witness(&root2(), 2, &BSElement::gen_a(2)).unwrap();
        let CertBody::BsFreePart(body) = &cert.body else { unreachable!() };
        // separator between √2 and 1+√2 is 2x − 2
        let expected =
            BSElement::new(2, 1, NAdic::new(2, BigInt::from(-2), 0).unwrap()).unwrap();
        assert_eq!(body.discriminator, expected);
        verify_certificate(&cert).unwrap();
    }

    #[test]
    fn scaling_conjugator() {
        let cert = bs_freepart_witness(&root2(), 2, &BSElement::gen_b(2)).unwrap();
        let CertBody::BsFreePart(body) = &cert.body else { unreachable!() };
        // fixed point of the discriminator lies in (√2, 2√2)
        let q = body.discriminator.fixed_point().unwrap().unwrap();
        assert_eq!(root2().cmp_rational(&q), core::cmp::Ordering::Less);
        assert_eq!(body.alpha_image.cmp_rational(&q), core::cmp::Ordering::Greater);
        verify_certificate(&cert).unwrap();
    }

    #[test]
    fn identity_rejected() {
        assert_eq!(
            bs_freepart_witness(&root2(), 2, &BSElement::identity(2)),
            Err(WitnessError::IdentityInput)
        );
    }

    #[test]
    fn tampering_detected() {
        let cert = bs_freepart_witness(&root2(), 2, &BSElement::gen_a(2)).unwrap();
        let CertBody::BsFreePart(mut body) = cert.body.clone() else { unreachable!() };
        body.alpha_image = QuadIrr::sqrt(3).unwrap();
        let tampered = Certificate { body: CertBody::BsFreePart(body), checks: cert.checks };
        assert!(verify_certificate(&tampered).is_err());
    }
}
