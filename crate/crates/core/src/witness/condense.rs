use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::cones::{ConjugableCone, Sign, SignSeqCone, SmirnovCone};
use crate::groups::{GroupElement, HInfElement};
use crate::topology::Ball;

use super::cert::{CertBody, Certificate, Check, Rel, Transcript, VerifyError};
use super::separator::separate_smirnov;
use super::WitnessError;

/// Where a condensation certificate claims sign agreement: on a finite list
/// of positives (a basic open neighborhood of the cone) or on a whole ball.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CondensationRegion<C: ConjugableCone> {
    Positives(Vec<C::Element>),
    Ball(Ball<C::Element>),
}

/// Witness that a conjugate cone agrees with the original on the region
/// while the discriminator, when present, shows the two cones differ. With
/// region `Positives` the conjugator is additionally the least listed
/// element in the cone's order, which is what forces the agreement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CondensationCert<C: ConjugableCone> {
    pub cone: C,
    pub region: CondensationRegion<C>,
    pub conjugator: C::Element,
    pub conjugated: C,
    pub discriminator: Option<C::Element>,
}

impl<C: WitnessCone> CondensationCert<C> {
    pub(crate) fn build_checks(&self) -> Result<Vec<Check>, VerifyError> {
        let mal = |e: crate::cones::ConeError| VerifyError::Malformed(format!("{e}"));
        let mut t = Transcript::new();
        let recomputed = self.cone.conjugated_by(&self.conjugator).map_err(mal)?;
        t.assert_rel(
            recomputed == self.conjugated,
            "conjugated cone recomputed",
            recomputed.to_string(),
            Rel::Eq,
            self.conjugated.to_string(),
        )?;
        match &self.region {
            CondensationRegion::Positives(elements) => {
                if elements.is_empty() {
                    return Err(VerifyError::Malformed("positives list is empty".into()));
                }
                if !elements.contains(&self.conjugator) {
                    return Err(VerifyError::Malformed(
                        "conjugator is not among the listed positives".into(),
                    ));
                }
                for g in elements {
                    let s = self.cone.checked_sign(g).map_err(mal)?;
                    t.assert_rel(
                        s == Sign::Pos,
                        "listed element positive in the cone",
                        format!("sign({g})={s}"),
                        Rel::Eq,
                        Sign::Pos.to_string(),
                    )?;
                }
                for g in elements {
                    if *g == self.conjugator {
                        continue;
                    }
                    let cmp = self
                        .cone
                        .checked_sign(&self.conjugator.inverse().mul(g))
                        .map_err(mal)?;
                    t.assert_rel(
                        cmp == Sign::Pos,
                        "conjugator precedes listed element",
                        format!("sign({}^-1*{g})={cmp}", self.conjugator),
                        Rel::Eq,
                        Sign::Pos.to_string(),
                    )?;
                }
                for g in elements {
                    let s = self.conjugated.checked_sign(g).map_err(mal)?;
                    t.assert_rel(
                        s == Sign::Pos,
                        "listed element positive in the conjugated cone",
                        format!("sign({g})={s}"),
                        Rel::Eq,
                        Sign::Pos.to_string(),
                    )?;
                }
            }
            CondensationRegion::Ball(ball) => {
                for member in ball.members().iter() {
                    if member.element.is_identity() {
                        continue;
                    }
                    let s0 = self.cone.checked_sign(&member.element).map_err(mal)?;
                    let s1 = self.conjugated.checked_sign(&member.element).map_err(mal)?;
                    t.assert_rel(
                        s0 == s1,
                        "sign agreement on ball element",
                        format!("sign({})={s0}", member.element),
                        Rel::Eq,
                        format!("conjugated sign({})={s1}", member.element),
                    )?;
                }
            }
        }
        match &self.discriminator {
            Some(d) => {
                let s0 = self.cone.checked_sign(d).map_err(mal)?;
                let s1 = self.conjugated.checked_sign(d).map_err(mal)?;
                t.assert_rel(
                    s0 != s1,
                    "discriminator separates the cone from its conjugate",
                    format!("sign({d})={s0}"),
                    Rel::Ne,
                    format!("conjugated sign({d})={s1}"),
                )?;
            }
            None => {
                t.assert_rel(
                    self.conjugated == self.cone,
                    "conjugation stabilizes the cone",
                    self.conjugated.to_string(),
                    Rel::Eq,
                    self.cone.to_string(),
                )?;
            }
        }
        Ok(t.finish())
    }
}

/// Cone families that can also search for a discriminator between a cone
/// and one of its conjugates.
pub trait WitnessCone: ConjugableCone {
    /// An element with different signs in the two cones, or None when the
    /// cones are equal.
    fn separating_element(
        &self,
        other: &Self,
    ) -> Result<Option<Self::Element>, WitnessError>;

    fn wrap(cert: CondensationCert<Self>) -> CertBody;
}

impl WitnessCone for SmirnovCone {
    fn separating_element(&self, other: &Self) -> Result<Option<Self::Element>, WitnessError> {
        if self == other {
            return Ok(None);
        }
        let (lower, upper) = match self.alpha().cmp_quad(other.alpha()) {
            Ordering::Less => (self.alpha(), other.alpha()),
            Ordering::Greater => (other.alpha(), self.alpha()),
            Ordering::Equal => return Ok(None),
        };
        Ok(Some(separate_smirnov(lower, upper, self.base())?))
    }

    fn wrap(cert: CondensationCert<Self>) -> CertBody {
        CertBody::CondensationBs(cert)
    }
}

impl WitnessCone for SignSeqCone {
    /// The radius-1 hit of a Cayley-ball scan: the generator at the first
    /// position where the sequences differ.
    fn separating_element(&self, other: &Self) -> Result<Option<Self::Element>, WitnessError> {
        match self.first_difference(other) {
            Some(position) => Ok(Some(HInfElement::generator(position)?)),
            None => Ok(None),
        }
    }

    fn wrap(cert: CondensationCert<Self>) -> CertBody {
        CertBody::CondensationHinf(cert)
    }
}

/// Builds the condensation witness for a basic open neighborhood: the
/// conjugator is the least listed positive, every listed element stays
/// positive in the conjugated cone, and a discriminator is attached when
/// the conjugate differs from the original cone.
pub fn condensation_witness<C: WitnessCone>(
    cone: &C,
    positives: &[C::Element],
) -> Result<Certificate, WitnessError> {
    let mut elements: Vec<C::Element> = Vec::new();
    for g in positives {
        if !elements.contains(g) {
            elements.push(g.clone());
        }
    }
    if elements.is_empty() {
        return Err(WitnessError::EmptyPositives);
    }
    for g in &elements {
        if g.is_identity() {
            return Err(WitnessError::IdentityInput);
        }
        if cone.checked_sign(g)? != Sign::Pos {
            return Err(WitnessError::NotPositive(format!("{g}")));
        }
    }
    // Least element in the cone order: g < h iff g⁻¹h is positive.
    let mut least = elements[0].clone();
    for g in elements.iter().skip(1) {
        if cone.checked_sign(&g.inverse().mul(&least))? == Sign::Pos {
            least = g.clone();
        }
    }
    let conjugated = cone.conjugated_by(&least)?;
    let discriminator = cone.separating_element(&conjugated)?;
    let body = C::wrap(CondensationCert {
        cone: cone.clone(),
        region: CondensationRegion::Positives(elements),
        conjugator: least,
        conjugated,
        discriminator,
    });
    Ok(Certificate::seal(body)?)
}
