use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::cones::EnumCone;
use crate::exactnum::Rational;
use crate::groups::PLMap;

use super::cert::{CertBody, Certificate, Check, Rel, Transcript, VerifyError};
use super::goodfn::{build_good_function, render_rationals, GoodFunctionCert};
use super::WitnessError;

/// Witness that conjugating an enumeration cone of Thompson's F by a
/// nonidentity element changes the cone: with N the first enumeration index
/// the conjugator moves, the embedded good function fixes the first N
/// entries, raises entry N and lowers its image, so it is positive in the
/// cone while its conjugate is negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FSeparatorCert {
    pub cone: EnumCone,
    pub conjugator: PLMap,
    pub moved_index: usize,
    pub moved_rational: Rational,
    pub moved_image: Rational,
    pub inner: GoodFunctionCert,
}

impl FSeparatorCert {
    pub(crate) fn build_checks(&self) -> Result<Vec<Check>, VerifyError> {
        let mal = |e: crate::groups::GroupError| VerifyError::Malformed(format!("{e}"));
        let mut t = Transcript::new();
        t.assert_rel(
            !self.conjugator.is_identity(),
            "conjugator is not the identity",
            self.conjugator.to_string(),
            Rel::Ne,
            PLMap::identity().to_string(),
        )?;
        let prefix: Vec<Rational> = self
            .cone
            .rationals()
            .take(self.moved_index)
            .collect();
        t.assert_rel(
            self.inner.fixed == prefix,
            "excluded set matches the enumeration prefix",
            render_rationals(&self.inner.fixed),
            Rel::Eq,
            render_rationals(&prefix),
        )?;
        let target = self.cone.rational_at(self.moved_index);
        t.assert_rel(
            target == self.moved_rational,
            "scan target is the next enumerated rational",
            target.to_string(),
            Rel::Eq,
            self.moved_rational.to_string(),
        )?;
        for (i, r) in prefix.iter().enumerate() {
            let image = self.conjugator.eval(r).map_err(mal)?;
            t.assert_rel(
                image == *r,
                &format!("conjugator fixes enumeration entry {i}"),
                image.to_string(),
                Rel::Eq,
                r.to_string(),
            )?;
        }
        let image = self.conjugator.eval(&self.moved_rational).map_err(mal)?;
        t.assert_rel(
            image != self.moved_rational,
            "conjugator moves the scan target",
            image.to_string(),
            Rel::Ne,
            self.moved_rational.to_string(),
        )?;
        t.assert_rel(
            image == self.moved_image,
            "image of the scan target recomputed",
            image.to_string(),
            Rel::Eq,
            self.moved_image.to_string(),
        )?;
        t.assert_rel(
            self.inner.raised == self.moved_rational,
            "inner witness raises the scan target",
            self.inner.raised.to_string(),
            Rel::Eq,
            self.moved_rational.to_string(),
        )?;
        t.assert_rel(
            self.inner.lowered == self.moved_image,
            "inner witness lowers the image",
            self.inner.lowered.to_string(),
            Rel::Eq,
            self.moved_image.to_string(),
        )?;
        self.inner.append_checks(&mut t)?;

        // Signs in the enumeration cone, decided at the scan index: the
        // inner checks pin the behavior on every earlier entry, so no
        // unbounded scan is needed here.
        let separator = &self.inner.map;
        let conjugated = self
            .conjugator
            .inverse()
            .compose(separator)
            .compose(&self.conjugator);
        for (i, r) in prefix.iter().enumerate() {
            let image = conjugated.eval(r).map_err(mal)?;
            t.assert_rel(
                image == *r,
                &format!("conjugated separator fixes enumeration entry {i}"),
                image.to_string(),
                Rel::Eq,
                r.to_string(),
            )?;
        }
        let conj_at_target = conjugated.eval(&self.moved_rational).map_err(mal)?;
        // Together with the inner checks this pins the enumeration signs:
        // the separator is decided positive at the scan index and its
        // conjugate decided negative there.
        t.assert_rel(
            conj_at_target < self.moved_rational,
            "conjugated separator lowers the scan target",
            conj_at_target.to_string(),
            Rel::Lt,
            self.moved_rational.to_string(),
        )?;
        Ok(t.finish())
    }
}

/// Builds the conjugacy separator for an enumeration cone and a nonidentity
/// element of F.
pub fn conjugacy_separator_f(
    cone: &EnumCone,
    conjugator: &PLMap,
) -> Result<Certificate, WitnessError> {
    if conjugator.is_identity() {
        return Err(WitnessError::IdentityInput);
    }
    let decision = cone.decide(conjugator)?;
    let prefix: Vec<Rational> = cone.rationals().take(decision.index).collect();
    let inner = build_good_function(&prefix, &decision.rational, &decision.image)?;
    let body = CertBody::FSeparator(FSeparatorCert {
        cone: cone.clone(),
        conjugator: conjugator.clone(),
        moved_index: decision.index,
        moved_rational: decision.rational,
        moved_image: decision.image,
        inner,
    });
    Ok(Certificate::seal(body)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::Sign;
    use crate::exactnum::Dyadic;
    use crate::groups::{bump, parse_letters, BumpDirection, DyadicInterval};
    use crate::witness::verify_certificate;
    use num_bigint::BigInt;

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn generator_a_separates_at_index_zero() {
        let cone = EnumCone::canonical();
        let a = PLMap::from_word(&parse_letters("a").unwrap());
        let cert = conjugacy_separator_f(&cone, &a).unwrap();
        let CertBody::FSeparator(body) = &cert.body else { unreachable!() };
        assert_eq!(body.moved_index, 0);
        assert_eq!(body.moved_rational, rat("1/2"));
        assert_eq!(body.moved_image, rat("1/4"));
        assert!(body.inner.fixed.is_empty());
        verify_certificate(&cert).unwrap();

        // the claimed signs hold under the actual enumeration scan
        let g = &body.inner.map;
        assert_eq!(cone.sign(g).unwrap(), Sign::Pos);
        let conj = a.inverse().compose(g).compose(&a);
        assert_eq!(cone.sign(&conj).unwrap(), Sign::Neg);
    }

    #[test]
    fn bump_conjugator_scans_to_first_interior_rational() {
        let cone = EnumCone::canonical();
        let support = DyadicInterval::new(
            Dyadic::new(BigInt::from(3), 4),
            Dyadic::new(BigInt::from(5), 4),
        )
        .unwrap();
        let h = bump(&support, BumpDirection::Up);
        let cert = conjugacy_separator_f(&cone, &h).unwrap();
        let CertBody::FSeparator(body) = &cert.body else { unreachable!() };
        // 1/2, 1/3, 2/3 avoid (3/16, 5/16); 1/4 is the first inside
        assert_eq!(body.moved_index, 3);
        assert_eq!(body.moved_rational, rat("1/4"));
        verify_certificate(&cert).unwrap();
    }

    #[test]
    fn identity_rejected() {
        assert_eq!(
            conjugacy_separator_f(&EnumCone::canonical(), &PLMap::identity()),
            Err(WitnessError::IdentityInput)
        );
    }

    #[test]
    fn tampered_index_fails() {
        let cone = EnumCone::canonical();
        let a = PLMap::from_word(&parse_letters("a").unwrap());
        let cert = conjugacy_separator_f(&cone, &a).unwrap();
        let CertBody::FSeparator(mut body) = cert.body.clone() else { unreachable!() };
        body.moved_index = 1;
        let tampered = Certificate { body: CertBody::FSeparator(body), checks: cert.checks };
        assert!(verify_certificate(&tampered).is_err());
    }
}
