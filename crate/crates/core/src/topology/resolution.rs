use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;

use crate::cones::{SignSeqCone, SmirnovCone};
use crate::exactnum::{power_of, NAdic, Rational};
use crate::groups::{BSElement, GroupError, HInfElement};
use crate::witness::{
    separate_smirnov, Certificate, CondensationCert, CondensationRegion, WitnessCone,
    WitnessError,
};

use super::Ball;

/// Condensation at the resolution of a ball over BS(1,n): a conjugator that
/// perturbs the parameter by 1/nᵗ, below the distance from the parameter to
/// every fixed point of a ball element, so every ball sign is unchanged
/// while a separator between the old and new parameters discriminates the
/// cones.
pub fn smirnov_condensed_at_resolution(
    cone: &SmirnovCone,
    ball: &Ball<BSElement>,
) -> Result<Certificate, WitnessError> {
    if ball.identity().base() != cone.base() {
        return Err(WitnessError::Group(GroupError::BaseMismatch(
            cone.base(),
            ball.identity().base(),
        )));
    }
    let critical: Vec<Rational> = ball
        .members()
        .iter()
        .filter(|m| m.element.slope_exp() != 0)
        .map(|m| {
            m.element
                .fixed_point()
                .expect("nonidentity")
                .expect("nonzero slope exponent")
        })
        .collect();
    // Smallest t with 1/nᵗ strictly below the distance from the parameter
    // to every critical rational; both sides are compared exactly.
    let alpha = cone.alpha();
    let mut t: u32 = 0;
    loop {
        let step = power_of(cone.base(), -(t as i64));
        let clears = critical.iter().all(|q| match alpha.cmp_rational(q) {
            Ordering::Greater => alpha.cmp_rational(&(q + &step)) == Ordering::Greater,
            Ordering::Less => alpha.cmp_rational(&(q - &step)) == Ordering::Less,
            Ordering::Equal => unreachable!("irrational parameter"),
        });
        if clears {
            break;
        }
        t += 1;
    }
    // b⁻ᵗ a bᵗ acts as x ↦ x + 1/nᵗ.
    let conjugator = BSElement::new(
        cone.base(),
        0,
        NAdic::new(cone.base(), BigInt::from(1), t).expect("valid base"),
    )
    .expect("matching base");
    let conjugated = cone.conjugate(&conjugator)?;
    let discriminator = separate_smirnov(cone.alpha(), conjugated.alpha(), cone.base())?;
    let body = SmirnovCone::wrap(CondensationCert {
        cone: cone.clone(),
        region: CondensationRegion::Ball(ball.clone()),
        conjugator,
        conjugated,
        discriminator: Some(discriminator),
    });
    Ok(Certificate::seal(body)?)
}

/// Condensation at the resolution of a ball over H∞: with m the top
/// generator index appearing in the ball's generators, conjugating by
/// x_{m+2} flips only bit m+1, leaving every ball sign unchanged, and the
/// generator x_{m+1} discriminates the two cones.
pub fn signseq_condensed_at_resolution(
    cone: &SignSeqCone,
    ball: &Ball<HInfElement>,
) -> Result<Certificate, WitnessError> {
    let top = ball
        .generators()
        .iter()
        .filter_map(|g| g.element.top_index())
        .max()
        .unwrap_or(0);
    let conjugator = HInfElement::generator(top + 2)?;
    let discriminator = HInfElement::generator(top + 1)?;
    let conjugated = cone.conjugate(&conjugator);
    let body = SignSeqCone::wrap(CondensationCert {
        cone: cone.clone(),
        region: CondensationRegion::Ball(ball.clone()),
        conjugator,
        conjugated,
        discriminator: Some(discriminator),
    });
    Ok(Certificate::seal(body)?)
}
