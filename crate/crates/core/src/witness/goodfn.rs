use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::exactnum::{power_of, Dyadic, Rational};
use crate::groups::{bump, BumpDirection, DyadicInterval, PLMap};

use super::cert::{CertBody, Certificate, Check, Rel, Transcript, VerifyError};
use super::WitnessError;

/// Witness for the basic separation move in Thompson's group: a map that
/// fixes a finite set pointwise, raises one chosen point and lowers
/// another. The map is the composite of an upward bump around the raised
/// point and a downward bump around the lowered point, with disjoint
/// dyadic supports avoiding the fixed set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodFunctionCert {
    pub fixed: Vec<Rational>,
    pub raised: Rational,
    pub lowered: Rational,
    pub raise_support: DyadicInterval,
    pub lower_support: DyadicInterval,
    pub map: PLMap,
}

pub(crate) fn render_rationals(list: &[Rational]) -> String {
    let mut out = String::from("[");
    for (i, r) in list.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&r.to_string());
    }
    out.push(']');
    out
}

impl GoodFunctionCert {
    pub(crate) fn build_checks(&self) -> Result<Vec<Check>, VerifyError> {
        let mut t = Transcript::new();
        self.append_checks(&mut t)?;
        Ok(t.finish())
    }

    pub(crate) fn append_checks(&self, t: &mut Transcript) -> Result<(), VerifyError> {
        t.assert_rel(
            self.raised != self.lowered,
            "target points distinct",
            self.raised.to_string(),
            Rel::Ne,
            self.lowered.to_string(),
        )?;
        for point in [&self.raised, &self.lowered] {
            t.assert_rel(
                point.is_positive() && *point < Rational::one(),
                "target point strictly inside (0,1)",
                point.to_string(),
                Rel::In,
                "(0/1, 1/1)".to_string(),
            )?;
        }
        t.assert_rel(
            self.raise_support.disjoint_from(&self.lower_support),
            "supports disjoint",
            self.raise_support.to_string(),
            Rel::Ne,
            self.lower_support.to_string(),
        )?;
        t.assert_rel(
            self.raise_support.contains_interior(&self.raised),
            "raised point interior to its support",
            self.raised.to_string(),
            Rel::In,
            self.raise_support.to_string(),
        )?;
        t.assert_rel(
            self.lower_support.contains_interior(&self.lowered),
            "lowered point interior to its support",
            self.lowered.to_string(),
            Rel::In,
            self.lower_support.to_string(),
        )?;
        for s in &self.fixed {
            t.assert_rel(
                !self.raise_support.contains_closed(s) && !self.lower_support.contains_closed(s),
                "fixed point avoids both supports",
                s.to_string(),
                Rel::NotIn,
                format!("{} u {}", self.raise_support, self.lower_support),
            )?;
        }
        let rebuilt = bump(&self.raise_support, BumpDirection::Up)
            .compose(&bump(&self.lower_support, BumpDirection::Down));
        t.assert_rel(
            rebuilt == self.map,
            "witness map rebuilt from its supports",
            rebuilt.to_string(),
            Rel::Eq,
            self.map.to_string(),
        )?;
        let eval = |x: &Rational| -> Result<Rational, VerifyError> {
            self.map
                .eval(x)
                .map_err(|e| VerifyError::Malformed(format!("{e}")))
        };
        for s in &self.fixed {
            let image = eval(s)?;
            t.assert_rel(
                image == *s,
                "witness fixes the excluded point",
                image.to_string(),
                Rel::Eq,
                s.to_string(),
            )?;
        }
        let up = eval(&self.raised)?;
        t.assert_rel(
            up > self.raised,
            "witness raises the chosen point",
            up.to_string(),
            Rel::Gt,
            self.raised.to_string(),
        )?;
        let down = eval(&self.lowered)?;
        t.assert_rel(
            down < self.lowered,
            "witness lowers the chosen point",
            down.to_string(),
            Rel::Lt,
            self.lowered.to_string(),
        )?;
        Ok(())
    }
}

/// The dyadic interval of depth k around a point: centered with radius 2⁻ᵏ
/// when the point itself is dyadic (a dyadic point is never interior to a
/// standard interval of its own level), otherwise the standard interval
/// [m/2ᵏ, (m+1)/2ᵏ] containing it.
fn interval_around(point: &Rational, depth: u32, excluded: &[&Rational]) -> Option<DyadicInterval> {
    let candidate = match Dyadic::try_from_rational(point) {
        Ok(d) => {
            let radius = Dyadic::new(BigInt::from(1), depth);
            DyadicInterval::new(&d - &radius, &d + &radius).ok()?
        }
        Err(_) => {
            let scaled = point * &power_of(2, depth as i64);
            let m = scaled.floor_bigint();
            let lo = Dyadic::new(m.clone(), depth);
            let hi = Dyadic::new(m + 1, depth);
            DyadicInterval::new(lo, hi).ok()?
        }
    };
    if excluded.iter().any(|e| candidate.contains_closed(e)) {
        return None;
    }
    Some(candidate)
}

pub(crate) fn build_good_function(
    fixed: &[Rational],
    raised: &Rational,
    lowered: &Rational,
) -> Result<GoodFunctionCert, WitnessError> {
    if raised == lowered {
        return Err(WitnessError::EqualPoints(format!("{raised}")));
    }
    for point in [raised, lowered] {
        if !point.is_positive() || *point >= Rational::one() {
            return Err(WitnessError::PointOutOfRange(format!("{point}")));
        }
        if fixed.contains(point) {
            return Err(WitnessError::PointInFixedSet(format!("{point}")));
        }
    }
    for s in fixed {
        if s.is_negative() || *s > Rational::one() {
            return Err(WitnessError::FixedPointOutOfRange(format!("{s}")));
        }
    }
    let raise_excluded: Vec<&Rational> = fixed.iter().chain([lowered]).collect();
    let lower_excluded: Vec<&Rational> = fixed.iter().chain([raised]).collect();
    // Deepen both intervals together; the first depth at which both are
    // admissible and mutually disjoint wins. Terminates once 2⁻ᵏ is below
    // every distance separating the points from the exclusions.
    let mut depth = 1u32;
    let (raise_support, lower_support) = loop {
        let i = interval_around(raised, depth, &raise_excluded);
        let j = interval_around(lowered, depth, &lower_excluded);
        if let (Some(i), Some(j)) = (i, j) {
            if i.disjoint_from(&j) {
                break (i, j);
            }
        }
        depth += 1;
    };
    let map = bump(&raise_support, BumpDirection::Up)
        .compose(&bump(&lower_support, BumpDirection::Down));
    Ok(GoodFunctionCert {
        fixed: fixed.to_vec(),
        raised: raised.clone(),
        lowered: lowered.clone(),
        raise_support,
        lower_support,
        map,
    })
}

/// Builds and seals the good-function certificate.
pub fn good_function(
    fixed: &[Rational],
    raised: &Rational,
    lowered: &Rational,
) -> Result<Certificate, WitnessError> {
    let cert = build_good_function(fixed, raised, lowered)?;
    Ok(Certificate::seal(CertBody::GoodFunction(cert))?)
}
