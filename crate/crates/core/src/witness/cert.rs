use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::condense::CondensationCert;
use super::freepart::BsFreePartCert;
use super::fsep::FSeparatorCert;
use super::goodfn::GoodFunctionCert;
use super::separator::SeparatorCert;
use crate::cones::{SignSeqCone, SmirnovCone};

/// Relation asserted by one transcript line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Lt,
    Gt,
    Eq,
    Ne,
    In,
    NotIn,
}

impl Rel {
    pub fn as_str(self) -> &'static str {
        match self {
            Rel::Lt => "<",
            Rel::Gt => ">",
            Rel::Eq => "=",
            Rel::Ne => "!=",
            Rel::In => "in",
            Rel::NotIn => "not-in",
        }
    }
}

impl fmt::Display for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// One recomputable claim: both sides are canonical renderings of exact
/// values derived from the certificate's inputs and witness data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub claim: String,
    pub lhs: String,
    pub rel: Rel,
    pub rhs: String,
}

/// Why verification rejected a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyError {
    /// A claim, recomputed from scratch, does not hold.
    Failed { claim: String, lhs: String, rel: Rel, rhs: String },
    /// The stored transcript disagrees with the recomputed one.
    TranscriptMismatch { index: usize, expected: String, found: String },
    /// The certificate is structurally unusable.
    Malformed(String),
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::Failed { claim, lhs, rel, rhs } => {
                write!(f, "check failed: {claim}: {lhs} {rel} {rhs} does not hold")
            }
            VerifyError::TranscriptMismatch { index, expected, found } => write!(
                f,
                "transcript mismatch at check {index}: recomputed {expected}, stored {found}"
            ),
            VerifyError::Malformed(why) => write!(f, "malformed certificate: {why}"),
        }
    }
}

impl core::error::Error for VerifyError {}

/// Transcript under construction; `assert_rel` evaluates a claim and either
/// records it or aborts with the failing line.
pub(crate) struct Transcript {
    checks: Vec<Check>,
}

impl Transcript {
    pub(crate) fn new() -> Self {
        Transcript { checks: Vec::new() }
    }

    pub(crate) fn assert_rel(
        &mut self,
        holds: bool,
        claim: &str,
        lhs: String,
        rel: Rel,
        rhs: String,
    ) -> Result<(), VerifyError> {
        if holds {
            self.checks.push(Check { claim: String::from(claim), lhs, rel, rhs });
            Ok(())
        } else {
            Err(VerifyError::Failed { claim: String::from(claim), lhs, rel, rhs })
        }
    }

    pub(crate) fn finish(self) -> Vec<Check> {
        self.checks
    }
}

/// The typed content of a certificate, by kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertBody {
    Separator(SeparatorCert),
    BsFreePart(BsFreePartCert),
    CondensationBs(CondensationCert<SmirnovCone>),
    CondensationHinf(CondensationCert<SignSeqCone>),
    GoodFunction(GoodFunctionCert),
    FSeparator(FSeparatorCert),
}

impl CertBody {
    pub fn kind(&self) -> &'static str {
        match self {
            CertBody::Separator(_) => "separator",
            CertBody::BsFreePart(_) => "bs-freepart",
            CertBody::CondensationBs(_) | CertBody::CondensationHinf(_) => "condensation",
            CertBody::GoodFunction(_) => "good-function",
            CertBody::FSeparator(_) => "f-separator",
        }
    }

    /// Recomputes the full transcript from inputs and witness data alone,
    /// failing on the first claim that does not hold.
    pub fn build_checks(&self) -> Result<Vec<Check>, VerifyError> {
        match self {
            CertBody::Separator(c) => c.build_checks(),
            CertBody::BsFreePart(c) => c.build_checks(),
            CertBody::CondensationBs(c) => c.build_checks(),
            CertBody::CondensationHinf(c) => c.build_checks(),
            CertBody::GoodFunction(c) => c.build_checks(),
            CertBody::FSeparator(c) => c.build_checks(),
        }
    }
}

/// A witness plus the transcript recorded when it was produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub body: CertBody,
    pub checks: Vec<Check>,
}

impl Certificate {
    /// Evaluates the body's claims and freezes the passing transcript.
    pub fn seal(body: CertBody) -> Result<Certificate, VerifyError> {
        let checks = body.build_checks()?;
        Ok(Certificate { body, checks })
    }

    pub fn kind(&self) -> &'static str {
        self.body.kind()
    }
}

/// Re-verifies a certificate from scratch: every claim is recomputed from
/// the inputs and witness data using only the exact kernels, then the
/// recomputed transcript is compared against the stored one. Nothing from
/// certificate generation is reused.
pub fn verify_certificate(cert: &Certificate) -> Result<(), VerifyError> {
    let rebuilt = cert.body.build_checks()?;
    if rebuilt.len() != cert.checks.len() {
        return Err(VerifyError::TranscriptMismatch {
            index: rebuilt.len().min(cert.checks.len()),
            expected: format!("{} checks", rebuilt.len()),
            found: format!("{} checks", cert.checks.len()),
        });
    }
    for (index, (expected, found)) in rebuilt.iter().zip(cert.checks.iter()).enumerate() {
        if expected != found {
            return Err(VerifyError::TranscriptMismatch {
                index,
                expected: format!(
                    "{}: {} {} {}",
                    expected.claim, expected.lhs, expected.rel, expected.rhs
                ),
                found: format!("{}: {} {} {}", found.claim, found.lhs, found.rel, found.rhs),
            });
        }
    }
    Ok(())
}
