//! Constructive witnesses packaged as certificates: a separator between two
//! cone parameters, a discriminator showing a conjugate cone differs, a
//! function raising one point and lowering another while fixing a finite
//! set, and sign agreements of a conjugate cone on a whole ball. Every
//! certificate carries a transcript of checks and re-verifies from scratch
//! using only the exact kernels.

mod cert;
mod condense;
mod freepart;
mod fsep;
mod goodfn;
mod separator;

pub use cert::{verify_certificate, CertBody, Certificate, Check, Rel, VerifyError};
pub use condense::{condensation_witness, CondensationCert, CondensationRegion, WitnessCone};
pub use freepart::{bs_freepart_witness, BsFreePartCert};
pub use fsep::{conjugacy_separator_f, FSeparatorCert};
pub use goodfn::{good_function, GoodFunctionCert};
pub use separator::{separate_smirnov, separator_certificate, SeparatorCert};

use alloc::format;
use alloc::string::String;
use core::fmt;

use crate::cones::ConeError;
use crate::exactnum::ExactError;
use crate::groups::GroupError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessError {
    /// The two parameters must be given in strictly increasing order.
    NotOrdered(String),
    /// The two parameters coincide.
    EqualParameters(String),
    /// The operation is undefined on the identity.
    IdentityInput,
    /// A listed element is not positive in the cone.
    NotPositive(String),
    /// The positives list is empty.
    EmptyPositives,
    /// The target points must be distinct.
    EqualPoints(String),
    /// A target point lies in the fixed set.
    PointInFixedSet(String),
    /// A target point must lie strictly inside (0,1).
    PointOutOfRange(String),
    /// A fixed-set entry must lie in [0,1].
    FixedPointOutOfRange(String),
    /// The freshly built certificate failed its own checks.
    Construction(String),
    Exact(ExactError),
    Group(GroupError),
    Cone(ConeError),
}

impl fmt::Display for WitnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessError::NotOrdered(s) => write!(f, "parameters out of order: {s}"),
            WitnessError::EqualParameters(s) => write!(f, "parameters coincide: {s}"),
            WitnessError::IdentityInput => write!(f, "operation undefined on the identity"),
            WitnessError::NotPositive(s) => write!(f, "element is not positive: {s}"),
            WitnessError::EmptyPositives => write!(f, "positives list is empty"),
            WitnessError::EqualPoints(s) => write!(f, "target points coincide: {s}"),
            WitnessError::PointInFixedSet(s) => write!(f, "target point {s} lies in the fixed set"),
            WitnessError::PointOutOfRange(s) => {
                write!(f, "target point {s} must lie strictly inside (0,1)")
            }
            WitnessError::FixedPointOutOfRange(s) => {
                write!(f, "fixed-set entry {s} must lie in [0,1]")
            }
            WitnessError::Construction(s) => write!(f, "certificate construction failed: {s}"),
            WitnessError::Exact(e) => write!(f, "{e}"),
            WitnessError::Group(e) => write!(f, "{e}"),
            WitnessError::Cone(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for WitnessError {}

impl From<ExactError> for WitnessError {
    fn from(e: ExactError) -> Self {
        WitnessError::Exact(e)
    }
}

impl From<GroupError> for WitnessError {
    fn from(e: GroupError) -> Self {
        WitnessError::Group(e)
    }
}

impl From<ConeError> for WitnessError {
    fn from(e: ConeError) -> Self {
        WitnessError::Cone(e)
    }
}

impl From<cert::VerifyError> for WitnessError {
    fn from(e: cert::VerifyError) -> Self {
        WitnessError::Construction(format!("{e}"))
    }
}
