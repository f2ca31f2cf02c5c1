use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::exactnum::Rational;
use crate::groups::PLMap;

use super::{ConeError, Sign, SignOracle};

/// Breadth-first Calkin-Wilf stream of all positive rationals in lowest
/// terms, each exactly once: 1, 1/2, 2, 1/3, 3/2, 2/3, 3, …
struct CalkinWilf {
    state: Rational,
}

impl Iterator for CalkinWilf {
    type Item = Rational;

    fn next(&mut self) -> Option<Rational> {
        let current = self.state.clone();
        // Newman's successor: x ↦ 1/(2⌊x⌋ + 1 − x).
        let twice_floor = Rational::from_bigint(current.floor_bigint() * BigInt::from(2));
        let denom = &(&twice_floor + &Rational::one()) - &current;
        self.state = denom.recip().expect("successor denominator is positive");
        Some(current)
    }
}

/// The canonical bijection ℕ → ℚ ∩ (0,1): the Calkin-Wilf sequence filtered
/// to values below 1.
pub fn unit_rationals() -> impl Iterator<Item = Rational> {
    CalkinWilf { state: Rational::one() }.filter(|x| *x < Rational::one())
}

/// The i-th rational of the canonical enumeration (0-based).
pub fn enum_rational(index: usize) -> Rational {
    unit_rationals().nth(index).expect("the enumeration is infinite")
}

/// Decision record of an enumeration-cone sign query: the first enumerated
/// rational the element moves, and where it moves it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumDecision {
    pub index: usize,
    pub rational: Rational,
    pub image: Rational,
    pub sign: Sign,
}

/// Positive cone on Thompson's F from an enumeration of ℚ ∩ (0,1): an
/// element is positive when it moves the first enumerated rational it does
/// not fix upward. An optional explicit prefix overrides the start of the
/// canonical enumeration; the canonical stream then continues, skipping
/// prefix entries so the enumeration stays injective.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct EnumCone {
    prefix: Vec<Rational>,
}

impl EnumCone {
    pub fn canonical() -> Self {
        EnumCone { prefix: Vec::new() }
    }

    pub fn new(prefix: Vec<Rational>) -> Result<Self, ConeError> {
        for (i, r) in prefix.iter().enumerate() {
            if !r.is_positive() || *r >= Rational::one() {
                return Err(ConeError::InvalidPrefix(alloc::format!(
                    "entry {r} is not strictly inside (0,1)"
                )));
            }
            if prefix[..i].contains(r) {
                return Err(ConeError::InvalidPrefix(alloc::format!("entry {r} repeats")));
            }
        }
        Ok(EnumCone { prefix })
    }

    pub fn prefix(&self) -> &[Rational] {
        &self.prefix
    }

    /// The full enumeration: prefix first, then the canonical stream with
    /// prefix values skipped.
    pub fn rationals(&self) -> impl Iterator<Item = Rational> + '_ {
        self.prefix
            .iter()
            .cloned()
            .chain(unit_rationals().filter(move |x| !self.prefix.contains(x)))
    }

    pub fn rational_at(&self, index: usize) -> Rational {
        self.rationals().nth(index).expect("the enumeration is infinite")
    }

    /// Scans the enumeration for the first rational moved by g. Terminates
    /// for every nonidentity map: such a map moves a nonempty open set,
    /// which contains enumerated rationals.
    pub fn decide(&self, g: &PLMap) -> Result<EnumDecision, ConeError> {
        if g.is_identity() {
            return Err(ConeError::IdentityInput);
        }
        for (index, rational) in self.rationals().enumerate() {
            let image = g.eval(&rational).expect("enumeration stays inside (0,1)");
            if image != rational {
                let sign = if image > rational { Sign::Pos } else { Sign::Neg };
                return Ok(EnumDecision { index, rational, image, sign });
            }
        }
        unreachable!("nonidentity maps move some enumerated rational")
    }

    pub fn sign(&self, g: &PLMap) -> Result<Sign, ConeError> {
        Ok(self.decide(g)?.sign)
    }
}

impl SignOracle<PLMap> for EnumCone {
    fn element_sign(&self, g: &PLMap) -> Sign {
        self.sign(g).expect("nonidentity element")
    }
}

impl fmt::Display for EnumCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P[enum, prefix=[")?;
        for (i, r) in self.prefix.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]]")
    }
}
