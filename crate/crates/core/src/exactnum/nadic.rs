use alloc::format;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExactError, Rational};

/// A base-n fraction s/nᵗ in lowest terms: either t = 0 or n does not
/// divide s. These are exactly the shifts that occur in the affine image
/// of BS(1,n) and, at n = 2, the breakpoint coordinates of Thompson maps.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NAdic {
    base: u32,
    mantissa: BigInt,
    exp: u32,
}

impl NAdic {
    pub fn new(base: u32, mantissa: BigInt, exp: u32) -> Result<Self, ExactError> {
        if base < 2 {
            return Err(ExactError::InvalidBase(base));
        }
        Ok(Self::normalized(base, mantissa, exp))
    }

    fn normalized(base: u32, mut mantissa: BigInt, mut exp: u32) -> Self {
        if mantissa.is_zero() {
            exp = 0;
        } else {
            let b = BigInt::from(base);
            while exp > 0 {
                let (q, r) = mantissa.div_rem(&b);
                if !r.is_zero() {
                    break;
                }
                mantissa = q;
                exp -= 1;
            }
        }
        NAdic { base, mantissa, exp }
    }

    pub fn zero(base: u32) -> Self {
        NAdic { base, mantissa: BigInt::zero(), exp: 0 }
    }

    pub fn from_int(base: u32, value: i64) -> Self {
        NAdic { base, mantissa: BigInt::from(value), exp: 0 }
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exp(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.mantissa.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn value(&self) -> Rational {
        Rational::new(self.mantissa.clone(), BigInt::from(self.base).pow(self.exp))
            .expect("positive denominator")
    }

    /// Reads a rational as s/nᵗ; fails when the denominator has a prime
    /// factor outside the base.
    pub fn try_from_rational(base: u32, r: &Rational) -> Result<Self, ExactError> {
        if base < 2 {
            return Err(ExactError::InvalidBase(base));
        }
        let b = BigInt::from(base);
        let mut num = r.numer().clone();
        let mut den = r.denom().clone();
        let mut exp: u32 = 0;
        while !den.is_one() {
            let g = den.gcd(&b);
            if g.is_one() {
                return Err(ExactError::NotBaseRepresentable(format!("{r}")));
            }
            den /= &g;
            num *= &b / g;
            exp += 1;
        }
        Ok(Self::normalized(base, num, exp))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ExactError> {
        if self.base != other.base {
            return Err(ExactError::BaseMismatch(self.base, other.base));
        }
        let b = BigInt::from(self.base);
        let t = self.exp.max(other.exp);
        let s = &self.mantissa * b.pow(t - self.exp) + &other.mantissa * b.pow(t - other.exp);
        Ok(Self::normalized(self.base, s, t))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        NAdic { base: self.base, mantissa: -&self.mantissa, exp: self.exp }
    }

    /// Multiplies by baseᵏ (k may be negative).
    pub fn scale_pow(&self, k: i64) -> Self {
        if self.mantissa.is_zero() {
            return self.clone();
        }
        if k >= 0 {
            let k = k as u32;
            if self.exp >= k {
                NAdic { base: self.base, mantissa: self.mantissa.clone(), exp: self.exp - k }
            } else {
                let m = &self.mantissa * BigInt::from(self.base).pow(k - self.exp);
                NAdic { base: self.base, mantissa: m, exp: 0 }
            }
        } else {
            Self::normalized(self.base, self.mantissa.clone(), self.exp + (-k) as u32)
        }
    }

    /// Numeric comparison; bases may differ.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        if self.base == other.base {
            let b = BigInt::from(self.base);
            let lhs = &self.mantissa * b.pow(other.exp);
            let rhs = &other.mantissa * b.pow(self.exp);
            lhs.cmp(&rhs)
        } else {
            self.value().cmp(&other.value())
        }
    }
}

// Numeric order first, base as a tiebreak, so Ord stays consistent with
// the structural Eq of canonical forms.
impl Ord for NAdic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_value(other).then_with(|| self.base.cmp(&other.base))
    }
}

impl PartialOrd for NAdic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NAdic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.mantissa)
        } else {
            write!(f, "{}", self.value())
        }
    }
}

/// Dyadic rational: an `NAdic` fixed at base 2.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Dyadic(NAdic);

impl Dyadic {
    pub fn new(mantissa: BigInt, exp: u32) -> Self {
        Dyadic(NAdic::new(2, mantissa, exp).expect("base 2 is valid"))
    }

    pub fn from_int(value: i64) -> Self {
        Dyadic(NAdic::from_int(2, value))
    }

    pub fn zero() -> Self {
        Dyadic(NAdic::zero(2))
    }

    pub fn one() -> Self {
        Dyadic::from_int(1)
    }

    pub fn try_from_rational(r: &Rational) -> Result<Self, ExactError> {
        NAdic::try_from_rational(2, r).map(Dyadic)
    }

    pub fn as_nadic(&self) -> &NAdic {
        &self.0
    }

    pub fn mantissa(&self) -> &BigInt {
        self.0.mantissa()
    }

    pub fn exp(&self) -> u32 {
        self.0.exp()
    }

    pub fn value(&self) -> Rational {
        self.0.value()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn neg(&self) -> Self {
        Dyadic(self.0.neg())
    }

    /// Multiplies by 2ᵏ.
    pub fn scale_pow(&self, k: i64) -> Self {
        Dyadic(self.0.scale_pow(k))
    }

    pub fn cmp_value(&self, other: &Self) -> Ordering {
        self.0.cmp_value(&other.0)
    }
}

impl core::ops::Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        Dyadic(self.0.checked_add(&rhs.0).expect("both base 2"))
    }
}

impl core::ops::Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        Dyadic(self.0.checked_sub(&rhs.0).expect("both base 2"))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nadic(n: u32, s: i64, t: u32) -> NAdic {
        NAdic::new(n, BigInt::from(s), t).unwrap()
    }

    #[test]
    fn normalize_divides_out_base() {
        // 4/2^2 = 1
        let x = nadic(2, 4, 2);
        assert_eq!(x.mantissa(), &BigInt::from(1));
        assert_eq!(x.exp(), 0);
    }

    #[test]
    fn normalize_partial() {
        // 6/2^2 = 3/2
        let x = nadic(2, 6, 2);
        assert_eq!(x.mantissa(), &BigInt::from(3));
        assert_eq!(x.exp(), 1);
    }

    #[test]
    fn normalize_zero() {
        let x = nadic(3, 0, 5);
        assert_eq!(x.mantissa(), &BigInt::from(0));
        assert_eq!(x.exp(), 0);
    }

    #[test]
    fn base_one_rejected() {
        assert!(NAdic::new(1, BigInt::from(1), 0).is_err());
    }

    #[test]
    fn add_and_compare() {
        let a = nadic(2, 1, 1); // 1/2
        let b = nadic(2, 1, 2); // 1/4
        let s = a.checked_add(&b).unwrap(); // 3/4
        assert_eq!(s, nadic(2, 3, 2));
        assert_eq!(a.cmp_value(&b), Ordering::Greater);
        assert!(a.checked_add(&nadic(3, 1, 0)).is_err());
    }

    #[test]
    fn scale() {
        let a = nadic(2, 3, 1); // 3/2
        assert_eq!(a.scale_pow(1), nadic(2, 3, 0));
        assert_eq!(a.scale_pow(-2), nadic(2, 3, 3));
        assert_eq!(a.scale_pow(3), nadic(2, 12, 0));
    }

    #[test]
    fn rational_round_trip() {
        let r: Rational = "-5/8".parse().unwrap();
        let d = Dyadic::try_from_rational(&r).unwrap();
        assert_eq!(d.value(), r);
        let third: Rational = "1/3".parse().unwrap();
        assert!(Dyadic::try_from_rational(&third).is_err());
        let six = NAdic::try_from_rational(6, &"1/12".parse().unwrap()).unwrap();
        assert_eq!(six.value(), "1/12".parse().unwrap());
    }

    #[test]
    fn display_is_rational_value() {
        assert_eq!(nadic(2, -3, 1).to_string(), "-3/2");
    }
}
