use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ExactError;

/// Arbitrary-precision rational in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: BigInt, den: BigInt) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn floor_bigint(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn recip(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(Rational(self.0.recip()))
    }
}

/// baseᵉˣᵖ as an exact rational; negative exponents give 1/baseⁿ.
pub fn power_of(base: u32, exp: i64) -> Rational {
    let b = BigInt::from(base);
    if exp >= 0 {
        Rational::from_bigint(b.pow(exp as u32))
    } else {
        Rational::new(BigInt::one(), b.pow((-exp) as u32)).expect("positive power")
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident) => {
        impl<'a, 'b> core::ops::$imp<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational(core::ops::$imp::$method(&self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl core::ops::Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = ExactError;

    /// Accepts "p/q" or a bare integer "p".
    fn from_str(s: &str) -> Result<Self, ExactError> {
        let bad = || ExactError::ParseRational(String::from(s));
        match s.split_once('/') {
            Some((n, d)) => {
                let num = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                let den = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                Rational::new(num, den)
            }
            None => {
                let num = BigInt::from_str(s.trim()).map_err(|_| bad())?;
                Ok(Rational::from_bigint(num))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d)).unwrap()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(r(2, 4), r(1, 2));
        assert_eq!(r(1, -2), r(-1, 2));
        assert!(r(-1, 2).is_negative());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            Rational::new(BigInt::from(1), BigInt::from(0)),
            Err(ExactError::ZeroDenominator)
        );
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(r(-3, 2).to_string(), "-3/2");
        assert_eq!("  -3/2".parse::<Rational>().unwrap(), r(-3, 2));
        assert_eq!("7".parse::<Rational>().unwrap(), r(7, 1));
        assert!("x/2".parse::<Rational>().is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(power_of(2, 3), r(8, 1));
        assert_eq!(power_of(2, -2), r(1, 4));
        assert_eq!(power_of(3, 0), r(1, 1));
    }

    #[test]
    fn floor() {
        assert_eq!(r(-3, 2).floor_bigint(), BigInt::from(-2));
        assert_eq!(r(3, 2).floor_bigint(), BigInt::from(1));
    }
}
