use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{ExactError, Rational};

/// Quadratic irrational (p + q√d)/r in canonical form: d squarefree and at
/// least 2, q nonzero, r positive, gcd(p, q, r) = 1. Canonical forms are
/// unique, so structural equality is value equality.
///
/// Comparison against a rational isolates the radical and decides by signed
/// squaring; comparison between two irrationals over different radicands
/// refines rational enclosures until they separate. Both are exact and
/// terminate because the represented value is irrational.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadIrr {
    p: BigInt,
    q: BigInt,
    d: u32,
    r: BigInt,
}

fn is_squarefree(d: u32) -> bool {
    let d = d as u64;
    let mut f: u64 = 2;
    while f * f <= d {
        if d.is_multiple_of(f * f) {
            return false;
        }
        f += 1;
    }
    true
}

/// Sign-aware comparison of a√d against b, for a ≠ 0 and d squarefree.
fn cmp_radical_vs_int(a: &BigInt, d: u32, b: &BigInt) -> Ordering {
    debug_assert!(!a.is_zero());
    if a.is_positive() && !b.is_positive() {
        return Ordering::Greater;
    }
    if a.is_negative() && !b.is_negative() {
        return Ordering::Less;
    }
    let lhs = a * a * BigInt::from(d);
    let rhs = b * b;
    // a²d = b² would force √d rational; unreachable for squarefree d ≥ 2.
    debug_assert_ne!(lhs, rhs);
    if a.is_positive() {
        lhs.cmp(&rhs)
    } else {
        rhs.cmp(&lhs)
    }
}

impl QuadIrr {
    pub fn new(p: BigInt, q: BigInt, d: u32, r: BigInt) -> Result<Self, ExactError> {
        if q.is_zero() {
            return Err(ExactError::ZeroRadicalCoefficient);
        }
        if r.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        if d < 2 || !is_squarefree(d) {
            return Err(ExactError::NotSquarefree(d));
        }
        let (mut p, mut q, mut r) = if r.is_negative() { (-p, -q, -r) } else { (p, q, r) };
        let g = p.gcd(&q).gcd(&r);
        p /= &g;
        q /= &g;
        r /= &g;
        Ok(QuadIrr { p, q, d, r })
    }

    /// √d itself.
    pub fn sqrt(d: u32) -> Result<Self, ExactError> {
        QuadIrr::new(BigInt::zero(), BigInt::from(1), d, BigInt::from(1))
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn radicand(&self) -> u32 {
        self.d
    }

    pub fn denom(&self) -> &BigInt {
        &self.r
    }

    /// Exact order against a rational. Never `Equal`: the value is irrational.
    pub fn cmp_rational(&self, y: &Rational) -> Ordering {
        // (p + q√d)/r - a/b has the sign of q·b·√d + (p·b - a·r).
        let a = y.numer();
        let b = y.denom();
        let coeff = &self.q * b;
        let offset = a * &self.r - &self.p * b;
        cmp_radical_vs_int(&coeff, self.d, &offset)
    }

    /// Exact order against another quadratic irrational. `Equal` only for
    /// identical canonical forms.
    pub fn cmp_quad(&self, other: &Self) -> Ordering {
        if self.d == other.d {
            // Difference has the sign of A√d + B with the integers below.
            let a = &self.q * &other.r - &other.q * &self.r;
            let b = &self.p * &other.r - &other.p * &self.r;
            if a.is_zero() {
                return b.cmp(&BigInt::zero());
            }
            cmp_radical_vs_int(&a, self.d, &(-b))
        } else {
            // Distinct squarefree radicands with nonzero coefficients can
            // never be equal, so enclosure refinement terminates.
            let mut bits = 8;
            loop {
                let (lo1, hi1) = self.enclosure(bits);
                let (lo2, hi2) = other.enclosure(bits);
                if hi1 < lo2 {
                    return Ordering::Less;
                }
                if hi2 < lo1 {
                    return Ordering::Greater;
                }
                bits *= 2;
            }
        }
    }

    /// scale·x + shift, exact; the scale must be nonzero so the result
    /// stays irrational.
    pub fn affine(&self, scale: &Rational, shift: &Rational) -> Result<Self, ExactError> {
        if scale.is_zero() {
            return Err(ExactError::ZeroScale);
        }
        let (a, b) = (scale.numer(), scale.denom());
        let (e, f) = (shift.numer(), shift.denom());
        let p = a * f * &self.p + e * b * &self.r;
        let q = a * f * &self.q;
        let r = b * f * &self.r;
        QuadIrr::new(p, q, self.d, r)
    }

    pub fn add_rational(&self, shift: &Rational) -> Self {
        self.affine(&Rational::one(), shift).expect("unit scale")
    }

    /// Rational enclosure (lo, hi) with hi - lo = |q| / (r·2ᵇⁱᵗˢ);
    /// the true value lies strictly inside.
    pub fn enclosure(&self, bits: u32) -> (Rational, Rational) {
        let scaled = BigInt::from(self.d) << (2 * bits as usize);
        let root_lo = scaled.sqrt();
        let root_hi = &root_lo + 1;
        let denom = BigInt::from(1) << (bits as usize);
        let lo_r = Rational::new(root_lo, denom.clone()).expect("power of two");
        let hi_r = Rational::new(root_hi, denom).expect("power of two");
        let (lo, hi) = if self.q.is_positive() { (lo_r, hi_r) } else { (hi_r, lo_r) };
        let rr = Rational::from_bigint(self.r.clone());
        let pp = Rational::from_bigint(self.p.clone());
        let qq = Rational::from_bigint(self.q.clone());
        let lo = &(&pp + &(&qq * &lo)) / &rr;
        let hi = &(&pp + &(&qq * &hi)) / &rr;
        (lo, hi)
    }

    pub fn floor_bigint(&self) -> BigInt {
        let mut bits = 4;
        loop {
            let (lo, hi) = self.enclosure(bits);
            let fl = lo.floor_bigint();
            let fh = hi.floor_bigint();
            if fl == fh {
                return fl;
            }
            bits *= 2;
        }
    }
}

impl fmt::Display for QuadIrr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}{:+}*sqrt({}))/{}", self.p, self.q, self.d, self.r)
    }
}
