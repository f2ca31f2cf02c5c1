use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::exactnum::{power_of, Dyadic, Rational};

use super::{GroupElement, GroupError, Letter};

/// Closed subinterval of [0,1] with dyadic endpoints.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DyadicInterval {
    lo: Dyadic,
    hi: Dyadic,
}

impl DyadicInterval {
    pub fn new(lo: Dyadic, hi: Dyadic) -> Result<Self, GroupError> {
        let in_range = (lo.is_zero() || lo.value().is_positive())
            && lo.cmp_value(&hi) == Ordering::Less
            && hi.cmp_value(&Dyadic::one()) != Ordering::Greater;
        if in_range {
            Ok(DyadicInterval { lo, hi })
        } else {
            Err(GroupError::InvalidInterval(format!(
                "[{lo}, {hi}] must satisfy 0 <= lo < hi <= 1"
            )))
        }
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn length(&self) -> Dyadic {
        &self.hi - &self.lo
    }

    pub fn contains_closed(&self, x: &Rational) -> bool {
        self.lo.value() <= *x && *x <= self.hi.value()
    }

    pub fn contains_interior(&self, x: &Rational) -> bool {
        self.lo.value() < *x && *x < self.hi.value()
    }

    pub fn disjoint_from(&self, other: &Self) -> bool {
        self.hi.cmp_value(&other.lo) == Ordering::Less
            || other.hi.cmp_value(&self.lo) == Ordering::Less
    }
}

impl fmt::Display for DyadicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Element of Thompson's group F: a piecewise-linear homeomorphism of [0,1]
/// fixing the endpoints, with dyadic breakpoints and slopes that are integer
/// powers of two. The breakpoint list always contains (0,0) and (1,1), both
/// coordinates strictly increase, and collinear interior points are coalesced,
/// so the list is a canonical form and structural equality is map equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PLMap {
    points: Vec<(Dyadic, Dyadic)>,
}

/// 2ᵏ when x is a power of two with sign +1.
fn log2_exact(x: &BigInt) -> Option<u64> {
    if !x.is_positive() {
        return None;
    }
    let k = x.bits() - 1;
    if (BigInt::one() << k as usize) == *x {
        Some(k)
    } else {
        None
    }
}

/// The slope of the segment between two points when it is an integer power
/// of two, as the exponent.
fn segment_slope_log2(a: &(Dyadic, Dyadic), b: &(Dyadic, Dyadic)) -> Option<i64> {
    let dx = &b.0 - &a.0;
    let dy = &b.1 - &a.1;
    let ratio = &dy.value() / &dx.value();
    if !ratio.is_positive() {
        return None;
    }
    let up = log2_exact(ratio.numer())?;
    let down = log2_exact(ratio.denom())?;
    Some(up as i64 - down as i64)
}

impl PLMap {
    /// Builds the canonical form, validating every invariant.
    pub fn from_breakpoints(mut points: Vec<(Dyadic, Dyadic)>) -> Result<Self, GroupError> {
        points.sort_by(|p, q| p.0.cmp_value(&q.0));
        points.dedup();
        if points.len() < 2 {
            return Err(GroupError::InvalidBreakpoints(format!(
                "need at least the two endpoints, got {} points",
                points.len()
            )));
        }
        let first = points.first().expect("nonempty");
        let last = points.last().expect("nonempty");
        if !first.0.is_zero() || !first.1.is_zero() {
            return Err(GroupError::InvalidBreakpoints(format!(
                "first breakpoint must be (0,0), got ({}, {})",
                first.0, first.1
            )));
        }
        if last.0 != Dyadic::one() || last.1 != Dyadic::one() {
            return Err(GroupError::InvalidBreakpoints(format!(
                "last breakpoint must be (1,1), got ({}, {})",
                last.0, last.1
            )));
        }
        for w in points.windows(2) {
            if w[0].0.cmp_value(&w[1].0) != Ordering::Less {
                return Err(GroupError::InvalidBreakpoints(format!(
                    "x-coordinates must strictly increase at {}",
                    w[1].0
                )));
            }
            if w[0].1.cmp_value(&w[1].1) != Ordering::Less {
                return Err(GroupError::InvalidBreakpoints(format!(
                    "y-coordinates must strictly increase at {}",
                    w[1].1
                )));
            }
            if segment_slope_log2(&w[0], &w[1]).is_none() {
                return Err(GroupError::InvalidBreakpoints(format!(
                    "slope over [{}, {}] is not a power of two",
                    w[0].0, w[1].0
                )));
            }
        }
        // Coalesce interior points where the slope does not change.
        let mut canon: Vec<(Dyadic, Dyadic)> = Vec::with_capacity(points.len());
        for p in points {
            while canon.len() >= 2 {
                let a = &canon[canon.len() - 2];
                let b = &canon[canon.len() - 1];
                if segment_slope_log2(a, b) == segment_slope_log2(b, &p) {
                    canon.pop();
                } else {
                    break;
                }
            }
            canon.push(p);
        }
        Ok(PLMap { points: canon })
    }

    pub fn identity() -> Self {
        PLMap {
            points: alloc::vec![
                (Dyadic::zero(), Dyadic::zero()),
                (Dyadic::one(), Dyadic::one()),
            ],
        }
    }

    /// Standard generator a: slope 1/2 on [0,1/2], 1 on [1/2,3/4], 2 on [3/4,1].
    pub fn gen_a() -> Self {
        let p = |s: i64, t: u32| Dyadic::new(BigInt::from(s), t);
        PLMap::from_breakpoints(alloc::vec![
            (Dyadic::zero(), Dyadic::zero()),
            (p(1, 1), p(1, 2)),
            (p(3, 2), p(1, 1)),
            (Dyadic::one(), Dyadic::one()),
        ])
        .expect("generator data is valid")
    }

    /// Standard generator b: identity on [0,1/2], a copy of `gen_a` on [1/2,1].
    pub fn gen_b() -> Self {
        let p = |s: i64, t: u32| Dyadic::new(BigInt::from(s), t);
        PLMap::from_breakpoints(alloc::vec![
            (Dyadic::zero(), Dyadic::zero()),
            (p(1, 1), p(1, 1)),
            (p(3, 2), p(5, 3)),
            (p(7, 3), p(3, 2)),
            (Dyadic::one(), Dyadic::one()),
        ])
        .expect("generator data is valid")
    }

    fn letter(l: Letter) -> Self {
        match l {
            Letter::A => Self::gen_a(),
            Letter::AInv => Self::gen_a().inverse(),
            Letter::B => Self::gen_b(),
            Letter::BInv => Self::gen_b().inverse(),
        }
    }

    /// Evaluates a word left-to-right, leftmost letter outermost.
    pub fn from_word(word: &[Letter]) -> Self {
        word.iter()
            .fold(Self::identity(), |acc, &l| acc.compose(&Self::letter(l)))
    }

    pub fn breakpoints(&self) -> &[(Dyadic, Dyadic)] {
        &self.points
    }

    pub fn is_identity(&self) -> bool {
        self.points.len() == 2
    }

    fn segment_index_dyadic(&self, t: &Dyadic) -> usize {
        // Largest i with x_i <= t, capped so i+1 stays in range.
        let mut i = self
            .points
            .partition_point(|p| p.0.cmp_value(t) != Ordering::Greater);
        i = i.saturating_sub(1);
        i.min(self.points.len() - 2)
    }

    /// Evaluation at a dyadic point of [0,1]; dyadics are closed under all
    /// maps in F, so the image is again dyadic.
    pub fn eval_dyadic(&self, t: &Dyadic) -> Dyadic {
        let i = self.segment_index_dyadic(t);
        let (x0, y0) = &self.points[i];
        let k = segment_slope_log2(&self.points[i], &self.points[i + 1])
            .expect("canonical map has power-of-two slopes");
        y0 + &(t - x0).scale_pow(k)
    }

    /// Exact evaluation at any rational point of [0,1].
    pub fn eval(&self, t: &Rational) -> Result<Rational, GroupError> {
        if t.is_negative() || *t > Rational::one() {
            return Err(GroupError::OutOfDomain(format!("{t}")));
        }
        let mut i = self
            .points
            .partition_point(|p| p.0.value() <= *t);
        i = i.saturating_sub(1);
        i = i.min(self.points.len() - 2);
        let (x0, y0) = &self.points[i];
        let k = segment_slope_log2(&self.points[i], &self.points[i + 1])
            .expect("canonical map has power-of-two slopes");
        Ok(&y0.value() + &(&power_of(2, k) * &(t - &x0.value())))
    }

    /// self ∘ other, the group product with self acting last.
    pub fn compose(&self, other: &Self) -> Self {
        let other_inv = other.inverse();
        let mut xs: Vec<Dyadic> = other.points.iter().map(|p| p.0.clone()).collect();
        xs.extend(self.points.iter().map(|p| other_inv.eval_dyadic(&p.0)));
        xs.sort_by(|a, b| a.cmp_value(b));
        xs.dedup();
        let points = xs
            .into_iter()
            .map(|x| {
                let y = self.eval_dyadic(&other.eval_dyadic(&x));
                (x, y)
            })
            .collect();
        PLMap::from_breakpoints(points).expect("composition of valid maps is valid")
    }

    pub fn inverse(&self) -> Self {
        let points = self.points.iter().map(|(x, y)| (y.clone(), x.clone())).collect();
        PLMap::from_breakpoints(points).expect("inverse of a valid map is valid")
    }
}

impl GroupElement for PLMap {
    fn mul(&self, other: &Self) -> Self {
        self.compose(other)
    }

    fn inverse(&self) -> Self {
        PLMap::inverse(self)
    }

    fn is_identity(&self) -> bool {
        PLMap::is_identity(self)
    }
}

impl fmt::Display for PLMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (x, y)) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({x},{y})")?;
        }
        write!(f, "]")
    }
}

/// Direction of a bump: `Up` raises every interior point of its support,
/// `Down` is the inverse and lowers them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BumpDirection {
    Up,
    Down,
}

/// The basic bump supported on a dyadic-endpoint interval I = [lo, hi]:
/// identity outside I, and inside I slopes 2, 1, 1/2 on the first quarter,
/// second quarter, and upper half. Quarter points of a dyadic interval are
/// dyadic, so the construction is closed.
pub fn bump(interval: &DyadicInterval, direction: BumpDirection) -> PLMap {
    let lo = interval.lo();
    let hi = interval.hi();
    let len = interval.length();
    let quarter = len.scale_pow(-2);
    let half = len.scale_pow(-1);
    let points = alloc::vec![
        (Dyadic::zero(), Dyadic::zero()),
        (lo.clone(), lo.clone()),
        (lo + &quarter, lo + &half),
        (lo + &half, &(lo + &half) + &quarter),
        (hi.clone(), hi.clone()),
        (Dyadic::one(), Dyadic::one()),
    ];
    let up = PLMap::from_breakpoints(points).expect("bump data is valid");
    match direction {
        BumpDirection::Up => up,
        BumpDirection::Down => up.inverse(),
    }
}
