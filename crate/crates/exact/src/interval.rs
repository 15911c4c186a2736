//! Closed rational intervals with outward-exact arithmetic.

use std::ops::{Add, Mul, Neg, Sub};

use crate::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo <= hi, "empty interval");
        Interval { lo, hi }
    }

    pub fn point(x: Rat) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// Sign of every point in the interval, if it is uniform and nonzero;
    /// zero if the interval is exactly `[0, 0]`.
    pub fn sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn pow(&self, exp: u32) -> Interval {
        let mut acc = Interval::point(Rat::one());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> Interval {
        let (a, b) = (&self.lo * c, &self.hi * c);
        if a <= b {
            Interval::new(a, b)
        } else {
            Interval::new(b, a)
        }
    }
}

impl<'a, 'b> Add<&'b Interval> for &'a Interval {
    type Output = Interval;
    fn add(self, rhs: &'b Interval) -> Interval {
        Interval::new(&self.lo + &rhs.lo, &self.hi + &rhs.hi)
    }
}

impl<'a, 'b> Sub<&'b Interval> for &'a Interval {
    type Output = Interval;
    fn sub(self, rhs: &'b Interval) -> Interval {
        Interval::new(&self.lo - &rhs.hi, &self.hi - &rhs.lo)
    }
}

impl<'a, 'b> Mul<&'b Interval> for &'a Interval {
    type Output = Interval;
    fn mul(self, rhs: &'b Interval) -> Interval {
        if self.is_point() {
            return rhs.scale(&self.lo);
        }
        if rhs.is_point() {
            return self.scale(&rhs.lo);
        }
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = products.iter().min().cloned().expect("nonempty");
        let hi = products.iter().max().cloned().expect("nonempty");
        Interval::new(lo, hi)
    }
}

impl<'a> Neg for &'a Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval::new(-&self.hi, -&self.lo)
    }
}
