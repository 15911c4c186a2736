//! Real algebraic numbers, represented by a minimal polynomial and an
//! isolating interval.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::factor::factor_square_free;
use crate::interval::Interval;
use crate::poly::Poly;
use crate::Rat;

/// A real algebraic number.
///
/// `minpoly` is monic and irreducible over the rationals. For rational
/// values it is linear and `lo == hi` is the value itself; otherwise
/// `lo < hi` and the open interval `(lo, hi)` contains exactly one root of
/// `minpoly` (endpoints are never roots).
#[derive(Clone)]
pub struct AlgebraicNumber {
    minpoly: Poly,
    lo: Rat,
    hi: Rat,
}

impl AlgebraicNumber {
    pub fn from_rat(r: Rat) -> Self {
        AlgebraicNumber {
            minpoly: Poly::linear_root(&r),
            lo: r.clone(),
            hi: r,
        }
    }

    /// The root of the irreducible `minpoly` inside `(lo, hi)`. Returns
    /// `None` unless there is exactly one.
    pub fn from_isolated(minpoly: Poly, lo: Rat, hi: Rat) -> Option<Self> {
        let minpoly = minpoly.monic();
        match minpoly.degree()? {
            0 => None,
            1 => Some(AlgebraicNumber::from_rat(-minpoly.coeff(0))),
            _ => {
                if lo >= hi || minpoly.count_roots_in(&lo, &hi) != 1 || minpoly.eval(&hi).is_zero() {
                    return None;
                }
                Some(AlgebraicNumber { minpoly, lo, hi })
            }
        }
    }

    pub fn minpoly(&self) -> &Poly {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap_or(0)
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    pub fn to_rat(&self) -> Option<Rat> {
        self.is_rational().then(|| self.lo.clone())
    }

    pub fn is_integer(&self) -> bool {
        self.to_rat().is_some_and(|r| r.is_integer())
    }

    pub fn is_zero(&self) -> bool {
        self.to_rat().is_some_and(|r| r.is_zero())
    }

    pub fn interval(&self) -> Interval {
        Interval::new(self.lo.clone(), self.hi.clone())
    }

    /// Halves the isolating interval.
    pub fn refine(&mut self) {
        if self.is_rational() {
            return;
        }
        let mid = self.lo.midpoint(&self.hi);
        if self.minpoly.sign_at(&self.lo) != self.minpoly.sign_at(&mid) {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    /// Refines until the isolating interval is no wider than `width`.
    pub fn refine_to(&mut self, width: &Rat) {
        while &(&self.hi - &self.lo) > width {
            self.refine();
        }
    }

    pub fn to_f64(&self) -> f64 {
        let mut a = self.clone();
        a.refine_to(&Rat::new(1, BigInt::one() << 60));
        a.lo.midpoint(&a.hi).to_f64()
    }

    pub fn signum(&self) -> i32 {
        match self.cmp_rat(&Rat::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn cmp_rat(&self, r: &Rat) -> Ordering {
        if let Some(v) = self.to_rat() {
            return v.cmp(r);
        }
        let mut a = self.clone();
        loop {
            if &a.hi <= r {
                return Ordering::Less;
            }
            if &a.lo >= r {
                return Ordering::Greater;
            }
            a.refine();
        }
    }

    /// Largest integer not above the number.
    pub fn floor(&self) -> BigInt {
        if let Some(v) = self.to_rat() {
            return v.floor();
        }
        let mut a = self.clone();
        loop {
            let f = a.lo.floor();
            if Rat::from_int(f.clone() + 1) >= a.hi {
                return f;
            }
            a.refine();
        }
    }

    /// Sign of `q` evaluated at this number.
    pub fn sign_of(&self, q: &Poly) -> i32 {
        if let Some(v) = self.to_rat() {
            return q.eval(&v).signum();
        }
        if q.rem(&self.minpoly).is_zero() {
            return 0;
        }
        let mut a = self.clone();
        loop {
            if let Some(s) = q.eval_interval(&a.interval()).sign() {
                return s;
            }
            a.refine();
        }
    }

    /// Closed form `(p + q*sqrt(r))/s` for quadratic irrationals.
    fn quadratic_form(&self) -> Option<String> {
        if self.degree() != 2 {
            return None;
        }
        let b = self.minpoly.coeff(1);
        let c = self.minpoly.coeff(0);
        let disc = &b * &b - Rat::from(4) * &c;
        // sqrt(disc) = sqrt(num*den)/den = f*sqrt(r)/den with r square-free.
        let n = disc.numer() * disc.denom();
        let (f, r) = split_square(&n);
        let center = -&b / Rat::from(2);
        let half_root = Rat::from_int(f) / Rat::from_int(disc.denom().clone() * 2);
        let plus = self.cmp_rat(&center) == Ordering::Greater;
        let l = center.denom().lcm(half_root.denom());
        let p = (&center * Rat::from_int(l.clone())).to_integer()?;
        let q = (&half_root * Rat::from_int(l.clone())).to_integer()?;
        let g = p.gcd(&q).gcd(&l);
        let (p, q, l) = (p / &g, q / &g, l / &g);
        let surd = if q.is_one() {
            format!("sqrt({r})")
        } else {
            format!("{q}*sqrt({r})")
        };
        let body = if p.is_zero() {
            if plus {
                surd
            } else {
                format!("-{surd}")
            }
        } else {
            format!("{p} {} {surd}", if plus { "+" } else { "-" })
        };
        Some(if l.is_one() {
            body
        } else if p.is_zero() {
            format!("{body}/{l}")
        } else {
            format!("({body})/{l}")
        })
    }
}

/// Writes `n = f^2 * r` with `r` square-free when `n` is small enough to
/// factor by trial division; otherwise only small square factors are pulled.
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    let mut rest = n.clone();
    let mut f = BigInt::one();
    let mut d = BigInt::from(2);
    let limit = BigInt::from(1_000_000);
    while &d * &d <= rest && d <= limit {
        let sq = &d * &d;
        while (&rest % &sq).is_zero() {
            rest /= &sq;
            f *= &d;
        }
        d += 1;
    }
    (f, rest)
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for AlgebraicNumber {}

impl PartialOrd for AlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        if let Some(r) = other.to_rat() {
            return self.cmp_rat(&r);
        }
        if let Some(r) = self.to_rat() {
            return other.cmp_rat(&r).reverse();
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if a.minpoly == b.minpoly {
                let lo = a.lo.clone().max(b.lo.clone());
                let hi = a.hi.clone().min(b.hi.clone());
                if a.minpoly.count_roots_in(&lo, &hi) == 1 {
                    return Ordering::Equal;
                }
            }
            a.refine();
            b.refine();
        }
    }
}

impl From<Rat> for AlgebraicNumber {
    fn from(r: Rat) -> Self {
        AlgebraicNumber::from_rat(r)
    }
}

impl From<i64> for AlgebraicNumber {
    fn from(n: i64) -> Self {
        AlgebraicNumber::from_rat(Rat::from(n))
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rat() {
            return f.pad(&r.to_string());
        }
        if let Some(s) = self.quadratic_form() {
            return f.pad(&s);
        }
        f.pad(&format!("root of {} in [{}, {}]", self.minpoly, self.lo, self.hi))
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (~{:.6})", self.to_f64())
    }
}

impl Serialize for AlgebraicNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Distinct real roots of a nonzero polynomial, in decreasing order.
pub fn isolate_roots(p: &Poly) -> Vec<AlgebraicNumber> {
    let mut roots = Vec::new();
    if p.is_constant() {
        return roots;
    }
    for f in factor_square_free(&p.square_free_part()) {
        if f.degree() == Some(1) {
            roots.push(AlgebraicNumber::from_rat(-f.coeff(0)));
            continue;
        }
        let bound = f.root_bound();
        let seq = f.sturm_sequence();
        let changes = |x: &Rat| crate::poly::sign_changes(seq.iter().map(|q| q.sign_at(x)));
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            let count = changes(&lo).saturating_sub(changes(&hi));
            match count {
                0 => {}
                1 => roots.push(AlgebraicNumber {
                    minpoly: f.clone(),
                    lo,
                    hi,
                }),
                _ => {
                    let mid = lo.midpoint(&hi);
                    stack.push((lo, mid.clone()));
                    stack.push((mid, hi));
                }
            }
        }
    }
    roots.sort_by(|a, b| b.cmp(a));
    for i in 1..roots.len() {
        let (left, right) = roots.split_at_mut(i);
        let (hi, lo) = (&mut left[i - 1], &mut right[0]);
        while hi.lo <= lo.hi {
            hi.refine();
            lo.refine();
        }
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn golden_ratio_roots() {
        let roots = isolate_roots(&Poly::from_ints(&[-1, 1, 1]));
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].to_string(), "(-1 + sqrt(5))/2");
        assert_eq!(roots[1].to_string(), "(-1 - sqrt(5))/2");
        assert!(roots[0] > roots[1]);
        assert_eq!(roots[0].signum(), 1);
        assert_eq!(roots[1].floor(), BigInt::from(-2));
    }

    #[test]
    fn mixed_rational_and_irrational() {
        let p = &Poly::from_ints(&[-2, 0, 1]) * &Poly::from_ints(&[-3, 1]);
        let p = &p * &Poly::from_ints(&[1, 1]);
        let roots = isolate_roots(&p);
        let shown: Vec<String> = roots.iter().map(|r| r.to_string()).collect();
        assert_eq!(shown, ["3", "sqrt(2)", "-1", "-sqrt(2)"]);
    }

    #[test]
    fn equality_across_representations() {
        let roots = isolate_roots(&Poly::from_ints(&[-2, 0, 1]));
        let a = roots[0].clone();
        let mut b = a.clone();
        b.refine_to(&rat(1, 1000));
        assert_eq!(a, b);
        assert_ne!(roots[0], roots[1]);
        assert_eq!(a.sign_of(&Poly::from_ints(&[-2, 0, 1])), 0);
        assert_eq!(a.sign_of(&Poly::from_ints(&[-1, 1])), 1);
    }

    #[test]
    fn quadratic_forms() {
        // x^2 - 2x - 2: 1 +- sqrt(3)
        let r = isolate_roots(&Poly::from_ints(&[-2, -2, 1]));
        assert_eq!(r[0].to_string(), "1 + sqrt(3)");
        // 4x^2 - 8: +-sqrt(2); 9x^2 - 8: +-2*sqrt(2)/3
        let r = isolate_roots(&Poly::from_ints(&[-8, 0, 9]));
        assert_eq!(r[0].to_string(), "2*sqrt(2)/3");
        assert_eq!(r[1].to_string(), "-2*sqrt(2)/3");
    }

    #[test]
    fn cubic_falls_back_to_interval_form() {
        let r = isolate_roots(&Poly::from_ints(&[-2, 0, 0, 1]));
        assert_eq!(r.len(), 1);
        assert!(r[0].to_string().starts_with("root of x^3 - 2 in ["));
        assert!((r[0].to_f64() - 2f64.cbrt()).abs() < 1e-12);
    }
}
