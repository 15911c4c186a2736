//! Simple algebraic extensions `Q(theta)` of the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::algebraic::AlgebraicNumber;
use crate::multi::ProductAlgebra;
use crate::poly::Poly;
use crate::{ExactError, Rat};

/// The field generated by a real algebraic number.
#[derive(Clone)]
pub struct NumberField(Arc<AlgebraicNumber>);

impl NumberField {
    pub fn new(generator: AlgebraicNumber) -> Self {
        NumberField(Arc::new(generator))
    }

    pub fn rationals() -> Self {
        NumberField::new(AlgebraicNumber::from_rat(Rat::zero()))
    }

    pub fn generator(&self) -> &AlgebraicNumber {
        &self.0
    }

    pub fn minpoly(&self) -> &Poly {
        self.0.minpoly()
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    pub fn elem(&self, p: &Poly) -> NFElem {
        let r = p.rem(self.minpoly());
        let mut coords = r.coeffs().to_vec();
        coords.resize(self.degree(), Rat::zero());
        NFElem {
            field: self.clone(),
            coords,
        }
    }

    pub fn from_rat(&self, r: Rat) -> NFElem {
        self.elem(&Poly::constant(r))
    }

    /// The generator as an element.
    pub fn gen(&self) -> NFElem {
        self.elem(&Poly::x())
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for NumberField {}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q({:?})", self.0)
    }
}

/// An element of a [`NumberField`], as a polynomial in the generator of
/// degree below the field degree.
///
/// Binary operators panic when the operands belong to different fields.
#[derive(Clone, PartialEq, Eq)]
pub struct NFElem {
    field: NumberField,
    coords: Vec<Rat>,
}

impl NFElem {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rat::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(Rat::is_zero)
    }

    pub fn to_rat(&self) -> Option<Rat> {
        self.is_rational().then(|| self.coords[0].clone())
    }

    pub fn is_integer(&self) -> bool {
        self.to_rat().is_some_and(|r| r.is_integer())
    }

    pub fn signum(&self) -> i32 {
        match self.to_rat() {
            Some(r) => r.signum(),
            None => self.field.generator().sign_of(&self.to_poly()),
        }
    }

    pub fn inverse(&self) -> Result<NFElem, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let (g, s, _) = self.to_poly().ext_gcd(self.field.minpoly());
        debug_assert!(g.is_constant());
        let c = g.coeff(0);
        Ok(self.field.elem(&s.scale(&c.recip())))
    }

    pub fn checked_div(&self, other: &NFElem) -> Result<NFElem, ExactError> {
        Ok(self * &other.inverse()?)
    }

    pub fn scale(&self, c: &Rat) -> NFElem {
        NFElem {
            field: self.field.clone(),
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> NFElem {
        let mut acc = self.field.from_rat(Rat::one());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// The real number this element denotes.
    pub fn to_algebraic(&self) -> AlgebraicNumber {
        if let Some(r) = self.to_rat() {
            return AlgebraicNumber::from_rat(r);
        }
        let alg = ProductAlgebra::new(vec![self.field.minpoly().clone()]);
        alg.evaluate(&alg.embed(0, &self.to_poly()), &[self.field.generator().clone()])
    }

    fn check_field(&self, other: &NFElem) {
        assert!(self.field == other.field, "elements of different number fields");
    }
}

impl fmt::Display for NFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_algebraic(), f)
    }
}

impl fmt::Debug for NFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {:?}", self.to_poly().display_with("a"), self.field)
    }
}

impl<'a, 'b> Add<&'b NFElem> for &'a NFElem {
    type Output = NFElem;
    fn add(self, rhs: &'b NFElem) -> NFElem {
        self.check_field(rhs);
        NFElem {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a, 'b> Sub<&'b NFElem> for &'a NFElem {
    type Output = NFElem;
    fn sub(self, rhs: &'b NFElem) -> NFElem {
        self.check_field(rhs);
        NFElem {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a, 'b> Mul<&'b NFElem> for &'a NFElem {
    type Output = NFElem;
    fn mul(self, rhs: &'b NFElem) -> NFElem {
        self.check_field(rhs);
        if self.field.degree() == 1 {
            return self.field.from_rat(&self.coords[0] * &rhs.coords[0]);
        }
        self.field.elem(&(&self.to_poly() * &rhs.to_poly()))
    }
}

impl<'a> Neg for &'a NFElem {
    type Output = NFElem;
    fn neg(self) -> NFElem {
        self.scale(&-Rat::one())
    }
}

macro_rules! owned_op {
    ($tr:ident, $m:ident) => {
        impl $tr for NFElem {
            type Output = NFElem;
            fn $m(self, rhs: NFElem) -> NFElem {
                $tr::$m(&self, &rhs)
            }
        }
    };
}
owned_op!(Add, add);
owned_op!(Sub, sub);
owned_op!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::isolate_roots;
    use crate::rat;

    fn golden_field() -> NumberField {
        NumberField::new(isolate_roots(&Poly::from_ints(&[-1, 1, 1]))[0].clone())
    }

    #[test]
    fn square_reduces_by_minpoly() {
        let k = golden_field();
        let t = k.gen();
        assert_eq!(&t * &t, k.elem(&Poly::from_ints(&[1, -1])));
    }

    #[test]
    fn inverse_of_generator() {
        let k = golden_field();
        let inv = k.gen().inverse().unwrap();
        assert_eq!(inv, k.elem(&Poly::from_ints(&[1, 1])));
        assert!((&inv * &k.gen()).to_rat().unwrap().is_one());
        assert!(k.from_rat(Rat::zero()).inverse().is_err());
    }

    #[test]
    fn rational_elements() {
        let k = golden_field();
        let e = k.from_rat(rat(3, 2));
        assert!(e.is_rational());
        assert_eq!(e.to_rat(), Some(rat(3, 2)));
        assert!(!k.gen().is_rational());
    }

    #[test]
    fn sign_and_value() {
        let k = golden_field();
        let t = k.gen();
        assert_eq!(t.signum(), 1);
        let shifted = &t - &k.from_rat(Rat::one());
        assert_eq!(shifted.signum(), -1);
        // theta^2 = 1 - theta = (3 - sqrt(5))/2
        assert_eq!((&t * &t).to_algebraic().to_string(), "(3 - sqrt(5))/2");
    }
}
