//! Classical parameters and generalized polygons.

use std::fmt;

use drg_exact::factor::rational_roots;
use drg_exact::{Poly, Rat};
use serde::{Deserialize, Serialize};

use crate::array::IntersectionArray;
use crate::error::{DrgError, Result};

/// Classical parameters `(d, b, alpha, beta)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ClassicalParams {
    pub d: usize,
    pub b: Rat,
    pub alpha: Rat,
    pub beta: Rat,
}

/// Gaussian bracket `[i] = 1 + b + ... + b^(i-1)`.
pub fn bracket(b: &Rat, i: usize) -> Rat {
    let mut acc = Rat::zero();
    let mut pw = Rat::one();
    for _ in 0..i {
        acc += &pw;
        pw = &pw * b;
    }
    acc
}

impl ClassicalParams {
    /// `(b_0..b_{d-1}, c_1..c_d)` given by the parameters.
    pub fn sequences(&self) -> (Vec<Rat>, Vec<Rat>) {
        let top = bracket(&self.b, self.d);
        let b = (0..self.d)
            .map(|i| {
                let bi = bracket(&self.b, i);
                (&top - &bi) * (&self.beta - &self.alpha * &bi)
            })
            .collect();
        let c = (1..=self.d)
            .map(|i| bracket(&self.b, i) * (Rat::one() + &self.alpha * bracket(&self.b, i - 1)))
            .collect();
        (b, c)
    }
}

impl fmt::Display for ClassicalParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.d, self.b, self.alpha, self.beta)
    }
}

impl IntersectionArray {
    /// The array with classical parameters `(d, b, alpha, beta)`.
    pub fn from_classical(d: usize, b: &Rat, alpha: &Rat, beta: &Rat) -> Result<Self> {
        if d == 0 {
            return Err(DrgError::infeasible("classical", "diameter must be positive"));
        }
        if !b.is_integer() || b.is_zero() || *b == -Rat::one() {
            return Err(DrgError::infeasible(
                "classical",
                format!("b = {b} must be an integer other than 0 and -1"),
            ));
        }
        let params = ClassicalParams {
            d,
            b: b.clone(),
            alpha: alpha.clone(),
            beta: beta.clone(),
        };
        let (bs, cs) = params.sequences();
        IntersectionArray::new(bs, cs)
    }

    /// All classical parameter tuples describing this array. Empty for
    /// diameter below 3.
    pub fn classical_params(&self) -> Vec<ClassicalParams> {
        let d = self.diameter();
        if d < 3 {
            return Vec::new();
        }
        let (c2, c3) = (self.c(2), self.c(3));
        let one = Rat::one();
        // c3 = [3] (c2 - b) once alpha is eliminated using c2
        let elim = Poly::new(vec![&c2 - &c3, &c2 - &one, &c2 - &one, -one.clone()]);
        let mut out = Vec::new();
        for b in rational_roots(&elim) {
            if !b.is_integer() || b.is_zero() || b == -one.clone() {
                continue;
            }
            let alpha = &c2 / (&one + &b) - &one;
            let beta = self.valency() / bracket(&b, d);
            let params = ClassicalParams { d, b, alpha, beta };
            if params.sequences() == (self.b_table().to_vec(), self.c_table().to_vec()) {
                out.push(params);
            }
        }
        out.sort();
        out
    }

    /// `(g, s, t)` when the array is that of the collinearity graph of a
    /// generalized `g`-gon of order `(s, t)`.
    pub fn gen_poly_params(&self) -> Option<GenPolyParams> {
        let d = self.diameter();
        if d < 2 {
            return None;
        }
        let s = self.b(0) - self.b(1);
        if !s.is_positive() {
            return None;
        }
        let t = self.b(1) / &s;
        if !t.is_integer() {
            return None;
        }
        let st = &s * &t;
        let shape = (1..d).all(|i| self.b(i) == st) && (1..d).all(|i| self.c(i).is_one());
        if !shape {
            return None;
        }
        let cd = self.c(d);
        let g = if cd == &t + Rat::one() {
            2 * d
        } else if cd.is_one() && s == t {
            2 * d + 1
        } else {
            return None;
        };
        Some(GenPolyParams { g, s, t })
    }
}

/// Parameters of a generalized polygon.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenPolyParams {
    pub g: usize,
    pub s: Rat,
    pub t: Rat,
}

impl fmt::Display for GenPolyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.g, self.s, self.t)
    }
}
