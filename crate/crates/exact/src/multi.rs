//! Tensor products of number fields.
//!
//! `Q[x_0, ..., x_{k-1}] / (f_0(x_0), ..., f_{k-1}(x_{k-1}))` with square-free
//! `f_l`. Evaluating at a choice of real roots of the `f_l` is a ring
//! homomorphism to the reals; this lets expressions mix conjugate
//! irrationalities (which cannot live in a single simple extension) while
//! staying exact.

use crate::algebraic::{isolate_roots, AlgebraicNumber};
use crate::field::{NFElem, NumberField};
use crate::interval::Interval;
use crate::linalg::{charpoly, Matrix};
use crate::poly::Poly;
use crate::Rat;

#[derive(Clone, Debug)]
pub struct ProductAlgebra {
    moduli: Vec<Poly>,
    degrees: Vec<usize>,
    strides: Vec<usize>,
    dim: usize,
    /// `powers[l][e]` holds `x_l^e mod f_l` for `e < 2 deg f_l - 1`.
    powers: Vec<Vec<Vec<Rat>>>,
}

/// An element of a [`ProductAlgebra`]: coordinates on the monomial basis
/// `prod x_l^{e_l}`, `e_l < deg f_l`, in mixed radix with `x_0` fastest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PAElem {
    coords: Vec<Rat>,
}

impl PAElem {
    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }
}

impl ProductAlgebra {
    /// The moduli must be nonconstant and square-free.
    pub fn new(moduli: Vec<Poly>) -> Self {
        let moduli: Vec<Poly> = moduli.iter().map(Poly::monic).collect();
        let degrees: Vec<usize> = moduli
            .iter()
            .map(|m| m.degree().filter(|&d| d > 0).expect("nonconstant modulus"))
            .collect();
        let mut strides = Vec::with_capacity(degrees.len());
        let mut dim = 1;
        for &d in &degrees {
            strides.push(dim);
            dim *= d;
        }
        let powers = moduli
            .iter()
            .zip(&degrees)
            .map(|(m, &d)| {
                let mut table = Vec::with_capacity(2 * d - 1);
                let mut cur = Poly::one();
                for _ in 0..2 * d - 1 {
                    let mut v: Vec<Rat> = cur.coeffs().to_vec();
                    v.resize(d, Rat::zero());
                    table.push(v);
                    cur = (&cur * &Poly::x()).rem(m);
                }
                table
            })
            .collect();
        ProductAlgebra {
            moduli,
            degrees,
            strides,
            dim,
            powers,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn moduli(&self) -> &[Poly] {
        &self.moduli
    }

    pub fn zero(&self) -> PAElem {
        PAElem {
            coords: vec![Rat::zero(); self.dim],
        }
    }

    pub fn constant(&self, c: Rat) -> PAElem {
        let mut e = self.zero();
        e.coords[0] = c;
        e
    }

    pub fn one(&self) -> PAElem {
        self.constant(Rat::one())
    }

    /// The polynomial `p(x_var)`.
    pub fn embed(&self, var: usize, p: &Poly) -> PAElem {
        let r = p.rem(&self.moduli[var]);
        let mut e = self.zero();
        for (i, c) in r.coeffs().iter().enumerate() {
            e.coords[i * self.strides[var]] = c.clone();
        }
        e
    }

    fn exponents(&self, idx: usize) -> Vec<usize> {
        self.degrees
            .iter()
            .zip(&self.strides)
            .map(|(&d, &s)| (idx / s) % d)
            .collect()
    }

    pub fn add(&self, a: &PAElem, b: &PAElem) -> PAElem {
        PAElem {
            coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, a: &PAElem, b: &PAElem) -> PAElem {
        PAElem {
            coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn scale(&self, a: &PAElem, c: &Rat) -> PAElem {
        PAElem {
            coords: a.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, a: &PAElem, b: &PAElem) -> PAElem {
        if self.dim == 1 {
            return self.constant(&a.coords[0] * &b.coords[0]);
        }
        let mut out = self.zero();
        let exps: Vec<Vec<usize>> = (0..self.dim).map(|i| self.exponents(i)).collect();
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let c = x * y;
                // Expand prod_l powers[l][ei_l + ej_l] as a tensor product.
                let mut acc: Vec<(usize, Rat)> = vec![(0, c)];
                for l in 0..self.degrees.len() {
                    let row = &self.powers[l][exps[i][l] + exps[j][l]];
                    let mut next = Vec::with_capacity(acc.len() * self.degrees[l]);
                    for (idx, v) in &acc {
                        for (e, r) in row.iter().enumerate() {
                            if !r.is_zero() {
                                next.push((idx + e * self.strides[l], v * r));
                            }
                        }
                    }
                    acc = next;
                }
                for (idx, v) in acc {
                    out.coords[idx] += v;
                }
            }
        }
        out
    }

    pub fn is_zero(&self, a: &PAElem) -> bool {
        a.coords.iter().all(Rat::is_zero)
    }

    /// The rational value, if `a` is a constant.
    pub fn as_rational(&self, a: &PAElem) -> Option<Rat> {
        a.coords[1..].iter().all(Rat::is_zero).then(|| a.coords[0].clone())
    }

    /// Matrix of `y -> a y` acting on coordinate columns.
    pub fn mul_matrix(&self, a: &PAElem) -> Matrix {
        let mut m = vec![vec![Rat::zero(); self.dim]; self.dim];
        for j in 0..self.dim {
            let mut basis = self.zero();
            basis.coords[j] = Rat::one();
            let col = self.mul(a, &basis);
            for (i, c) in col.coords.into_iter().enumerate() {
                m[i][j] = c;
            }
        }
        m
    }

    fn eval_interval(&self, a: &PAElem, boxes: &[Interval]) -> Interval {
        let mut acc = Interval::point(Rat::zero());
        for (i, c) in a.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut term = Interval::point(c.clone());
            for (l, e) in self.exponents(i).into_iter().enumerate() {
                if e > 0 {
                    term = &term * &boxes[l].pow(e as u32);
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// The real value of `a` when each `x_l` is replaced by `roots[l]`, a
    /// root of the `l`-th modulus.
    pub fn evaluate(&self, a: &PAElem, roots: &[AlgebraicNumber]) -> AlgebraicNumber {
        if let Some(r) = self.as_rational(a) {
            return AlgebraicNumber::from_rat(r);
        }
        let candidates = isolate_roots(&charpoly(&self.mul_matrix(a)));
        self.select(a, roots, candidates)
    }

    /// Picks the candidate whose value matches `a` at `roots`.
    fn select(&self, a: &PAElem, roots: &[AlgebraicNumber], mut candidates: Vec<AlgebraicNumber>) -> AlgebraicNumber {
        let mut roots: Vec<AlgebraicNumber> = roots.to_vec();
        loop {
            let boxes: Vec<Interval> = roots.iter().map(AlgebraicNumber::interval).collect();
            let value = self.eval_interval(a, &boxes);
            let hits: Vec<usize> = (0..candidates.len())
                .filter(|&i| candidates[i].interval().intersects(&value))
                .collect();
            if hits.len() == 1 {
                return candidates.swap_remove(hits[0]);
            }
            assert!(!hits.is_empty(), "value is a root of the characteristic polynomial");
            for r in roots.iter_mut() {
                r.refine();
            }
            for &i in &hits {
                candidates[i].refine();
            }
        }
    }

    /// An element `u` such that, for every `a`, the value of `a` at `roots`
    /// is zero exactly when `u * a = 0`. Multiplying a linear relation with
    /// algebraic coefficients by `u` turns it into rational relations on
    /// the coordinates.
    pub fn vanishing_projector(&self, roots: &[AlgebraicNumber]) -> PAElem {
        if self.dim == 1 {
            return self.one();
        }
        let (gamma, g) = self.primitive_element();
        let value = self.evaluate(&gamma, roots);
        let h = value.minpoly().clone();
        let cofactor = g
            .div_exact(&h)
            .expect("minimal polynomial divides the characteristic polynomial");
        self.poly_at(&cofactor, &gamma)
    }

    /// An element with square-free characteristic polynomial, and that
    /// polynomial.
    fn primitive_element(&self) -> (PAElem, Poly) {
        let k = self.degrees.len();
        for attempt in 0u64.. {
            let mut gamma = self.zero();
            for l in 0..k {
                let weight = Rat::from((attempt + 1).pow(l as u32));
                gamma = self.add(&gamma, &self.embed(l, &Poly::x().scale(&weight)));
            }
            let g = charpoly(&self.mul_matrix(&gamma));
            if g.square_free_part().degree() == g.degree() {
                return (gamma, g);
            }
        }
        unreachable!()
    }

    fn poly_at(&self, p: &Poly, a: &PAElem) -> PAElem {
        let mut acc = self.zero();
        for c in p.coeffs().iter().rev() {
            acc = self.add(&self.mul(&acc, a), &self.constant(c.clone()));
        }
        acc
    }
}

/// Several number fields side by side, each evaluated at its own
/// generator. Elements of different fields can be combined here even when
/// their generators are conjugate.
#[derive(Clone, Debug)]
pub struct FieldProduct {
    alg: ProductAlgebra,
    roots: Vec<AlgebraicNumber>,
}

impl FieldProduct {
    pub fn new(fields: &[&NumberField]) -> Self {
        FieldProduct {
            alg: ProductAlgebra::new(fields.iter().map(|f| f.minpoly().clone()).collect()),
            roots: fields.iter().map(|f| f.generator().clone()).collect(),
        }
    }

    pub fn algebra(&self) -> &ProductAlgebra {
        &self.alg
    }

    /// Places `e` in slot `slot`; `e` must belong to the field given for
    /// that slot.
    pub fn embed(&self, slot: usize, e: &NFElem) -> PAElem {
        debug_assert!(e.field().generator() == &self.roots[slot]);
        self.alg.embed(slot, &e.to_poly())
    }

    pub fn value(&self, e: &PAElem) -> AlgebraicNumber {
        self.alg.evaluate(e, &self.roots)
    }

    /// See [`ProductAlgebra::vanishing_projector`].
    pub fn vanishing_projector(&self) -> PAElem {
        self.alg.vanishing_projector(&self.roots)
    }
}
