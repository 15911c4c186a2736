//! Eigenvalues, cosine sequences, multiplicities, eigenmatrices and Krein
//! parameters.

use drg_exact::{isolate_roots, AlgebraicNumber, FieldProduct, NFElem, NumberField, PAElem, Poly, Rat};

use crate::array::IntersectionArray;
use crate::array3d::Array3D;
use crate::error::{DrgError, Result};

/// Spectral data under a fixed ordering of the eigenvalues. Index 0 is
/// always the valency.
#[derive(Clone, Debug)]
pub struct Spectrum {
    eigenvalues: Vec<AlgebraicNumber>,
    fields: Vec<NumberField>,
    /// `cosines[i][j] = u_j(theta_i)`, an element of `fields[i]`.
    cosines: Vec<Vec<NFElem>>,
    mults: Vec<Rat>,
    order: Rat,
    kseq: Vec<Rat>,
}

/// Characteristic polynomial of the tridiagonal matrix `B_1`.
pub fn char_poly(ia: &IntersectionArray) -> Poly {
    let d = ia.diameter();
    let mut prev = Poly::one();
    let mut cur = &Poly::x() - &Poly::constant(ia.a(0));
    for i in 1..=d {
        let next = &(&cur * &(&Poly::x() - &Poly::constant(ia.a(i)))) - &prev.scale(&(ia.b(i - 1) * ia.c(i)));
        prev = cur;
        cur = next;
    }
    cur
}

impl Spectrum {
    pub(crate) fn compute(ia: &IntersectionArray) -> Result<Spectrum> {
        let d = ia.diameter();
        let eigenvalues = isolate_roots(&char_poly(ia));
        if eigenvalues.len() != d + 1 {
            return Err(DrgError::infeasible(
                "eigenvalues",
                format!("expected {} distinct eigenvalues, found {}", d + 1, eigenvalues.len()),
            ));
        }
        let fields: Vec<NumberField> = eigenvalues.iter().cloned().map(NumberField::new).collect();
        let k = ia.valency().clone();
        let mut cosines = Vec::with_capacity(d + 1);
        for f in &fields {
            let theta = f.gen();
            let mut u = vec![f.from_rat(Rat::one()), theta.scale(&k.recip())];
            for i in 1..d {
                let next =
                    (&(&(&theta - &f.from_rat(ia.a(i))) * &u[i]) - &u[i - 1].scale(&ia.c(i))).scale(&ia.b(i).recip());
                u.push(next);
            }
            u.truncate(d + 1);
            cosines.push(u);
        }
        let n = ia.order().clone();
        let mut mults = Vec::with_capacity(d + 1);
        for (i, row) in cosines.iter().enumerate() {
            let f = &fields[i];
            let mut norm = f.from_rat(Rat::zero());
            for (j, u) in row.iter().enumerate() {
                norm = &norm + &(u * u).scale(&ia.k(j));
            }
            let m = f.from_rat(n.clone()).checked_div(&norm)?;
            match m.to_rat() {
                Some(m) => mults.push(m),
                None => {
                    return Err(DrgError::infeasible(
                        "multiplicities",
                        format!("eigenvalue {} has irrational multiplicity {}", eigenvalues[i], m),
                    ))
                }
            }
        }
        Ok(Spectrum {
            eigenvalues,
            fields,
            cosines,
            mults,
            order: n,
            kseq: ia.k_table().to_vec(),
        })
    }

    pub fn diameter(&self) -> usize {
        self.eigenvalues.len() - 1
    }

    pub fn eigenvalues(&self) -> &[AlgebraicNumber] {
        &self.eigenvalues
    }

    /// Multiplicities as given by the array; they need not be integers.
    pub fn multiplicities(&self) -> &[Rat] {
        &self.mults
    }

    /// Fails unless every multiplicity is an integer.
    pub fn check_multiplicities(&self) -> Result<()> {
        match self.mults.iter().position(|m| !m.is_integer()) {
            None => Ok(()),
            Some(i) => Err(DrgError::infeasible(
                "multiplicities",
                format!("eigenvalue {} has multiplicity {}", self.eigenvalues[i], self.mults[i]),
            )),
        }
    }

    /// `cosine(i, j) = u_j(theta_i)`.
    pub fn cosine(&self, i: usize, j: usize) -> &NFElem {
        &self.cosines[i][j]
    }

    pub fn cosine_rows(&self) -> &[Vec<NFElem>] {
        &self.cosines
    }

    pub fn field(&self, i: usize) -> &NumberField {
        &self.fields[i]
    }

    pub fn is_integral(&self) -> bool {
        self.eigenvalues.iter().all(AlgebraicNumber::is_integer)
    }

    /// The same data with eigenvalue `order[i]` moved to position `i`.
    pub fn reordered(&self, order: &[usize]) -> Result<Spectrum> {
        check_order(order, self.eigenvalues.len())?;
        Ok(Spectrum {
            eigenvalues: order.iter().map(|&i| self.eigenvalues[i].clone()).collect(),
            fields: order.iter().map(|&i| self.fields[i].clone()).collect(),
            cosines: order.iter().map(|&i| self.cosines[i].clone()).collect(),
            mults: order.iter().map(|&i| self.mults[i].clone()).collect(),
            order: self.order.clone(),
            kseq: self.kseq.clone(),
        })
    }

    /// Eigenmatrix: `P[i][j] = k_j u_j(theta_i)`, row `i` in the field of
    /// `theta_i`.
    pub fn p_matrix(&self) -> Vec<Vec<NFElem>> {
        self.cosines
            .iter()
            .map(|row| row.iter().zip(&self.kseq).map(|(u, k)| u.scale(k)).collect())
            .collect()
    }

    /// Dual eigenmatrix: `Q[i][j] = m_j u_i(theta_j)`, column `j` in the
    /// field of `theta_j`.
    pub fn q_matrix(&self) -> Vec<Vec<NFElem>> {
        let d = self.diameter();
        (0..=d)
            .map(|i| (0..=d).map(|j| self.cosines[j][i].scale(&self.mults[j])).collect())
            .collect()
    }

    /// Whether `P = Q` under this ordering.
    pub fn is_formally_self_dual(&self) -> bool {
        let (p, q) = (self.p_matrix(), self.q_matrix());
        p.iter()
            .flatten()
            .zip(q.iter().flatten())
            .all(|(x, y)| match (x.to_rat(), y.to_rat()) {
                (Some(a), Some(b)) => a == b,
                _ => x.to_algebraic() == y.to_algebraic(),
            })
    }

    /// A product of number fields holding the fields of the given
    /// eigenvalues, one slot per distinct index.
    pub fn mixed(&self, indices: &[usize]) -> Mixed {
        let mut slots: Vec<usize> = indices.to_vec();
        slots.sort_unstable();
        slots.dedup();
        let fields: Vec<&NumberField> = slots.iter().map(|&i| &self.fields[i]).collect();
        Mixed {
            product: FieldProduct::new(&fields),
            slots,
        }
    }

    /// Krein parameters under this ordering.
    pub fn krein(&self) -> KreinTensor {
        let d = self.diameter();
        let mut q = Array3D::filled(d + 1, AlgebraicNumber::from_rat(Rat::zero()));
        for h in 0..=d {
            for i in 0..=d {
                for j in i..=d {
                    let v = self.krein_entry(h, i, j);
                    q.set(h, j, i, v.clone());
                    q.set(h, i, j, v);
                }
            }
        }
        KreinTensor { q }
    }

    fn krein_entry(&self, h: usize, i: usize, j: usize) -> AlgebraicNumber {
        let d = self.diameter();
        let scale = &self.mults[i] * &self.mults[j] / &self.order;
        let rational = [i, j, h].iter().all(|&x| self.fields[x].degree() == 1);
        if rational {
            let r = |x: usize, l: usize| self.cosines[x][l].to_rat().expect("rational cosine");
            let sum: Rat = (0..=d).map(|l| &self.kseq[l] * r(i, l) * r(j, l) * r(h, l)).sum();
            return AlgebraicNumber::from_rat(sum * scale);
        }
        let mx = self.mixed(&[i, j, h]);
        let alg = mx.product.algebra();
        let mut acc = alg.zero();
        for l in 0..=d {
            let t = alg.mul(
                &alg.mul(&mx.embed(i, &self.cosines[i][l]), &mx.embed(j, &self.cosines[j][l])),
                &mx.embed(h, &self.cosines[h][l]),
            );
            acc = alg.add(&acc, &alg.scale(&t, &self.kseq[l]));
        }
        mx.product.value(&alg.scale(&acc, &scale))
    }
}

pub(crate) fn check_order(order: &[usize], len: usize) -> Result<()> {
    let mut seen = vec![false; len];
    let ok = order.len() == len
        && order.first() == Some(&0)
        && order.iter().all(|&i| i < len && !std::mem::replace(&mut seen[i], true));
    if ok {
        Ok(())
    } else {
        Err(DrgError::precondition(format!(
            "{order:?} is not a permutation of 0..{len} fixing 0"
        )))
    }
}

/// Number fields of several eigenvalues side by side.
#[derive(Clone, Debug)]
pub struct Mixed {
    product: FieldProduct,
    slots: Vec<usize>,
}

impl Mixed {
    pub fn product(&self) -> &FieldProduct {
        &self.product
    }

    /// Embeds an element of the field of eigenvalue `index`.
    pub fn embed(&self, index: usize, e: &NFElem) -> PAElem {
        let slot = self
            .slots
            .iter()
            .position(|&s| s == index)
            .expect("eigenvalue in product");
        self.product.embed(slot, e)
    }
}

/// `q^h_ij` stored as `get(h, i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KreinTensor {
    q: Array3D<AlgebraicNumber>,
}

impl KreinTensor {
    pub fn get(&self, h: usize, i: usize, j: usize) -> &AlgebraicNumber {
        self.q.get(h, i, j)
    }

    pub fn tensor(&self) -> &Array3D<AlgebraicNumber> {
        &self.q
    }

    pub fn diameter(&self) -> usize {
        self.q.size() - 1
    }

    /// Fails if some entry is negative.
    pub fn check_nonnegative(&self) -> Result<()> {
        match self.q.iter().find(|(_, v)| v.signum() < 0) {
            None => Ok(()),
            Some(((h, i, j), v)) => Err(DrgError::infeasible(
                "Krein condition",
                format!("q^{h}_({i},{j}) = {v} is negative"),
            )),
        }
    }

    /// The rational tensor, if every entry is rational.
    pub fn to_rational(&self) -> Option<Array3D<Rat>> {
        if self.q.iter().any(|(_, x)| !x.is_rational()) {
            return None;
        }
        Some(self.q.map(|x| x.to_rat().expect("rational")))
    }

    /// Triples `(i, j, h)` with `1 <= i, j, h <= d` and `q^h_ij = 0`.
    pub fn zeros(&self) -> Vec<(usize, usize, usize)> {
        let d = self.diameter();
        let mut out = Vec::new();
        for i in 1..=d {
            for j in 1..=d {
                for h in 1..=d {
                    if self.q.get(h, i, j).is_zero() {
                        out.push((i, j, h));
                    }
                }
            }
        }
        out
    }

    /// The tensor under a reordering of the eigenvalues.
    pub fn reordered(&self, order: &[usize]) -> Result<KreinTensor> {
        check_order(order, self.q.size())?;
        Ok(KreinTensor {
            q: Array3D::from_fn(self.q.size(), |h, i, j| {
                self.q.get(order[h], order[i], order[j]).clone()
            }),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use drg_exact::rat;

    fn sylvester() -> IntersectionArray {
        "{5,4,2;1,1,4}".parse().unwrap()
    }

    fn ints(v: &[Rat]) -> Vec<i64> {
        v.iter().map(|x| x.to_i64().unwrap()).collect()
    }

    #[test]
    fn sylvester_spectrum() {
        let ia = sylvester();
        let s = ia.spectrum().unwrap();
        let ev: Vec<String> = s.eigenvalues().iter().map(|x| x.to_string()).collect();
        assert_eq!(ev, ["5", "2", "-1", "-3"]);
        assert_eq!(ints(s.multiplicities()), [1, 16, 10, 9]);
        let row: Vec<Rat> = (0..4).map(|j| s.cosine(1, j).to_rat().unwrap()).collect();
        assert_eq!(row, [Rat::one(), rat(2, 5), rat(-1, 20), rat(-1, 5)]);
    }

    #[test]
    fn sylvester_eigenmatrices() {
        let s = sylvester().spectrum().unwrap().clone();
        let p: Vec<Rat> = s.p_matrix()[1].iter().map(|x| x.to_rat().unwrap()).collect();
        assert_eq!(p, [1, 2, -1, -2].map(Rat::from));
        let q: Vec<Rat> = s.q_matrix()[1].iter().map(|x| x.to_rat().unwrap()).collect();
        assert_eq!(q, [Rat::one(), rat(32, 5), Rat::from(-2), rat(-27, 5)]);
        assert!(!s.is_formally_self_dual());
    }

    #[test]
    fn sylvester_krein() {
        let ia = sylvester();
        let q = ia.krein().unwrap().to_rational().unwrap();
        assert_eq!(q.get(1, 1, 1), &rat(44, 5));
        assert_eq!(q.get(2, 1, 1), &rat(176, 25));
        assert_eq!(q.get(1, 2, 3), &rat(18, 5));
        assert!(q.get(3, 3, 3).is_zero());
        assert!(ia.krein().unwrap().zeros().contains(&(3, 3, 3)));
    }

    #[test]
    fn pentagon_is_irrational() {
        let ia: IntersectionArray = "{2,1;1,1}".parse().unwrap();
        let s = ia.spectrum().unwrap();
        assert_eq!(s.eigenvalues()[1].minpoly(), &Poly::from_ints(&[-1, 1, 1]));
        assert_eq!(ints(s.multiplicities()), [1, 2, 2]);
        assert!(ia.krein().unwrap().to_rational().is_some());
    }

    #[test]
    fn hypercube_self_dual() {
        let ia: IntersectionArray = "{2,1;1,2}".parse().unwrap();
        assert!(ia.spectrum().unwrap().is_formally_self_dual());
    }

    #[test]
    fn reorder_rejects_bad_permutations() {
        let s = sylvester().spectrum().unwrap().clone();
        assert!(s.reordered(&[1, 0, 2, 3]).is_err());
        assert!(s.reordered(&[0, 1, 1, 3]).is_err());
        assert!(s.reordered(&[0, 2, 3, 1]).is_ok());
    }
}
