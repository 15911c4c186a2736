//! Intersection arrays and the intersection numbers they determine.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use drg_exact::linalg::{self, Matrix};
use drg_exact::Rat;
use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::array3d::Array3D;
use crate::error::{DrgError, Result};
use crate::spectrum::{KreinTensor, Spectrum};

/// The intersection array `{b_0, ..., b_{d-1}; c_1, ..., c_d}` of a
/// distance-regular graph, together with everything derived from it.
///
/// Construction validates the array; derived spectral data is computed on
/// first use and cached.
#[derive(Clone)]
pub struct IntersectionArray {
    inner: Arc<Inner>,
}

struct Inner {
    b: Vec<Rat>,
    c: Vec<Rat>,
    a: Vec<Rat>,
    k: Vec<Rat>,
    n: Rat,
    p: Array3D<Rat>,
    spectrum: OnceLock<Result<Spectrum>>,
    krein: OnceLock<Result<KreinTensor>>,
}

fn int(x: i64) -> Rat {
    Rat::from(x)
}

impl IntersectionArray {
    /// Validates `{b; c}` and computes the intersection numbers.
    pub fn new(b: Vec<Rat>, c: Vec<Rat>) -> Result<Self> {
        let d = b.len();
        if d == 0 || c.len() != d {
            return Err(DrgError::infeasible(
                "shape",
                format!("expected d >= 1 entries on each side, got {} and {}", b.len(), c.len()),
            ));
        }
        for (name, seq) in [("b", &b), ("c", &c)] {
            if let Some(x) = seq.iter().find(|x| !x.is_integer() || !x.is_positive()) {
                return Err(DrgError::infeasible(
                    "positive integers",
                    format!("{name} contains {x}"),
                ));
            }
        }
        if !c[0].is_one() {
            return Err(DrgError::infeasible("c1 = 1", format!("c1 = {}", c[0])));
        }
        let kv = b[0].clone();
        let bi = |i: usize| if i < d { b[i].clone() } else { Rat::zero() };
        let ci = |i: usize| if i == 0 { Rat::zero() } else { c[i - 1].clone() };
        let a: Vec<Rat> = (0..=d).map(|i| &kv - bi(i) - ci(i)).collect();
        if let Some(i) = (0..=d).find(|&i| a[i].is_negative()) {
            return Err(DrgError::infeasible(
                "nonnegative a",
                format!("a{i} = {} is negative", a[i]),
            ));
        }
        if let Some(i) = (1..d).find(|&i| b[i] > b[i - 1]) {
            return Err(DrgError::infeasible(
                "b non-ascending",
                format!("b{} = {} > b{} = {}", i, b[i], i - 1, b[i - 1]),
            ));
        }
        if let Some(i) = (1..d).find(|&i| c[i] < c[i - 1]) {
            return Err(DrgError::infeasible(
                "c non-descending",
                format!("c{} = {} < c{} = {}", i + 1, c[i], i, c[i - 1]),
            ));
        }
        for i in 1..=d {
            for j in 0..=d - i {
                if j < d && bi(j) < ci(i) {
                    return Err(DrgError::infeasible(
                        "b_j >= c_i for i + j <= d",
                        format!("b{j} = {} < c{i} = {}", bi(j), ci(i)),
                    ));
                }
            }
        }
        let mut k = vec![Rat::one()];
        for i in 0..d {
            let next = &k[i] * &b[i] / &c[i];
            if !next.is_integer() {
                return Err(DrgError::infeasible(
                    "integral k",
                    format!("k{} = {} is not an integer", i + 1, next),
                ));
            }
            k.push(next);
        }
        let n: Rat = k.iter().sum();
        for i in 0..=d {
            if !(&k[i] * &a[i] / int(2)).is_integer() {
                return Err(DrgError::infeasible(
                    "handshake",
                    format!("k{i} * a{i} = {} is odd", &k[i] * &a[i]),
                ));
            }
        }
        if !(&n * &kv / int(2)).is_integer() {
            return Err(DrgError::infeasible(
                "handshake",
                format!("n * k = {} is odd", &n * &kv),
            ));
        }
        if !(&n * &kv * &a[1] / int(6)).is_integer() {
            return Err(DrgError::infeasible(
                "triangle count",
                format!("n * k * a1 = {} is not divisible by 6", &n * &kv * &a[1]),
            ));
        }
        let p = intersection_numbers(&a, &b, &c)?;
        Ok(IntersectionArray {
            inner: Arc::new(Inner {
                b,
                c,
                a,
                k,
                n,
                p,
                spectrum: OnceLock::new(),
                krein: OnceLock::new(),
            }),
        })
    }

    pub fn from_ints(b: &[i64], c: &[i64]) -> Result<Self> {
        IntersectionArray::new(b.iter().map(|&x| int(x)).collect(), c.iter().map(|&x| int(x)).collect())
    }

    /// The array of a strongly regular graph with parameters `(v, k, l, m)`
    /// where `v = 1 + k + k(k - l - 1)/m`.
    pub fn from_srg(k: &Rat, lambda: &Rat, mu: &Rat) -> Result<Self> {
        if !mu.is_positive() {
            return Err(DrgError::infeasible("srg", "mu must be positive"));
        }
        let b1 = k - lambda - Rat::one();
        let v = Rat::one() + k + k * &b1 / mu;
        if !v.is_integer() {
            return Err(DrgError::infeasible(
                "srg",
                format!("number of vertices {v} is not an integer"),
            ));
        }
        IntersectionArray::new(vec![k.clone(), b1], vec![Rat::one(), mu.clone()])
    }

    /// Like [`from_srg`](Self::from_srg), also checking the vertex count.
    pub fn from_srg_v(v: &Rat, k: &Rat, lambda: &Rat, mu: &Rat) -> Result<Self> {
        let ia = IntersectionArray::from_srg(k, lambda, mu)?;
        if ia.order() != v {
            return Err(DrgError::infeasible(
                "srg",
                format!("parameters give {} vertices, not {v}", ia.order()),
            ));
        }
        Ok(ia)
    }

    pub fn diameter(&self) -> usize {
        self.inner.b.len()
    }

    /// `b_i` for `0 <= i <= d` (`b_d = 0`).
    pub fn b(&self, i: usize) -> Rat {
        self.inner.b.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// `c_i` for `0 <= i <= d` (`c_0 = 0`).
    pub fn c(&self, i: usize) -> Rat {
        if i == 0 {
            Rat::zero()
        } else {
            self.inner.c[i - 1].clone()
        }
    }

    pub fn a(&self, i: usize) -> Rat {
        self.inner.a[i].clone()
    }

    /// Number of vertices at distance `i` from a vertex.
    pub fn k(&self, i: usize) -> Rat {
        self.inner.k[i].clone()
    }

    pub fn b_table(&self) -> &[Rat] {
        &self.inner.b
    }

    pub fn c_table(&self) -> &[Rat] {
        &self.inner.c
    }

    /// `a_1, ..., a_d`.
    pub fn a_table(&self) -> &[Rat] {
        &self.inner.a[1..]
    }

    pub fn k_table(&self) -> &[Rat] {
        &self.inner.k
    }

    pub fn valency(&self) -> &Rat {
        &self.inner.b[0]
    }

    pub fn order(&self) -> &Rat {
        &self.inner.n
    }

    /// Intersection numbers, `p_tensor().get(h, i, j)` being `p^h_ij`.
    pub fn p_tensor(&self) -> &Array3D<Rat> {
        &self.inner.p
    }

    pub fn p(&self, h: usize, i: usize, j: usize) -> &Rat {
        self.inner.p.get(h, i, j)
    }

    pub fn is_bipartite(&self) -> bool {
        self.inner.a.iter().all(Rat::is_zero)
    }

    /// The covering index `r` if the graph is an antipodal cover of
    /// diameter at least 2.
    pub fn antipodal_index(&self) -> Option<Rat> {
        let d = self.diameter();
        if d < 2 {
            return None;
        }
        (0..d)
            .filter(|&i| i != d / 2)
            .all(|i| self.b(i) == self.c(d - i))
            .then(|| self.k(d) + Rat::one())
    }

    pub fn is_antipodal(&self) -> bool {
        self.antipodal_index().is_some()
    }

    /// `(v, k, lambda, mu)` for diameter 2.
    pub fn srg_params(&self) -> Option<(Rat, Rat, Rat, Rat)> {
        (self.diameter() == 2).then(|| (self.order().clone(), self.valency().clone(), self.a(1), self.c(2)))
    }

    /// Eigenvalues, cosine sequences and multiplicities in the natural
    /// (descending) ordering. Multiplicities are not checked for
    /// integrality here; see [`check_spectrum`](Self::check_spectrum).
    pub fn spectrum(&self) -> Result<&Spectrum> {
        self.inner
            .spectrum
            .get_or_init(|| Spectrum::compute(self))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Krein parameters in the natural ordering, whatever their signs.
    pub fn krein(&self) -> Result<&KreinTensor> {
        self.inner
            .krein
            .get_or_init(|| self.spectrum().map(Spectrum::krein))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Fails unless the multiplicities are integers and the Krein
    /// parameters are nonnegative.
    pub fn check_spectrum(&self) -> Result<()> {
        self.spectrum()?.check_multiplicities()?;
        self.krein()?.check_nonnegative()
    }

    /// Canonical text `{b0, b1, ...; c1, ..., cd}`.
    pub fn text(&self) -> String {
        self.to_string()
    }
}

/// `p^h_ij = B_i[h][j]`, where `B_i` is the matrix of distance-`i`
/// adjacency in the regular representation, built by the three-term
/// recurrence from `B_1`.
fn intersection_numbers(a: &[Rat], b: &[Rat], c: &[Rat]) -> Result<Array3D<Rat>> {
    let d = b.len();
    let bi = |i: usize| if i < d { b[i].clone() } else { Rat::zero() };
    let ci = |i: usize| if i == 0 { Rat::zero() } else { c[i - 1].clone() };
    let mut b1 = linalg::zeros(d + 1, d + 1);
    for h in 0..=d {
        if h > 0 {
            b1[h][h - 1] = ci(h);
        }
        b1[h][h] = a[h].clone();
        if h < d {
            b1[h][h + 1] = bi(h);
        }
    }
    let mut mats: Vec<Matrix> = vec![linalg::identity(d + 1), b1.clone()];
    for i in 1..d {
        let prod = linalg::mul(&b1, &mats[i]);
        let next: Matrix = (0..=d)
            .map(|h| {
                (0..=d)
                    .map(|j| (&prod[h][j] - &a[i] * &mats[i][h][j] - bi(i - 1) * &mats[i - 1][h][j]) / ci(i + 1))
                    .collect()
            })
            .collect();
        mats.push(next);
    }
    let p = Array3D::from_fn(d + 1, |h, i, j| mats[i][h][j].clone());
    if let Some(((h, i, j), x)) = p.iter().find(|(_, x)| !x.is_integer() || x.is_negative()) {
        return Err(DrgError::infeasible(
            "intersection numbers",
            format!("p^{h}_({i},{j}) = {x} is not a nonnegative integer"),
        ));
    }
    Ok(p)
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Rat]| v.iter().map(Rat::to_string).collect::<Vec<_>>().join(", ");
        write!(f, "{{{}; {}}}", join(&self.inner.b), join(&self.inner.c))
    }
}

impl fmt::Debug for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl PartialEq for IntersectionArray {
    fn eq(&self, other: &Self) -> bool {
        self.inner.b == other.inner.b && self.inner.c == other.inner.c
    }
}

impl Eq for IntersectionArray {}

impl Hash for IntersectionArray {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inner.b.hash(state);
        self.inner.c.hash(state);
    }
}

impl PartialOrd for IntersectionArray {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IntersectionArray {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.diameter(), &self.inner.b, &self.inner.c).cmp(&(other.diameter(), &other.inner.b, &other.inner.c))
    }
}

/// Splits `{1, 2; 3, 4}` into its two integer sequences.
pub fn parse_array_text(text: &str) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    let bad = |why: &str| DrgError::Parse(format!("{why} in {text:?}"));
    let body = text
        .trim()
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| bad("expected {b0, ...; c1, ...}"))?;
    let (bs, cs) = body.split_once(';').ok_or_else(|| bad("missing ';'"))?;
    let nums = |s: &str| -> Result<Vec<BigInt>> {
        s.split(',')
            .map(|x| {
                x.trim()
                    .parse::<BigInt>()
                    .map_err(|_| bad(&format!("bad integer {:?}", x.trim())))
            })
            .collect()
    };
    let (b, c) = (nums(bs)?, nums(cs)?);
    if b.len() != c.len() {
        return Err(bad("halves of different lengths"));
    }
    Ok((b, c))
}

impl FromStr for IntersectionArray {
    type Err = DrgError;

    fn from_str(s: &str) -> Result<Self> {
        let (b, c) = parse_array_text(s)?;
        IntersectionArray::new(
            b.into_iter().map(Rat::from_int).collect(),
            c.into_iter().map(Rat::from_int).collect(),
        )
    }
}

impl Serialize for IntersectionArray {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IntersectionArray {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[Rat]) -> Vec<i64> {
        v.iter().map(|x| x.to_i64().unwrap()).collect()
    }

    #[test]
    fn sylvester_basics() {
        let ia: IntersectionArray = "{5, 4, 2; 1, 1, 4}".parse().unwrap();
        assert_eq!(ia.diameter(), 3);
        assert_eq!(ia.order(), &Rat::from(36));
        assert_eq!(ints(ia.k_table()), [1, 5, 20, 10]);
        assert_eq!(ints(ia.a_table()), [0, 2, 1]);
        assert_eq!(ia.to_string(), "{5, 4, 2; 1, 1, 4}");
    }

    #[test]
    fn sylvester_intersection_numbers() {
        let ia: IntersectionArray = "{5,4,2;1,1,4}".parse().unwrap();
        let rows: Vec<Vec<i64>> = (0..4)
            .map(|i| (0..4).map(|j| ia.p(1, i, j).to_i64().unwrap()).collect())
            .collect();
        assert_eq!(rows, [[0, 1, 0, 0], [1, 0, 4, 0], [0, 4, 8, 8], [0, 0, 8, 2]]);
        assert_eq!(ia.p(2, 2, 2), &Rat::from(11));
        assert_eq!(ia.p(3, 2, 2), &Rat::from(12));
    }

    #[test]
    fn handshake_rejection() {
        match "{3,1;1,1}".parse::<IntersectionArray>() {
            Err(DrgError::Infeasible { rule, .. }) => assert_eq!(rule, "handshake"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "{3,2;1}".parse::<IntersectionArray>(),
            Err(DrgError::Parse(_))
        ));
        assert!(matches!(
            "3,2;1,1".parse::<IntersectionArray>(),
            Err(DrgError::Parse(_))
        ));
        assert!(matches!(
            "{3,x;1,1}".parse::<IntersectionArray>(),
            Err(DrgError::Parse(_))
        ));
    }

    #[test]
    fn srg_constructors() {
        let p = IntersectionArray::from_srg(&Rat::from(3), &Rat::zero(), &Rat::one()).unwrap();
        assert_eq!(p.to_string(), "{3, 2; 1, 1}");
        let g = IntersectionArray::from_srg(&Rat::from(266), &Rat::from(220), &Rat::from(210)).unwrap();
        assert_eq!(g.order(), &Rat::from(324));
        assert_eq!(g.to_string(), "{266, 45; 1, 210}");
        assert!(IntersectionArray::from_srg_v(&Rat::from(11), &Rat::from(3), &Rat::zero(), &Rat::one()).is_err());
    }

    #[test]
    fn complete_graph() {
        let k4: IntersectionArray = "{3;1}".parse().unwrap();
        assert_eq!(k4.order(), &Rat::from(4));
        assert_eq!(k4.a(1), Rat::from(2));
        assert!(!k4.is_antipodal());
    }

    #[test]
    fn antipodal_and_bipartite() {
        let q7: IntersectionArray = "{7,6,5,4,3,2,1;1,2,3,4,5,6,7}".parse().unwrap();
        assert_eq!(q7.antipodal_index(), Some(Rat::from(2)));
        assert!(q7.is_bipartite());
        let pet: IntersectionArray = "{3,2;1,1}".parse().unwrap();
        assert!(!pet.is_antipodal());
        assert!(!pet.is_bipartite());
        let big: IntersectionArray = "{55,54,50,35,10;1,5,20,45,55}".parse().unwrap();
        assert!(big.is_bipartite());
        assert!(!big.is_antipodal());
    }
}
