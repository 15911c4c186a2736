//! Affine forms over named rational variables and parametric solution of
//! linear systems.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::interval::Interval;
use crate::linalg::{rref, Matrix};
use crate::{ExactError, Rat};

/// `constant + sum(coef * var)`, never storing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AffineForm {
    constant: Rat,
    terms: BTreeMap<String, Rat>,
}

impl AffineForm {
    pub fn constant(c: Rat) -> Self {
        AffineForm {
            constant: c,
            terms: BTreeMap::new(),
        }
    }

    pub fn zero() -> Self {
        AffineForm::constant(Rat::zero())
    }

    pub fn var(name: &str) -> Self {
        AffineForm::zero().with_term(name, Rat::one())
    }

    pub fn with_term(mut self, name: &str, coef: Rat) -> Self {
        self.add_term(name, &coef);
        self
    }

    fn add_term(&mut self, name: &str, coef: &Rat) {
        if coef.is_zero() {
            return;
        }
        let entry = self.terms.entry(name.to_string()).or_insert_with(Rat::zero);
        *entry += coef;
        if entry.is_zero() {
            self.terms.remove(name);
        }
    }

    pub fn constant_term(&self) -> &Rat {
        &self.constant
    }

    pub fn terms(&self) -> &BTreeMap<String, Rat> {
        &self.terms
    }

    pub fn coefficient(&self, name: &str) -> Rat {
        self.terms.get(name).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<&Rat> {
        self.is_constant().then_some(&self.constant)
    }

    pub fn is_zero(&self) -> bool {
        self.is_constant() && self.constant.is_zero()
    }

    pub fn variables(&self) -> impl Iterator<Item = &str> {
        self.terms.keys().map(String::as_str)
    }

    pub fn add(&self, other: &AffineForm) -> AffineForm {
        let mut out = self.clone();
        out.constant += &other.constant;
        for (v, c) in &other.terms {
            out.add_term(v, c);
        }
        out
    }

    pub fn sub(&self, other: &AffineForm) -> AffineForm {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> AffineForm {
        if c.is_zero() {
            return AffineForm::zero();
        }
        AffineForm {
            constant: &self.constant * c,
            terms: self.terms.iter().map(|(v, x)| (v.clone(), x * c)).collect(),
        }
    }

    /// Value under a full assignment. Missing variables count as zero.
    pub fn eval(&self, values: &BTreeMap<String, Rat>) -> Rat {
        let mut acc = self.constant.clone();
        for (v, c) in &self.terms {
            if let Some(x) = values.get(v) {
                acc += c * x;
            }
        }
        acc
    }

    /// Substitutes forms for some variables.
    pub fn substitute(&self, values: &BTreeMap<String, AffineForm>) -> AffineForm {
        let mut out = AffineForm::constant(self.constant.clone());
        for (v, c) in &self.terms {
            match values.get(v) {
                Some(f) => out = out.add(&f.scale(c)),
                None => out.add_term(v, c),
            }
        }
        out
    }

    /// Range of values when every variable ranges over its interval.
    /// Variables without an interval must not occur.
    pub fn range(&self, boxes: &BTreeMap<String, Interval>) -> Option<Interval> {
        let mut acc = Interval::point(self.constant.clone());
        for (v, c) in &self.terms {
            acc = &acc + &boxes.get(v)?.scale(c);
        }
        Some(acc)
    }

    /// Rendering with the constant first and a common denominator pulled
    /// out, e.g. `(71 - 27*alpha)/8` or `20 - 12*alpha`.
    pub fn factored(&self) -> String {
        if self.is_constant() {
            return self.constant.to_string();
        }
        let den: BigInt = Rat::common_denominator(std::iter::once(&self.constant).chain(self.terms.values()));
        let scale = Rat::from_int(den.clone());
        let mut parts: Vec<(BigInt, Option<&str>)> = Vec::new();
        if !self.constant.is_zero() {
            let c = (&self.constant * &scale).to_integer().expect("integral");
            parts.push((c, None));
        }
        for (v, c) in &self.terms {
            let c = (c * &scale).to_integer().expect("integral");
            parts.push((c, Some(v.as_str())));
        }
        let g = parts.iter().fold(den.clone(), |g, (c, _)| g.gcd(c));
        let den = &den / &g;
        let body = join_terms(parts.iter().map(|(c, v)| (Rat::from_int(c / &g), *v)));
        if den.is_one() {
            body
        } else if parts.len() == 1 {
            format!("{body}/{den}")
        } else {
            format!("({body})/{den}")
        }
    }
}

fn join_terms<'a>(terms: impl Iterator<Item = (Rat, Option<&'a str>)>) -> String {
    let mut out = String::new();
    for (c, v) in terms {
        let neg = c.is_negative();
        let a = c.abs();
        let piece = match v {
            None => a.to_string(),
            Some(v) if a.is_one() => v.to_string(),
            Some(v) => format!("{a}*{v}"),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&piece);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl From<Rat> for AffineForm {
    fn from(c: Rat) -> Self {
        AffineForm::constant(c)
    }
}

/// Terms in variable order, then the constant: `-1/2*a + 4`, `r2 + 4`.
impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .terms
            .iter()
            .map(|(v, c)| (c.clone(), Some(v.as_str())))
            .chain((!self.constant.is_zero()).then(|| (self.constant.clone(), None)));
        f.pad(&join_terms(terms))
    }
}

impl fmt::Debug for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for AffineForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// General solution of a consistent linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSolution {
    pub assignments: BTreeMap<String, AffineForm>,
    pub free_vars: Vec<String>,
}

impl ParamSolution {
    pub fn get(&self, name: &str) -> Option<&AffineForm> {
        self.assignments.get(name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineSolution {
    Consistent(ParamSolution),
    Inconsistent,
}

/// Solves `a x = b` over the rationals. Column `j` is the unknown
/// `names[j]`; a free column `j` becomes the variable `t_<names[j]>`.
pub fn solve_affine(a: &Matrix, b: &[Rat], names: &[String]) -> Result<AffineSolution, ExactError> {
    let free: Vec<String> = names.iter().map(|n| format!("t_{n}")).collect();
    solve_affine_with(a, b, names, &free)
}

/// Like [`solve_affine`], naming the variable of free column `j` by
/// `free_names[j]`.
pub fn solve_affine_with(
    a: &Matrix,
    b: &[Rat],
    names: &[String],
    free_names: &[String],
) -> Result<AffineSolution, ExactError> {
    let cols = names.len();
    if a.len() != b.len() {
        return Err(ExactError::DimensionMismatch(format!(
            "{} rows but {} right-hand sides",
            a.len(),
            b.len()
        )));
    }
    if free_names.len() != cols {
        return Err(ExactError::DimensionMismatch(format!(
            "{} names but {} free-variable names",
            cols,
            free_names.len()
        )));
    }
    if let Some(row) = a.iter().find(|r| r.len() != cols) {
        return Err(ExactError::DimensionMismatch(format!(
            "row of length {} for {} unknowns",
            row.len(),
            cols
        )));
    }
    let augmented: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| row.iter().cloned().chain([rhs.clone()]).collect())
        .collect();
    let (r, pivots) = rref(&augmented);
    if pivots.last() == Some(&cols) {
        return Ok(AffineSolution::Inconsistent);
    }
    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut assignments = BTreeMap::new();
    for &c in &free_cols {
        assignments.insert(names[c].clone(), AffineForm::var(&free_names[c]));
    }
    for (i, &p) in pivots.iter().enumerate() {
        let mut form = AffineForm::constant(r[i][cols].clone());
        for &c in &free_cols {
            form.add_term(&free_names[c], &-&r[i][c]);
        }
        assignments.insert(names[p].clone(), form);
    }
    Ok(AffineSolution::Consistent(ParamSolution {
        assignments,
        free_vars: free_cols.iter().map(|&c| free_names[c].clone()).collect(),
    }))
}
