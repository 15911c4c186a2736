//! Triple intersection numbers.
//!
//! For vertices `u, v, w` with `U = d(v, w)`, `V = d(u, w)`, `W = d(u, v)`,
//! `[i j h]` counts vertices at distances `i, j, h` from `u, v, w`. The
//! counts satisfy linear equations in terms of the intersection numbers,
//! one more for every vanishing Krein parameter, and must be nonnegative
//! integers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use drg_exact::{solve_affine_with, AffineForm, AffineSolution, Rat};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::array::IntersectionArray;
use crate::array3d::Array3D;
use crate::error::{DrgError, Result};

pub type Triple = (usize, usize, usize);

/// Default budget for [`ParametricTriples::analyze`].
pub const DEFAULT_CAP: u64 = 1_000_000;

/// A value imposed on a triple intersection number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pin {
    Value(Rat),
    /// The entry becomes a free parameter of this name.
    Param(String),
}

impl fmt::Display for Pin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pin::Value(r) => write!(f, "{r}"),
            Pin::Param(p) => f.write_str(p),
        }
    }
}

/// A vertex triple with prescribed pairwise distances, plus assumptions.
#[derive(Clone, Debug)]
pub struct TripleScenario {
    pub ia: IntersectionArray,
    /// `d(v, w)`
    pub u: usize,
    /// `d(u, w)`
    pub v: usize,
    /// `d(u, v)`
    pub w: usize,
    pub pins: BTreeMap<Triple, Pin>,
    pub extra_zeros: BTreeSet<Triple>,
    pub use_parity: bool,
}

impl TripleScenario {
    /// Scenario for distances `d(u, v)`, `d(u, w)`, `d(v, w)`, in that order.
    pub fn new(ia: &IntersectionArray, uv: usize, uw: usize, vw: usize) -> Result<Self> {
        let d = ia.diameter();
        if uv > d || uw > d || vw > d {
            return Err(DrgError::precondition(format!(
                "distances ({uv}, {uw}, {vw}) exceed the diameter {d}"
            )));
        }
        if ia.p(uv, vw, uw).is_zero() {
            return Err(DrgError::precondition(format!(
                "no vertex triple has distances ({uv}, {uw}, {vw})"
            )));
        }
        Ok(TripleScenario {
            ia: ia.clone(),
            u: vw,
            v: uw,
            w: uv,
            pins: BTreeMap::new(),
            extra_zeros: BTreeSet::new(),
            use_parity: ia.is_bipartite(),
        })
    }

    pub fn pin(mut self, at: Triple, pin: Pin) -> Self {
        self.pins.insert(at, pin);
        self
    }

    /// Distances in constructor order.
    pub fn distances(&self) -> (usize, usize, usize) {
        (self.w, self.v, self.u)
    }

    /// Known value of an entry with a zero index.
    fn boundary(&self, (i, j, h): Triple) -> Rat {
        let delta = |a: usize, b: usize| a == b;
        let one = if i == 0 {
            delta(j, self.w) && delta(h, self.v)
        } else if j == 0 {
            delta(i, self.w) && delta(h, self.u)
        } else {
            delta(i, self.v) && delta(j, self.u)
        };
        if one {
            Rat::one()
        } else {
            Rat::zero()
        }
    }

    /// Upper bound `min(p^W_ij, p^V_ih, p^U_jh)` on `[i j h]`.
    pub fn bound(&self, (i, j, h): Triple) -> Rat {
        let p = |a, b, c| self.ia.p(a, b, c).clone();
        p(self.w, i, j).min(p(self.v, i, h)).min(p(self.u, j, h))
    }

    /// Interior positions forced to be zero.
    pub fn zero_pattern(&self) -> BTreeSet<Triple> {
        let d = self.ia.diameter();
        let mut out = self.extra_zeros.clone();
        for i in 1..=d {
            for j in 1..=d {
                for h in 1..=d {
                    let mut zero = self.bound((i, j, h)).is_zero();
                    if self.use_parity {
                        zero |= (i + j + self.w) % 2 == 1 || (i + h + self.v) % 2 == 1 || (j + h + self.u) % 2 == 1;
                    }
                    if zero {
                        out.insert((i, j, h));
                    }
                }
            }
        }
        out
    }

    /// Solves the linear system.
    pub fn solve(&self) -> Result<Solution> {
        let d = self.ia.diameter();
        let zeros = self.zero_pattern();
        let mut unknowns: Vec<Triple> = Vec::new();
        for i in 1..=d {
            for j in 1..=d {
                for h in 1..=d {
                    if !zeros.contains(&(i, j, h)) {
                        unknowns.push((i, j, h));
                    }
                }
            }
        }
        unknowns.reverse();
        let params: Vec<String> = self
            .pins
            .values()
            .filter_map(|p| match p {
                Pin::Param(name) => Some(name.clone()),
                Pin::Value(_) => None,
            })
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let col: BTreeMap<Triple, usize> = unknowns.iter().enumerate().map(|(c, &t)| (t, c)).collect();
        let ncols = unknowns.len() + params.len();
        let param_col = |name: &str| unknowns.len() + params.iter().position(|p| p == name).expect("param");
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        let mut rhs: Vec<Rat> = Vec::new();
        let mut push = |terms: Vec<(usize, Rat)>, value: Rat| {
            let mut row = vec![Rat::zero(); ncols];
            for (c, x) in terms {
                row[c] += x;
            }
            rows.push(row);
            rhs.push(value);
        };
        for a in 1..=d {
            for b in 1..=d {
                let families: [(Rat, Vec<Triple>, Triple); 3] = [
                    (
                        self.ia.p(self.u, a, b).clone(),
                        (1..=d).map(|l| (l, a, b)).collect(),
                        (0, a, b),
                    ),
                    (
                        self.ia.p(self.v, a, b).clone(),
                        (1..=d).map(|l| (a, l, b)).collect(),
                        (a, 0, b),
                    ),
                    (
                        self.ia.p(self.w, a, b).clone(),
                        (1..=d).map(|l| (a, b, l)).collect(),
                        (a, b, 0),
                    ),
                ];
                for (p, cells, edge) in families {
                    let terms = cells
                        .iter()
                        .filter_map(|t| col.get(t).map(|&c| (c, Rat::one())))
                        .collect();
                    push(terms, p - self.boundary(edge));
                }
            }
        }
        for (i, j, h) in self.ia.krein()?.zeros() {
            for (terms, value) in self.krein_rows((i, j, h), &col)? {
                push(terms, value);
            }
        }
        for (&at, pin) in &self.pins {
            let (i, j, h) = at;
            if [i, j, h].iter().any(|&x| x == 0 || x > d) {
                return Err(DrgError::precondition(format!(
                    "pinned position ({i}, {j}, {h}) is not interior"
                )));
            }
            let mut terms = Vec::new();
            if let Some(&c) = col.get(&at) {
                terms.push((c, Rat::one()));
            }
            match pin {
                Pin::Value(x) => push(terms, x.clone()),
                Pin::Param(name) => {
                    terms.push((param_col(name), -Rat::one()));
                    push(terms, Rat::zero());
                }
            }
        }
        let name = |&(i, j, h): &Triple| format!("{i}_{j}_{h}");
        let names: Vec<String> = unknowns.iter().map(name).chain(params.iter().cloned()).collect();
        let free_names: Vec<String> = unknowns
            .iter()
            .map(|t| format!("t_{}", name(t)))
            .chain(params.iter().cloned())
            .collect();
        let sol = match solve_affine_with(&rows, &rhs, &names, &free_names)? {
            AffineSolution::Inconsistent => return Ok(Solution::Inconsistent),
            AffineSolution::Consistent(s) => s,
        };
        let entries = Array3D::from_fn(d + 1, |i, j, h| {
            if i == 0 || j == 0 || h == 0 {
                AffineForm::constant(self.boundary((i, j, h)))
            } else if let Some(c) = col.get(&(i, j, h)) {
                sol.assignments[&names[*c]].clone()
            } else {
                AffineForm::zero()
            }
        });
        let mut var_cells = BTreeMap::new();
        for t in &unknowns {
            var_cells.insert(format!("t_{}", name(t)), *t);
        }
        for (&at, pin) in &self.pins {
            if let Pin::Param(p) = pin {
                var_cells.entry(p.clone()).or_insert(at);
            }
        }
        let var_cells = sol.free_vars.iter().map(|v| (v.clone(), var_cells[v])).collect();
        Ok(Solution::Parametric(ParametricTriples {
            scenario: self.clone(),
            entries,
            free_vars: sol.free_vars,
            params: sol
                .assignments
                .iter()
                .filter(|(k, _)| params.contains(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
            var_cells,
        }))
    }

    /// Rational rows equivalent to the vanishing of
    /// `sum Q_ri Q_sj Q_th [r s t]`.
    fn krein_rows(&self, (i, j, h): Triple, col: &BTreeMap<Triple, usize>) -> Result<Vec<(Vec<(usize, Rat)>, Rat)>> {
        let d = self.ia.diameter();
        let spec = self.ia.spectrum()?;
        let qm = spec.q_matrix();
        let mixed = spec.mixed(&[i, j, h]);
        let fp = mixed.product();
        let alg = fp.algebra();
        let coef = |r: usize, s: usize, t: usize| {
            alg.mul(
                &alg.mul(&mixed.embed(i, &qm[r][i]), &mixed.embed(j, &qm[s][j])),
                &mixed.embed(h, &qm[t][h]),
            )
        };
        let mut constant = alg.zero();
        let mut terms: Vec<(usize, drg_exact::PAElem)> = Vec::new();
        for r in 0..=d {
            for s in 0..=d {
                for t in 0..=d {
                    if r == 0 || s == 0 || t == 0 {
                        let b = self.boundary((r, s, t));
                        if !b.is_zero() {
                            constant = alg.add(&constant, &alg.scale(&coef(r, s, t), &b));
                        }
                    } else if let Some(&c) = col.get(&(r, s, t)) {
                        terms.push((c, coef(r, s, t)));
                    }
                }
            }
        }
        let proj = fp.vanishing_projector();
        let constant = alg.mul(&proj, &constant);
        let terms: Vec<(usize, drg_exact::PAElem)> = terms.into_iter().map(|(c, e)| (c, alg.mul(&proj, &e))).collect();
        let mut out = Vec::new();
        for k in 0..alg.dim() {
            let row: Vec<(usize, Rat)> = terms
                .iter()
                .filter(|(_, e)| !e.coords()[k].is_zero())
                .map(|(c, e)| (*c, e.coords()[k].clone()))
                .collect();
            let value = -constant.coords()[k].clone();
            if !row.is_empty() || !value.is_zero() {
                out.push((row, value));
            }
        }
        Ok(out)
    }
}

/// Outcome of solving a scenario.
#[derive(Clone, Debug)]
pub enum Solution {
    Parametric(ParametricTriples),
    Inconsistent,
}

/// General solution: every entry as an affine form in the free variables.
#[derive(Clone, Debug)]
pub struct ParametricTriples {
    pub scenario: TripleScenario,
    pub entries: Array3D<AffineForm>,
    pub free_vars: Vec<String>,
    /// Values of the named parameters in terms of the free variables.
    pub params: BTreeMap<String, AffineForm>,
    /// The entry each free variable stands for.
    pub var_cells: BTreeMap<String, Triple>,
}

/// Verdict of an analysis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "reason", rename_all = "snake_case")]
pub enum Verdict {
    Consistent,
    Contradiction(String),
    Inconclusive(String),
}

#[derive(Clone, Debug)]
pub struct TripleAnalysis {
    /// Entries taking the same value in every feasible solution.
    pub forced: BTreeMap<Triple, Rat>,
    /// Values of the free variables at each feasible solution.
    pub feasible: Vec<BTreeMap<String, Rat>>,
    /// Integer range of each free variable allowed by the bounds alone.
    pub ranges: BTreeMap<String, (BigInt, BigInt)>,
    pub verdict: Verdict,
}

impl TripleAnalysis {
    pub fn is_contradiction(&self) -> bool {
        matches!(self.verdict, Verdict::Contradiction(_))
    }
}

/// `0 <= constant + coefs . x <= upper`.
struct Constraint {
    cell: Triple,
    constant: Rat,
    coefs: Vec<Rat>,
    upper: Rat,
}

impl ParametricTriples {
    pub fn get(&self, i: usize, j: usize, h: usize) -> &AffineForm {
        self.entries.get(i, j, h)
    }

    /// The solution at given values of the free variables.
    pub fn point(&self, values: &BTreeMap<String, Rat>) -> Array3D<Rat> {
        self.entries.map(|f| f.eval(values))
    }

    /// Whether a full tensor of values satisfies the solution for some
    /// choice of the free variables.
    pub fn contains(&self, values: &Array3D<Rat>) -> bool {
        let assign: BTreeMap<String, Rat> = self
            .var_cells
            .iter()
            .map(|(v, &(i, j, h))| (v.clone(), values.get(i, j, h).clone()))
            .collect();
        self.point(&assign) == *values
    }

    /// Searches for nonnegative solutions within the bounds, integral when
    /// `assume_integral` is set. At most `cap` search nodes are visited.
    pub fn analyze(&self, assume_integral: bool, cap: u64) -> TripleAnalysis {
        let sc = &self.scenario;
        let d = sc.ia.diameter();
        let mut forced = BTreeMap::new();
        let mut constraints = Vec::new();
        for i in 1..=d {
            for j in 1..=d {
                for h in 1..=d {
                    let f = self.entries.get(i, j, h);
                    let upper = sc.bound((i, j, h));
                    if let Some(c) = f.as_constant() {
                        forced.insert((i, j, h), c.clone());
                        if let Some(reason) = bad_value((i, j, h), f, c, &upper, assume_integral) {
                            return TripleAnalysis {
                                forced,
                                feasible: Vec::new(),
                                ranges: BTreeMap::new(),
                                verdict: Verdict::Contradiction(reason),
                            };
                        }
                        continue;
                    }
                    constraints.push(Constraint {
                        cell: (i, j, h),
                        constant: f.constant_term().clone(),
                        coefs: self.free_vars.iter().map(|v| f.coefficient(v)).collect(),
                        upper,
                    });
                }
            }
        }
        let nvars = self.free_vars.len();
        let boxes: Vec<(Rat, Rat)> = self
            .free_vars
            .iter()
            .map(|v| (Rat::zero(), sc.bound(self.var_cells[v])))
            .collect();
        let ranges: BTreeMap<String, (BigInt, BigInt)> = (0..nvars)
            .map(|k| {
                let (lo, hi) = root_range(k, &boxes, &constraints);
                (self.free_vars[k].clone(), (lo.ceil(), hi.floor()))
            })
            .collect();
        if let Some((v, _)) = ranges.iter().find(|(_, (lo, hi))| lo > hi) {
            let (i, j, h) = self.var_cells[v];
            return TripleAnalysis {
                forced,
                feasible: Vec::new(),
                ranges,
                verdict: Verdict::Contradiction(format!(
                    "no value of [{i} {j} {h}] keeps every entry within its bounds"
                )),
            };
        }
        if !assume_integral {
            let verdict = match fourier_motzkin(&constraints, &boxes, 50_000) {
                Some(true) => Verdict::Consistent,
                Some(false) => Verdict::Contradiction("no nonnegative solution within the bounds".into()),
                None => Verdict::Inconclusive("elimination grew too large".into()),
            };
            return TripleAnalysis {
                forced,
                feasible: Vec::new(),
                ranges,
                verdict,
            };
        }
        let mut order: Vec<usize> = (0..nvars).collect();
        order.sort_by(|&a, &b| {
            let wa = &ranges[&self.free_vars[a]];
            let wb = &ranges[&self.free_vars[b]];
            (&wa.1 - &wa.0).cmp(&(&wb.1 - &wb.0)).then(a.cmp(&b))
        });
        let mut search = Search {
            order: &order,
            boxes: &boxes,
            constraints: &constraints,
            last: constraints
                .iter()
                .map(|c| (0..nvars).rev().find(|&p| !c.coefs[order[p]].is_zero()).unwrap_or(0))
                .collect(),
            values: vec![Rat::zero(); nvars],
            found: Vec::new(),
            nodes: 0,
            cap,
        };
        let complete = search.run(0);
        let feasible: Vec<BTreeMap<String, Rat>> = search
            .found
            .iter()
            .map(|vals| self.free_vars.iter().cloned().zip(vals.iter().cloned()).collect())
            .collect();
        if !complete {
            return TripleAnalysis {
                forced,
                feasible,
                ranges,
                verdict: Verdict::Inconclusive(format!("search exceeded {cap} nodes")),
            };
        }
        if feasible.is_empty() {
            let reason = if nvars == 1 {
                let v = &self.free_vars[0];
                let (lo, hi) = &ranges[v];
                format!("no integral nonnegative solution for {v} in {lo}..{hi}")
            } else {
                "no integral nonnegative solution within the bounds".to_string()
            };
            return TripleAnalysis {
                forced,
                feasible,
                ranges,
                verdict: Verdict::Contradiction(reason),
            };
        }
        let points: Vec<Array3D<Rat>> = feasible.iter().map(|a| self.point(a)).collect();
        for c in &constraints {
            let (i, j, h) = c.cell;
            let first = points[0].get(i, j, h);
            if points.iter().all(|p| p.get(i, j, h) == first) {
                forced.insert(c.cell, first.clone());
            }
        }
        TripleAnalysis {
            forced,
            feasible,
            ranges,
            verdict: Verdict::Consistent,
        }
    }
}

fn bad_value(cell: Triple, f: &AffineForm, c: &Rat, upper: &Rat, integral: bool) -> Option<String> {
    let (i, j, h) = cell;
    if c.is_negative() {
        Some(format!("[{i} {j} {h}] = {} is negative", f.factored()))
    } else if integral && !c.is_integer() {
        Some(format!("[{i} {j} {h}] = {} is not an integer", f.factored()))
    } else if c > upper {
        Some(format!("[{i} {j} {h}] = {c} exceeds its bound {upper}"))
    } else {
        None
    }
}

/// Range of `value * coef` over the box.
fn term_range(coef: &Rat, (lo, hi): &(Rat, Rat)) -> (Rat, Rat) {
    let (a, b) = (coef * lo, coef * hi);
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Bounds on variable `k` from each constraint with all other variables
/// ranging over their boxes.
fn root_range(k: usize, boxes: &[(Rat, Rat)], constraints: &[Constraint]) -> (Rat, Rat) {
    let (mut lo, mut hi) = boxes[k].clone();
    for c in constraints {
        let a = &c.coefs[k];
        if a.is_zero() {
            continue;
        }
        let (mut rl, mut rh) = (c.constant.clone(), c.constant.clone());
        for (v, coef) in c.coefs.iter().enumerate() {
            if v != k && !coef.is_zero() {
                let (x, y) = term_range(coef, &boxes[v]);
                rl += x;
                rh += y;
            }
        }
        narrow(a, &rl, &rh, &c.upper, &mut lo, &mut hi);
    }
    (lo, hi)
}

/// Tightens `[lo, hi]` for `x` given `0 <= a x + r <= upper`, `r` in
/// `[rl, rh]`.
fn narrow(a: &Rat, rl: &Rat, rh: &Rat, upper: &Rat, lo: &mut Rat, hi: &mut Rat) {
    let (mut l, mut h) = ((-rh) / a, (upper - rl) / a);
    if a.is_negative() {
        std::mem::swap(&mut l, &mut h);
    }
    if l > *lo {
        *lo = l;
    }
    if h < *hi {
        *hi = h;
    }
}

struct Search<'a> {
    order: &'a [usize],
    boxes: &'a [(Rat, Rat)],
    constraints: &'a [Constraint],
    /// Position in `order` of the last variable each constraint uses.
    last: Vec<usize>,
    values: Vec<Rat>,
    found: Vec<Vec<Rat>>,
    nodes: u64,
    cap: u64,
}

impl Search<'_> {
    /// Returns false when the node budget runs out.
    fn run(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            self.found.push(self.values.clone());
            return true;
        }
        let k = self.order[pos];
        let (mut lo, mut hi) = self.boxes[k].clone();
        for c in self.constraints {
            let a = &c.coefs[k];
            if a.is_zero() {
                continue;
            }
            let (mut rl, mut rh) = (c.constant.clone(), c.constant.clone());
            for (p, &v) in self.order.iter().enumerate() {
                let coef = &c.coefs[v];
                if coef.is_zero() || v == k {
                    continue;
                }
                if p < pos {
                    let x = coef * &self.values[v];
                    rl += &x;
                    rh += &x;
                } else {
                    let (x, y) = term_range(coef, &self.boxes[v]);
                    rl += x;
                    rh += y;
                }
            }
            narrow(a, &rl, &rh, &c.upper, &mut lo, &mut hi);
        }
        let (lo, hi) = (Rat::from_int(lo.ceil()), Rat::from_int(hi.floor()));
        let mut x = lo;
        while x <= hi {
            self.nodes += 1;
            if self.nodes > self.cap {
                return false;
            }
            self.values[k] = x.clone();
            if self.settled_ok(pos) && !self.run(pos + 1) {
                return false;
            }
            x += Rat::one();
        }
        true
    }

    /// Integrality of constraints whose variables are all assigned now.
    fn settled_ok(&self, pos: usize) -> bool {
        self.constraints.iter().zip(&self.last).all(|(c, &l)| {
            if l != pos {
                return true;
            }
            let mut v = c.constant.clone();
            for (k, coef) in c.coefs.iter().enumerate() {
                if !coef.is_zero() {
                    v += coef * &self.values[k];
                }
            }
            v.is_integer() && !v.is_negative() && v <= c.upper
        })
    }
}

/// Feasibility of the constraints over the reals by Fourier-Motzkin
/// elimination. `None` when the system grows past `limit` inequalities.
fn fourier_motzkin(constraints: &[Constraint], boxes: &[(Rat, Rat)], limit: usize) -> Option<bool> {
    let n = boxes.len();
    // each row: coefs . x + constant >= 0
    let mut rows: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for c in constraints {
        rows.push((c.coefs.clone(), c.constant.clone()));
        rows.push((c.coefs.iter().map(|x| -x).collect(), &c.upper - &c.constant));
    }
    for (k, (lo, hi)) in boxes.iter().enumerate() {
        let mut e = vec![Rat::zero(); n];
        e[k] = Rat::one();
        rows.push((e.clone(), -lo.clone()));
        e[k] = -Rat::one();
        rows.push((e, hi.clone()));
    }
    for k in 0..n {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for r in rows {
            match r.0[k].signum() {
                1 => pos.push(r),
                -1 => neg.push(r),
                _ => rest.push(r),
            }
        }
        for (pc, p0) in &pos {
            for (nc, n0) in &neg {
                let (a, b) = (&pc[k], -&nc[k]);
                let coefs: Vec<Rat> = pc.iter().zip(nc).map(|(x, y)| x * &b + y * a).collect();
                rest.push((coefs, p0 * &b + n0 * a));
                if rest.len() > limit {
                    return None;
                }
            }
        }
        rest.sort_by(|x, y| x.0.cmp(&y.0).then(x.1.cmp(&y.1)));
        rest.dedup();
        rows = rest;
    }
    Some(rows.iter().all(|(_, c)| !c.is_negative()))
}

impl fmt::Display for ParametricTriples {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.entries, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syl() -> IntersectionArray {
        "{5,4,2;1,1,4}".parse().unwrap()
    }

    fn solved(sc: &TripleScenario) -> ParametricTriples {
        match sc.solve().unwrap() {
            Solution::Parametric(p) => p,
            Solution::Inconsistent => panic!("inconsistent"),
        }
    }

    #[test]
    fn sylvester_unique_solution() {
        let pt = solved(&TripleScenario::new(&syl(), 1, 1, 2).unwrap());
        assert!(pt.free_vars.is_empty());
        let rows: Vec<Vec<String>> = (0..4)
            .map(|j| (0..4).map(|h| pt.get(2, j, h).to_string()).collect())
            .collect();
        assert_eq!(
            rows,
            [
                ["0", "0", "0", "0"],
                ["0", "0", "2", "2"],
                ["0", "2", "2", "4"],
                ["0", "2", "4", "2"]
            ]
        );
        assert_eq!(pt.get(1, 2, 0).to_string(), "1");
        assert_eq!(pt.get(1, 2, 2).to_string(), "3");
    }

    #[test]
    fn sylvester_one_parameter() {
        let pt = solved(&TripleScenario::new(&syl(), 1, 2, 3).unwrap());
        assert_eq!(pt.free_vars, ["t_2_2_1"]);
        assert_eq!(pt.get(2, 2, 2).to_string(), "t_2_2_1 + 4");
        assert_eq!(pt.get(3, 3, 3).to_string(), "-2*t_2_2_1 + 3");
    }

    #[test]
    fn sylvester_named_parameter() {
        let sc = TripleScenario::new(&syl(), 1, 3, 3)
            .unwrap()
            .pin((3, 3, 3), Pin::Param("a".into()));
        let pt = solved(&sc);
        assert_eq!(pt.free_vars, ["a"]);
        assert_eq!(pt.get(2, 2, 1).to_string(), "-1/2*a + 4");
        assert_eq!(pt.get(3, 3, 3).to_string(), "a");
    }

    #[test]
    fn inadmissible_rejected() {
        assert!(TripleScenario::new(&syl(), 1, 1, 3).is_err());
    }

    #[test]
    fn pin_conflict_is_inconsistent() {
        let sc = TripleScenario::new(&syl(), 1, 1, 2)
            .unwrap()
            .pin((2, 2, 2), Pin::Value(Rat::from(3)));
        assert!(matches!(sc.solve().unwrap(), Solution::Inconsistent));
    }

    #[test]
    fn sylvester_enumeration() {
        let pt = solved(&TripleScenario::new(&syl(), 1, 2, 3).unwrap());
        let an = pt.analyze(true, DEFAULT_CAP);
        assert_eq!(an.verdict, Verdict::Consistent);
        assert!(!an.feasible.is_empty());
        for a in &an.feasible {
            let p = pt.point(a);
            assert!(p.iter().all(|(_, x)| x.is_integer() && !x.is_negative()));
        }
        let real = pt.analyze(false, DEFAULT_CAP);
        assert_eq!(real.verdict, Verdict::Consistent);
    }
}
