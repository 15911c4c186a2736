//! Feasibility checks on intersection arrays.
//!
//! [`check_feasible`] runs the catalog in order, then recurses into derived
//! parameter sets. A failed check names reference tags resolvable with
//! [`refs::lookup`].

pub mod refs;
pub mod tables;

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use drg_exact::Rat;
use serde::{Deserialize, Serialize};

use crate::array::IntersectionArray;
use crate::error::DrgError;

/// Check names in the order they run.
pub const CATALOG: &[&str] = &[
    "multiplicities",
    "krein",
    "sporadic",
    "family",
    "2graph",
    "classical",
    "classicalGrassmann",
    "classicalBilinearForms",
    "classicalNegativeB",
    "classicalTriangleFree",
    "combinatorial",
    "conference",
    "geodeticEmbedding",
    "2design",
    "hadamard",
    "antipodal",
    "genPoly",
    "clawBound",
    "terwilliger",
    "secondEigenvalue",
    "localEigenvalue",
    "absoluteBound",
];

const NOT_IMPLEMENTED: &[&str] = &[
    "classicalGrassmann",
    "classicalBilinearForms",
    "classicalNegativeB",
    "classicalTriangleFree",
    "2design",
    "antipodal",
    "clawBound",
    "terwilliger",
    "secondEigenvalue",
    "localEigenvalue",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail { refs: Vec<String>, message: String },
    Skipped,
    NotImplemented,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub check: String,
    #[serde(flatten)]
    pub status: Status,
}

/// What happened to one derived parameter set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Derived {
    Checked {
        report: Box<CheckReport>,
    },
    /// Already checked elsewhere in the tree.
    Repeated {
        array: IntersectionArray,
    },
    /// The derived parameters are not a valid array.
    Invalid {
        message: String,
        refs: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedEntry {
    pub path: String,
    #[serde(flatten)]
    pub derived: Derived,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub array: IntersectionArray,
    pub outcomes: Vec<Outcome>,
    pub derived: Vec<DerivedEntry>,
}

/// A failure somewhere in a report tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    /// Derivation steps from the root.
    pub path: Vec<String>,
    pub array: Option<IntersectionArray>,
    pub check: Option<String>,
    pub refs: Vec<String>,
    pub message: String,
}

impl Failure {
    /// `InfeasibleError: <path>: nonexistence by <tags>`.
    pub fn headline(&self) -> String {
        let mut s = String::from("InfeasibleError: ");
        if !self.path.is_empty() {
            s.push_str(&self.path.join(": "));
            s.push_str(": ");
        }
        s.push_str("nonexistence by ");
        s.push_str(&self.refs.join(", "));
        s
    }
}

impl CheckReport {
    pub fn is_feasible(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn outcome(&self, check: &str) -> Option<&Status> {
        self.outcomes.iter().find(|o| o.check == check).map(|o| &o.status)
    }

    /// All failures, in report order.
    pub fn failures(&self) -> Vec<Failure> {
        let mut out = Vec::new();
        self.collect(&mut Vec::new(), &mut out);
        out
    }

    fn collect(&self, path: &mut Vec<String>, out: &mut Vec<Failure>) {
        for o in &self.outcomes {
            if let Status::Fail { refs, message } = &o.status {
                out.push(Failure {
                    path: path.clone(),
                    array: Some(self.array.clone()),
                    check: Some(o.check.clone()),
                    refs: refs.clone(),
                    message: message.clone(),
                });
            }
        }
        for e in &self.derived {
            path.push(e.path.clone());
            match &e.derived {
                Derived::Checked { report } => report.collect(path, out),
                Derived::Invalid { message, refs } => out.push(Failure {
                    path: path.clone(),
                    array: None,
                    check: None,
                    refs: refs.clone(),
                    message: message.clone(),
                }),
                Derived::Repeated { .. } => {}
            }
            path.pop();
        }
    }

    /// Number of parameter sets checked in the tree.
    pub fn checked_count(&self) -> usize {
        1 + self
            .derived
            .iter()
            .map(|e| match &e.derived {
                Derived::Checked { report } => report.checked_count(),
                _ => 0,
            })
            .sum::<usize>()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failures = self.failures();
        let verdict = if failures.is_empty() { "feasible" } else { "infeasible" };
        writeln!(f, "{}: {verdict}", self.array)?;
        for fl in &failures {
            writeln!(f, "{}", fl.headline())?;
            let what = match (&fl.check, &fl.array) {
                (Some(c), Some(a)) => format!("check {c} on {a}"),
                _ => "derivation".to_string(),
            };
            writeln!(f, "  {what}: {}", fl.message)?;
        }
        for o in &self.outcomes {
            let s = match &o.status {
                Status::Pass => "pass".to_string(),
                Status::Fail { refs, .. } => format!("FAIL ({})", refs.join(", ")),
                Status::Skipped => "skipped".to_string(),
                Status::NotImplemented => "not implemented".to_string(),
            };
            writeln!(f, "  {:<24}{s}", o.check)?;
        }
        write!(f, "  parameter sets checked: {}", self.checked_count())
    }
}

#[derive(Clone, Debug, Default)]
pub struct CheckOptions {
    pub skip: BTreeSet<String>,
    pub recurse: bool,
}

impl CheckOptions {
    pub fn new() -> Self {
        CheckOptions {
            skip: BTreeSet::new(),
            recurse: true,
        }
    }

    pub fn skip(mut self, names: impl IntoIterator<Item = impl Into<String>>) -> Self {
        self.skip.extend(names.into_iter().map(Into::into));
        self
    }

    pub fn recurse(mut self, on: bool) -> Self {
        self.recurse = on;
        self
    }
}

pub fn check_feasible(ia: &IntersectionArray, opts: &CheckOptions) -> CheckReport {
    let mut visited = HashSet::new();
    visited.insert(ia.clone());
    run(ia, opts, &mut visited)
}

type Verdict = Result<(), (Vec<String>, String)>;

fn fail(tags: &[&str], message: impl Into<String>) -> Verdict {
    Err((tags.iter().map(|s| s.to_string()).collect(), message.into()))
}

fn run(ia: &IntersectionArray, opts: &CheckOptions, visited: &mut HashSet<IntersectionArray>) -> CheckReport {
    let mut extra: Vec<(String, Result<IntersectionArray, DrgError>)> = Vec::new();
    let outcomes = CATALOG
        .iter()
        .map(|&name| {
            let status = if opts.skip.contains(name) {
                Status::Skipped
            } else if NOT_IMPLEMENTED.contains(&name) {
                Status::NotImplemented
            } else {
                match run_check(name, ia, &mut extra) {
                    Ok(()) => Status::Pass,
                    Err((refs, message)) => Status::Fail { refs, message },
                }
            };
            Outcome {
                check: name.to_string(),
                status,
            }
        })
        .collect();
    let mut derived = Vec::new();
    if opts.recurse {
        let mut candidates: Vec<(String, Result<IntersectionArray, DrgError>)> = Vec::new();
        if ia.is_antipodal() {
            candidates.push(("antipodalQuotient".into(), ia.antipodal_quotient()));
        }
        if ia.is_bipartite() && ia.diameter() >= 2 {
            candidates.push(("bipartiteHalf".into(), ia.bipartite_half()));
        }
        if ia.srg_params().is_some() {
            match ia.complement() {
                Err(DrgError::Precondition(_)) => {}
                r => candidates.push(("complement".into(), r)),
            }
        }
        candidates.extend(extra);
        for (set, m) in ia.distance_graphs() {
            let name = set.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            candidates.push((format!("merge({name})"), Ok(m)));
        }
        for (path, r) in candidates {
            let d = match r {
                Ok(a) if visited.contains(&a) => Derived::Repeated { array: a },
                Ok(a) => {
                    visited.insert(a.clone());
                    Derived::Checked {
                        report: Box::new(run(&a, opts, visited)),
                    }
                }
                Err(e) => Derived::Invalid {
                    message: e.to_string(),
                    refs: vec!["BCN89".into()],
                },
            };
            derived.push(DerivedEntry { path, derived: d });
        }
    }
    CheckReport {
        array: ia.clone(),
        outcomes,
        derived,
    }
}

fn run_check(
    name: &str,
    ia: &IntersectionArray,
    extra: &mut Vec<(String, Result<IntersectionArray, DrgError>)>,
) -> Verdict {
    match name {
        "multiplicities" => check_multiplicities(ia),
        "krein" => check_krein(ia),
        "sporadic" => check_sporadic(ia),
        "family" => check_family(ia),
        "2graph" => check_2graph(ia, extra),
        "classical" => check_classical(ia),
        "combinatorial" => check_combinatorial(ia),
        "conference" => check_conference(ia),
        "geodeticEmbedding" => check_geodetic_embedding(ia),
        "hadamard" => check_hadamard(ia),
        "genPoly" => check_gen_poly(ia),
        "absoluteBound" => check_absolute_bound(ia),
        other => unreachable!("no check named {other}"),
    }
}

fn n(x: i64) -> Rat {
    Rat::from(x)
}

pub fn check_multiplicities(ia: &IntersectionArray) -> Verdict {
    let res = ia.spectrum().and_then(|s| s.check_multiplicities());
    match res {
        Ok(()) => Ok(()),
        Err(e) => fail(&["BCN89"], e.to_string()),
    }
}

pub fn check_krein(ia: &IntersectionArray) -> Verdict {
    match ia.krein().and_then(|k| k.check_nonnegative()) {
        Ok(()) => Ok(()),
        Err(e) => fail(&["BCN89"], e.to_string()),
    }
}

pub fn check_sporadic(ia: &IntersectionArray) -> Verdict {
    match tables::sporadic(ia) {
        Some(tags) => fail(tags, format!("{ia} is known not to exist")),
        None => Ok(()),
    }
}

pub fn check_family(ia: &IntersectionArray) -> Verdict {
    for fam in tables::FAMILIES {
        if let Some((r, t)) = fam.matches(ia) {
            let at = if t.is_zero() {
                format!("r = {r}")
            } else {
                format!("r = {r}, t = {t}")
            };
            return fail(&[fam.tag], format!("member of the family {} at {at}", fam.name));
        }
    }
    Ok(())
}

pub fn check_classical(ia: &IntersectionArray) -> Verdict {
    match tables::classical_family(ia) {
        Some((msg, tag)) => fail(&[tag], msg),
        None => Ok(()),
    }
}

/// Strongly regular graph parameters, for the derived sets of
/// [`check_2graph`].
fn srg(v: Rat, k: Rat, l: Rat, m: Rat) -> Option<Result<IntersectionArray, DrgError>> {
    let all_int = [&v, &k, &l, &m].iter().all(|x| x.is_integer());
    if !all_int {
        let e = DrgError::Infeasible {
            rule: "2graph".into(),
            detail: format!("strongly regular parameters ({v}, {k}, {l}, {m}) are not integral"),
        };
        return Some(Err(e));
    }
    // complete, edgeless and disconnected graphs are not checked further
    if !m.is_positive() || !k.is_positive() || k == &v - Rat::one() {
        return None;
    }
    Some(IntersectionArray::from_srg_v(&v, &k, &l, &m))
}

pub fn check_2graph(ia: &IntersectionArray, extra: &mut Vec<(String, Result<IntersectionArray, DrgError>)>) -> Verdict {
    if let Some((v, k, l, m)) = ia.srg_params() {
        if v == n(2) * (n(2) * &k - &l - &m) {
            let derived = srg(&v - n(1), n(2) * (&k - &m), &k + &l - n(2) * &m, &k - &m);
            if let Some(d) = derived {
                extra.push(("2graph".into(), d));
            }
        }
        return Ok(());
    }
    let taylor = ia.diameter() == 3 && ia.antipodal_index() == Some(n(2));
    let a1 = ia.a(1);
    if taylor && a1.is_positive() {
        if !a1.is_integer() || !(&a1 / n(2)).is_integer() {
            return fail(&["BCN89"], format!("Taylor graph with odd a1 = {a1}"));
        }
        if !(ia.order() / n(4)).is_integer() {
            return fail(
                &["BCN89"],
                format!("Taylor graph on {} vertices, not a multiple of 4", ia.order()),
            );
        }
        let k = ia.valency().clone();
        let local = srg(k.clone(), a1.clone(), (n(3) * &a1 - &k - n(1)) / n(2), &a1 / n(2));
        if let Some(d) = local {
            extra.push(("2graph".into(), d));
        }
    }
    Ok(())
}

fn polygon(ia: &IntersectionArray) -> bool {
    let d = ia.diameter();
    ia.b(0) == n(2)
        && (1..d).all(|i| ia.b(i).is_one())
        && (1..d).all(|i| ia.c(i).is_one())
        && (ia.c(d) == n(1) || ia.c(d) == n(2))
}

pub fn check_combinatorial(ia: &IntersectionArray) -> Verdict {
    let d = ia.diameter();
    if d >= 2 && ia.b(1).is_one() {
        let cocktail = d == 2 && ia.c(2) == ia.b(0);
        if !polygon(ia) && !cocktail {
            return fail(
                &["BCN89"],
                "b1 = 1 but the array is neither a polygon nor a cocktail party graph",
            );
        }
    }
    let (nn, k) = (ia.order(), ia.valency());
    if !(nn * k / n(2)).is_integer() {
        return fail(&["BCN89"], "odd number of edge endpoints");
    }
    if !(nn * k * ia.a(1) / n(6)).is_integer() {
        return fail(&["BCN89"], "number of triangles is not an integer");
    }
    for i in 1..=d {
        if !(ia.k(i) * ia.a(i) / n(2)).is_integer() {
            return fail(&["BCN89"], format!("k{i} a{i} is odd"));
        }
    }
    Ok(())
}

fn is_sum_of_two_squares(x: &Rat) -> bool {
    let Some(x) = x.to_i128() else { return false };
    if x < 0 {
        return false;
    }
    let mut a: i128 = 0;
    while a * a <= x {
        let rest = x - a * a;
        let b = (rest as f64).sqrt() as i128;
        if (b.saturating_sub(1)..=b + 1).any(|b| b >= 0 && b * b == rest) {
            return true;
        }
        a += 1;
    }
    false
}

pub fn check_conference(ia: &IntersectionArray) -> Verdict {
    let Some((v, k, l, m)) = ia.srg_params() else {
        return Ok(());
    };
    if k != n(2) * &m || m != &k - &l - n(1) {
        return Ok(());
    }
    let one_mod_four = ((&v - n(1)) / n(4)).is_integer();
    if !one_mod_four || !is_sum_of_two_squares(&v) {
        return fail(
            &["BCN89"],
            format!("conference graph on {v} vertices needs v = 1 mod 4 and v a sum of two squares"),
        );
    }
    Ok(())
}

pub fn check_geodetic_embedding(ia: &IntersectionArray) -> Verdict {
    if ia.diameter() != 3 {
        return Ok(());
    }
    let b = ia.b(1);
    let shape =
        ia.b(0) == n(2) * &b && ia.b(2).is_one() && ia.c(1).is_one() && ia.c(2).is_one() && ia.c(3) == n(2) * &b;
    if shape && b > n(4) {
        return fail(&["BCN89"], format!("array {{2b, b, 1; 1, 1, 2b}} with b = {b} > 4"));
    }
    Ok(())
}

pub fn check_hadamard(ia: &IntersectionArray) -> Verdict {
    if ia.diameter() != 4 {
        return Ok(());
    }
    let m = ia.c(2);
    let two_m = n(2) * &m;
    let shape = ia.b(0) == two_m
        && ia.b(1) == &two_m - n(1)
        && ia.b(2) == m
        && ia.b(3).is_one()
        && ia.c(3) == &two_m - n(1)
        && ia.c(4) == two_m;
    if shape && m > n(1) && !(&m / n(2)).is_integer() {
        return fail(&["BCN89"], format!("would need a Hadamard matrix of order {two_m}"));
    }
    Ok(())
}

/// Conditions on a generalized polygon of order `(s, t)`.
fn gen_poly_conditions(g: usize, s: &Rat, t: &Rat) -> Verdict {
    let thick = *s > n(1) && *t > n(1);
    if thick && ![2, 3, 4, 6, 8, 12].contains(&g) {
        return fail(&["BCN89"], format!("no thick generalized {g}-gon exists"));
    }
    if g == 4 && !(s * t * (s + n(1)) * (t + n(1)) / (s + t)).is_integer() {
        return fail(
            &["PayneThas09"],
            format!("s + t = {} does not divide st(s+1)(t+1)", s + t),
        );
    }
    if g == 6 && (s.is_one() || t.is_one()) {
        let q = if s.is_one() { t } else { s };
        let md = q.to_i128().map(|x| x.rem_euclid(4));
        if matches!(md, Some(1 | 2)) && !is_sum_of_two_squares(q) {
            return fail(&["BCN89"], format!("no projective plane of order {q}"));
        }
    }
    Ok(())
}

pub fn check_gen_poly(ia: &IntersectionArray) -> Verdict {
    if let Some(p) = ia.gen_poly_params() {
        gen_poly_conditions(p.g, &p.s, &p.t)?;
    }
    if ia.diameter() == 3 {
        if let Some(r) = ia.antipodal_index() {
            let c2 = ia.c(2);
            if *ia.valency() == (&r - n(1)) * (&c2 + n(1)) {
                gen_poly_conditions(4, &(&r - n(1)), &(&c2 + n(1)))?;
            }
        }
    }
    Ok(())
}

pub fn check_absolute_bound(ia: &IntersectionArray) -> Verdict {
    let (Ok(spec), Ok(krein)) = (ia.spectrum(), ia.krein()) else {
        return Ok(());
    };
    let m = spec.multiplicities();
    let d = ia.diameter();
    for i in 1..=d {
        for j in i..=d {
            let sum: Rat = (0..=d)
                .filter(|&h| !krein.get(h, i, j).is_zero())
                .map(|h| m[h].clone())
                .sum();
            let bound = if i == j {
                &m[i] * (&m[i] + n(1)) / n(2)
            } else {
                &m[i] * &m[j]
            };
            if sum > bound {
                return fail(
                    &["BCN89"],
                    format!("absolute bound fails for ({i}, {j}): {sum} > {bound}"),
                );
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arr(s: &str) -> IntersectionArray {
        s.parse().unwrap()
    }

    #[test]
    fn two_squares() {
        for (x, yes) in [
            (0, true),
            (1, true),
            (5, true),
            (9, true),
            (13, true),
            (21, false),
            (6, false),
            (3, false),
        ] {
            assert_eq!(is_sum_of_two_squares(&n(x)), yes, "{x}");
        }
    }

    #[test]
    fn families_match_their_members() {
        let fam = &tables::FAMILIES[0];
        let (b, c) = (fam.pattern)(&n(3), &n(0));
        let ia = IntersectionArray::new(b, c).unwrap();
        assert_eq!(ia.to_string(), "{54, 52; 1, 12}");
        assert!(check_family(&ia).is_err());
    }

    #[test]
    fn catalog_covers_not_implemented() {
        for name in NOT_IMPLEMENTED {
            assert!(CATALOG.contains(name));
        }
        let r = check_feasible(&arr("{3,2;1,1}"), &CheckOptions::new().recurse(false));
        assert_eq!(r.outcomes.len(), CATALOG.len());
        assert_eq!(r.outcome("clawBound"), Some(&Status::NotImplemented));
    }
}
