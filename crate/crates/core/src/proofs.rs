//! Nonexistence certificates built from triple intersection numbers.
//!
//! A certificate is a linear script of steps with every intermediate value
//! recorded exactly. [`Certificate::replay`] recomputes it from the case
//! and array alone.

use std::collections::BTreeMap;
use std::fmt;

use drg_exact::{AffineForm, Rat};
use serde::{Deserialize, Serialize};

use crate::array::IntersectionArray;
use crate::error::{DrgError, Result};
use crate::triples::{ParametricTriples, Pin, Solution, Triple, TripleScenario, Verdict, DEFAULT_CAP};

/// The built-in nonexistence arguments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum Case {
    /// The two-parameter family with `p = 4r`.
    Family {
        r: u32,
        t: u32,
    },
    G1360,
    G1600,
    Bip5,
}

impl Case {
    /// Parses `g1360`, `g1600`, `bip5` or `family(r,t)`.
    pub fn parse(text: &str) -> Result<Case> {
        let t = text.trim();
        match t {
            "g1360" => return Ok(Case::G1360),
            "g1600" => return Ok(Case::G1600),
            "bip5" => return Ok(Case::Bip5),
            _ => {}
        }
        let bad = || {
            DrgError::Parse(format!(
                "unknown case {text:?}; expected g1360, g1600, bip5 or family(r,t)"
            ))
        };
        let args = t
            .strip_prefix("family(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (r, tt) = args.split_once(',').ok_or_else(bad)?;
        let r: u32 = r.trim().parse().map_err(|_| bad())?;
        let tt: u32 = tt.trim().parse().map_err(|_| bad())?;
        if r == 0 || tt == 0 {
            return Err(DrgError::Parse("family parameters must be positive".into()));
        }
        Ok(Case::Family { r, t: tt })
    }

    /// The array the argument is about.
    pub fn array(&self) -> Result<IntersectionArray> {
        match *self {
            Case::Family { r, t } => family_array(r, t),
            Case::G1360 => "{135, 128, 16; 1, 16, 120}".parse(),
            Case::G1600 => "{234, 165, 12; 1, 30, 198}".parse(),
            Case::Bip5 => "{55, 54, 50, 35, 10; 1, 5, 20, 45, 55}".parse(),
        }
    }

    /// Reference tag under which a successful certificate is reported.
    pub fn tag(&self) -> &'static str {
        match self {
            Case::Family { .. } => "cert-fameven",
            Case::G1360 => "cert-g1360",
            Case::G1600 => "cert-g1600",
            Case::Bip5 => "cert-bip5",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Case::Family { r, t } => write!(f, "family({r},{t})"),
            Case::G1360 => f.write_str("g1360"),
            Case::G1600 => f.write_str("g1600"),
            Case::Bip5 => f.write_str("bip5"),
        }
    }
}

fn int(x: i64) -> Rat {
    Rat::from(x)
}

/// `{(2r+1)(4r+1)(4t-1), 8r(4rt-r+2t), (r+t)(4r+1); 1, (r+t)(4r+1), 4r(2r+1)(4t-1)}`.
pub fn family_array(r: u32, t: u32) -> Result<IntersectionArray> {
    let (r, t) = (i64::from(r), i64::from(t));
    IntersectionArray::from_ints(
        &[
            (2 * r + 1) * (4 * r + 1) * (4 * t - 1),
            8 * r * (4 * r * t - r + 2 * t),
            (r + t) * (4 * r + 1),
        ],
        &[1, (r + t) * (4 * r + 1), 4 * r * (2 * r + 1) * (4 * t - 1)],
    )
}

/// `c = ((p + 1)^2 + 2a(p + 1)/(p + 2)) / 4`, the value of `c_2` forced by
/// Q-polynomiality for the arrays `{a(p+1), cp, a+1; 1, c, ap}`.
pub fn family_qpoly_c(a: &Rat, p: &Rat) -> Rat {
    let p1 = p + Rat::one();
    (&p1 * &p1 + int(2) * a * &p1 / (p + int(2))) / int(4)
}

/// Exact record of an affine form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormRecord {
    pub constant: Rat,
    pub terms: BTreeMap<String, Rat>,
}

impl FormRecord {
    pub fn to_form(&self) -> AffineForm {
        self.terms
            .iter()
            .fold(AffineForm::constant(self.constant.clone()), |f, (v, c)| {
                f.with_term(v, c.clone())
            })
    }
}

impl From<&AffineForm> for FormRecord {
    fn from(f: &AffineForm) -> Self {
        FormRecord {
            constant: f.constant_term().clone(),
            terms: f.terms().clone(),
        }
    }
}

impl fmt::Display for FormRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_form().factored())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellForm {
    pub cell: Triple,
    pub form: FormRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellValue {
    pub cell: Triple,
    pub value: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Step {
    /// Solved the triple system for the given distances
    /// `d(u,v), d(u,w), d(v,w)`.
    SolveScenario {
        distances: (usize, usize, usize),
        pins: Vec<(Triple, Pin)>,
        /// `(i, j, h)` with `q^h_ij = 0`.
        krein_zeros: Vec<Triple>,
        consistent: bool,
        free_vars: Vec<String>,
        recorded: Vec<CellForm>,
    },
    /// A recorded entry compared with a closed form.
    AssertForm {
        cell: Triple,
        template: String,
        expected: FormRecord,
        holds: bool,
    },
    /// Integral nonnegative values of the single free variable.
    Enumerate {
        variable: String,
        range: (Rat, Rat),
        /// Values of `cell` at each value in the range.
        cell: Triple,
        values: Vec<(Rat, Rat)>,
        feasible: Vec<Rat>,
        forced: Vec<CellValue>,
    },
    /// `[d d d] = 1` for a pair at distance `d` joined through a vertex at
    /// distance `d - 1`, granted when every triple at pairwise distance
    /// `d` has `[d d j] = 0` for `0 < j < d` and `a_d p^d_dd = c_d`.
    PinFromCodeRule {
        forced_zeros: Vec<Triple>,
        a_d: Rat,
        p_ddd: Rat,
        c_d: Rat,
        pin: Triple,
        value: Rat,
    },
    /// For a pair `u, v` at distance 2 in a bipartite graph, each vertex
    /// adjacent to both has `k - 2` further neighbours, all at distance 2
    /// from both; these edges must fit into the `{2 2}` cell with at most
    /// `cap` of them per vertex.
    CountingBound {
        p_from: Rat,
        others: Rat,
        edges: Rat,
        p_to: Rat,
        cap: Rat,
        capacity: Rat,
        exceeded: bool,
    },
    Conclude {
        reason: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertVerdict {
    Nonexistent,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub case: Case,
    pub array: IntersectionArray,
    pub steps: Vec<Step>,
    pub verdict: CertVerdict,
    pub reason: String,
}

impl Certificate {
    pub fn is_nonexistent(&self) -> bool {
        self.verdict == CertVerdict::Nonexistent
    }

    /// Recomputes the certificate from its case and array.
    pub fn replay(&self) -> Certificate {
        prove_on(self.case, &self.array)
    }

    /// Whether replaying reproduces every recorded value.
    pub fn verify(&self) -> bool {
        self.replay() == *self
    }

    /// Recorded form of an entry in the `n`-th solved scenario.
    pub fn recorded(&self, n: usize, cell: Triple) -> Option<&FormRecord> {
        self.steps
            .iter()
            .filter_map(|s| match s {
                Step::SolveScenario { recorded, .. } => Some(recorded),
                _ => None,
            })
            .nth(n)?
            .iter()
            .find(|c| c.cell == cell)
            .map(|c| &c.form)
    }
}

/// Runs the built-in argument on its own array.
pub fn prove_builtin(case: Case) -> Result<Certificate> {
    Ok(prove_on(case, &case.array()?))
}

/// Runs the argument of `case` on an arbitrary array. Any step not going
/// as expected yields an inconclusive certificate.
pub fn prove_on(case: Case, ia: &IntersectionArray) -> Certificate {
    let mut run = Run { ia, steps: Vec::new() };
    let result = match case {
        Case::Family { r, t } => run.family(r, t),
        Case::G1360 => run.g1360(),
        Case::G1600 => run.g1600(),
        Case::Bip5 => run.bip5(),
    };
    let (verdict, reason) = match result {
        Ok(reason) => (CertVerdict::Nonexistent, reason),
        Err(reason) => (CertVerdict::Inconclusive, reason),
    };
    run.steps.push(Step::Conclude { reason: reason.clone() });
    Certificate {
        case,
        array: ia.clone(),
        steps: run.steps,
        verdict,
        reason,
    }
}

type Outcome = std::result::Result<String, String>;

struct Run<'a> {
    ia: &'a IntersectionArray,
    steps: Vec<Step>,
}

fn alpha_form(constant: Rat, coef: Rat) -> AffineForm {
    AffineForm::constant(constant).with_term("alpha", coef)
}

fn cell_text((i, j, h): Triple) -> String {
    format!("[{i} {j} {h}]")
}

impl Run<'_> {
    fn solve(
        &mut self,
        distances: (usize, usize, usize),
        pins: Vec<(Triple, Pin)>,
        record: &[Triple],
    ) -> std::result::Result<ParametricTriples, String> {
        let (uv, uw, vw) = distances;
        let mut sc = TripleScenario::new(self.ia, uv, uw, vw).map_err(|e| e.to_string())?;
        for (at, pin) in &pins {
            sc = sc.pin(*at, pin.clone());
        }
        let zeros = self.ia.krein().map_err(|e| e.to_string())?.zeros();
        let sol = sc.solve().map_err(|e| e.to_string())?;
        let (consistent, free_vars, recorded, pt) = match sol {
            Solution::Inconsistent => (false, Vec::new(), Vec::new(), None),
            Solution::Parametric(pt) => {
                let recorded = record
                    .iter()
                    .map(|&cell| CellForm {
                        cell,
                        form: FormRecord::from(pt.get(cell.0, cell.1, cell.2)),
                    })
                    .collect();
                (true, pt.free_vars.clone(), recorded, Some(pt))
            }
        };
        self.steps.push(Step::SolveScenario {
            distances,
            pins,
            krein_zeros: zeros,
            consistent,
            free_vars,
            recorded,
        });
        pt.ok_or_else(|| "the system is inconsistent, which this argument does not expect".to_string())
    }

    fn assert_form(
        &mut self,
        pt: &ParametricTriples,
        cell: Triple,
        template: &str,
        expected: AffineForm,
    ) -> std::result::Result<(), String> {
        let holds = *pt.get(cell.0, cell.1, cell.2) == expected;
        self.steps.push(Step::AssertForm {
            cell,
            template: template.to_string(),
            expected: FormRecord::from(&expected),
            holds,
        });
        if holds {
            Ok(())
        } else {
            Err(format!("{} is not {}", cell_text(cell), expected.factored()))
        }
    }

    fn single_alpha(pt: &ParametricTriples) -> std::result::Result<(), String> {
        if pt.free_vars == ["alpha"] {
            Ok(())
        } else {
            Err(format!(
                "expected the single free variable alpha, got {:?}",
                pt.free_vars
            ))
        }
    }

    /// Enumerates alpha and records the values of `cell`.
    fn enumerate(&mut self, pt: &ParametricTriples, cell: Triple, forced: &[Triple]) -> (Vec<Rat>, Verdict) {
        let an = pt.analyze(true, DEFAULT_CAP);
        let (lo, hi) = an
            .ranges
            .get("alpha")
            .map(|(l, h)| (Rat::from_int(l.clone()), Rat::from_int(h.clone())))
            .unwrap_or((Rat::zero(), -Rat::one()));
        let form = pt.get(cell.0, cell.1, cell.2);
        let mut values = Vec::new();
        let mut x = lo.clone();
        while x <= hi {
            let assign = BTreeMap::from([("alpha".to_string(), x.clone())]);
            values.push((x.clone(), form.eval(&assign)));
            x += Rat::one();
        }
        let feasible: Vec<Rat> = an.feasible.iter().map(|a| a["alpha"].clone()).collect();
        let forced = forced
            .iter()
            .filter_map(|c| {
                an.forced.get(c).map(|v| CellValue {
                    cell: *c,
                    value: v.clone(),
                })
            })
            .collect();
        self.steps.push(Step::Enumerate {
            variable: "alpha".into(),
            range: (lo, hi),
            cell,
            values,
            feasible: feasible.clone(),
            forced,
        });
        (feasible, an.verdict)
    }

    fn family(&mut self, r: u32, t: u32) -> Outcome {
        let (r, t) = (Rat::from(i64::from(r)), Rat::from(i64::from(t)));
        let four_r = int(4) * &r;
        let d = self.ia.diameter();
        if d != 3 {
            return Err(format!("diameter is {d}, not 3"));
        }
        let record = [
            (3, 3, 1),
            (3, 1, 3),
            (1, 3, 3),
            (3, 3, 2),
            (3, 2, 3),
            (2, 3, 3),
            (3, 3, 3),
        ];
        let pt = self.solve((3, 3, 3), vec![((3, 3, 3), Pin::Param("alpha".into()))], &record)?;
        Self::single_alpha(&pt)?;
        let den = &four_r - Rat::one();
        let one_form = alpha_form(
            (Rat::one() - &four_r) * (&four_r + Rat::one()) / &den,
            (&four_r + Rat::one()) / &den,
        );
        let two_form = alpha_form(int(8) * &r, -(int(8) * &r) / &den);
        for cell in [(3, 3, 1), (3, 1, 3), (1, 3, 3)] {
            self.assert_form(&pt, cell, "(alpha - 4r + 1)(4r + 1)/(4r - 1)", one_form.clone())?;
        }
        for cell in [(3, 3, 2), (3, 2, 3), (2, 3, 3)] {
            self.assert_form(&pt, cell, "8r(4r - 1 - alpha)/(4r - 1)", two_form.clone())?;
        }
        let zero_cells = [(3, 3, 1), (3, 1, 3), (1, 3, 3), (3, 3, 2), (3, 2, 3), (2, 3, 3)];
        let (feasible, _) = self.enumerate(&pt, (3, 3, 3), &zero_cells);
        if feasible != [&four_r - Rat::one()] {
            return Err(format!("alpha is not forced to 4r - 1 = {}", &four_r - Rat::one()));
        }
        let pin = self.code_rule_pin(&pt, &feasible[0])?;
        let pt2 = self.solve((1, 2, 3), vec![(pin, Pin::Value(Rat::one()))], &[(1, 1, 3)])?;
        let expected = AffineForm::constant(int(2) * &t - Rat::new(1, 2));
        self.assert_form(&pt2, (1, 1, 3), "2t - 1/2", expected.clone())?;
        let v = expected.as_constant().expect("constant").clone();
        if v.is_integer() {
            return Err(format!("[1 1 3] = {v} is an integer"));
        }
        Ok(format!("[1 1 3] = {v} is not an integer"))
    }

    /// Grants `[d d d] = 1` in the `(1, d - 1, d)` scenario.
    fn code_rule_pin(&mut self, pt: &ParametricTriples, alpha: &Rat) -> std::result::Result<Triple, String> {
        let ia = self.ia;
        let d = ia.diameter();
        if d != 3 || pt.scenario.distances() != (d, d, d) {
            return Err("the code rule needs the (d, d, d) scenario of a diameter 3 graph".into());
        }
        let assign = BTreeMap::from([("alpha".to_string(), alpha.clone())]);
        let point = pt.point(&assign);
        let mut zeros = Vec::new();
        for j in 1..d {
            for cell in [(d, d, j), (d, j, d), (j, d, d)] {
                if !point.get(cell.0, cell.1, cell.2).is_zero() {
                    return Err(format!("{} is not forced to zero", cell_text(cell)));
                }
                zeros.push(cell);
            }
        }
        let (a_d, p_ddd, c_d) = (ia.a(d), ia.p(d, d, d).clone(), ia.c(d));
        let holds = &a_d * &p_ddd == c_d;
        self.steps.push(Step::PinFromCodeRule {
            forced_zeros: zeros,
            a_d: a_d.clone(),
            p_ddd: p_ddd.clone(),
            c_d: c_d.clone(),
            pin: (d, d, d),
            value: Rat::one(),
        });
        if !holds {
            return Err(format!("a_d p^d_dd = {} differs from c_d = {c_d}", &a_d * &p_ddd));
        }
        Ok((d, d, d))
    }

    fn g1360(&mut self) -> Outcome {
        let pt = self.solve((1, 1, 1), vec![((1, 1, 1), Pin::Param("alpha".into()))], &[(3, 3, 3)])?;
        Self::single_alpha(&pt)?;
        self.assert_form(
            &pt,
            (3, 3, 3),
            "(71 - 27 alpha)/8",
            alpha_form(Rat::new(71, 8), Rat::new(-27, 8)),
        )?;
        let (feasible, verdict) = self.enumerate(&pt, (3, 3, 3), &[]);
        match verdict {
            Verdict::Contradiction(_) if feasible.is_empty() => {
                Ok("[3 3 3] = (71 - 27*alpha)/8 is not a nonnegative integer for any nonnegative integer alpha".into())
            }
            _ => Err("some value of alpha is feasible".into()),
        }
    }

    fn g1600(&mut self) -> Outcome {
        let cells = [(3, 3, 2), (3, 2, 3), (2, 3, 3)];
        let pt = self.solve((3, 3, 3), vec![((3, 3, 3), Pin::Param("alpha".into()))], &cells)?;
        Self::single_alpha(&pt)?;
        for cell in cells {
            self.assert_form(&pt, cell, "-17 - 4 alpha", alpha_form(int(-17), int(-4)))?;
        }
        Ok("[3 3 2] = -17 - 4*alpha is negative for every nonnegative alpha".into())
    }

    fn bip5(&mut self) -> Outcome {
        let ia = self.ia;
        if !ia.is_bipartite() || ia.diameter() < 2 {
            return Err("the counting argument needs a bipartite graph".into());
        }
        let d = ia.diameter();
        let pt = self.solve((2, 2, 2), vec![((1, 1, 1), Pin::Param("alpha".into()))], &[(d, d, d)])?;
        Self::single_alpha(&pt)?;
        self.assert_form(&pt, (d, d, d), "20 - 12 alpha", alpha_form(int(20), int(-12)))?;
        let (feasible, _) = self.enumerate(&pt, (d, d, d), &[]);
        let cap = feasible
            .iter()
            .max()
            .cloned()
            .ok_or_else(|| "no feasible value of alpha".to_string())?;
        let bound = counting_bound(ia, &cap).map_err(|e| e.to_string())?;
        let exceeded = bound.exceeded();
        self.steps.push(Step::CountingBound {
            p_from: bound.p_from.clone(),
            others: bound.others.clone(),
            edges: bound.edges(),
            p_to: bound.p_to.clone(),
            cap: cap.clone(),
            capacity: bound.capacity(),
            exceeded,
        });
        if exceeded {
            Ok(format!(
                "{} * {} = {} edges exceed {} * {} = {}",
                bound.p_from,
                bound.others,
                bound.edges(),
                bound.p_to,
                cap,
                bound.capacity()
            ))
        } else {
            Err(format!(
                "{} edges fit into capacity {}",
                bound.edges(),
                bound.capacity()
            ))
        }
    }
}

/// Edge count between the cells `{1 1}` and `{2 2}` of a pair at distance
/// 2 in a bipartite graph, against the room for them when no vertex of
/// `{2 2}` has more than `cap` neighbours in `{1 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountingBound {
    pub p_from: Rat,
    pub others: Rat,
    pub p_to: Rat,
    pub cap: Rat,
}

impl CountingBound {
    pub fn edges(&self) -> Rat {
        &self.p_from * &self.others
    }

    pub fn capacity(&self) -> Rat {
        &self.p_to * &self.cap
    }

    pub fn exceeded(&self) -> bool {
        self.edges() > self.capacity()
    }
}

pub fn counting_bound(ia: &IntersectionArray, cap: &Rat) -> Result<CountingBound> {
    if !ia.is_bipartite() || ia.diameter() < 2 {
        return Err(DrgError::precondition(
            "counting bound needs a bipartite graph of diameter at least 2",
        ));
    }
    Ok(CountingBound {
        p_from: ia.p(2, 1, 1).clone(),
        others: ia.valency() - int(2),
        p_to: ia.p(2, 2, 2).clone(),
        cap: cap.clone(),
    })
}

fn pin_text(pins: &[(Triple, Pin)]) -> String {
    pins.iter()
        .map(|(c, p)| format!("{} = {p}", cell_text(*c)))
        .collect::<Vec<_>>()
        .join(", ")
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "case {} for {}", self.case, self.array)?;
        for (n, step) in self.steps.iter().enumerate() {
            write!(f, "{:>2}. ", n + 1)?;
            match step {
                Step::SolveScenario {
                    distances: (uv, uw, vw),
                    pins,
                    krein_zeros,
                    consistent,
                    free_vars,
                    recorded,
                } => {
                    writeln!(f, "triple system for d(u,v) = {uv}, d(u,w) = {uw}, d(v,w) = {vw}")?;
                    if !pins.is_empty() {
                        writeln!(f, "    with {}", pin_text(pins))?;
                    }
                    let zs: Vec<String> = krein_zeros.iter().map(|(i, j, h)| format!("q^{h}_{i}{j}")).collect();
                    if !zs.is_empty() {
                        writeln!(f, "    vanishing Krein parameters: {}", zs.join(", "))?;
                    }
                    if !consistent {
                        writeln!(f, "    inconsistent")?;
                        continue;
                    }
                    writeln!(
                        f,
                        "    free variables: {}",
                        if free_vars.is_empty() {
                            "none".into()
                        } else {
                            free_vars.join(", ")
                        }
                    )?;
                    for c in recorded {
                        writeln!(f, "    {} = {}", cell_text(c.cell), c.form)?;
                    }
                }
                Step::AssertForm {
                    cell,
                    template,
                    expected,
                    holds,
                } => {
                    let mark = if *holds { "holds" } else { "FAILS" };
                    writeln!(f, "check {} = {template} = {expected}: {mark}", cell_text(*cell))?;
                }
                Step::Enumerate {
                    variable,
                    range,
                    cell,
                    values,
                    feasible,
                    forced,
                } => {
                    writeln!(f, "bounds give {variable} in {}..{}", range.0, range.1)?;
                    for (x, v) in values {
                        writeln!(f, "    {variable} = {x}: {} = {v}", cell_text(*cell))?;
                    }
                    let fs: Vec<String> = feasible.iter().map(Rat::to_string).collect();
                    writeln!(
                        f,
                        "    feasible {variable}: {}",
                        if fs.is_empty() { "none".into() } else { fs.join(", ") }
                    )?;
                    for c in forced {
                        writeln!(f, "    forced {} = {}", cell_text(c.cell), c.value)?;
                    }
                }
                Step::PinFromCodeRule {
                    forced_zeros,
                    a_d,
                    p_ddd,
                    c_d,
                    pin,
                    value,
                } => {
                    let zs: Vec<String> = forced_zeros.iter().map(|c| cell_text(*c)).collect();
                    writeln!(f, "forced zeros {}", zs.join(", "))?;
                    writeln!(f, "    a_d * p^d_dd = {a_d} * {p_ddd} = {} = c_d = {c_d}", a_d * p_ddd)?;
                    writeln!(
                        f,
                        "    so {} = {value} for d(u,v) = 1, d(u,w) = 2, d(v,w) = 3",
                        cell_text(*pin)
                    )?;
                }
                Step::CountingBound {
                    p_from,
                    others,
                    edges,
                    p_to,
                    cap,
                    capacity,
                    exceeded,
                } => {
                    let rel = if *exceeded { ">" } else { "<=" };
                    writeln!(
                        f,
                        "edges between {{1 1}} and {{2 2}}: p^2_11 * (k - 2) = {p_from} * {others} = {edges}"
                    )?;
                    writeln!(
                        f,
                        "    room: p^2_22 * cap = {p_to} * {cap} = {capacity}; {edges} {rel} {capacity}"
                    )?;
                }
                Step::Conclude { reason } => writeln!(f, "{reason}")?,
            }
        }
        let v = match self.verdict {
            CertVerdict::Nonexistent => "nonexistent",
            CertVerdict::Inconclusive => "inconclusive",
        };
        write!(f, "verdict: {v}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_parsing() {
        assert_eq!(Case::parse("g1360").unwrap(), Case::G1360);
        assert_eq!(Case::parse("family(2, 3)").unwrap(), Case::Family { r: 2, t: 3 });
        assert!(Case::parse("family(0,1)").is_err());
        assert!(Case::parse("nope").is_err());
    }

    #[test]
    fn family_instance() {
        assert_eq!(family_array(1, 1).unwrap().to_string(), "{45, 40, 10; 1, 10, 36}");
    }

    #[test]
    fn qpoly_c() {
        let r = Rat::from(2);
        let t = Rat::from(3);
        let a = (int(2) * &r + Rat::one()) * (int(4) * &t - Rat::one());
        let c = family_qpoly_c(&a, &(int(4) * &r));
        assert_eq!(c, (&r + &t) * (int(4) * &r + Rat::one()));
        assert_eq!(family_qpoly_c(&int(15), &int(8)), int(27));
    }

    #[test]
    fn g1600_certificate() {
        let cert = prove_builtin(Case::G1600).unwrap();
        assert!(cert.is_nonexistent(), "{cert}");
        assert_eq!(cert.recorded(0, (3, 3, 2)).unwrap().to_string(), "-17 - 4*alpha");
    }

    #[test]
    fn counting_flips_with_cap() {
        let ia = Case::Bip5.array().unwrap();
        assert!(counting_bound(&ia, &Rat::one()).unwrap().exceeded());
        assert!(!counting_bound(&ia, &int(2)).unwrap().exceeded());
    }
}
