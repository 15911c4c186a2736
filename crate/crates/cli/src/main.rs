//! `drg`: parameter tables, feasibility reports, triple intersection
//! numbers, nonexistence certificates and distance partition diagrams.
//!
//! Exit status is 0 when nothing failed, 2 when a parameter set was shown
//! infeasible or nonexistent, and 1 on usage or input errors.

use std::collections::BTreeMap;
use std::fmt::Write;
use std::io::Write as _;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use drg::array3d::render_matrix;
use drg::checks::{check_feasible, CheckOptions};
use drg::partition;
use drg::proofs::{family_array, prove_builtin, Case};
use drg::triples::{ParametricTriples, Pin, Solution, TripleScenario, Verdict, DEFAULT_CAP};
use drg::{parse_input, IntersectionArray};
use drg_exact::Rat;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "drg",
    version,
    about = "Feasibility analysis of distance-regular graph parameters"
)]
#[command(
    after_help = "Parameter sets are written {b0,...,b(d-1); c1,...,cd}, srg(k,l,m), srg(v,k,l,m) \
or classical(d,b,alpha,beta); entries may be rationals p/q.\n\
Three-index tables print block h, row i, column j as entry (h, i, j)."
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Intersection numbers, spectrum, eigenmatrices and Krein parameters.
    Params { input: String },
    /// Runs the feasibility checks, then checks derived parameter sets.
    Check {
        input: String,
        /// Checks to skip, comma-separated.
        #[arg(long, value_delimiter = ',')]
        skip: Vec<String>,
        /// Do not check derived parameter sets.
        #[arg(long)]
        no_recurse: bool,
    },
    /// Triple intersection numbers for vertices u, v, w at distances
    /// d(u,v) = U, d(u,w) = V, d(v,w) = W.
    ///
    /// Block i, row j, column h holds [i j h], the number of vertices at
    /// distance i from u, j from v and h from w.
    Triples {
        array: String,
        #[arg(value_name = "U")]
        uv: usize,
        #[arg(value_name = "V")]
        uw: usize,
        #[arg(value_name = "W")]
        vw: usize,
        /// Pins an entry: `i,j,h=value` fixes it, `i,j,h=name` makes it a
        /// named parameter. Repeatable.
        #[arg(long = "pin", value_name = "I,J,H=VALUE")]
        pins: Vec<String>,
        /// Lists the integral nonnegative solutions and forced entries.
        #[arg(long)]
        enumerate: bool,
    },
    /// Replays a built-in nonexistence argument: g1360, g1600, bip5 or
    /// family(r,t).
    Prove { case: String },
    /// Runs the family argument over a grid of parameters.
    Scan {
        #[arg(long)]
        family: String,
        /// Range of r, e.g. 1..4 (inclusive).
        #[arg(long)]
        r: String,
        /// Range of t, e.g. 1..4 (inclusive).
        #[arg(long)]
        t: String,
    },
    /// DOT diagram of the distance partition with respect to a vertex, or
    /// to a pair of vertices at the given distance.
    Partition { array: String, distance: Option<usize> },
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Ok,
    Fail,
}

struct Output {
    text: String,
    json: Value,
    status: Status,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            status: Status::Ok,
        }
    }
}

fn tuple(v: &[Rat]) -> String {
    let items: Vec<String> = v.iter().map(Rat::to_string).collect();
    format!("({})", items.join(", "))
}

fn params(input: &str) -> Result<Output> {
    let ia = parse_input(input)?;
    let mut t = String::new();
    writeln!(t, "intersection array: {ia}")?;
    writeln!(t, "order: {}", ia.order())?;
    writeln!(t, "valency: {}", ia.valency())?;
    writeln!(t, "diameter: {}", ia.diameter())?;
    writeln!(t, "pTable:\n{}", ia.p_tensor())?;
    writeln!(t, "aTable: {}", tuple(ia.a_table()))?;
    writeln!(t, "bTable: {}", tuple(ia.b_table()))?;
    writeln!(t, "cTable: {}", tuple(ia.c_table()))?;
    writeln!(t, "kTable: {}", tuple(ia.k_table()))?;
    let mut j = json!({
        "array": ia,
        "order": ia.order(),
        "valency": ia.valency(),
        "diameter": ia.diameter(),
        "pTable": ia.p_tensor(),
        "aTable": ia.a_table(),
        "bTable": ia.b_table(),
        "cTable": ia.c_table(),
        "kTable": ia.k_table(),
    });
    let classical = ia.classical_params();
    for c in &classical {
        writeln!(t, "classical parameters: ({}, {}, {}, {})", c.d, c.b, c.alpha, c.beta)?;
    }
    j["classicalParameters"] = json!(classical);
    if let Some(g) = ia.gen_poly_params() {
        writeln!(t, "generalized polygon: {g}")?;
        j["generalizedPolygon"] = json!(g);
    }
    match (ia.spectrum(), ia.krein()) {
        (Ok(s), Ok(k)) => {
            let ev: Vec<String> = s.eigenvalues().iter().map(ToString::to_string).collect();
            writeln!(t, "eigenvalues: {}", ev.join(", "))?;
            writeln!(t, "cosineSequences:\n{}", render_matrix(s.cosine_rows()))?;
            writeln!(t, "multiplicities: {}", tuple(s.multiplicities()))?;
            if let Err(e) = s.check_multiplicities() {
                writeln!(t, "warning: {e}")?;
            }
            writeln!(t, "eigenmatrix:\n{}", render_matrix(&s.p_matrix()))?;
            writeln!(t, "dualEigenmatrix:\n{}", render_matrix(&s.q_matrix()))?;
            writeln!(t, "formally self-dual: {}", s.is_formally_self_dual())?;
            write!(t, "kreinParameters:\n{}", k.tensor())?;
            if let Err(e) = k.check_nonnegative() {
                write!(t, "\nwarning: {e}")?;
            }
            let strings = |m: Vec<Vec<drg_exact::NFElem>>| -> Vec<Vec<String>> {
                m.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
            };
            j["eigenvalues"] = json!(s.eigenvalues());
            j["cosineSequences"] = json!(strings(s.cosine_rows().to_vec()));
            j["multiplicities"] = json!(s.multiplicities());
            j["eigenmatrix"] = json!(strings(s.p_matrix()));
            j["dualEigenmatrix"] = json!(strings(s.q_matrix()));
            j["formallySelfDual"] = json!(s.is_formally_self_dual());
            j["kreinParameters"] = json!(k.tensor());
        }
        (Err(e), _) | (_, Err(e)) => {
            write!(t, "spectrum: {e}")?;
            j["spectrumError"] = json!(e.to_string());
        }
    }
    Ok(Output::ok(t, j))
}

fn check(input: &str, skip: Vec<String>, no_recurse: bool) -> Result<Output> {
    let ia = parse_input(input)?;
    let unknown: Vec<&String> = skip
        .iter()
        .filter(|s| !drg::checks::CATALOG.contains(&s.as_str()))
        .collect();
    if !unknown.is_empty() {
        bail!(
            "unknown check(s) {unknown:?}; known checks: {}",
            drg::checks::CATALOG.join(", ")
        );
    }
    let rep = check_feasible(&ia, &CheckOptions::new().skip(skip).recurse(!no_recurse));
    let status = if rep.is_feasible() { Status::Ok } else { Status::Fail };
    Ok(Output {
        text: rep.to_string(),
        json: serde_json::to_value(&rep)?,
        status,
    })
}

fn parse_pin(text: &str) -> Result<((usize, usize, usize), Pin)> {
    let (cell, value) = text.split_once('=').ok_or_else(|| anyhow!("pin {text:?} lacks '='"))?;
    let idx: Vec<usize> = cell
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .with_context(|| format!("pin {text:?}: bad indices"))?;
    let [i, j, h] = idx[..] else {
        bail!("pin {text:?} needs three indices")
    };
    let value = value.trim();
    let pin = match value.parse::<Rat>() {
        Ok(r) => Pin::Value(r),
        Err(_) if value.chars().next().is_some_and(char::is_alphabetic) => Pin::Param(value.to_string()),
        Err(_) => bail!("pin {text:?}: {value:?} is neither a number nor a name"),
    };
    Ok(((i, j, h), pin))
}

fn triples(array: &str, dist: (usize, usize, usize), pins: &[String], enumerate: bool) -> Result<Output> {
    let ia = parse_input(array)?;
    let mut sc = TripleScenario::new(&ia, dist.0, dist.1, dist.2)?;
    for p in pins {
        let (at, pin) = parse_pin(p)?;
        sc = sc.pin(at, pin);
    }
    let mut j = json!({"array": ia, "distances": [dist.0, dist.1, dist.2]});
    let pt: ParametricTriples = match sc.solve()? {
        Solution::Inconsistent => {
            j["consistent"] = json!(false);
            return Ok(Output {
                text: "the system is inconsistent".into(),
                json: j,
                status: Status::Fail,
            });
        }
        Solution::Parametric(pt) => pt,
    };
    let mut t = format!("{pt}");
    if !pt.free_vars.is_empty() {
        write!(t, "\nfree variables: {}", pt.free_vars.join(", "))?;
    }
    for (name, form) in &pt.params {
        if !pt.free_vars.contains(name) {
            write!(t, "\n{name} = {form}")?;
        }
    }
    j["consistent"] = json!(true);
    j["freeVariables"] = json!(pt.free_vars);
    j["params"] = json!(pt.params);
    j["entries"] = json!(pt.entries);
    let mut status = Status::Ok;
    if enumerate {
        let an = pt.analyze(true, DEFAULT_CAP);
        match &an.verdict {
            Verdict::Consistent => {
                write!(t, "\nfeasible points: {}", an.feasible.len())?;
                for point in &an.feasible {
                    let items: Vec<String> = point.iter().map(|(k, v)| format!("{k} = {v}")).collect();
                    write!(t, "\n  {}", items.join(", "))?;
                }
            }
            Verdict::Contradiction(why) => {
                write!(t, "\nno feasible points: {why}")?;
                status = Status::Fail;
            }
            Verdict::Inconclusive(why) => write!(t, "\ninconclusive: {why}")?,
        }
        let forced: Vec<Value> = an
            .forced
            .iter()
            .filter(|((i, jj, h), _)| !pt.get(*i, *jj, *h).is_constant())
            .map(|(cell, v)| json!({"cell": cell, "value": v}))
            .collect();
        if !forced.is_empty() && !an.feasible.is_empty() {
            write!(t, "\nforced entries:")?;
            for f in &forced {
                let c = &f["cell"];
                write!(
                    t,
                    "\n  [{} {} {}] = {}",
                    c[0],
                    c[1],
                    c[2],
                    f["value"].as_str().unwrap_or_default()
                )?;
            }
        }
        j["analysis"] = json!({
            "verdict": an.verdict,
            "feasible": an.feasible,
            "forced": forced,
        });
    }
    Ok(Output {
        text: t,
        json: j,
        status,
    })
}

fn prove(case: &str) -> Result<Output> {
    let cert = prove_builtin(Case::parse(case)?)?;
    let status = if cert.is_nonexistent() {
        Status::Fail
    } else {
        Status::Ok
    };
    Ok(Output {
        text: cert.to_string(),
        json: serde_json::to_value(&cert)?,
        status,
    })
}

fn parse_range(text: &str) -> Result<(u32, u32)> {
    let parsed = match text.split_once("..") {
        Some((a, b)) => (a.trim().parse(), b.trim_start_matches('=').trim().parse()),
        None => (text.trim().parse(), text.trim().parse()),
    };
    match parsed {
        (Ok(a), Ok(b)) if a >= 1 && a <= b => Ok((a, b)),
        _ => bail!("bad range {text:?}; expected a..b with 1 <= a <= b"),
    }
}

fn scan(family: &str, r: &str, t: &str) -> Result<Output> {
    if family != "fameven" {
        bail!("no built-in argument for family {family:?}; available: fameven");
    }
    let (r0, r1) = parse_range(r)?;
    let (t0, t1) = parse_range(t)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut tally: BTreeMap<&str, usize> = BTreeMap::new();
    for r in r0..=r1 {
        for t in t0..=t1 {
            let case = Case::Family { r, t };
            let (verdict, array, reason) = match family_array(r, t) {
                Err(e) => ("invalid", None, e.to_string()),
                Ok(ia) => {
                    let cert = prove_builtin(case)?;
                    let v = if cert.is_nonexistent() {
                        "nonexistent"
                    } else {
                        "inconclusive"
                    };
                    (v, Some(ia), cert.reason)
                }
            };
            *tally.entry(verdict).or_default() += 1;
            let shown = array.as_ref().map(|a| format!(" {a}")).unwrap_or_default();
            writeln!(text, "{case}{shown}: {verdict}: {reason}")?;
            rows.push(json!({"r": r, "t": t, "array": array, "verdict": verdict, "reason": reason}));
        }
    }
    let summary: Vec<String> = tally.iter().map(|(k, v)| format!("{v} {k}")).collect();
    write!(text, "{}", summary.join(", "))?;
    let status = if tally.contains_key("nonexistent") || tally.contains_key("invalid") {
        Status::Fail
    } else {
        Status::Ok
    };
    Ok(Output {
        text,
        json: json!({"family": family, "instances": rows, "summary": tally}),
        status,
    })
}

fn partition_cmd(array: &str, distance: Option<usize>) -> Result<Output> {
    let ia: IntersectionArray = parse_input(array)?;
    let dot = partition::to_dot(&ia, distance)?;
    let cells: Vec<Value> = partition::cells(&ia, distance)?
        .iter()
        .map(|c| json!({"index": [c.index.0, c.index.1], "size": c.size}))
        .collect();
    let j = json!({"array": ia, "distance": distance, "cells": cells, "dot": dot});
    Ok(Output::ok(dot.trim_end().to_string(), j))
}

fn run(cli: Cli) -> Result<Output> {
    match cli.command {
        Command::Params { input } => params(&input),
        Command::Check {
            input,
            skip,
            no_recurse,
        } => check(&input, skip, no_recurse),
        Command::Triples {
            array,
            uv,
            uw,
            vw,
            pins,
            enumerate,
        } => triples(&array, (uv, uw, vw), &pins, enumerate),
        Command::Prove { case } => prove(&case),
        Command::Scan { family, r, t } => scan(&family, &r, &t),
        Command::Partition { array, distance } => partition_cmd(&array, distance),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            let body = match format {
                Format::Text => out.text,
                Format::Json => serde_json::to_string_pretty(&out.json).expect("serializable"),
            };
            // a closed pipe is not an error for the caller
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            match out.status {
                Status::Ok => ExitCode::SUCCESS,
                Status::Fail => ExitCode::from(2),
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
