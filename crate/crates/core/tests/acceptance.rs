//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines are always printed. The
//! process fails if any criterion fails other than the known family sweep
//! blocker, which is reported but expected.

use std::collections::VecDeque;
use std::time::Instant;

use drg::checks::{check_feasible, CheckOptions};
use drg::proofs::{family_array, prove_builtin, Case, Certificate, Step};
use drg::triples::{Solution, TripleScenario};
use drg::{parse_input, Array3D, IntersectionArray};
use drg_exact::{AlgebraicNumber, NFElem, Poly, Rat};

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn arr(s: &str) -> IntersectionArray {
    parse_input(s).unwrap()
}

fn rats(v: &[&str]) -> Vec<Rat> {
    v.iter().map(|s| s.parse().unwrap()).collect()
}

fn rat(s: &str) -> Rat {
    s.parse().unwrap()
}

fn rows(m: &[Vec<NFElem>]) -> Option<Vec<Vec<Rat>>> {
    m.iter().map(|r| r.iter().map(NFElem::to_rat).collect()).collect()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn unique(sol: Solution) -> Result<drg::triples::ParametricTriples, String> {
    match sol {
        Solution::Parametric(pt) => Ok(pt),
        Solution::Inconsistent => Err("inconsistent system".into()),
    }
}

fn sylvester() -> Check {
    let ia = arr("{5,4,2;1,1,4}");
    ensure!(ia.order() == &Rat::from(36), "order {}", ia.order());
    let s = ia.spectrum().map_err(|e| e.to_string())?;
    let ev: Vec<AlgebraicNumber> = [5, 2, -1, -3].into_iter().map(AlgebraicNumber::from).collect();
    ensure!(s.eigenvalues() == ev.as_slice(), "eigenvalues");
    ensure!(
        s.multiplicities() == rats(&["1", "16", "10", "9"]).as_slice(),
        "multiplicities"
    );
    let cos = rows(s.cosine_rows()).ok_or("irrational cosines")?;
    ensure!(
        cos[1] == rats(&["1", "2/5", "-1/20", "-1/5"]),
        "cosine row {:?}",
        cos[1]
    );
    let p = rows(&s.p_matrix()).ok_or("irrational P")?;
    ensure!(p[1] == rats(&["1", "2", "-1", "-2"]), "P row {:?}", p[1]);
    let q = rows(&s.q_matrix()).ok_or("irrational Q")?;
    ensure!(q[1] == rats(&["1", "32/5", "-2", "-27/5"]), "Q row {:?}", q[1]);
    let k = ia
        .krein()
        .map_err(|e| e.to_string())?
        .to_rational()
        .ok_or("irrational Krein")?;
    ensure!(k.get(1, 1, 1) == &rat("44/5"), "q^1_11 = {}", k.get(1, 1, 1));
    ensure!(k.get(2, 1, 1) == &rat("176/25"), "q^2_11 = {}", k.get(2, 1, 1));
    ensure!(k.get(3, 3, 3).is_zero(), "q^3_33 = {}", k.get(3, 3, 3));
    ensure!(
        format!("{}\n", ia.p_tensor()) == golden("sylvester_ptable.txt"),
        "p-tensor differs"
    );
    let pt = unique(
        TripleScenario::new(&ia, 1, 1, 2)
            .and_then(|s| s.solve())
            .map_err(|e| e.to_string())?,
    )?;
    ensure!(
        format!("{pt}\n") == golden("sylvester_triples_1_1_2.txt"),
        "(1,1,2) triples differ"
    );
    Ok(())
}

fn recorded_alpha(cert: &Certificate, cell: (usize, usize, usize)) -> Result<(Rat, Rat), String> {
    let f = cert.recorded(0, cell).ok_or("entry not recorded")?;
    Ok((f.constant.clone(), f.terms.get("alpha").cloned().unwrap_or_default()))
}

fn enumerate_step(cert: &Certificate) -> Option<(&(Rat, Rat), &Vec<Rat>)> {
    cert.steps.iter().find_map(|s| match s {
        Step::Enumerate { range, feasible, .. } => Some((range, feasible)),
        _ => None,
    })
}

fn g1360() -> Check {
    let cert = prove_builtin(Case::G1360).map_err(|e| e.to_string())?;
    let form = recorded_alpha(&cert, (3, 3, 3))?;
    ensure!(form == (rat("71/8"), rat("-27/8")), "[3 3 3] = {form:?}");
    let (range, feasible) = enumerate_step(&cert).ok_or("no enumeration")?;
    ensure!(
        *range == (Rat::zero(), Rat::from(2)) && feasible.is_empty(),
        "alpha range {range:?}, feasible {feasible:?}"
    );
    ensure!(cert.is_nonexistent() && cert.verify(), "verdict {:?}", cert.verdict);
    Ok(())
}

fn g1600() -> Check {
    let cert = prove_builtin(Case::G1600).map_err(|e| e.to_string())?;
    let form = recorded_alpha(&cert, (3, 3, 2))?;
    ensure!(form == (Rat::from(-17), Rat::from(-4)), "[3 3 2] = {form:?}");
    ensure!(cert.is_nonexistent() && cert.verify(), "verdict {:?}", cert.verdict);
    Ok(())
}

fn bip5() -> Check {
    let cert = prove_builtin(Case::Bip5).map_err(|e| e.to_string())?;
    let form = recorded_alpha(&cert, (5, 5, 5))?;
    ensure!(form == (Rat::from(20), Rat::from(-12)), "[5 5 5] = {form:?}");
    let bound = cert.steps.iter().find_map(|s| match s {
        Step::CountingBound {
            cap,
            edges,
            capacity,
            exceeded,
            ..
        } => Some((cap, edges, capacity, *exceeded)),
        _ => None,
    });
    let (cap, edges, capacity, exceeded) = bound.ok_or("no counting step")?;
    ensure!(cap.is_one(), "cap {cap}");
    ensure!(
        *edges == Rat::from(265) && *capacity == Rat::from(243) && exceeded,
        "{edges} vs {capacity}"
    );
    ensure!(cert.is_nonexistent() && cert.verify(), "verdict {:?}", cert.verdict);
    Ok(())
}

/// Returns the invalid instances separately so the blocker can be recognised.
fn family_sweep() -> Result<Vec<String>, String> {
    let start = Instant::now();
    let mut invalid = Vec::new();
    for r in 1..=4u32 {
        for t in 1..=4u32 {
            if let Err(e) = family_array(r, t) {
                invalid.push(format!("({r},{t}): {e}"));
                continue;
            }
            let cert = prove_builtin(Case::Family { r, t }).map_err(|e| e.to_string())?;
            ensure!(cert.is_nonexistent(), "({r},{t}) {}", cert.reason);
            let (_, feasible) = enumerate_step(&cert).ok_or("no enumeration")?;
            ensure!(
                *feasible == [Rat::from(4 * i64::from(r) - 1)],
                "({r},{t}) alpha {feasible:?}"
            );
            let forced = cert.steps.iter().find_map(|s| match s {
                Step::Enumerate { forced, .. } => Some(forced),
                _ => None,
            });
            let forced = forced.ok_or("no forced values")?;
            ensure!(
                forced.len() == 6 && forced.iter().all(|c| c.value.is_zero()),
                "({r},{t}) forced zeros"
            );
            let f = cert.recorded(1, (1, 1, 3)).ok_or("[1 1 3] not recorded")?;
            let want = Rat::from(2 * i64::from(t)) - Rat::new(1, 2);
            ensure!(f.terms.is_empty() && f.constant == want, "({r},{t}) [1 1 3] = {f}");
        }
    }
    ensure!(start.elapsed().as_secs_f64() < 10.0, "took {:?}", start.elapsed());
    Ok(invalid)
}

fn derived() -> Check {
    let q7 = arr("{7,6,5,4,3,2,1;1,2,3,4,5,6,7}");
    let s = |r: Result<IntersectionArray, _>| r.map(|a| a.to_string()).unwrap_or_default();
    let m = |set: &[usize]| q7.merge_classes(set).map(|a| a.to_string()).unwrap_or_default();
    ensure!(s(q7.antipodal_quotient()) == "{7, 6, 5; 1, 2, 3}", "quotient");
    ensure!(s(q7.bipartite_half()) == "{21, 10, 3; 1, 6, 15}", "half");
    ensure!(m(&[2, 3, 6]) == "{63, 30, 1; 1, 30, 63}", "merge(2,3,6)");
    ensure!(m(&[2, 4, 6]) == "{63; 1}", "merge(2,4,6)");
    ensure!(m(&[1, 7]) == "{8, 7, 6, 5; 1, 2, 3, 8}", "merge(1,7)");
    ensure!(
        s(arr("{3,2;1,1}").complement()) == "{6, 2; 1, 4}",
        "Petersen complement"
    );
    let table = [
        (vec![1, 2], "{28, 15, 6, 1; 1, 6, 15, 28}"),
        (vec![1, 2, 3, 4, 5, 6], "{126, 1; 1, 126}"),
        (vec![1, 3, 5], "{63, 62, 1; 1, 62, 63}"),
        (vec![1, 3, 5, 7], "{64, 63; 1, 64}"),
        (vec![1, 4, 5], "{63, 32, 1; 1, 32, 63}"),
        (vec![1, 5], "{28, 27, 16; 1, 12, 28}"),
        (vec![1, 7], "{8, 7, 6, 5; 1, 2, 3, 8}"),
        (vec![2], "{21, 10, 3; 1, 6, 15}"),
        (vec![2, 3, 6], "{63, 30, 1; 1, 30, 63}"),
        (vec![2, 4, 6], "{63; 1}"),
        (vec![2, 6], "{28, 15; 1, 12}"),
        (vec![3, 7], "{36, 35, 16; 1, 20, 36}"),
        (vec![4], "{35, 16; 1, 20}"),
        (vec![6], "{7, 6, 5; 1, 2, 3}"),
        (vec![7], "{1; 1}"),
    ];
    let got: Vec<(Vec<usize>, String)> = q7
        .distance_graphs()
        .into_iter()
        .map(|(k, v)| (k, v.to_string()))
        .collect();
    let want: Vec<(Vec<usize>, String)> = table.into_iter().map(|(k, v)| (k, v.to_string())).collect();
    ensure!(got == want, "distance graphs differ");
    Ok(())
}

fn battery() -> Check {
    let rep = check_feasible(&arr("srg(266,220,210)"), &CheckOptions::new());
    let f = rep.failures();
    let first = f.first().ok_or("srg(266,220,210) reported feasible")?;
    ensure!(
        first.path == ["complement"] && first.refs == ["GavrilyukMakhnev05"],
        "{}",
        first.headline()
    );
    for a in [
        "{3,2;1,1}",
        "{2,1;1,1}",
        "{4,3,2,1;1,2,3,4}",
        "{7,6,5,4,3,2,1;1,2,3,4,5,6,7}",
        "{5,4,2;1,1,4}",
    ] {
        let rep = check_feasible(&arr(a), &CheckOptions::new());
        ensure!(rep.is_feasible(), "{a} reported infeasible");
    }
    Ok(())
}

fn distances(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    (0..n)
        .map(|s| {
            let mut d = vec![usize::MAX; n];
            d[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in 0..n {
                    if v != u && adjacent(u, v) && d[v] == usize::MAX {
                        d[v] = d[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            d
        })
        .collect()
}

fn oracle_on(ia: &IntersectionArray, dist: &[Vec<usize>]) -> Check {
    let n = dist.len();
    let d = ia.diameter();
    for u in 0..n {
        for v in 0..n {
            for i in 0..=d {
                for j in 0..=d {
                    let c = (0..n).filter(|&w| dist[u][w] == i && dist[v][w] == j).count();
                    ensure!(Rat::from(c as i64) == *ia.p(dist[u][v], i, j), "p mismatch at {u} {v}");
                }
            }
        }
    }
    for uv in 1..=d {
        for uw in 1..=d {
            for vw in 1..=d {
                let Ok(sc) = TripleScenario::new(ia, uv, uw, vw) else {
                    continue;
                };
                let pt = unique(sc.solve().map_err(|e| e.to_string())?)?;
                for u in 0..n {
                    for v in 0..n {
                        for w in 0..n {
                            if (dist[u][v], dist[u][w], dist[v][w]) != (uv, uw, vw) {
                                continue;
                            }
                            let mut t = Array3D::filled(d + 1, Rat::zero());
                            for x in 0..n {
                                let (i, j, h) = (dist[u][x], dist[v][x], dist[w][x]);
                                t.set(i, j, h, t.get(i, j, h) + Rat::one());
                            }
                            ensure!(pt.contains(&t), "triple {u} {v} {w} outside the solution set");
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn oracle() -> Check {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let petersen = distances(10, |u, v| {
        let (x, y) = (pairs[u], pairs[v]);
        x.0 != y.0 && x.0 != y.1 && x.1 != y.0 && x.1 != y.1
    });
    oracle_on(&arr("{3,2;1,1}"), &petersen)?;
    let pentagon = distances(5, |u, v| (u + 1) % 5 == v || (v + 1) % 5 == u);
    oracle_on(&arr("{2,1;1,1}"), &pentagon)
}

fn identities(ia: &IntersectionArray) -> Check {
    let d = ia.diameter();
    let n = ia.order().clone();
    let s = ia.spectrum().map_err(|e| e.to_string())?;
    let m = s.multiplicities();
    ensure!(m.iter().sum::<Rat>() == n, "{ia}: sum of multiplicities");
    let (p, q) = (s.p_matrix(), s.q_matrix());
    for i in 0..=d {
        for j in 0..=d {
            let mx = s.mixed(&[i, j]);
            let alg = mx.product().algebra();
            let mut acc = alg.zero();
            for l in 0..=d {
                acc = alg.add(&acc, &alg.mul(&mx.embed(i, &p[i][l]), &mx.embed(j, &q[l][j])));
            }
            let want = if i == j { n.clone() } else { Rat::zero() };
            ensure!(
                mx.product().value(&acc) == AlgebraicNumber::from_rat(want),
                "{ia}: PQ at {i} {j}"
            );
        }
    }
    let kq = ia
        .krein()
        .map_err(|e| e.to_string())?
        .to_rational()
        .ok_or("irrational Krein")?;
    for h in 0..=d {
        for i in 0..=d {
            for j in 0..=d {
                ensure!(
                    ia.k(h) * ia.p(h, i, j) == ia.k(i) * ia.p(i, h, j),
                    "{ia}: k p at {h} {i} {j}"
                );
                ensure!(
                    &m[h] * kq.get(h, i, j) == &m[i] * kq.get(i, h, j),
                    "{ia}: m q at {h} {i} {j}"
                );
            }
        }
    }
    Ok(())
}

fn properties() -> Check {
    for a in [
        "{3,2;1,1}",
        "{2,1;1,1}",
        "{4,3,2,1;1,2,3,4}",
        "{7,6,5,4,3,2,1;1,2,3,4,5,6,7}",
        "{5,4,2;1,1,4}",
        "{5,2,1;1,2,5}",
        "{6,2;1,4}",
    ] {
        identities(&arr(a))?;
    }
    let cube = arr("{4,3,2,1;1,2,3,4}");
    let q = cube
        .krein()
        .map_err(|e| e.to_string())?
        .to_rational()
        .ok_or("irrational Krein")?;
    ensure!(&q == cube.p_tensor(), "4-cube p != q");
    Ok(())
}

fn number_field() -> Check {
    let ia = arr("{2,1;1,1}");
    let s = ia.spectrum().map_err(|e| e.to_string())?;
    let minpoly = Poly::from_ints(&[-1, 1, 1]);
    for th in &s.eigenvalues()[1..] {
        ensure!(!th.is_rational() && th.minpoly().monic() == minpoly, "eigenvalue {th}");
    }
    ensure!(
        s.multiplicities() == rats(&["1", "2", "2"]).as_slice(),
        "multiplicities {:?}",
        s.multiplicities()
    );
    ensure!(
        ia.krein().map_err(|e| e.to_string())?.to_rational().is_some(),
        "irrational Krein entries"
    );
    Ok(())
}

fn report(n: usize, what: &str, r: &Check) -> bool {
    match r {
        Ok(()) => println!("criterion {n}: PASS - {what}"),
        Err(e) => println!("criterion {n}: FAIL - {what}: {e}"),
    }
    r.is_ok()
}

fn main() {
    let mut unexpected = 0;
    let simple: [(&str, fn() -> Check); 4] = [
        ("Sylvester parameters, exact", sylvester),
        ("{135,128,16;1,16,120} certificate", g1360),
        ("{234,165,12;1,30,198} certificate", g1600),
        ("{55,54,50,35,10;1,5,20,45,55} certificate", bip5),
    ];
    for (i, (what, f)) in simple.iter().enumerate() {
        unexpected += usize::from(!report(i + 1, what, &f()));
    }
    let what = "family sweep over r, t in 1..=4";
    match family_sweep() {
        Ok(invalid) if invalid.is_empty() => {
            report(5, what, &Ok(()));
        }
        Ok(invalid) => {
            let known = invalid.len() == 2 && invalid[0].starts_with("(4,1)") && invalid[1].starts_with("(4,3)");
            let msg = format!(
                "{} of 16 instances are not valid arrays [{}]; the other {} are certified",
                invalid.len(),
                invalid.join("; "),
                16 - invalid.len()
            );
            report(5, what, &Err(msg));
            unexpected += usize::from(!known);
        }
        Err(e) => {
            report(5, what, &Err(e));
            unexpected += 1;
        }
    }
    let rest: [(&str, fn() -> Check); 5] = [
        ("derived graphs of the 7-cube and Petersen graph", derived),
        ("feasibility battery", battery),
        ("brute-force oracle on Petersen and pentagon", oracle),
        ("algebraic identities on fixtures", properties),
        ("pentagon over Q(sqrt 5)", number_field),
    ];
    for (i, (what, f)) in rest.iter().enumerate() {
        unexpected += usize::from(!report(i + 6, what, &f()));
    }
    if unexpected > 0 {
        eprintln!("{unexpected} unexpected failure(s)");
        std::process::exit(1);
    }
}
