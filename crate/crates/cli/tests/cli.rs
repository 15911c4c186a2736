use std::process::Command;

use serde_json::Value;

fn drg(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_drg")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let (code, out, err) = drg(&all);
    (
        code,
        serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out} {err}")),
    )
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/../core/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn params_text() {
    let (code, out, _) = drg(&["params", "{5,4,2;1,1,4}"]);
    assert_eq!(code, 0);
    assert!(out.contains("eigenvalues: 5, 2, -1, -3\n"));
    assert!(out.contains("multiplicities: (1, 16, 10, 9)\n"));
    assert!(out.contains(&golden("sylvester_ptable.txt")));
    assert!(out.contains(golden("sylvester_krein.txt").trim_end()));
}

#[test]
fn params_json() {
    let (code, v) = json(&["params", "{3,2;1,1}"]);
    assert_eq!(code, 0);
    assert_eq!(v["kTable"], serde_json::json!(["1", "3", "6"]));
    assert_eq!(v["kreinParameters"][0][1][1], v["multiplicities"][1]);
    assert_eq!(v["multiplicities"], serde_json::json!(["1", "5", "4"]));
    let (_, k4) = json(&["params", "{3;1}"]);
    assert_eq!(k4["kTable"], serde_json::json!(["1", "3"]));
    assert_eq!(k4["order"], "4");
}

#[test]
fn params_rejects_invalid_arrays() {
    let (code, _, err) = drg(&["params", "{3,2;1,2}"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error: "), "{err}");
    let (code, _, _) = drg(&["params", "{3,2;1"]);
    assert_eq!(code, 1);
}

#[test]
fn check_exit_codes() {
    let (code, out, _) = drg(&["check", "srg(266,220,210)"]);
    assert_eq!(code, 2);
    assert!(
        out.contains("InfeasibleError: complement: nonexistence by GavrilyukMakhnev05"),
        "{out}"
    );
    assert_eq!(drg(&["check", "{5,4,2;1,1,4}"]).0, 0);
    let (code, out, _) = drg(&["check", "{135,128,16;1,16,120}"]);
    assert_eq!(code, 2);
    assert!(out.contains("sporadic") && out.contains("cert-g1360"));
    assert_eq!(drg(&["check", "{3,2;1,1}", "--skip", "nope"]).0, 1);
}

#[test]
fn check_skip_and_json() {
    let (code, v) = json(&[
        "check",
        "{6,5,3,1;1,3,5,6}",
        "--skip",
        "multiplicities,krein,hadamard",
        "--no-recurse",
    ]);
    let outcomes = v["outcomes"].as_array().unwrap();
    let status = |name: &str| outcomes.iter().find(|o| o["check"] == name).unwrap()["status"].clone();
    assert_eq!(status("hadamard"), "skipped");
    assert_eq!(status("krein"), "skipped");
    assert_eq!(
        code,
        if outcomes.iter().any(|o| o["status"] == "fail") {
            2
        } else {
            0
        }
    );
    let report: drg::checks::CheckReport = serde_json::from_value(v).unwrap();
    assert!(report.derived.is_empty());
}

#[test]
fn triples_match_published_tensors() {
    let (code, out, _) = drg(&["triples", "{5,4,2;1,1,4}", "1", "1", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("sylvester_triples_1_1_2.txt"));
    let (_, out, _) = drg(&["triples", "{5,4,2;1,1,4}", "1", "3", "3", "--pin", "3,3,3=a"]);
    assert!(out.starts_with(&golden("sylvester_triples_1_3_3_a.txt")), "{out}");
    assert!(out.contains("-1/2*a + 4"));
}

#[test]
fn triples_enumeration() {
    let (code, out, _) = drg(&["triples", "{234,165,12;1,30,198}", "3", "3", "3", "--enumerate"]);
    assert_eq!(code, 2);
    assert!(out.contains("no feasible points"), "{out}");
    let (code, v) = json(&["triples", "{5,4,2;1,1,4}", "1", "2", "3", "--enumerate"]);
    assert_eq!(code, 0);
    assert_eq!(v["analysis"]["feasible"].as_array().unwrap().len(), 1);
    assert_eq!(v["analysis"]["verdict"]["status"], "consistent");
}

#[test]
fn triples_errors() {
    assert_eq!(drg(&["triples", "{5,4,2;1,1,4}", "1", "1", "1"]).0, 1);
    assert_eq!(drg(&["triples", "{5,4,2;1,1,4}", "1", "1", "2", "--pin", "1,1"]).0, 1);
}

#[test]
fn prove_replays() {
    let (code, out, _) = drg(&["prove", "g1360"]);
    assert_eq!(code, 2);
    assert!(out.contains("(71 - 27*alpha)/8"));
    let (code, out, _) = drg(&["prove", "bip5"]);
    assert_eq!(code, 2);
    assert!(out.contains("265") && out.contains("243"));
    let (_, v) = json(&["prove", "g1600"]);
    let cert: drg::proofs::Certificate = serde_json::from_value(v).unwrap();
    assert!(cert.is_nonexistent() && cert.verify());
    assert_eq!(drg(&["prove", "nope"]).0, 1);
}

#[test]
fn scan_family() {
    let (code, v) = json(&["scan", "--family", "fameven", "--r", "1..4", "--t", "1..4"]);
    assert_eq!(code, 2);
    let rows = v["instances"].as_array().unwrap();
    assert_eq!(rows.len(), 16);
    let invalid: Vec<(u64, u64)> = rows
        .iter()
        .filter(|r| r["verdict"] == "invalid")
        .map(|r| (r["r"].as_u64().unwrap(), r["t"].as_u64().unwrap()))
        .collect();
    assert_eq!(invalid, [(4, 1), (4, 3)]);
    assert_eq!(v["summary"]["nonexistent"], 14);
    assert_eq!(drg(&["scan", "--family", "other", "--r", "1", "--t", "1"]).0, 1);
    assert_eq!(drg(&["scan", "--family", "fameven", "--r", "3..1", "--t", "1"]).0, 1);
}

#[test]
fn partition_diagrams() {
    let (code, out, _) = drg(&["partition", "{55,54,50,35,10;1,5,20,45,55}", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("graph partition {"));
    for size in ["\"5\"", "\"243\"", "\"1260\""] {
        assert!(out.contains(&format!("label={size}")), "{size}");
    }
    let (_, v) = json(&["partition", "{5,4,2;1,1,4}"]);
    let sizes: Vec<&str> = v["cells"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["size"].as_str().unwrap())
        .collect();
    assert_eq!(sizes, ["1", "5", "20", "10"]);
    let (_, v) = json(&["partition", "{3,2;1,1}", "0"]);
    let cells: Vec<(u64, u64, &str)> = v["cells"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            (
                c["index"][0].as_u64().unwrap(),
                c["index"][1].as_u64().unwrap(),
                c["size"].as_str().unwrap(),
            )
        })
        .collect();
    assert_eq!(cells, [(0, 0, "1"), (1, 1, "3"), (2, 2, "6")]);
    assert_eq!(drg(&["partition", "{3,2;1,1}", "3"]).0, 1);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(drg(&["bogus"]).0, 1);
    assert_eq!(drg(&[]).0, 1);
    assert_eq!(drg(&["--help"]).0, 0);
}
