use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use nalg::functors::{build_l2, build_sl2, BipartiteSpec};
use nalg::io::{algebra_to_json, spec_to_json};
use nalg::{Rational, RationalAlgebra, Scalar};
use serde_json::Value;
use tempfile::TempDir;

fn nalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nalg"))
        .args(args)
        .env_remove("NALG_THREADS")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "bad json ({e}): {}\n{}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn result<'a>(report: &'a Value, id: &str) -> &'a Value {
    report["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["check_id"] == id)
        .unwrap_or_else(|| panic!("no result {id} in {report}"))
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn save(dir: &TempDir, name: &str, alg: &RationalAlgebra) -> PathBuf {
    write(dir, name, &algebra_to_json(alg))
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Runs a constructing command and stores its algebra output.
fn build_into(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let p = dir.path().join(name);
    let mut full = args.to_vec();
    full.extend(["--out", s(&p)]);
    let out = nalg(&full);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    p
}

fn kernel_dim(file: &Path) -> u64 {
    let out = nalg(&["kernel", s(file)]);
    assert_eq!(code(&out), 0);
    result(&json(&out), "leibniz-n-kernel")["data"]["dim"]
        .as_u64()
        .unwrap()
}

#[test]
fn check_passes_and_reports_digest() {
    let dir = TempDir::new().unwrap();
    let f = save(&dir, "sl2.json", &build_sl2());
    let out = nalg(&["check", s(&f)]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["command"], "check");
    assert_eq!(r["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    assert_eq!(result(&r, "fundamental-identity")["status"], "pass");
    assert_eq!(result(&r, "leibniz-kernel")["data"]["is_lie"], true);
    assert!(r.get("timing").is_none());
}

#[test]
fn corrupted_tensor_fails_with_witness() {
    let dir = TempDir::new().unwrap();
    let mut alg = build_sl2::<Rational>();
    alg.add_to_product(&[0, 1], Rational::from_int(1), 0)
        .unwrap();
    let f = save(&dir, "bad.json", &alg);
    let out = nalg(&["check", s(&f)]);
    assert_eq!(code(&out), 1);
    let r = json(&out);
    let res = result(&r, "fundamental-identity");
    assert_eq!(res["status"], "fail");
    let w = &res["witness"];
    assert!(w["tuples"].is_array(), "{w}");
    assert_ne!(w["lhs"], w["rhs"]);
}

#[test]
fn malformed_input_exits_2() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "junk.json", "{\"name\": 3}");
    assert_eq!(code(&nalg(&["check", s(&f)])), 2);
    assert_eq!(code(&nalg(&["check", "/nonexistent/file.json"])), 2);
    let frac = write(
        &dir,
        "zero.json",
        r#"{"name":"z","arity":2,"dim":1,"labels":["x"],"products":[{"args":[1,1],"value":[{"coef":"1/0","basis":1}]}]}"#,
    );
    assert_eq!(code(&nalg(&["check", s(&frac)])), 2);
}

#[test]
fn kernel_dimensions() {
    let dir = TempDir::new().unwrap();
    let sl2 = save(&dir, "sl2.json", &build_sl2());
    let u3 = build_into(&dir, "u3.json", &["un", s(&sl2), "--n", "3"]);
    assert_eq!(kernel_dim(&u3), 3);
    let v3 = build_into(&dir, "v3.json", &["build", "vn", "--n", "3"]);
    assert_eq!(kernel_dim(&v3), 0);
    let l2 = save(&dir, "l2.json", &build_l2());
    assert_eq!(kernel_dim(&l2), 1);
}

#[test]
fn radical_of_semidirect_and_solvable() {
    let dir = TempDir::new().unwrap();
    let semi = build_into(
        &dir,
        "semi.json",
        &["build", "lie-semidirect", "--weights", "1"],
    );
    let out = nalg(&["radical", s(&semi), "--n", "3"]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(result(&r, "radical")["data"]["dim"], 2);
    for k in [2, 3] {
        assert_eq!(result(&r, &format!("rad_{k}(U3)"))["data"]["dim"], 2);
    }
    let l2 = save(&dir, "l2.json", &build_l2());
    let r = json(&nalg(&["radical", s(&l2)]));
    assert_eq!(result(&r, "radical")["data"]["dim"], 2);
}

#[test]
fn radical_rejects_nary_input() {
    let dir = TempDir::new().unwrap();
    let v3 = build_into(&dir, "v3.json", &["build", "vn", "--n", "3"]);
    assert_eq!(code(&nalg(&["radical", s(&v3)])), 2);
}

#[test]
fn dt_output_round_trips() {
    let dir = TempDir::new().unwrap();
    let v3 = build_into(&dir, "v3.json", &["build", "vn", "--n", "3"]);
    let dt = build_into(&dir, "dt.json", &["dt", s(&v3)]);
    let text = std::fs::read_to_string(&dt).unwrap();
    let alg: RationalAlgebra = nalg::io::algebra_from_json(&text).unwrap();
    assert_eq!(alg.arity(), 2);
    assert_eq!(alg.dim(), 16);
    assert_eq!(algebra_to_json(&alg), text);
    assert_eq!(code(&nalg(&["check", s(&dt)])), 0);
}

#[test]
fn un_needs_binary_input() {
    let dir = TempDir::new().unwrap();
    let v3 = build_into(&dir, "v3.json", &["build", "vn", "--n", "3"]);
    let out = nalg(&["un", s(&v3), "--n", "3"]);
    assert_eq!(code(&out), 2);
    assert!(!out.stderr.is_empty());
}

#[test]
fn build_bipartite_and_ideal_lattice() {
    let dir = TempDir::new().unwrap();
    let spec = write(
        &dir,
        "spec.json",
        &spec_to_json(&BipartiteSpec::sl2_with_modules(&[1, 3])),
    );
    let alg = build_into(&dir, "bip.json", &["build", "bipartite", s(&spec)]);
    assert_eq!(code(&nalg(&["check", s(&alg)])), 0);
    let r = json(&nalg(&["ideals", "--spec", s(&spec)]));
    assert_eq!(result(&r, "semisimple-ideal-lattice")["data"]["count"], 5);
    let r = json(&nalg(&["ideals", s(&alg)]));
    assert!(
        result(&r, "probe-ideals")["data"]["lattice_size"]
            .as_u64()
            .unwrap()
            >= 2
    );
}

#[test]
fn verify_with_filter() {
    let out = nalg(&["verify", "--suite", "paper", "--filter", "kernel"]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    let ids: Vec<&str> = r["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["check_id"].as_str().unwrap())
        .collect();
    assert_eq!(ids, ["T2", "T3"]);
    assert!(r["results"]
        .as_array()
        .unwrap()
        .iter()
        .all(|x| x["status"] == "pass"));
}

#[test]
fn random_runs_are_reproducible() {
    let a = nalg(&["random", "--seed", "7", "--dim", "6", "--ops", "3"]);
    let b = nalg(&["random", "--seed", "7", "--dim", "6", "--ops", "3"]);
    assert_eq!(code(&a), 0, "{}", String::from_utf8_lossy(&a.stdout));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn timing_is_opt_in() {
    let dir = TempDir::new().unwrap();
    let f = save(&dir, "sl2.json", &build_sl2());
    let r = json(&nalg(&["check", s(&f), "--timing"]));
    assert!(r["timing"]["fundamental-identity"].is_number());
}

#[test]
fn thread_count_from_environment() {
    let dir = TempDir::new().unwrap();
    let f = save(&dir, "sl2.json", &build_sl2());
    let run = |v: &str| {
        Command::new(env!("CARGO_BIN_EXE_nalg"))
            .args(["check", s(&f)])
            .env("NALG_THREADS", v)
            .output()
            .unwrap()
    };
    let one = run("1");
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, run("3").stdout);
    assert_eq!(code(&run("zero")), 2);
}

#[test]
fn algebra_format_only_for_constructors() {
    let dir = TempDir::new().unwrap();
    let f = save(&dir, "sl2.json", &build_sl2());
    assert_eq!(code(&nalg(&["check", s(&f), "--format", "alg"])), 2);
    let out = nalg(&["un", s(&f), "--n", "3", "--format", "report"]);
    assert_eq!(code(&out), 0);
    assert_eq!(result(&json(&out), "u_n")["data"]["arity"], 3);
}
