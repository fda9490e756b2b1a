use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::{json, Value};

struct Run {
    code: i32,
    stdout: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("not JSON ({e}): {}", self.stdout))
    }
}

fn chowq(args: &[&str], stdin: Option<&str>) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_chowq"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut pipe = child.stdin.take().unwrap();
    if let Some(text) = stdin {
        pipe.write_all(text.as_bytes()).unwrap();
    }
    drop(pipe);
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().expect("exited"),
        stdout: String::from_utf8(out.stdout).unwrap(),
    }
}

fn ok(args: &[&str], stdin: Option<&str>) -> Value {
    let r = chowq(args, stdin);
    assert_eq!(r.code, 0, "{args:?}: {}", r.stdout);
    r.json()
}

fn fixture(name: &str, v: &Value) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, v.to_string()).unwrap();
    path
}

#[test]
fn enumerate_four_trees() {
    let v = ok(&["trees", "enumerate", "4"], None);
    assert_eq!(v.as_array().unwrap().len(), 4);
}

#[test]
fn lie_class_2_4() {
    let v = ok(&["schubert", "lie-class", "2", "4"], None);
    assert_eq!(v["coeffs"], json!({"2,1": "2"}));
}

#[test]
fn prism_count() {
    assert_eq!(ok(&["secondary", "prism", "2", "--count"], None), json!({"triangulations": 6}));
}

#[test]
fn output_is_deterministic() {
    let a = chowq(&["trees", "enumerate", "5"], None).stdout;
    let b = chowq(&["trees", "enumerate", "5"], None).stdout;
    assert_eq!(a, b);
    let c = chowq(&["schubert", "veronese-class", "3", "7"], None).stdout;
    assert_eq!(c, chowq(&["schubert", "veronese-class", "3", "7"], None).stdout);
}

#[test]
fn exit_codes() {
    let domain = chowq(&["schubert", "lie-class", "4", "4"], None);
    assert_eq!(domain.code, 2);
    assert_eq!(domain.json()["error"], "BadParams");
    assert_eq!(domain.json()["operation"], "lie_complex_class");

    let bad_json = chowq(&["linalg", "rank", "-"], Some("[[1, 2"));
    assert_eq!(bad_json.code, 1);
    assert_eq!(bad_json.json()["error"], "Parse");

    assert_eq!(chowq(&["linalg", "rank", "/no/such/file"], None).code, 1);
    assert_eq!(chowq(&["trees", "enumerate", "four"], None).code, 1);
    assert_eq!(chowq(&["no-such-command"], None).code, 1);
    assert_eq!(chowq(&["--help"], None).code, 0);
}

#[test]
fn linear_algebra() {
    let m = r#"[["1", "2", "3"], ["2", "4", "6"], ["0", "1", "1/2"]]"#;
    assert_eq!(ok(&["linalg", "rank", "-"], Some(m)), json!({"rank": 2}));
    let v = ok(&["linalg", "minor", "-", "--rows", "1,3", "--cols", "1,2"], Some(m));
    assert_eq!(v, json!({"minor": "1"}));
    let k = ok(&["linalg", "kernel", "-"], Some(m));
    assert_eq!(k["rows"].as_array().unwrap().len(), 1);
    let p = json!({"vars": 2, "rows": [["x1", "x2"], ["x2", "x1"]]}).to_string();
    let det = ok(&["linalg", "poly-det", "-"], Some(&p));
    assert!(det["det"].as_str().unwrap().contains("x1^2"));
}

#[test]
fn grassmann_and_hypersimplex() {
    let s = json!({"k": 2, "n": 4, "rows": [["1", "0", "1", "1"], ["0", "1", "1", "2"]]}).to_string();
    let p = ok(&["grassmann", "plucker", "-"], Some(&s));
    assert_eq!(p["coords"]["1,2"], "1");
    assert_eq!(p["coords"]["3,4"], "1");
    assert_eq!(ok(&["grassmann", "is-generic", "-"], Some(&s)), json!({"generic": true}));
    let poly = ok(&["hypersimplex", "matroid-polytope", "-"], Some(&s));
    assert_eq!(poly["vertices"].as_array().unwrap().len(), 6);
    assert_eq!(ok(&["hypersimplex", "volume", "-"], Some(&poly.to_string())), json!({"volume": 4}));
    let facet = ok(&["hypersimplex", "facet", "2", "4", "1", "--sign", "plus"], None);
    assert_eq!(facet["target"], json!({"k": 1, "n": 3}));
    assert_eq!(ok(&["grassmann", "project", "-", "4"], Some(&s))["n"], 3);
}

#[test]
fn tree_roundtrip_through_the_cli() {
    let trees = ok(&["trees", "enumerate", "5"], None);
    for t in trees.as_array().unwrap() {
        let d = ok(&["trees", "to-decomposition", "-"], Some(&t.to_string()));
        let back = ok(&["trees", "from-decomposition", "-"], Some(&d.to_string()));
        assert_eq!(&back, t);
        assert_eq!(ok(&["hypersimplex", "validate-decomposition", "-"], Some(&d.to_string())), json!({"decomposition": true}));
    }
    let caterpillar = &trees[0];
    assert_eq!(ok(&["trees", "stable", "-"], Some(&caterpillar.to_string())), json!({"stable": true}));
    let smaller = ok(&["trees", "forget", "5", "-"], Some(&caterpillar.to_string()));
    assert_eq!(smaller["n"], 4);
}

#[test]
fn secondary_from_files() {
    let square = fixture("square.json", &json!({"points": [[0, 0], [1, 0], [0, 1], [1, 1]]}));
    let diag = fixture("diagonal.json", &json!({"simplices": [[1, 2, 3], [2, 3, 4]]}));
    let phi = ok(&["secondary", "char-function", square.to_str().unwrap(), diag.to_str().unwrap()], None);
    assert_eq!(phi, json!({"values": [1, 2, 2, 1]}));
    let all = ok(&["secondary", "triangulations", square.to_str().unwrap()], None);
    assert_eq!(all["triangulations"].as_array().unwrap().len(), 2);
    let perm = ok(&["secondary", "prism-perm", "2,1,3"], None);
    assert_eq!(perm["simplices"].as_array().unwrap().len(), 3);
}

#[test]
fn configurations_and_veronese() {
    let conic = json!({"columns": [[1, 0, 0], [1, 1, 1], [1, 2, 4], [1, 3, 9], [1, -1, 1], [1, 5, 25]]}).to_string();
    assert_eq!(ok(&["config", "conic-test", "-"], Some(&conic)), json!({"on_conic": true}));
    let nf = ok(&["config", "normal-form6", "-"], Some(&conic));
    let args: Vec<String> = ["a", "b", "c", "d"].iter().map(|k| nf[*k].as_str().unwrap().to_string()).collect();
    let mut psi = vec!["config", "psi"];
    psi.extend(args.iter().map(String::as_str));
    assert_eq!(ok(&psi, None), json!({"psi": "0"}));
    let mut rank = vec!["veronese", "tangent-rank"];
    rank.extend(args.iter().map(String::as_str));
    assert!(ok(&rank, None)["rank"].as_u64().unwrap() <= 3);

    let x = json!({"columns": [[1, 0], [0, 1], [1, 1], [1, 2], [1, 3]]}).to_string();
    let y = ok(&["config", "associate", "-"], Some(&x));
    assert_eq!(y["k"], 3);

    let arr = json!({"forms": [["1", "0"], ["0", "1"], ["1", "1"], ["1", "2"], ["1", "3"]]}).to_string();
    let g = ok(&["veronese", "gauss", "-", "--at", "1,1"], Some(&arr));
    assert_eq!((g["k"].clone(), g["n"].clone()), (json!(2), json!(5)));
}

#[test]
fn schubert_values() {
    assert_eq!(ok(&["schubert", "conjugate", "3,1"], None), json!({"diagram": "2,1,1"}));
    assert_eq!(ok(&["schubert", "lr", "1", "1", "2"], None), json!({"coefficient": 1}));
    assert_eq!(ok(&["schubert", "kostka", "1,1,1", "2,1"], None), json!({"kostka": 2}));
    assert_eq!(ok(&["schubert", "schur-dim", "1,1", "4"], None), json!({"dim": 6}));
    let klyachko = ok(&["schubert", "klyachko-class", "3", "7"], None);
    assert_eq!(klyachko, ok(&["schubert", "veronese-class", "3", "7"], None));
}

#[test]
fn sweep_and_crosscheck() {
    let arr = json!({"forms": [["1", "0"], ["0", "1"], ["1", "1"], ["1", "2"], ["1", "3"]]}).to_string();
    let ones = ok(&["veronese", "sweep-test", "-", "--t", "1,1,1,1,1"], Some(&arr));
    assert_eq!(ones, json!({"on_sweep": true}));
    let m = ok(&["veronese", "sweep-matrix", "-", "--t", "-1,0,0,0,0"], Some(&arr));
    assert_eq!(m["rows"].as_array().unwrap().len(), 2);
    let line = json!({"rows": [[1, 0, 1, 1], [0, 1, 1, 2]]}).to_string();
    let scaled = json!({"rows": [[2, 0, 1, 3], [0, 2, 1, 6]]}).to_string();
    let r = ok(&["veronese", "tetra", "-"], Some(&line));
    assert_eq!(r, ok(&["veronese", "tetra", "-"], Some(&scaled)));
    assert!(r["ratio"].is_string());
    let cc = ok(&["schubert", "crosscheck", "--kmax", "3", "--nmax", "7"], None);
    assert_eq!(cc["all_agree"], true);
    assert_eq!(cc["rows"].as_array().unwrap().len(), 4 + 3);
}

#[test]
fn output_flag_writes_a_file() {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("lie.json");
    let r = chowq(&["--output", path.to_str().unwrap(), "schubert", "lie-class", "2", "5"], None);
    assert_eq!(r.code, 0);
    assert!(r.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["coeffs"], json!({"3,1": "3", "2,2": "1"}));
}

#[test]
fn selftest_passes() {
    let r = chowq(&["selftest", "--jobs", "2"], None);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(r.stdout.lines().filter(|l| l.contains("PASS")).count(), 10);
}
