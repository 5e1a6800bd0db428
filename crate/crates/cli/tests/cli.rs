use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn qmodel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmodel")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const CORRECTION: &str = "s(v,w)=2*[a,[s(b,x),[s(b,y),s(b,z)]]] - 2*[x,[s(a,y),[s(b,y),s(c,y)]]] \
                          - 2*[s(a,x),[y,[s(b,y),s(c,y)]]]";

#[test]
fn check_accepts_cp2() {
    let o = qmodel(&["check", &data("cp2.dgl")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("presentation CP2: valid"));
    assert!(out.contains("cone length: 2"));
    assert!(out.contains("y (degree 3, line 5)"));
}

#[test]
fn check_reports_nonzero_d_squared() {
    let o = qmodel(&["check", &data("bad.dgl")]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL: d^2 = [a,a]"), "{out}");
    assert!(out.contains("c (degree 4, line 7)"), "{out}");
}

#[test]
fn syntax_and_name_errors_are_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let undeclared = dir.path().join("u.dgl");
    std::fs::write(&undeclared, "dgl X\ngen x 1\ngen y 3\ndiff y = [x,z]\n").unwrap();
    let o = qmodel(&["check", undeclared.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("u.dgl:4:13: unknown generator `z`"), "{}", stderr(&o));

    let broken = dir.path().join("b.dgl");
    std::fs::write(&broken, "dgl X\ngen x\n").unwrap();
    let o = qmodel(&["check", broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("expected degree"), "{}", stderr(&o));

    let o = qmodel(&["check", "/nonexistent/file.dgl"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn product_of_spheres() {
    let o = qmodel(&["product", &data("sphere4.dgl"), &data("sphere6.dgl")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("D(s(v,w)) = [v,w]    [degree 9, both-cycles]"));
}

#[test]
fn product_of_sphere_and_cp2() {
    let o = qmodel(&["product", &data("sphere4.dgl"), &data("cp2.dgl")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("D(s(v,y)) = [v,y] + 2*[x,s(v,x)]"));
}

#[test]
fn three_cone_workflow() {
    let dir = tempfile::tempdir().unwrap();
    let model = dir.path().join("cone3_product.dgl");
    let model = model.to_str().unwrap();
    let (y, y2) = (data("three_cone.dgl"), data("three_cone_copy.dgl"));

    let o = qmodel(&["product", &y, &y2]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--force"));

    let o = qmodel(&["product", &y, &y2, "--force", "-o", model]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert_eq!(out.matches("FAIL D^2").count(), 1, "{out}");
    assert!(out.contains("FAIL D^2(s(v,w))"));

    let o = qmodel(&["residual", model]);
    assert_eq!(o.status.code(), Some(1));

    let o = qmodel(&["residual", model, "--override", CORRECTION]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let o = qmodel(&["residual", model, "--override", "s(v,w)=[a,b]"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("expected 26"));
}

#[test]
fn replace_substitutes_the_differential() {
    let dir = tempfile::tempdir().unwrap();
    let model = dir.path().join("m.dgl");
    let model = model.to_str().unwrap();
    let o = qmodel(&["product", &data("sphere4.dgl"), &data("cp2.dgl"), "-o", model]);
    assert_eq!(o.status.code(), Some(0));
    let o = qmodel(&["residual", model, "--replace", "s(v,y)=[v,y]"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL D^2(s(v,y))"));
    let o = qmodel(&["residual", model, "--replace", "s(v,y)=[v,y] + 2*[x,s(v,x)]"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn diagonal_verifies_and_writes_a_model() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.dgl");
    let o = qmodel(&["diagonal", &data("diag.dgl"), "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("chain map: pass"));
    let o = qmodel(&["check", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("presentation D×D': valid"));
}

#[test]
fn star_and_normalize() {
    let o = qmodel(&["star", &data("two_cone.dgl"), &data("three_cone_copy.dgl"), "-A", "a*(b*c) - (a*b)*c - b*(a*c)", "-T", "[y,z]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().last(), Some("0"));
    let o = qmodel(&["normalize", &data("two_cone.dgl"), "-e", "[b,a] - 1/2*[a,b]"]);
    assert_eq!(stdout(&o).lines().last(), Some("-3/2*[a,b]"));
    let o = qmodel(&["star", &data("two_cone.dgl"), &data("three_cone_copy.dgl"), "-A", "a*y", "-T", "[y,z]"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn every_reproduce_target_exits_zero() {
    for target in ["ex2.4ii", "ex3.10", "ex3.11", "ex3.14", "diag4.1", "cone3"] {
        let o = qmodel(&["reproduce", target]);
        assert_eq!(o.status.code(), Some(0), "{target}: {}", stdout(&o));
    }
    let o = qmodel(&["reproduce", "cone3"]);
    assert!(stdout(&o).contains("printed -[a,[b,s(c,x)]] : sign-flip"));
    assert_eq!(qmodel(&["reproduce", "nope"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let a = qmodel(&["--format", "json", "reproduce", "ex3.11"]);
    let b = qmodel(&["--format", "json", "reproduce", "ex3.11"]);
    assert_eq!(a.stdout, b.stdout);
    let a = qmodel(&["diagonal", &data("diag.dgl")]);
    let b = qmodel(&["diagonal", &data("diag.dgl")]);
    assert_eq!(a.stdout, b.stdout);
}

fn leaves(v: &Value, key: &str, out: &mut Vec<String>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                leaves(x, k, out);
            }
        }
        Value::Array(xs) => xs.iter().for_each(|x| leaves(x, key, out)),
        Value::String(s) if key != "report" => out.push(s.clone()),
        Value::Number(n) => out.push(n.to_string()),
        _ => {}
    }
}

#[test]
fn text_and_json_carry_the_same_content() {
    let runs: Vec<Vec<String>> = vec![
        vec!["check".into(), data("bad.dgl")],
        vec!["product".into(), data("sphere4.dgl"), data("cp2.dgl")],
        vec!["diagonal".into(), data("diag.dgl")],
        vec!["normalize".into(), data("cp2.dgl"), "-e".into(), "[x,[x,x]]".into()],
        vec!["reproduce".into(), "diag4.1".into()],
        vec!["reproduce".into(), "cone3".into()],
    ];
    for args in runs {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let text = stdout(&qmodel(&args));
        let mut json_args = vec!["--format", "json"];
        json_args.extend(&args);
        let json: Value = serde_json::from_str(&stdout(&qmodel(&json_args))).unwrap();
        let mut values = Vec::new();
        leaves(&json, "", &mut values);
        for v in values {
            assert!(text.contains(&v), "{args:?}: `{v}` missing from text output");
        }
    }
}
