use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_findex");

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &str) -> String {
    let out = run(args, stdin);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args, "").status.code().unwrap()
}

fn gen_to(dir: &Path, name: &str, family: &[&str]) -> PathBuf {
    let path = dir.join(name);
    let mut args = vec!["gen"];
    args.extend_from_slice(family);
    args.extend_from_slice(&["-o", path.to_str().unwrap()]);
    ok(&args, "");
    path
}

#[test]
fn gen_then_index() {
    let wheel = ok(&["gen", "wheel", "6"], "");
    assert_eq!(ok(&["index"], &wheel), "F=378 M1=90 M2=162\n");
    assert_eq!(ok(&["index", "-"], &wheel), "F=378 M1=90 M2=162\n");
}

#[test]
fn tensor_of_paths() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = gen_to(dir.path(), "p3", &["path", "3"]);
    let p3 = p3.to_str().unwrap();
    let g = ok(&["op", "tensor", p3, p3], "");
    assert!(g.starts_with("9 8\n"));
    assert_eq!(ok(&["index"], &g), "F=100 M1=36 M2=32\n");
}

#[test]
fn operations_agree_with_formulas() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = gen_to(dir.path(), "p3", &["path", "3"]);
    let c4 = gen_to(dir.path(), "c4", &["cycle", "4"]);
    let (p3, c4) = (p3.to_str().unwrap(), c4.to_str().unwrap());
    let f_of = |g: &str| {
        let line = ok(&["index"], g);
        line.split_whitespace().next().unwrap()[2..].to_string()
    };
    let cases: [(&[&str], &[&str]); 8] = [
        (&["op", "corona", p3, c4], &["formula", "corona", "--graph", p3, "--graph", c4]),
        (&["op", "strong", c4, p3], &["formula", "strong", "--graph", c4, "--graph", p3]),
        (&["op", "join", p3, c4, p3], &["formula", "join", "--graph", p3, "--graph", c4, "--graph", p3]),
        (&["op", "thorn", c4, "--thorns", "2"], &["formula", "thorn", "--graph", c4, "--thorns", "2"]),
        (
            &["op", "hierarchical", p3, c4, "--subset", "0,2"],
            &["formula", "hierarchical", "--graph", p3, "--graph", c4, "--subset", "0,2"],
        ),
        (
            &["op", "cluster", c4, p3, "--root2", "1"],
            &["formula", "cluster", "--graph", c4, "--graph", p3, "--root2", "1"],
        ),
        (
            &["op", "link", p3, c4, "--root1", "0", "--root2", "3"],
            &["formula", "link", "--graph", p3, "--graph", c4, "--root1", "0", "--root2", "3"],
        ),
        (&["op", "bottleneck", c4], &["formula", "bottleneck", "--graph", c4]),
    ];
    for (op, formula) in cases {
        let g = ok(op, "");
        assert_eq!(f_of(&g), ok(formula, "").trim(), "{op:?}");
    }
}

#[test]
fn formula_from_summaries() {
    assert_eq!(
        ok(&["formula", "corona", "--summary", "3,2,6,10", "--summary", "2,1,2,2"], ""),
        "166\n"
    );
    assert_eq!(ok(&["formula", "suspension", "--summary", "5,4,14,26"], ""), "222\n");
    assert_eq!(
        ok(&["formula", "splice", "--summary", "3,3,12,24", "--summary", "3,3,12,24", "--d1", "2", "--d2", "2"], ""),
        "96\n"
    );
    assert_eq!(
        ok(
            &["formula", "hierarchical", "--summary", "2,1,2,2", "--summary", "2,1,2,2",
              "--u-size", "2", "--s1", "2", "--s2", "2"],
            ""
        ),
        "32\n"
    );
    assert_eq!(ok(&["formula", "family", "grid", "3", "3"], ""), "204\n");
    assert_eq!(ok(&["formula", "family", "hypercube", "4"], ""), "1024\n");
}

#[test]
fn bridge_takes_one_root_per_file() {
    let dir = tempfile::tempdir().unwrap();
    let c3 = gen_to(dir.path(), "c3", &["cycle", "3"]);
    let c3 = c3.to_str().unwrap();
    let g = ok(&["op", "bridge", c3, c3, "--roots", "0,0"], "");
    assert_eq!(ok(&["index"], &g), "F=86 M1=34 M2=41\n");
    assert_eq!(code(&["op", "bridge", c3, c3, "--roots", "0"]), 2);
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen_to(dir.path(), "k4", &["complete", "4"]);
    assert_eq!(fs::read_to_string(path).unwrap().lines().next(), Some("4 6"));
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = gen_to(dir.path(), "p3", &["path", "3"]);
    let p3 = p3.to_str().unwrap();
    let bad = dir.path().join("bad");
    fs::write(&bad, "3 1\n0 0\n").unwrap();
    assert_eq!(code(&["op", "corona", p3]), 2);
    assert_eq!(code(&["op", "tensor", p3, p3, p3]), 2);
    assert_eq!(code(&["op", "thorn", p3]), 2);
    assert_eq!(code(&["op", "splice", p3, p3, "--root1", "0", "--root2", "9"]), 2);
    assert_eq!(code(&["index", bad.to_str().unwrap()]), 2);
    assert_eq!(code(&["index", "/nonexistent/graph"]), 2);
    assert_eq!(code(&["gen", "wheel"]), 2);
    assert_eq!(code(&["gen", "dodecahedron", "3"]), 2);
    assert_eq!(code(&["formula", "corona", "--summary", "3,2,6"]), 2);
    assert_eq!(code(&["formula", "nonsense"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn parse_errors_name_the_line() {
    let out = run(&["index"], "# header next\n3 1\n0 0\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn verify_and_table() {
    let out = ok(&["verify", "--trials", "20", "--max-n", "5", "--seed", "7"], "");
    assert_eq!(out.lines().filter(|l| l.ends_with("PASS")).count(), 17);
    let csv = ok(&["table", "paper-examples"], "");
    assert!(csv.starts_with("family,params,formula,direct,match\n"));
    assert!(csv.contains("\ngrid,3 3,204,204,yes\n"));
    assert!(!csv.contains(",no\n"));
}
