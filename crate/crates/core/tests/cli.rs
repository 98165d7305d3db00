use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use apexion::graph6;
use apexion::named;
use apexion::transforms::{dy_closure, ClosureCaps};
use apexion::SmallGraph;

fn apexion(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_apexion"))
        .args(args)
        .env_remove("APEXION_THREADS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_g6(path: &Path, graphs: &[SmallGraph]) {
    let mut buf = Vec::new();
    graph6::write_stream(&mut buf, graphs).unwrap();
    fs::write(path, buf).unwrap();
}

fn read_g6(path: &Path) -> Vec<SmallGraph> {
    let text = fs::read_to_string(path).unwrap();
    text.lines().map(|l| graph6::decode(l).unwrap()).collect()
}

#[test]
fn classify_writes_three_files() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.g6");
    write_g6(
        &input,
        &[named::complete(4), named::complete(5), named::complete(6)],
    );
    let out = dir.path().join("out");
    let o = apexion(
        &[
            "classify",
            "--input",
            input.to_str().unwrap(),
            "--output",
            out.to_str().unwrap(),
        ],
        "",
    );
    assert!(o.status.success());
    assert_eq!(stdout(&o), "planar:1\napex:1\nnonapex:1\n");
    assert_eq!(read_g6(&out.join("nonapex.g6")), vec![named::complete(6)]);
    assert_eq!(read_g6(&out.join("planar.g6")), vec![named::complete(4)]);

    let empty = apexion(&["classify"], "");
    assert_eq!(stdout(&empty), "planar:0\napex:0\nnonapex:0\n");
}

#[test]
fn parse_errors_name_the_line() {
    let o = apexion(&["classify"], "C~\nC~~\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn closure_cascade_and_table() {
    let dir = tempfile::tempdir().unwrap();
    let k6 = graph6::encode(&named::complete(6));
    let closure = apexion(&["closure"], &format!("{k6}\n"));
    assert!(closure.status.success());
    let family: Vec<SmallGraph> = stdout(&closure)
        .lines()
        .map(|l| graph6::decode(l).unwrap())
        .collect();
    assert_eq!(
        family,
        dy_closure(&[named::complete(6)], ClosureCaps::default())
    );

    let capped = apexion(&["closure", "--caps", "8,15"], &format!("{k6}\n"));
    assert_eq!(stdout(&capped).lines().count(), 5);

    let out = dir.path().join("cascade");
    let cascade = apexion(
        &["cascade", "--output", out.to_str().unwrap()],
        &stdout(&closure),
    );
    assert!(cascade.status.success());
    assert_eq!(read_g6(&out.join("mmna.g6")), family);
    let csv = fs::read_to_string(out.join("table.csv")).unwrap();
    assert_eq!(csv, "n,e,count\n6,15,1\n7,15,2\n8,15,2\n9,15,1\n10,15,1\n");

    let table = apexion(&["table"], &stdout(&closure));
    assert!(stdout(&table).ends_with(&csv));
}

#[test]
fn incomplete_cascade_has_its_own_exit_code() {
    let k8 = graph6::encode(&named::complete(8));
    let o = apexion(
        &["cascade", "--max-depth", "1", "--threads", "2"],
        &format!("{k8}\n"),
    );
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn encode_decode_round_trip() {
    let o = apexion(&["encode"], "2 0-1\n4 0-1 0-2 0-3 1-2 1-3 2-3\n");
    assert_eq!(stdout(&o), "A_\nC~\n");
    let d = apexion(&["decode"], "A_\nC~\n");
    assert_eq!(stdout(&d), "2 0-1\n4 0-1 0-2 0-3 1-2 1-3 2-3\n");
    assert_eq!(apexion(&["encode"], "3 0-0\n").status.code(), Some(1));
}

#[test]
fn enumerate_and_audit() {
    let o = apexion(&["enumerate", "--order", "5", "--min-degree", "0"], "");
    assert_eq!(stdout(&o).lines().count(), 34);
    let a = apexion(&["k6-audit", "--count", "3", "--seed", "5"], "");
    assert!(a.status.success());
    assert!(stdout(&a).contains("with_k6:3"));
    assert_eq!(
        apexion(&["k6-audit", "--count", "0"], "").status.code(),
        Some(2)
    );
}
