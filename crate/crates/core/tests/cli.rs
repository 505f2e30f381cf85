mod common;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use systolic::io;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_systolic")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Writes X and the four sets of the hexagonal configuration into `dir`.
fn write_hex(dir: &Path, coned: bool) -> Vec<PathBuf> {
    let input = common::hex_config(coned);
    let mut files = vec![dir.join("x.cx")];
    std::fs::write(&files[0], io::write_complex(&input.x)).unwrap();
    for (i, a) in input.a.iter().enumerate() {
        let f = dir.join(format!("a{i}.cx"));
        std::fs::write(&f, io::write_complex(a)).unwrap();
        files.push(f);
    }
    files
}

#[test]
fn gen_then_check_machine_record() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("grid.cx");
    assert!(run(&["gen", "tri_grid", "5", "5", "-o", path(&f)]).status.success());
    let o = run(&["check", path(&f), "--machine"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("systolic=Y"), "{text}");
    assert!(text.contains("loc6=Y"), "{text}");
}

#[test]
fn gen_list_names_the_corpus() {
    let o = run(&["gen", "--list"]);
    assert!(stdout(&o).lines().any(|l| l == "cone cycle 5"));
}

#[test]
fn unknown_name_is_an_input_error() {
    let o = run(&["gen", "dodecahedron"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn helly_certificate_and_witness_verify() {
    let dir = tempfile::tempdir().unwrap();
    let files = write_hex(dir.path(), true);
    let names: Vec<&str> = files.iter().map(|p| path(p)).collect();
    let wdir = dir.path().join("witness");
    let mut args = vec!["helly"];
    args.extend(&names);
    args.extend(["--witness", path(&wdir)]);
    let o = run(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let cert = dir.path().join("cert.txt");
    std::fs::write(&cert, stdout(&o)).unwrap();

    let mut args = vec!["verify"];
    args.extend(&names);
    args.extend(["--cert", path(&cert), "--witness", path(&wdir)]);
    let o = run(&args);
    assert!(o.status.success(), "{}", stdout(&o));
    assert_eq!(stdout(&o).trim(), "ok");

    std::fs::write(&cert, "cert 0 0 0 0\n").unwrap();
    let o = run(&args[..args.len() - 2]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("rejected"));
}

#[test]
fn helly_reports_unknown_with_exit_code_three() {
    let dir = tempfile::tempdir().unwrap();
    let files = write_hex(dir.path(), false);
    let mut args = vec!["helly", "--machine"];
    args.extend(files.iter().map(|p| path(p)));
    let o = run(&args);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("outcome=unknown"));
}

#[test]
fn helly_hypothesis_failure_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let x = dir.path().join("x.cx");
    let a = dir.path().join("a.cx");
    std::fs::write(&x, "s 0 1\ns 2 3\n").unwrap();
    std::fs::write(&a, "s 0 1\ns 2 3\n").unwrap();
    let o = run(&["helly", path(&x), path(&a), path(&a), path(&a), path(&a)]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sperner_on_subdivided_tetrahedron() {
    let o = run(&["sperner", "--subdivided", "1", "--seed", "7"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let count: usize = text.lines().find_map(|l| l.strip_prefix("rainbow_count ")).unwrap().parse().unwrap();
    assert_eq!(count % 2, 1);
}
