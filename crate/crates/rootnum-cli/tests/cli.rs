use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rootnum"))
        .args(args)
        .output()
        .expect("spawn rootnum")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_washington() {
    let o = run(&["classify", "--catalog", "washington"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let line = out.lines().find(|l| l.starts_with("T^2 + 3*T + 9")).expect("place row");
    assert!(line.contains("II"), "{line}");
    assert!(line.contains("true"), "{line}");
    assert!(line.contains("mu3=true"), "{line}");
    assert!(out.contains("euler   12"));
}

#[test]
fn classify_json_has_places() {
    let o = run(&["--format", "json", "classify", "--catalog", "G", "--param", "w=1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["euler"], 12);
    assert_eq!(v["places"][0]["kodaira"], "III");
    assert_eq!(v["variation"]["status"], "applicable");
}

#[test]
fn root_washington_constant() {
    let o = run(&["root", "--catalog", "washington", "--t", "-50..50"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 101);
    for r in rows {
        let c: Vec<&str> = r.split(',').collect();
        assert_eq!((c[1], c[2], c[5]), ("-1", "-1", "true"), "{r}");
    }
}

#[test]
fn root_single_path_leaves_agree_blank() {
    let o = run(&["root", "--catalog", "legendre", "--t", "1..3", "--paths", "direct"]);
    assert!(o.status.success());
    for r in stdout(&o).lines().skip(1) {
        assert!(r.ends_with(",,,"), "{r}");
    }
}

#[test]
fn average_f_s1() {
    let o = run(&["average", "--catalog", "F", "--param", "s=1", "--T", "300"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let last = out.lines().rev().nth(1).unwrap();
    let mean: f64 = last.split(',').nth(1).unwrap().parse().unwrap();
    assert!(mean.abs() < 0.2, "{mean}");
}

#[test]
fn vary_g() {
    let o = run(&["--format", "json", "vary", "--catalog", "G", "--param", "w=1"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["q0"], 7);
    assert_eq!(v["reports"][0]["W_direct"], 1);
    assert_eq!(v["reports"][1]["W_direct"], -1);
}

#[test]
fn vary_inapplicable_fails() {
    let o = run(&["vary", "--catalog", "washington"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("inapplicable"));
}

#[test]
fn catalog_roundtrip() {
    let listed = stdout(&run(&["catalog"]));
    assert!(listed.lines().any(|l| l == "legendre"));
    let dir = std::env::temp_dir().join(format!("rootnum-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("h.fam");
    let spec = stdout(&run(&["catalog", "--catalog", "H", "--param", "w=3"]));
    std::fs::write(&path, &spec).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&run(&["catalog", "--file", p])), spec);
    let a = stdout(&run(&["root", "--file", p, "--t", "-20..20"]));
    let b = stdout(&run(&["root", "--catalog", "H", "--param", "w=3", "--t", "-20..20"]));
    assert_eq!(a, b);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn deterministic_across_jobs() {
    let a = run(&[
        "--jobs",
        "1",
        "--format",
        "json",
        "root",
        "--catalog",
        "legendre",
        "--t",
        "-60..60",
    ]);
    let b = run(&[
        "--jobs",
        "4",
        "--format",
        "json",
        "root",
        "--catalog",
        "legendre",
        "--t",
        "-60..60",
    ]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn sieve_density_rows() {
    let o = run(&["sieve-density", "--poly", "0 1", "--X", "8000", "--cutoff", "2000"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("X,count,density,constant,|difference|"));
    let last: Vec<&str> = out.lines().last().unwrap().split(',').collect();
    assert_eq!(last[0], "8000");
    let diff: f64 = last[4].parse().unwrap();
    assert!(diff < 0.02);
}

#[test]
fn chowla_rows() {
    let o = run(&["chowla", "--poly", "0 1", "--X", "10"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().last(), Some("10,0,0.000000,1"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["root", "--t", "1..2"]).status.code(), Some(2));
    assert_eq!(
        run(&["root", "--catalog", "washington", "--t", "5..1"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["classify", "--catalog", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}

#[test]
fn cache_file_persists() {
    let path = std::env::temp_dir().join(format!("rootnum-cache-{}.txt", std::process::id()));
    let o = Command::new(env!("CARGO_BIN_EXE_rootnum"))
        .args(["root", "--catalog", "legendre", "--t", "100000000000..100000000001"])
        .env("ROOTNUM_CACHE", &path)
        .output()
        .unwrap();
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(!text.is_empty());
    let again = Command::new(env!("CARGO_BIN_EXE_rootnum"))
        .args(["root", "--catalog", "legendre", "--t", "100000000000..100000000001"])
        .env("ROOTNUM_CACHE", &path)
        .output()
        .unwrap();
    assert_eq!(o.stdout, again.stdout);
    std::fs::remove_file(&path).ok();
}
