use std::path::PathBuf;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_kdecomp");

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("KDECOMP_JOBS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Report body without the `#` header lines.
fn body(o: &Output) -> String {
    stdout(o).lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect()
}

#[test]
fn check_valid_file() {
    let o = run(&["check", &data("b.srs")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("semiring B order 2"));
    assert!(out.contains("# input"));
    assert!(out.contains("sha256"));
}

#[test]
fn check_broken_file_reports_triple() {
    let o = run(&["check", &data("broken.srs")]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.contains("Distributive") && err.contains("a=2, b=1, c=2"), "{err}");
    assert!(stdout(&o).is_empty());
}

#[test]
fn missing_file_and_bad_set_are_input_errors() {
    let o = run(&["check", "/nonexistent/x.srs"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["decompose", &data("bxb.srs"), "--set", "0,2,3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--set"));
    let o = run(&["decompose", &data("z4.srs"), "--set", "0,1,2,3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["closure", &data("z4.srs"), "--set", "9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_are_one_line() {
    for args in [&["frobnicate"][..], &["verify-all"], &["natpoly"], &["verify-all", "--order", "x"]] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert_eq!(stderr(&o).lines().count(), 1, "{args:?}: {}", stderr(&o));
    }
    let o = run(&["verify-all", "--order", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--allow-large"));
    let o = run(&["verify-all", "--order", "3", "--jobs", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--jobs"));
}

#[test]
fn decompose_bxb() {
    let o = run(&["decompose", &data("bxb.srs"), "--set", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        body(&o),
        "ideal {0}\n\
         component {0,2} radical {0,2}\n\
         component {0,3} radical {0,3}\n\
         reduced true\n\
         associated {0,2} witness 3\n\
         associated {0,3} witness 2\n\
         findings 0\n"
    );
}

#[test]
fn decompose_z4_zero_is_primary() {
    let o = run(&["decompose", &data("z4.srs"), "--set", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let b = body(&o);
    assert!(b.contains("component {0} radical {0,2}"), "{b}");
    assert!(b.contains("associated {0,2} witness 1"), "{b}");
}

#[test]
fn ideals_listing() {
    let o = run(&["ideals", &data("z4.srs")]);
    assert_eq!(body(&o), "{0}\n{0,2}\n{0,1,2,3}\nfindings 0\n");
    let o = run(&["ideals", &data("c3.srs"), "--k-only"]);
    assert_eq!(body(&o), "{0}\n{0,2}\n{0,1,2}\nfindings 0\n");
}

#[test]
fn closure_classify_primes() {
    let o = run(&["closure", &data("c3.srs"), "--set", "2"]);
    assert!(body(&o).contains("k_closure {0,2}"));
    let o = run(&["classify", &data("c3.srs"), "--set", "0,2"]);
    assert!(body(&o).contains("proper=true prime=true primary=true radical={0,2} k_irreducible=true"));
    let o = run(&["primes", &data("bxb.srs"), "--set", "0"]);
    assert_eq!(body(&o), "ideal {0}\nprime {0,2} witness 3\nprime {0,3} witness 2\nfindings 0\n");
}

#[test]
fn verify_single_semiring() {
    for f in ["b.srs", "z2.srs", "z4.srs", "c3.srs", "bxb.srs"] {
        let o = run(&["verify", &data(f)]);
        assert_eq!(o.status.code(), Some(0), "{f}: {}", stdout(&o));
    }
}

#[test]
fn verify_all_finds_the_counterexamples() {
    let o = run(&["verify-all", "--order", "4", "--iso"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("finding violation"));
    assert!(out.contains("irreducible-is-primary"));
    let o = run(&["verify-all", "--order", "3"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn json_documents_parse() {
    for args in [
        vec!["check".to_string(), data("bxb.srs")],
        vec!["decompose".to_string(), data("bxb.srs"), "--set".into(), "0".into()],
        vec!["verify".to_string(), data("z4.srs")],
        vec!["verify-all".to_string(), "--order".into(), "4".into()],
        vec!["enumerate".to_string(), "--order".into(), "3".into()],
        vec!["natpoly".to_string(), "--demo".into(), "golan".into()],
    ] {
        let mut a: Vec<&str> = args.iter().map(String::as_str).collect();
        a.push("--json");
        let o = run(&a);
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{a:?}: {e}"));
        assert_eq!(v["exit_code"].as_i64(), o.status.code().map(i64::from), "{a:?}");
        assert!(v["command"].as_str().unwrap().starts_with("kdecomp "));
        assert!(v["findings"].is_array());
    }
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let o = run(&["verify", &data("bxb.srs"), "--out", path.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&o));
}

#[test]
fn enumerate_writes_census() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["enumerate", "--order", "3", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let tsv = std::fs::read_to_string(dir.path().join("census.tsv")).unwrap();
    let rows: Vec<&str> = tsv.lines().collect();
    assert_eq!(rows[0], "name\tflags\tk_ideals");
    assert_eq!(rows.len(), 7);
    assert!(rows[1].starts_with("3_0001\t"));
    for r in &rows[1..] {
        let name = r.split('\t').next().unwrap();
        let f = dir.path().join(format!("{name}.srs"));
        let c = run(&["check", f.to_str().unwrap()]);
        assert_eq!(c.status.code(), Some(0));
    }
}

#[test]
fn jobs_from_environment() {
    let a = Command::new(BIN).args(["verify-all", "--order", "3"]).env("KDECOMP_JOBS", "1").output().unwrap();
    let b = run(&["verify-all", "--order", "3"]);
    assert_eq!(a.stdout, b.stdout);
    let c = Command::new(BIN).args(["verify-all", "--order", "3"]).env("KDECOMP_JOBS", "0").output().unwrap();
    assert_eq!(c.status.code(), Some(2));
}

#[test]
fn natpoly_inputs() {
    let o = run(&["natpoly", "--demo", "sums", "--a", "4", "--b", "6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not coprime"));
    let o = run(&["natpoly", "--demo", "sums", "--a", "3", "--b", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("gaps below 8 are [1, 2, 4, 7]"));
    let o = run(&["natpoly", "--check-lemma210", "7", "3"]);
    assert_eq!(o.status.code(), Some(2));
}
