use cyclotomy_cli::{run, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, MAX_N_CAP};

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn invoke(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cyclotomy").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

#[test]
fn compute_json_is_exact() {
    let o = invoke(&["compute", "--n", "12", "--format", "json"]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(
        o.stdout.trim_end(),
        r#"{"n":12,"degree":4,"coefficients":["1","0","-1","0","1"]}"#
    );
    assert!(o.stderr.is_empty());
}

#[test]
fn compute_text_and_every_algorithm() {
    for alg in [
        "recursive",
        "mobius_product",
        "radical",
        "dual_form",
        "newton_ramanujan",
    ] {
        let o = invoke(&["compute", "--n", "12", "--algorithm", alg]);
        assert_eq!(o.code, EXIT_OK, "{alg}: {}", o.stderr);
        assert_eq!(o.stdout.trim_end(), "x^4 - x^2 + 1", "{alg}");
    }
}

#[test]
fn compose_rejects_non_coprime() {
    let o = invoke(&["compose", "--n", "4", "--m", "2"]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("n and m must be coprime"), "{}", o.stderr);
    assert!(o.stdout.is_empty());
}

#[test]
fn compose_coprime() {
    let o = invoke(&["compose", "--n", "4", "--m", "3", "--format", "json"]);
    assert_eq!(o.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["degree"], 6);
    assert_eq!(v["coefficients"][0], "1");
    assert_eq!(v["coefficients"][6], "1");
}

#[test]
fn ramanujan_methods_agree() {
    for method in ["kluyver", "hoelder", "newton", "definition"] {
        let o = invoke(&["ramanujan", "--n", "12", "--q", "4", "--method", method]);
        assert_eq!(o.code, EXIT_OK, "{method}: {}", o.stderr);
        assert_eq!(o.stdout.trim_end(), "-2", "{method}");
    }
    let o = invoke(&["ramanujan", "--n", "12", "--q", "0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["value"], 4);
}

#[test]
fn verify_all_passes() {
    let o = invoke(&["verify", "--max-n", "100", "--suite", "all"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert!(o.stdout.contains("all checks passed"), "{}", o.stdout);
    for suite in ["poly", "totient", "ramanujan", "coeff"] {
        assert!(o.stdout.contains(suite), "missing {suite}");
    }
}

#[test]
fn verify_json_summaries() {
    let o = invoke(&[
        "verify", "--max-n", "40", "--max-q", "10", "--format", "json",
    ]);
    assert_eq!(o.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    let suites = v.as_array().unwrap();
    assert_eq!(suites.len(), 4);
    for s in suites {
        assert!(s["checks"].as_u64().unwrap() > 0);
        assert!(s["failures"].as_array().unwrap().is_empty());
    }
    assert_ne!(EXIT_CHECK_FAILED, o.code);
}

#[test]
fn bench_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bench.csv");
    let o = invoke(&[
        "bench",
        "--max-n",
        "20",
        "--algorithms",
        "recursive,dual_form",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,algorithm,micros,degree,height"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 40);
    assert_eq!(rows[0][..2], ["1", "recursive"]);
    assert_eq!(rows[1][..2], ["1", "dual_form"]);
    // Φ_12 has degree 4 and height 1
    let twelve = rows.iter().find(|r| r[0] == "12").unwrap();
    assert_eq!(twelve[3..], ["4", "1"]);
}

#[test]
fn table_json_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("table.json");
    let o = invoke(&["table", "--max-n", "110", "--out", json.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 110);
    assert_eq!(rows[11]["n"], 12);
    assert_eq!(rows[104]["degree"], 48);
    assert_eq!(rows[104]["coefficients"][7], "-2");

    let csv = dir.path().join("table.csv");
    let o = invoke(&[
        "table",
        "--max-n",
        "3",
        "--out",
        csv.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(o.code, EXIT_OK);
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().next(), Some("n,degree,coefficients"));
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &[],
        &["bogus"],
        &["compute"],
        &["compute", "--n", "0"],
        &["compute", "--n", "x"],
        &["compute", "--n", "12", "--algorithm", "fft"],
        &["compute", "--n", "12", "--format", "csv"],
        &["compose", "--n", "6", "--m", "4"],
        &["ramanujan", "--n", "12", "--q", "1", "--method", "guess"],
        &["verify", "--max-n", "10", "--suite", "everything"],
        &["verify", "--max-n", "10", "--format", "csv"],
        &["bench", "--max-n", "3"],
        &[
            "table", "--max-n", "3", "--format", "text", "--out", "unused",
        ],
    ];
    for args in cases {
        let o = invoke(args);
        assert_eq!(o.code, EXIT_USAGE, "{args:?}: {}", o.stdout);
        assert!(o.stderr.starts_with("error"), "{args:?}: {}", o.stderr);
    }
}

#[test]
fn caps_are_enforced() {
    let over = (MAX_N_CAP + 1).to_string();
    for args in [
        vec!["compute", "--n", over.as_str()],
        vec!["verify", "--max-n", over.as_str()],
        vec!["table", "--max-n", over.as_str(), "--out", "unused"],
        vec!["compose", "--n", "1000", "--m", "1001"],
    ] {
        let o = invoke(&args);
        assert_eq!(o.code, EXIT_USAGE, "{args:?}");
        assert!(o.stderr.contains("out of range"), "{args:?}: {}", o.stderr);
    }
}

#[test]
fn help_and_version_succeed() {
    let o = invoke(&["--help"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("compute"));
    assert_eq!(invoke(&["--version"]).code, EXIT_OK);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "--max-n", "60", "--format", "json"][..],
        &["compute", "--n", "105", "--algorithm", "dual_form"][..],
        &["ramanujan", "--n", "30", "--q", "12", "--method", "newton"][..],
    ] {
        let a = invoke(args);
        let b = invoke(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.code, b.code);
    }
}
