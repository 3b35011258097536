use std::collections::BTreeMap;
use std::process::Command;
use std::time::Duration;

use serde_json::Value;
use symident::cli::render::{render_reports, Format};
use symident::cli::{exit_code, run_with};
use symident::identities::{CheckReport, Counterexample, Status};

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(
        std::iter::once("symident").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_symident"))
}

fn md_cells(doc: &str) -> Vec<Vec<String>> {
    doc.lines()
        .filter(|l| l.starts_with("| ") && !l.starts_with("|---"))
        .skip(1)
        .map(|l| {
            l.trim_matches('|')
                .split('|')
                .skip(1)
                .map(|c| c.trim().to_string())
                .collect()
        })
        .collect()
}

fn csv_cells(doc: &str) -> Vec<Vec<String>> {
    doc.lines()
        .skip(1)
        .map(|l| l.split(',').skip(1).map(str::to_string).collect())
        .collect()
}

fn json_cells(doc: &str) -> Vec<Vec<String>> {
    let v: Value = serde_json::from_str(doc).unwrap();
    v["cells"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| {
            row.as_array()
                .unwrap()
                .iter()
                .map(|c| {
                    if c.is_null() {
                        String::new()
                    } else {
                        c.to_string()
                    }
                })
                .collect()
        })
        .collect()
}

#[test]
fn table_formats_share_numbers() {
    for args in [
        &["table", "fib"][..],
        &["table", "lucas"],
        &["table", "cnk"],
        &["table", "fib", "--r", "2:3", "--n", "100:103"],
    ] {
        let render = |f: &str| {
            let mut a = args.to_vec();
            a.extend(["--format", f]);
            let (code, out, _) = call(&a);
            assert_eq!(code, 0, "{a:?}");
            out
        };
        let md = md_cells(&render("md"));
        assert!(!md.is_empty());
        assert_eq!(md, csv_cells(&render("csv")), "{args:?}");
        assert_eq!(md, json_cells(&render("json")), "{args:?}");
    }
}

#[test]
fn documented_examples() {
    let (code, out, _) = call(&[
        "table", "fib", "--r", "1:16", "--n", "1:12", "--format", "md",
    ]);
    assert_eq!(code, 0);
    assert!(out
        .lines()
        .any(|l| l.starts_with("| 9 |") && l.contains("| 1700 |")));
    assert!(!out.contains("Note"));
    assert_eq!(
        call(&[
            "verify",
            "first-kind",
            "--family",
            "h",
            "--r",
            "2",
            "--m-max",
            "8",
            "--mode",
            "symbolic"
        ])
        .0,
        0
    );
    assert_eq!(
        call(&[
            "verify",
            "congruence",
            "--r",
            "2",
            "--q",
            "11",
            "--n-max",
            "200"
        ])
        .0,
        0
    );
}

#[test]
fn verify_subcommands_pass_with_defaults() {
    let cases: &[&[&str]] = &[
        &["second-kind", "--r", "1:2"],
        &["genfun-expansion"],
        &["consistency", "--r", "1"],
        &["principal", "--r", "1:2", "--n-max", "6"],
        &["principal-corollaries", "--r", "1:2", "--bound", "6"],
        &["roots", "--r", "1:3"],
        &["binomial-sum", "--r", "1:3"],
        &["psi", "--order", "12", "--alpha-max", "3"],
        &["cross-oracle", "--r", "1:3", "--n-max", "30"],
        &["inversion", "--r", "2", "--n-max", "30"],
        &["initial-block", "--r", "1:4"],
        &["fibonacci-specializations", "--bound", "20"],
        &["lucas-specializations", "--bound", "20"],
        &["determinants", "--r", "1:3", "--n-max", "6"],
        &["discriminant", "--r", "3", "--n-max", "4"],
        &["recursion-genfun", "--r", "1:3", "--order", "15"],
        &["partitions", "--r", "2:3", "--n-max", "8"],
        &["golden"],
        &[
            "first-kind",
            "--r",
            "4",
            "--m-max",
            "10",
            "--mode",
            "random",
            "--trials",
            "2",
            "--seed",
            "3",
        ],
    ];
    for case in cases {
        let mut args = vec!["verify"];
        args.extend_from_slice(case);
        let (code, out, err) = call(&args);
        assert_eq!(code, 0, "{args:?}: {err}");
        assert!(out.contains("0 failed"), "{args:?}");
    }
}

#[test]
fn usage_and_domain_errors_exit_2() {
    for args in [
        &["verify"][..],
        &["verify", "first-kind", "--r", "0"],
        &["verify", "first-kind", "--family", "q"],
        &[
            "verify",
            "second-kind",
            "--family",
            "e",
            "--r",
            "2",
            "--n-max",
            "5",
        ],
        &["verify", "congruence", "--r", "4", "--q", "17"],
        &["verify", "discriminant", "--r", "4"],
        &["table", "lucas", "--n", "5:4"],
        &["table", "cnk", "--r", "1:2"],
        &["table", "nope"],
        &["report"],
        &["report", "--all", "--group", "psi"],
        &["frobnicate"],
    ] {
        let (code, out, err) = call(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty() && !err.is_empty(), "{args:?}");
    }
}

#[test]
fn unwritable_output_exits_2() {
    let (code, _, err) = call(&["table", "fib", "--output", "/nonexistent-dir/t.md"]);
    assert_eq!(code, 2);
    assert!(err.contains("cannot write"));
}

#[test]
fn output_file_matches_stdout() {
    let path = std::env::temp_dir().join(format!("symident-cli-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = call(&["verify", "golden", "--format", "csv", "--output", p]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written, call(&["verify", "golden", "--format", "csv"]).1);
}

#[test]
fn failing_report_document() {
    let fail = CheckReport {
        check: "toy".into(),
        params: BTreeMap::from([("n".to_string(), 3)]),
        status: Status::Fail,
        counterexample: Some(Counterexample::new("z=(1/2)", 5, 4)),
        elapsed: Duration::from_millis(1),
    };
    assert_eq!(exit_code(std::slice::from_ref(&fail)), 1);
    assert_eq!(exit_code(&[]), 0);
    let doc: Value =
        serde_json::from_str(&render_reports(&[fail], Format::Json, false).unwrap()).unwrap();
    assert_eq!(doc[0]["status"], "fail");
    assert_eq!(doc[0]["params"]["n"], 3);
    assert_eq!(doc[0]["counterexample"]["assignment"], "z=(1/2)");
    assert_eq!(doc[0]["counterexample"]["lhs"], "5");
    assert!(doc[0]["elapsed_ms"].is_null());
}

#[test]
fn json_schema_of_a_run() {
    let (code, out, _) = call(&[
        "verify",
        "binomial-sum",
        "--r",
        "1:2",
        "--format",
        "json",
        "--timings",
    ]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&out).unwrap();
    for rec in doc.as_array().unwrap() {
        let keys: Vec<&str> = rec
            .as_object()
            .unwrap()
            .keys()
            .map(String::as_str)
            .collect();
        assert_eq!(keys, ["check", "elapsed_ms", "params", "status"]);
        assert!(rec["elapsed_ms"].is_number());
    }
}

#[test]
fn binary_seed_from_environment() {
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut cmd = bin();
        cmd.args([
            "verify",
            "second-kind",
            "--family",
            "h",
            "--r",
            "5",
            "--n-max",
            "6",
            "--mode",
            "random",
        ]);
        cmd.args(["--format", "json", "--trials", "2"]);
        if let Some(s) = flag {
            cmd.args(["--seed", s]);
        }
        match env {
            Some(s) => cmd.env("SYMIDENT_SEED", s),
            None => cmd.env_remove("SYMIDENT_SEED"),
        };
        let o = cmd.output().unwrap();
        (o.status.code(), o.stdout)
    };
    let a = run(Some("11"), None);
    assert_eq!(a.0, Some(0));
    assert_eq!(a, run(Some("11"), None));
    assert_eq!(a, run(Some("12"), Some("11")));
    assert_eq!(run(None, None).0, Some(0));
    assert_eq!(run(Some("not-a-number"), None).0, Some(2));
}

#[test]
fn binary_exit_codes() {
    let code = |args: &[&str]| bin().args(args).output().unwrap().status.code();
    assert_eq!(code(&["verify", "binomial-sum", "--r", "2"]), Some(0));
    assert_eq!(code(&["verify", "binomial-sum", "--r", "x"]), Some(2));
    assert_eq!(code(&["--version"]), Some(0));
}
