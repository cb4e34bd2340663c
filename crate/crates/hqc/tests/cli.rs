//! End-to-end tests of the command-line interface: output text, JSON shape,
//! exit codes, determinism of `--stable` output, and the environment
//! override for the degree budget.

use std::process::{Command, Output};

fn hqc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hqc"))
        .args(args)
        .env_remove("HQC_MAX_DEGREE")
        .output()
        .expect("binary runs")
}

fn hqc_env(args: &[&str], degree: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hqc"))
        .args(args)
        .env("HQC_MAX_DEGREE", degree)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

// ---------------------------------------------------------------------------
// Expression subcommands.

#[test]
fn expression_subcommands_print_canonical_text() {
    let cases: [(&[&str], &str); 8] = [
        (&["normal-form", "a*b"], "b*a + i*l*a"),
        (&["normal-form", "-(a - i*l)^2*d"], "-a^2*d + 2*i*l*a*d + l^2*d"),
        (&["delta", "b"], "a (x) d + 1 (x) b + b (x) 1"),
        (&["epsilon", "b^2 + 3"], "3"),
        (&["antipode", "b"], "a*d - b"),
        (&["adjoint", "b"], "a (x) d - d (x) a + b (x) 1"),
        (&["d", "b*a"], "b*w_a + a*w_b + a^2*w_d"),
        (&["chi", "b", "b^2"], "2*i*l"),
    ];
    for (args, expected) in cases {
        let out = hqc(args);
        assert_eq!(out.status.code(), Some(0), "args: {args:?}");
        assert_eq!(stdout_of(&out).trim_end(), expected, "args: {args:?}");
    }
}

#[test]
fn reduce_prints_class_and_optional_trace() {
    let plain = hqc(&["reduce", "b^3"]);
    assert_eq!(stdout_of(&plain).trim_end(), "-4*l^2*b");

    let traced = hqc(&["reduce", "b^3", "--trace"]);
    let expected = "-4*l^2*b\n\
                    trace:\n  \
                    1 * (b^2 - 2*i*l*b) * b\n  \
                    2*i*l * (b^2 - 2*i*l*b) * 1";
    assert_eq!(stdout_of(&traced).trim_end(), expected);

    let no_steps = hqc(&["reduce", "a", "--trace"]);
    assert_eq!(stdout_of(&no_steps).trim_end(), "a\ntrace: (no rewrite steps)");
}

#[test]
fn cartan_maurer_subcommand() {
    let out = hqc(&["cartan-maurer"]);
    assert_eq!(
        stdout_of(&out).trim_end(),
        "d(w_a) = 0\nd(w_b) = -w_a/\\w_d\nd(w_d) = 0"
    );
}

// ---------------------------------------------------------------------------
// Verification command.

#[test]
fn verify_text_output_has_verdict_lines_and_footer() {
    let out = hqc(&["verify", "--suite", "hopf", "--max-degree", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("[pass]"), "missing verdict lines:\n{text}");
    assert!(
        text.contains("9 checks: 9 pass, 0 paper-discrepancy, 0 fail"),
        "missing footer:\n{text}"
    );
}

#[test]
fn verify_json_has_schema_fields_and_exit_zero() {
    let out = hqc(&["verify", "--suite", "ideal", "--max-degree", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(parsed["suite"], "ideal");
    assert_eq!(parsed["max_degree"], 3);
    assert!(parsed["wall_ms"].is_u64());
    let checks = parsed["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for check in checks {
        assert!(check["id"].is_string());
        assert!(check["paper_eq"].is_string());
        assert!(
            ["pass", "fail", "paper-discrepancy"]
                .contains(&check["status"].as_str().unwrap()),
            "unexpected status in {check}"
        );
    }
    let flagged: Vec<&str> = checks
        .iter()
        .filter(|c| c["status"] == "paper-discrepancy")
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert_eq!(flagged, ["ideal.thm1.printed_generator"]);
}

#[test]
fn stable_output_is_deterministic() {
    let args = ["verify", "--suite", "calculus", "--max-degree", "3", "--format", "json", "--stable"];
    let first = hqc(&args);
    let second = hqc(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout, "--stable output must be byte-identical");
    let parsed: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert!(parsed.get("wall_ms").is_none(), "--stable omits wall_ms");
}

#[test]
fn degree_budget_env_override_and_flag_precedence() {
    let from_env = hqc_env(&["verify", "--suite", "hopf", "--format", "json"], "3");
    let parsed: serde_json::Value = serde_json::from_slice(&from_env.stdout).unwrap();
    assert_eq!(parsed["max_degree"], 3);

    let flag_wins = hqc_env(
        &["verify", "--suite", "hopf", "--max-degree", "2", "--format", "json"],
        "3",
    );
    let parsed: serde_json::Value = serde_json::from_slice(&flag_wins.stdout).unwrap();
    assert_eq!(parsed["max_degree"], 2);
}

// ---------------------------------------------------------------------------
// Failure modes: every usage problem exits 2 with a message on stderr.

#[test]
fn usage_errors_exit_two() {
    let cases: [&[&str]; 6] = [
        &[],
        &["frobnicate"],
        &["verify", "--suite", "bogus"],
        &["verify", "--max-degree", "four"],
        &["verify", "--format", "yaml"],
        &["chi", "q", "b"],
    ];
    for args in cases {
        let out = hqc(args);
        assert_eq!(out.status.code(), Some(2), "args: {args:?}");
        assert!(!stderr_of(&out).is_empty(), "args: {args:?}");
    }
}

#[test]
fn parse_errors_exit_two_with_position() {
    let out = hqc(&["normal-form", "a +"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr_of(&out).contains("parse error at byte"),
        "stderr: {}",
        stderr_of(&out)
    );

    let env_bad = hqc_env(&["verify", "--suite", "hopf"], "not-a-number");
    assert_eq!(env_bad.status.code(), Some(2));
}

#[test]
fn help_prints_usage_on_stdout() {
    let out = hqc(&["help"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("verify"));
    assert!(text.contains("--suite"));

    let bare = hqc(&[]);
    assert!(stderr_of(&bare).contains("usage"), "bare invocation shows usage");
}
