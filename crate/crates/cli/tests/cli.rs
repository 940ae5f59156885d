use std::process::{Command, Output};

use patavoid_cli::OutputRecord;
use serde_json::Value;

/// Runs the binary with a whitespace-separated argument line.
fn patavoid(line: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_patavoid"))
        .args(line.split_whitespace())
        .env_remove("PATAVOID_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(line: &str) -> String {
    let out = patavoid(line);
    assert!(
        out.status.success(),
        "{line:?} exited with {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn exit_code(line: &str) -> i32 {
    patavoid(line).status.code().expect("exit code")
}

fn validator() -> jsonschema::Validator {
    let text = include_str!("../schema/output.schema.json");
    let schema: Value = serde_json::from_str(text).expect("schema parses");
    jsonschema::validator_for(&schema).expect("schema compiles")
}

#[test]
fn compositions_single_pattern() {
    assert_eq!(stdout("compositions --n 6 --pattern 132"), "31\n");
}

#[test]
fn compositions_all_patterns() {
    let out = stdout("compositions --n 6 --all-patterns --no-timing");
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines, ["123 132 213 231 312 321", "31 31 31 31 31 31"]);
}

#[test]
fn compositions_listing() {
    let out = stdout("compositions --n 4 --pattern 123 --list");
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "8");
    assert_eq!(lines.len(), 9);
    assert!(lines.contains(&"1 2 1"));
}

#[test]
fn nonnegative_parts_need_k() {
    assert_eq!(
        exit_code("compositions --n 2 --flavor nonnegative --pattern 132"),
        2
    );
    assert_eq!(
        stdout("compositions --n 3 --flavor nonnegative --k 2 --pattern 132"),
        "4\n"
    );
}

#[test]
fn bad_patterns_are_usage_errors() {
    assert_eq!(exit_code("compositions --n 3 --pattern 122"), 2);
    assert_eq!(exit_code("compositions --n 3 --pattern abc"), 2);
    assert_eq!(exit_code("compositions --n 3"), 2);
}

#[test]
fn multiset_engines() {
    assert_eq!(stdout("multiset 2 1 1 --pattern 132 --engine brute"), "9\n");
    assert_eq!(stdout("multiset 2 1 1 --pattern 132 --engine gf"), "9\n");
    assert_eq!(exit_code("multiset 2 1 1 --pattern 123 --engine gf"), 2);
}

#[test]
fn series_and_bfile() {
    assert_eq!(
        stdout("series --n-max 13"),
        "1 2 4 8 16 31 60 114 214 398 732 1334 2410\n"
    );
    assert_eq!(stdout("series --n-max 5 --max-part 1"), "1 1 1 1 1\n");
    assert_eq!(stdout("bfile --n-max 3"), "1 1\n2 2\n3 4\n");
    assert_eq!(exit_code("series --n-max 0"), 2);
}

#[test]
fn bijection_worked_example() {
    assert_eq!(
        stdout("bijection 7 5 6 6 4 6 6 4 6 6 4 6 5 3 2 4 1 1 4 --target 2 1 1 2 5 7 1"),
        "7 5 6 6 5 6 6 5 6 6 4 6 5 3 2 5 1 1 4\n"
    );
    assert_eq!(exit_code("bijection 1 2 --target 3"), 2);
}

#[test]
fn verify_suites() {
    assert_eq!(exit_code("verify thm1"), 0);
    assert_eq!(exit_code("verify gf-cross"), 0);
    assert_eq!(exit_code("verify no-such-suite"), 2);
}

#[test]
fn json_validates_against_schema() {
    let validator = validator();
    for line in [
        "compositions --n 5 --all-patterns",
        "compositions --n 4 --pattern 231 --list",
        "multiset 2 2 1 --pattern 132 --engine gf",
        "series --n-max 8 --max-part 3",
        "bfile --n-max 4 --no-timing",
        "bijection 1 1 2 --target 1 2",
        "verify thm1",
    ] {
        let text = stdout(&format!("{line} --json"));
        let value: Value = serde_json::from_str(&text).expect("valid JSON");
        let errors: Vec<String> = validator
            .iter_errors(&value)
            .map(|e| e.to_string())
            .collect();
        assert!(errors.is_empty(), "{line}: {errors:?}");
        let record: OutputRecord = serde_json::from_str(&text).expect("record parses");
        assert!(line.starts_with(&record.command));
    }
}

#[test]
fn output_is_deterministic_without_timing() {
    let line = "compositions --n 9 --all-patterns --json --no-timing";
    let first = patavoid(line);
    let second = patavoid(line);
    assert_eq!(first.stdout, second.stdout);
    assert!(first.stderr.is_empty());
    let value: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert!(value.get("elapsed_us").is_none());
}

#[test]
fn timing_goes_to_stderr_in_plain_mode() {
    let out = patavoid("series --n-max 4");
    assert_eq!(out.stdout, b"1 2 4 8\n");
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("elapsed:"));
}

#[test]
fn csv_output() {
    assert_eq!(stdout("bfile --n-max 3 --csv"), "n,value\n1,1\n2,2\n3,4\n");
    assert_eq!(
        stdout("verify thm1 --csv --no-timing"),
        "suite,passed,checks,failure\nthm1,true,78,\n"
    );
    assert_eq!(
        exit_code("compositions --n 3 --pattern 123 --list --csv"),
        2
    );
    assert_eq!(exit_code("series --n-max 3 --csv --json"), 2);
}

#[test]
fn jobs_flag_and_environment() {
    assert_eq!(stdout("series --n-max 3 --jobs 2"), "1 2 4\n");
    let out = Command::new(env!("CARGO_BIN_EXE_patavoid"))
        .args(["compositions", "--n", "7", "--pattern", "312"])
        .env("PATAVOID_JOBS", "1")
        .output()
        .unwrap();
    assert_eq!(out.stdout, b"60\n");
    assert_eq!(exit_code("series --n-max 3 --jobs 0"), 2);
}

#[test]
fn large_counts_stay_exact() {
    let text = stdout("series --n-max 120 --max-part 5 --json");
    let record: OutputRecord = serde_json::from_str(&text).unwrap();
    let patavoid_cli::Outcome::Sequence { terms } = record.result else {
        panic!("expected a sequence");
    };
    // far beyond u64
    assert!(terms.last().unwrap().value.len() > 20);
}
