//! Black-box tests of the command-line binary: exact output for the small
//! documented cases, exit-code contract, byte determinism, and JSON shapes.

use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_lassalle"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(output.stdout).expect("utf-8 stdout"),
        String::from_utf8(output.stderr).expect("utf-8 stderr"),
        output.status.code().expect("exit code"),
    )
}

fn stdout_of(args: &[&str]) -> String {
    let (stdout, stderr, code) = run(args);
    assert_eq!(code, 0, "args {args:?} failed: {stderr}");
    stdout
}

#[test]
fn sort_applies_one_stack_pass() {
    assert_eq!(stdout_of(&["sort", "3 1 4 2"]), "1 3 2 4\n");
    assert_eq!(stdout_of(&["sort", "2 6 3 5 7 4 1"]), "2 3 5 6 1 4 7\n");
}

#[test]
fn sort_iterates() {
    assert_eq!(stdout_of(&["sort", "3 1 4 2", "--iterations", "2"]), "1 2 3 4\n");
    assert_eq!(stdout_of(&["sort", "3 1 4 2", "--iterations", "0"]), "3 1 4 2\n");
}

#[test]
fn fertility_default_and_methods() {
    assert_eq!(stdout_of(&["fertility", "1 2 3"]), "5\n");
    assert_eq!(stdout_of(&["fertility", "2 1 3", "--method", "trees"]), "1\n");
    assert_eq!(stdout_of(&["fertility", "1 3 2", "--method", "oracle"]), "0\n");
    let all = stdout_of(&["fertility", "2 1 3", "--all-methods"]);
    assert_eq!(all, "formula: 1\ntrees: 1\noracle: 1\n");
}

#[test]
fn enumerate_uniquely_sorted_of_length_three() {
    assert_eq!(stdout_of(&["enumerate", "uniquely-sorted", "3"]), "2 1 3\n");
    let (_, stderr, code) = run(&["enumerate", "uniquely-sorted", "4"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("odd length"), "stderr: {stderr}");
}

#[test]
fn enumerate_hook_configurations_of_length_three() {
    assert_eq!(stdout_of(&["enumerate", "vhc", "3"]), "1 2 3 ;\n2 1 3 ; 1>3\n");
}

#[test]
fn enumerate_matchings_on_four_points() {
    assert_eq!(stdout_of(&["enumerate", "m-tilde", "4"]), "1,3|2,4 ; 1->0\n");
}

#[test]
fn enumerate_partition_pairs_as_json_lines() {
    let out = stdout_of(&["enumerate", "p-tilde", "4", "--format", "json"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    for line in &lines {
        let value: serde_json::Value = serde_json::from_str(line).expect("json line");
        assert!(value.get("partition").is_some(), "line: {line}");
        assert!(value.get("orientation").is_some(), "line: {line}");
    }
    assert_eq!(lines[1], r#"{"partition":"1,3|2,4","orientation":["1->0"]}"#);
}

#[test]
fn enumerate_words_as_json_arrays() {
    let out = stdout_of(&["enumerate", "uniquely-sorted", "5", "--format", "json"]);
    let words: Vec<Vec<u64>> = out
        .lines()
        .map(|line| serde_json::from_str(line).expect("json array"))
        .collect();
    assert_eq!(words.len(), 5);
    assert!(words.contains(&vec![4, 2, 1, 3, 5]));
}

#[test]
fn lassalle_table_lists_the_sequence() {
    let out = stdout_of(&["table", "lassalle", "6"]);
    let body: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body, vec!["m,value", "1,1", "2,1", "3,5", "4,56", "5,1092", "6,32670"]);
}

#[test]
fn refined_first_table_at_k_one() {
    let out = stdout_of(&["table", "refined-first", "1"]);
    let body: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body, vec!["first_entry,count", "1,0", "2,1", "3,0"]);
}

#[test]
fn sorted_table_columns_sum_to_the_sequence() {
    let out = stdout_of(&["table", "e", "5"]);
    let mut sums = [0u64; 6];
    for line in out.lines().filter(|l| !l.starts_with('#')).skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        let n: usize = fields[1].parse().unwrap();
        sums[n] += fields[2].parse::<u64>().unwrap();
    }
    assert_eq!(sums, [0, 1, 0, 1, 0, 5]);
}

#[test]
fn table_json_shape() {
    let out = stdout_of(&["table", "lassalle", "3", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&out).expect("json body");
    assert_eq!(value["columns"], serde_json::json!(["m", "value"]));
    assert_eq!(value["rows"], serde_json::json!([[1, "1"], [2, "1"], [3, "5"]]));
}

#[test]
fn verify_suite_passes_and_reports() {
    let (stdout, _, code) = run(&["verify", "bijection", "--bound", "4"]);
    assert_eq!(code, 0);
    assert!(stdout.lines().all(|l| l.starts_with("pass ") || l.starts_with("verified:")));
    assert!(stdout.trim_end().ends_with("0 failures"), "stdout: {stdout}");
}

#[test]
fn verify_rejects_unknown_suite() {
    let (_, stderr, code) = run(&["verify", "everything"]);
    assert_eq!(code, 2);
    assert!(stderr.starts_with("error:"), "stderr: {stderr}");
}

#[test]
fn words_with_gaps_are_accepted() {
    // Any word with distinct positive letters is sortable; only true
    // permutations of 1..n are required where hosts demand normalization.
    assert_eq!(stdout_of(&["sort", "3 1 5"]), "1 3 5\n");
}

#[test]
fn malformed_words_are_usage_errors() {
    for bad in ["0 1 2", "1 2 2", "one two"] {
        let (_, stderr, code) = run(&["sort", bad]);
        assert_eq!(code, 2, "input {bad:?}");
        assert!(stderr.starts_with("error:"), "input {bad:?}: {stderr}");
    }
}

#[test]
fn bounds_are_enforced() {
    let (_, stderr, code) = run(&["enumerate", "vhc", "12"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("bound"), "stderr: {stderr}");
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        &["enumerate", "vhc", "4"][..],
        &["enumerate", "p-tilde", "5"][..],
        &["table", "d", "7"][..],
        &["verify", "identities", "--bound", "5"][..],
    ] {
        let first = stdout_of(args);
        let second = stdout_of(args);
        assert_eq!(first, second, "args {args:?}");
        assert!(!first.is_empty(), "args {args:?}");
    }
}

#[test]
fn worker_count_flag_does_not_change_output() {
    let default = stdout_of(&["enumerate", "vhc", "4"]);
    let pinned = stdout_of(&["enumerate", "vhc", "4", "--jobs", "2"]);
    assert_eq!(default, pinned);
}
