//! Replays every golden file through the binary and holds the output to
//! the recorded bytes. Each golden embeds its own argv in the query echo,
//! so the corpus is self-describing.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn binary() -> Command {
    let mut command = Command::new(env!("CARGO_BIN_EXE_axesk"));
    command.env_remove("AXESK_ENUM_BUDGET");
    command
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn golden_files() -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(golden_dir())
        .expect("golden directory exists")
        .map(|entry| entry.expect("directory entry").path())
        .filter(|path| path.extension().is_some_and(|extension| extension == "json"))
        .collect();
    files.sort();
    files
}

fn recorded_argv(document: &Value) -> Vec<String> {
    document["query"]["argv"]
        .as_array()
        .expect("query echoes its argv")
        .iter()
        .map(|entry| entry.as_str().expect("argv entry is a string").to_string())
        .collect()
}

#[test]
fn goldens_replay_byte_for_byte() {
    let files = golden_files();
    assert!(!files.is_empty(), "golden corpus is present");
    for path in files {
        let expected = std::fs::read(&path).expect("golden file is readable");
        let document: Value = serde_json::from_slice(&expected).expect("golden file parses");
        let output = binary()
            .args(recorded_argv(&document))
            .output()
            .expect("binary runs");
        assert!(
            output.status.success(),
            "golden {} exits zero",
            path.display()
        );
        assert!(
            output.stderr.is_empty(),
            "golden {} keeps stderr silent",
            path.display()
        );
        assert_eq!(
            output.stdout,
            expected,
            "golden {} is byte-exact",
            path.display()
        );
    }
}

#[test]
fn corpus_covers_every_command_and_both_parities() {
    let files = golden_files();
    assert!(files.len() >= 12, "corpus holds at least twelve files");
    let mut commands = BTreeSet::new();
    let mut characteristics = BTreeSet::new();
    let mut verified = 0usize;
    for path in &files {
        let bytes = std::fs::read(path).expect("golden file is readable");
        let document: Value = serde_json::from_slice(&bytes).expect("golden file parses");
        assert_eq!(
            document["schema_version"].as_str(),
            Some("1"),
            "golden {} carries the schema version",
            path.display()
        );
        let query = &document["query"];
        commands.insert(query["command"].as_str().expect("command echoed").to_string());
        if let Some(p) = query["p"].as_u64() {
            characteristics.insert(p);
        }
        if let Some(p) = query["char"].as_u64() {
            characteristics.insert(p);
        }
        if query["verify"].as_bool() == Some(true) {
            verified += 1;
        }
    }
    for name in ["cyc", "k", "tc", "summand", "homology", "hc"] {
        assert!(commands.contains(name), "corpus covers `{name}`");
    }
    assert!(characteristics.contains(&2), "corpus covers characteristic 2");
    assert!(
        characteristics.iter().any(|&p| p > 2),
        "corpus covers an odd characteristic"
    );
    assert!(verified >= 1, "corpus contains a --verify run");
}

#[test]
fn verification_never_changes_the_result() {
    let plain = binary()
        .args(["cyc", "--d", "3", "--s", "7"])
        .output()
        .expect("binary runs");
    let verified = binary()
        .args(["cyc", "--d", "3", "--s", "7", "--verify"])
        .output()
        .expect("binary runs");
    assert!(plain.status.success() && verified.status.success());
    let plain: Value = serde_json::from_slice(&plain.stdout).expect("output parses");
    let verified: Value = serde_json::from_slice(&verified.stdout).expect("output parses");
    assert_eq!(plain["result"], verified["result"]);
    assert!(plain.get("verification").is_none());
    assert_eq!(verified["verification"]["matches"], Value::Bool(true));
}

#[test]
fn computation_errors_use_the_structured_envelope() {
    let cases = [
        (vec!["k", "--p", "4", "--d", "3", "--q", "2"], "not-prime"),
        (vec!["homology", "--word", "x1x1"], "word-has-repetitions"),
        (
            vec!["summand", "--m", "6", "--s", "4", "--p", "3", "--tp", "--degree", "2"],
            "period-mismatch",
        ),
        (vec!["k", "--p", "0", "--d", "3", "--q", "2"], "invalid-argument"),
    ];
    for (args, category) in cases {
        let output = binary().args(&args).output().expect("binary runs");
        assert_eq!(output.status.code(), Some(1), "{args:?} exits one");
        assert!(output.stdout.is_empty(), "{args:?} keeps stdout silent");
        let envelope: Value =
            serde_json::from_slice(&output.stderr).expect("stderr carries JSON");
        assert_eq!(
            envelope["error"]["category"].as_str(),
            Some(category),
            "{args:?} reports `{category}`"
        );
    }
}

#[test]
fn usage_errors_exit_with_code_two() {
    let output = binary()
        .args(["cyc", "--d", "3"])
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn budget_override_is_honoured() {
    let output = binary()
        .env("AXESK_ENUM_BUDGET", "10")
        .args(["cyc", "--d", "3", "--s", "6", "--verify"])
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(1));
    let envelope: Value = serde_json::from_slice(&output.stderr).expect("stderr carries JSON");
    assert_eq!(
        envelope["error"]["category"].as_str(),
        Some("budget-exceeded")
    );
}
