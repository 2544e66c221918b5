//! End-to-end tests of the command-line interface.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_musener")
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let output = run_in(dir.path(), &["frobnicate"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr(&output).contains("Usage"));
    let output = run_in(dir.path(), &["eval", "--bogus-flag", "x"]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn help_and_version_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run_in(dir.path(), &["--help"]).status.code(), Some(0));
    assert_eq!(run_in(dir.path(), &["--version"]).status.code(), Some(0));
}

#[test]
fn missing_input_is_a_data_error_naming_the_path() {
    let dir = tempfile::tempdir().unwrap();
    let output = run_in(
        dir.path(),
        &["train", "--train", "missing.iob", "--model-out", "m.txt"],
    );
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("missing.iob"), "{}", stderr(&output));
}

#[test]
fn eval_of_identical_files_is_all_hundreds() {
    let dir = tempfile::tempdir().unwrap();
    let gold = fixture("ugc_gold.iob");
    let output = run_in(
        dir.path(),
        &[
            "eval",
            "--gold",
            gold.to_str().unwrap(),
            "--pred",
            gold.to_str().unwrap(),
        ],
    );
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    let text = stdout(&output);
    for line in ["Contributor", "Musical Work", "Overall"] {
        assert!(text.contains(line), "{text}");
    }
    assert_eq!(text.matches("100.00").count(), 9, "{text}");

    // --json carries the same numbers at full precision
    let output = run_in(
        dir.path(),
        &[
            "eval",
            "--gold",
            gold.to_str().unwrap(),
            "--pred",
            gold.to_str().unwrap(),
            "--json",
        ],
    );
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["overall"]["f1"], 100.0);
    assert_eq!(value["contributor"]["tp"], 3);
    assert_eq!(value["musical_work"]["tp"], 4);
}

#[test]
fn sweep_emits_twelve_rows_on_the_default_grid() {
    let dir = tempfile::tempdir().unwrap();
    let output = run_in(
        dir.path(),
        &[
            "sweep",
            "--schedule",
            fixture("schedule.jsonl").to_str().unwrap(),
            "--gold",
            fixture("ugc_gold.iob").to_str().unwrap(),
        ],
    );
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    let table = stdout(&output);
    assert_eq!(table.lines().count(), 13, "header + 12 rows:\n{table}");

    let output = run_in(
        dir.path(),
        &[
            "sweep",
            "--schedule",
            fixture("schedule.jsonl").to_str().unwrap(),
            "--gold",
            fixture("ugc_gold.iob").to_str().unwrap(),
            "--json",
        ],
    );
    let rows: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 12);
    assert_eq!(rows[0]["t"], 800);
    assert_eq!(rows[11]["w"], 0.5);
}

#[test]
fn tokenize_then_split_has_floor_sized_test_sets() {
    let dir = tempfile::tempdir().unwrap();
    let raw: String = (0..10)
        .map(|i| format!("listening to track number {i} tonight\n"))
        .collect();
    std::fs::write(dir.path().join("raw.txt"), raw).unwrap();
    let output = run_in(
        dir.path(),
        &["tokenize", "--input", "raw.txt", "--output", "all.iob"],
    );
    assert_eq!(output.status.code(), Some(0));
    let output = run_in(
        dir.path(),
        &[
            "split", "--input", "all.iob", "--seed", "7", "--out-train", "train.iob",
            "--out-testa", "a.iob", "--out-testb", "b.iob",
        ],
    );
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    assert!(stderr(&output).contains("8 train / 1 testA / 1 testB"));
}

#[test]
fn schedule_build_reports_skips_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let mut lines = std::fs::read_to_string(fixture("schedule.jsonl")).unwrap();
    lines.push_str("{\"ts\": \"2018-05-01T12:00:00Z\", \"text\": \"no prefix here\"}\n");
    lines.push_str("not json at all\n");
    std::fs::write(dir.path().join("bot.jsonl"), lines).unwrap();

    let output = run_in(
        dir.path(),
        &["schedule-build", "--input", "bot.jsonl", "--output", "schedule.jsonl"],
    );
    assert_eq!(output.status.code(), Some(0));
    assert!(stderr(&output).contains("5 entries, 2 lines skipped"), "{}", stderr(&output));

    // the emitted parsed form loads back without losses
    let output = run_in(
        dir.path(),
        &[
            "match",
            "--schedule", "schedule.jsonl",
            "--input", fixture("ugc_gold.iob").to_str().unwrap(),
            "--output", "pred.iob",
        ],
    );
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
}

#[test]
fn match_diagnostics_are_line_json() {
    let dir = tempfile::tempdir().unwrap();
    let output = run_in(
        dir.path(),
        &[
            "match",
            "--schedule", fixture("schedule.jsonl").to_str().unwrap(),
            "--input", fixture("ugc_gold.iob").to_str().unwrap(),
            "--t", "1200", "--w", "0.33", "--c", "0.33",
            "--output", "pred.iob",
            "--diagnostics", "diag.jsonl",
        ],
    );
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    let diag = std::fs::read_to_string(dir.path().join("diag.jsonl")).unwrap();
    assert_eq!(diag.lines().count(), 6);
    for line in diag.lines() {
        let value: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(value["id"].is_string());
        for candidate in value["candidates"].as_array().unwrap() {
            let s = candidate["s_final"].as_f64().unwrap();
            assert!((0.0..=1.0).contains(&s));
        }
    }
    // the u2 tweet retains its contributor candidate at c=0.33
    let u2: serde_json::Value = serde_json::from_str(diag.lines().nth(1).unwrap()).unwrap();
    assert!(u2["candidates"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["entity_text"] == "Pyotr Ilyich Tchaikovsky"));
}

#[test]
fn stats_match_the_fixture_hand_counts() {
    let dir = tempfile::tempdir().unwrap();
    let output = run_in(
        dir.path(),
        &[
            "stats", "--input", fixture("ugc_gold.iob").to_str().unwrap(), "--json",
        ],
    );
    assert_eq!(output.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["tweets"], 6);
    assert_eq!(value["total_tokens"], 50);
    assert_eq!(value["contributor_tokens"], 3);
    assert_eq!(value["musical_work_tokens"], 11);
    assert_eq!(value["contributor_pct"], 6.0);
    assert_eq!(value["musical_work_pct"], 22.0);
}

#[test]
fn wilcoxon_text_and_json_agree() {
    let dir = tempfile::tempdir().unwrap();
    let output = run_in(dir.path(), &["wilcoxon", "--a", "1,2,3", "--b", "4,5,6"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("W = 6"), "{text}");
    assert!(text.contains("0.1000"), "{text}");
    assert!(text.contains("exact"), "{text}");

    let output = run_in(
        dir.path(),
        &["wilcoxon", "--a", "1,2,3", "--b", "4,5,6", "--json"],
    );
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["statistic"], 6.0);
    assert_eq!(value["p_two_sided"], 0.1);
    assert_eq!(value["exact"], true);
}

#[test]
fn jobs_flag_does_not_change_outputs() {
    let dir = tempfile::tempdir().unwrap();
    for (jobs, out) in [("1", "pred1.iob"), ("4", "pred4.iob")] {
        let output = run_in(
            dir.path(),
            &[
                "--jobs", jobs,
                "match",
                "--schedule", fixture("schedule.jsonl").to_str().unwrap(),
                "--input", fixture("ugc_gold.iob").to_str().unwrap(),
                "--output", out,
            ],
        );
        assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    }
    let a = std::fs::read(dir.path().join("pred1.iob")).unwrap();
    let b = std::fs::read(dir.path().join("pred4.iob")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn reconcile_granularities_differ_when_model_found_something() {
    let dir = tempfile::tempdir().unwrap();
    // model: only a contributor on u1; schedule will add work spans elsewhere
    let model_pred = "\
# id=x1 ts=2018-05-01T10:00:00Z
Mascagni\tUNK\tUNK\tB-CONTR
played\tUNK\tUNK\tO
Cavalleria\tUNK\tUNK\tO
Rusticana\tUNK\tUNK\tO

";
    let schedule_pred = "\
# id=x1 ts=2018-05-01T10:00:00Z
Mascagni\tUNK\tUNK\tO
played\tUNK\tUNK\tO
Cavalleria\tUNK\tUNK\tB-WORK
Rusticana\tUNK\tUNK\tI-WORK

";
    std::fs::write(dir.path().join("model.iob"), model_pred).unwrap();
    std::fs::write(dir.path().join("sched.iob"), schedule_pred).unwrap();

    let labels_of = |path: &Path| -> Vec<String> {
        std::fs::read_to_string(path)
            .unwrap()
            .lines()
            .filter(|l| l.contains('\t'))
            .map(|l| l.rsplit('\t').next().unwrap().to_string())
            .collect()
    };

    let output = run_in(
        dir.path(),
        &[
            "reconcile", "--model-pred", "model.iob", "--schedule-pred", "sched.iob",
            "--granularity", "type", "--output", "merged_type.iob",
        ],
    );
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    assert_eq!(
        labels_of(&dir.path().join("merged_type.iob")),
        vec!["B-CONTR", "O", "B-WORK", "I-WORK"]
    );

    let output = run_in(
        dir.path(),
        &[
            "reconcile", "--model-pred", "model.iob", "--schedule-pred", "sched.iob",
            "--granularity", "tweet", "--output", "merged_tweet.iob",
        ],
    );
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(
        labels_of(&dir.path().join("merged_tweet.iob")),
        vec!["B-CONTR", "O", "O", "O"]
    );
}

#[test]
fn gazetteer_directory_flag_and_env_are_honored() {
    let dir = tempfile::tempdir().unwrap();
    // an incomplete gazetteer directory must be rejected with a clear message
    std::fs::write(dir.path().join("work_keys.txt"), "C\nD\n").unwrap();
    let output = run_in(
        dir.path(),
        &[
            "train",
            "--train", fixture("separable.iob").to_str().unwrap(),
            "--gazetteers", ".",
            "--model-out", "m.txt",
        ],
    );
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("contributor_first_names"), "{}", stderr(&output));

    // the environment variable points at the same (incomplete) directory
    let output = Command::new(bin())
        .args([
            "train",
            "--train", fixture("separable.iob").to_str().unwrap(),
            "--model-out", "m.txt",
        ])
        .env("MUSENER_GAZETTEERS", dir.path())
        .current_dir(dir.path())
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("contributor_first_names"), "{}", stderr(&output));

    // without flag or env the bundled lists make training self-contained
    let output = Command::new(bin())
        .args([
            "train",
            "--train", fixture("separable.iob").to_str().unwrap(),
            "--model-out", "m.txt",
        ])
        .env_remove("MUSENER_GAZETTEERS")
        .current_dir(dir.path())
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(0), "{}", stderr(&output));
    assert!(stderr(&output).contains("<bundled>"), "{}", stderr(&output));
}
