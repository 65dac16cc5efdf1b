use std::process::{Command, Output};

fn sweeplab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sweeplab"))
        .args(args)
        .env_remove("SWEEPLAB_LIMIT")
        .output()
        .unwrap()
}

fn code(args: &[&str]) -> i32 {
    sweeplab(args).status.code().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = sweeplab(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn enumerate_record_counts() {
    for (m, n, d, want) in [("3", "2", "1", 2), ("7", "5", "1", 66), ("1", "1", "2", 2)] {
        let out = stdout(&["enumerate", "--m", m, "--n", n, "--d", d, "--format", "jsonl"]);
        assert_eq!(out.lines().count(), want, "({m},{n},{d})");
    }
}

#[test]
fn verify_reports_path_count() {
    let out = stdout(&["verify", "--m", "3", "--n", "2", "--d", "1"]);
    assert!(out.ends_with("13 checks × 2 paths: PASS\n"), "{out}");
    let out = stdout(&["verify", "--m", "3", "--n", "2", "--d", "2"]);
    assert!(out.contains(&format!("13 checks × {} paths: PASS", 23)), "{out}");
}

#[test]
fn verify_independent_of_jobs() {
    let one = stdout(&["verify", "--m", "8", "--n", "5", "--jobs", "1"]);
    let many = stdout(&["verify", "--m", "8", "--n", "5", "--jobs", "4"]);
    assert_eq!(one, many);
}

#[test]
fn table_for_dilated_diagonal() {
    let out = stdout(&["table", "--m", "1", "--n", "1", "--d", "2", "--format", "csv"]);
    assert_eq!(out, "area,dinv,count\n0,1,1\n1,0,1\n");
}

#[test]
fn sweep_and_unsweep_round_trip() {
    assert_eq!(stdout(&["sweep", "NENEE", "--m", "3", "--n", "2"]), "NNEEE\n");
    assert_eq!(stdout(&["unsweep", "NNEEE", "--m", "3", "--n", "2"]), "NENEE\n");
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("sweeplab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("e.csv");
    let printed = stdout(&[
        "enumerate",
        "--m",
        "3",
        "--n",
        "2",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(printed, "");
    assert!(std::fs::read_to_string(&path)
        .unwrap()
        .starts_with("word,area,dinv,sweep\n"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn exit_codes() {
    // input errors
    assert_eq!(code(&["stats", "NEENE", "--m", "3", "--n", "2"]), 2);
    assert_eq!(code(&["stats", "NNXEE", "--m", "3", "--n", "2"]), 2);
    assert_eq!(code(&["stats", "NENE", "--m", "3", "--n", "2"]), 2);
    assert_eq!(code(&["enumerate", "--m", "4", "--n", "2"]), 2);
    assert_eq!(code(&["enumerate", "--m", "0", "--n", "2"]), 2);
    assert_eq!(code(&["render", "NEENE", "--m", "3", "--n", "2", "--format", "svg"]), 2);
    // limits
    assert_eq!(code(&["enumerate", "--m", "7", "--n", "5", "--limit", "5"]), 3);
    assert_eq!(code(&["table", "--m", "7", "--n", "5", "--limit", "11"]), 3);
    // misuse
    assert_eq!(code(&["stats", "NENEE", "--m", "3"]), 4);
    assert_eq!(code(&["stats", "NENEE", "--m", "3", "--n", "2", "--format", "svg"]), 4);
    for highlight in ["0", "6"] {
        let render = [
            "render",
            "NENEE",
            "--m",
            "3",
            "--n",
            "2",
            "--format",
            "svg",
            "--highlight",
            highlight,
        ];
        assert_eq!(code(&render), 4);
    }
    assert_eq!(code(&["verify", "--m", "3", "--n", "2", "--inject-fault", "nope"]), 4);
    assert_eq!(code(&["frobnicate"]), 4);
}

#[test]
fn limit_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_sweeplab"))
        .args(["enumerate", "--m", "7", "--n", "5"])
        .env("SWEEPLAB_LIMIT", "11")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn counterexample_is_named() {
    let out = sweeplab(&["verify", "--m", "7", "--n", "5", "--inject-fault", "dinv-shift"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    let last = text.lines().last().unwrap();
    assert!(last.starts_with("13 checks × 66 paths: FAIL "), "{last}");
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .starts_with("counterexample for "));
}
