#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

/// Command lines whose stdout is frozen under `tests/golden/<name>`.
pub const GOLDEN: &[(&str, &[&str])] = &[
    (
        "construct_gk1_7_3.json",
        &["construct", "--n", "7", "--k", "3", "--l", "1", "--method", "gk1"],
    ),
    (
        "construct_gk2_10_3.json",
        &[
            "construct",
            "--n",
            "10",
            "--k",
            "3",
            "--l",
            "2",
            "--method",
            "gk2",
            "--emit-cover-stats",
        ],
    ),
    (
        "construct_gk2_13_4.json",
        &[
            "construct",
            "--n",
            "13",
            "--k",
            "4",
            "--l",
            "2",
            "--method",
            "gk2",
            "--emit-cover-stats",
        ],
    ),
    (
        "construct_g53_10.json",
        &[
            "construct",
            "--n",
            "10",
            "--k",
            "5",
            "--l",
            "3",
            "--method",
            "g53",
            "--emit-cover-stats",
        ],
    ),
    (
        "construct_g43_12.json",
        &[
            "construct",
            "--n",
            "12",
            "--k",
            "4",
            "--l",
            "3",
            "--method",
            "g43",
            "--emit-cover-stats",
        ],
    ),
    ("check_bad.json", &["check", "--pair", "tests/golden/bad_pair.json"]),
    (
        "check_bad_capped.json",
        &["check", "--pair", "tests/golden/bad_pair.json", "--cap", "2"],
    ),
    ("check_gk2_8_3.json", &["check", "--pair", "tests/golden/gk2_8_3.json"]),
    ("exact_6_3_1.json", &["exact", "--n", "6", "--k", "3", "--l", "1"]),
    ("exact_5_3_2.json", &["exact", "--n", "5", "--k", "3", "--l", "2"]),
    ("exact_6_3_2.json", &["exact", "--n", "6", "--k", "3", "--l", "2"]),
    (
        "exact_6_3_2_limited.json",
        &["exact", "--n", "6", "--k", "3", "--l", "2", "--node-limit", "10"],
    ),
    ("turan_6_3_2.json", &["turan", "--n", "6", "--k", "3", "--l", "2"]),
    ("turan_5_4_3.json", &["turan", "--n", "5", "--k", "4", "--l", "3"]),
    (
        "bounds_gk2_8_3.json",
        &["bounds", "--pair", "tests/golden/gk2_8_3.json"],
    ),
    (
        "bounds_gk2_8_3.csv",
        &[
            "bounds",
            "--pair",
            "tests/golden/gk2_8_3.json",
            "--s",
            "3",
            "--format",
            "csv",
        ],
    ),
    ("report_k3.csv", &["report", "--k", "3", "--n", "30,60,90,120"]),
    (
        "report_k4.csv",
        &["report", "--k", "4", "--methods", "gk1,gk2", "--n", "9..21:4"],
    ),
    (
        "report_level3.csv",
        &["report", "--methods", "g53,g43", "--n", "12..18:6"],
    ),
    ("report_empty.csv", &["report", "--k", "3", "--n", ""]),
];

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    crate_dir().join("tests").join("golden").join(name)
}

pub fn run_cli(args: &[&str], threads: Option<usize>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_levelcover"));
    cmd.args(args).current_dir(crate_dir());
    match threads {
        Some(t) => cmd.env("LEVELCOVER_THREADS", t.to_string()),
        None => cmd.env_remove("LEVELCOVER_THREADS"),
    };
    cmd.output().expect("binary runs")
}

/// Stdout of a golden case, or a description of what went wrong.
pub fn golden_output(args: &[&str], threads: Option<usize>) -> Result<Vec<u8>, String> {
    let out = run_cli(args, threads);
    if !out.status.success() {
        return Err(format!(
            "{args:?} exited with {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(out.stdout)
}

pub fn read_golden(path: &Path) -> Result<Vec<u8>, String> {
    std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()))
}
