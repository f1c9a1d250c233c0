#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

/// Golden output file and the arguments that produce it.
pub const GOLDEN: &[(&str, &[&str])] = &[
    (
        "spectrum_hmw.csv",
        &[
            "spectrum", "--model", "hmw", "--sigma", "+1", "--l-min", "-2", "--l-max", "2",
            "--nu-max", "1",
        ],
    ),
    (
        "spectrum_lac.json",
        &[
            "--format", "json", "spectrum", "--model", "lac", "--sigma", "-1", "--l-min", "-1",
            "--l-max", "1", "--nu-max", "1",
        ],
    ),
    (
        "wavefunction.csv",
        &[
            "wavefunction",
            "--nu",
            "2",
            "--l",
            "3",
            "--a",
            "1",
            "--r-max",
            "8",
            "--samples",
            "17",
        ],
    ),
    (
        "degeneracy.csv",
        &[
            "degeneracy",
            "--model",
            "hmw",
            "--sigma",
            "+1",
            "--level",
            "0",
            "--l-window",
            "-3",
            "3",
            "--show-dual",
        ],
    ),
    (
        "degeneracy_empty.json",
        &[
            "--format",
            "json",
            "degeneracy",
            "--level",
            "0",
            "--l-window",
            "1",
            "3",
        ],
    ),
    (
        "crosscheck.csv",
        &[
            "crosscheck",
            "--model",
            "hmw",
            "--l",
            "2",
            "--sigma",
            "+1",
            "--grid-n",
            "4000",
            "--r-max",
            "20",
            "--k",
            "5",
        ],
    ),
    (
        "validate.csv",
        &["validate", "--config", "fixtures/valid.json"],
    ),
    (
        "validate.json",
        &["--format", "json", "validate", "--source-density", "-2.5"],
    ),
    (
        "converge.csv",
        &[
            "converge", "--l", "2", "--grid-n", "500", "--grids", "3", "--k", "3",
        ],
    ),
];

/// Arguments and the exit code they must produce.
pub const EXIT_CODES: &[(&[&str], i32)] = &[
    (&["spectrum", "--l-min", "-1", "--l-max", "1"], 0),
    (&["spectrum", "--l-min", "3", "--l-max", "1"], 2),
    (&["spectrum", "--sigma", "2"], 2),
    (&["wavefunction", "--nu", "1", "--l", "-2"], 0),
    (&["wavefunction", "--a", "0"], 2),
    (&["wavefunction", "--samples", "1"], 2),
    (&["degeneracy", "--level", "0", "--l-window", "1", "3"], 0),
    (&["degeneracy", "--l-window", "3", "1"], 2),
    (
        &[
            "crosscheck",
            "--l",
            "2",
            "--grid-n",
            "4000",
            "--r-max",
            "20",
            "--k",
            "5",
        ],
        0,
    ),
    (
        &[
            "crosscheck",
            "--l",
            "2",
            "--grid-n",
            "50",
            "--r-max",
            "20",
            "--k",
            "5",
        ],
        1,
    ),
    (&["crosscheck", "--k", "0"], 2),
    (
        &["crosscheck", "--l", "2", "--grid-n", "4000", "--r-max", "3"],
        2,
    ),
    (&["validate", "--config", "fixtures/valid.json"], 0),
    (&["validate", "--config", "fixtures/malformed.json"], 2),
    (&["validate", "--config", "fixtures/missing_sigma.json"], 2),
    (&["validate", "--config", "fixtures/does_not_exist.json"], 2),
    (&["validate", "--mass", "-1"], 2),
    (
        &["converge", "--grid-n", "500", "--grids", "3", "--k", "2"],
        0,
    ),
    (&["converge", "--grids", "2"], 2),
    (&["frobnicate"], 2),
    (&["spectrum", "--format", "xml"], 2),
];

pub fn tests_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests")
}

pub fn golden_path(name: &str) -> PathBuf {
    tests_dir().join("golden").join(name)
}

/// Runs the binary from the tests directory so fixture paths resolve.
pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_landau-dipole"))
        .args(args)
        .current_dir(tests_dir())
        .output()
        .expect("binary runs")
}
