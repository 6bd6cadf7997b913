#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn scene(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/scenes").join(name)
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl From<Output> for Run {
    fn from(o: Output) -> Self {
        Self {
            code: o.status.code().expect("exited normally"),
            stdout: String::from_utf8(o.stdout).expect("utf-8 stdout"),
            stderr: String::from_utf8(o.stderr).expect("utf-8 stderr"),
        }
    }
}

pub fn equidist(args: &[&str]) -> Run {
    equidist_with_threads(args, None)
}

pub fn equidist_with_threads(args: &[&str], threads: Option<usize>) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_equidist"));
    cmd.args(args);
    match threads {
        Some(t) => cmd.env("EQUIDIST_THREADS", t.to_string()),
        None => cmd.env_remove("EQUIDIST_THREADS"),
    };
    cmd.output().expect("binary runs").into()
}

/// Runs `args` with `--scene <scene> --out <tmp>/<out_name>` appended and
/// returns the run and the written bytes, if any.
pub fn run_to_file(args: &[&str], scene_name: &str, out_name: &str, threads: Option<usize>) -> (Run, Option<Vec<u8>>) {
    let dir = tempfile::tempdir().expect("temp dir");
    let out = dir.path().join(out_name);
    let scene = scene(scene_name);
    let mut full: Vec<&str> = args.to_vec();
    full.extend(["--scene", scene.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    let run = equidist_with_threads(&full, threads);
    let bytes = std::fs::read(&out).ok();
    (run, bytes)
}

/// The number following `key` in a `key value key value ...` summary line.
pub fn field(line: &str, key: &str) -> Option<f64> {
    let mut it = line.split_whitespace();
    while let Some(tok) = it.next() {
        if tok == key {
            return it.next()?.parse().ok();
        }
    }
    None
}
