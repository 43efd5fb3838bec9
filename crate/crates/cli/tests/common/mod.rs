#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub const M3: &str = r#"{"points":["-1","0","1"],"weights":["1","1","1"]}"#;

pub fn write_measure(dir: &tempfile::TempDir, name: &str, json: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, json).expect("write measure file");
    path
}

pub fn run_bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cdkernel"))
        .args(args)
        .output()
        .expect("spawn cdkernel")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}
