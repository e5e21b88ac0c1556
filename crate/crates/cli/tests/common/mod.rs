#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Run {
    pub fn json(&self) -> serde_json::Value {
        serde_json::from_str(&self.stdout)
            .unwrap_or_else(|e| panic!("stdout is not JSON ({e}):\n{}", self.stdout))
    }
}

pub fn finemu(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_finemu"))
        .args(args)
        .output()
        .expect("spawn finemu");
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

/// Write `contents` to a scratch file under the target directory.
pub fn scratch(name: &str, contents: &str) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).expect("write scratch file");
    path.to_string_lossy().into_owned()
}

pub fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

pub const E11A1: &str = "0,-1,1,-10,-20";
pub const E17A1: &str = "1,-1,1,-1,-14";
pub const E17A2: &str = "1,-1,1,-6,-4";
pub const E201C1: &str = "1,1,0,-794,8289";
pub const E469A1: &str = "1,0,1,-80,-275";

pub const FACTS_11A1: &str = r#"[
  {"kind": "CotorsionAssumed", "curve": "11a1", "provenance": "assumed for the example"},
  {"kind": "FineMuZero", "curve": "11a1", "provenance": "assumed for the example"}
]"#;

pub const FACTS_17A1: &str =
    r#"[{"kind": "FineMuZero", "curve": "17a1", "provenance": "assumed for the example"}]"#;
