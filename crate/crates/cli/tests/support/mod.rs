//! Corpus, golden-file and process helpers shared by the CLI test targets.

#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use frobkit_cli::session::parse_session;

pub const BLESS_ENV: &str = "FROBKIT_BLESS";

pub fn tests_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

pub fn corpus_dir() -> PathBuf {
    tests_dir().join("corpus")
}

pub fn golden_dir() -> PathBuf {
    tests_dir().join("golden")
}

pub fn corpus_files() -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = fs::read_dir(corpus_dir())
        .expect("corpus directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "frob"))
        .collect();
    files.sort();
    files
}

#[derive(Debug, Clone)]
pub struct GoldenCase {
    pub name: String,
    pub session: PathBuf,
    pub code: i32,
    pub args: Vec<String>,
}

pub fn manifest() -> Vec<GoldenCase> {
    let text = fs::read_to_string(golden_dir().join("manifest.txt")).expect("manifest");
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut parts = l.split_whitespace();
            let name = parts.next().unwrap().to_string();
            let session = corpus_dir().join(parts.next().unwrap());
            let code = parts.next().unwrap().parse().unwrap();
            GoldenCase {
                name,
                session,
                code,
                args: parts.map(String::from).collect(),
            }
        })
        .collect()
}

/// Runs the binary; `cache` is the cache directory, or None for `--no-cache`.
pub fn frobkit(args: &[String], session: &Path, cache: Option<&Path>) -> (i32, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_frobkit"));
    cmd.args(args).arg("--session").arg(session);
    match cache {
        Some(dir) => {
            cmd.env("FROBKIT_CACHE_DIR", dir);
        }
        None => {
            cmd.arg("--no-cache").env_remove("FROBKIT_CACHE_DIR");
        }
    }
    let out = cmd.output().expect("spawn frobkit");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8 output"))
}

/// print(parse(print(parse(text)))) = print(parse(text)) and the reparsed
/// session equals the first one. Returns the number of files checked.
pub fn check_round_trip() -> Result<usize, String> {
    let files = corpus_files();
    for path in &files {
        let text = fs::read_to_string(path).map_err(|e| e.to_string())?;
        let first = parse_session(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        let printed = first.to_string();
        let second = parse_session(&printed).map_err(|e| format!("{} reprinted: {e}", path.display()))?;
        if second != first || second.to_string() != printed {
            return Err(format!("{} does not round-trip", path.display()));
        }
    }
    Ok(files.len())
}

/// Every manifest case gives the golden bytes and exit code with the cache
/// disabled, cold and warm. With `bless`, goldens are rewritten from the
/// uncached run instead. Returns the number of cases.
pub fn check_goldens(bless: bool) -> Result<usize, String> {
    let cache = tempfile::tempdir().map_err(|e| e.to_string())?;
    let cases = manifest();
    for case in &cases {
        let golden_path = golden_dir().join(format!("{}.json", case.name));
        let (code, uncached) = frobkit(&case.args, &case.session, None);
        if code != case.code {
            return Err(format!("{}: exit code {code}, expected {}", case.name, case.code));
        }
        for pass in ["cold", "warm"] {
            let (c, cached) = frobkit(&case.args, &case.session, Some(cache.path()));
            if c != code || cached != uncached {
                return Err(format!("{}: {pass} cache run differs from uncached run", case.name));
            }
        }
        if bless {
            fs::write(&golden_path, &uncached).map_err(|e| e.to_string())?;
            continue;
        }
        let golden = fs::read_to_string(&golden_path).map_err(|e| format!("{}: {e}", golden_path.display()))?;
        if golden != uncached {
            return Err(format!("{}: output differs from {}", case.name, golden_path.display()));
        }
    }
    let commands: std::collections::BTreeSet<&str> = cases.iter().map(|c| c.args[0].as_str()).collect();
    for cmd in ALL_COMMANDS {
        if !commands.contains(cmd) {
            return Err(format!("no golden covers '{cmd}'"));
        }
    }
    Ok(cases.len())
}

pub const ALL_COMMANDS: &[&str] = &[
    "gb",
    "member",
    "colon",
    "intersect",
    "bracket",
    "root",
    "trace",
    "solve-hom",
    "validate",
    "kchain",
    "hsl",
    "nilpart",
    "stablepart",
    "compatible",
    "closure",
    "enumerate",
    "oracle-nilpotent",
    "oracle-submodules",
    "injectivity",
];
