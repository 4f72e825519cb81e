//! On-disk Groebner basis cache.
//!
//! Entries live in one directory, one JSON file per key, named by the SHA-256
//! of the key. Each entry carries a checksum over key and basis, and every
//! failure (unreadable directory, corrupt or edited file, lock contention)
//! degrades to a cache miss.

use std::fs::{self, File, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use frobkit::groebner::{BasisStore, RawBasis};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const CACHE_DIR_ENV: &str = "FROBKIT_CACHE_DIR";

#[derive(Debug, Clone)]
pub struct FileStore {
    dir: PathBuf,
}

impl FileStore {
    pub fn new(dir: impl Into<PathBuf>) -> FileStore {
        FileStore { dir: dir.into() }
    }

    /// `$FROBKIT_CACHE_DIR`, else `$XDG_CACHE_HOME/frobkit`, else `~/.cache/frobkit`.
    pub fn from_env() -> Option<FileStore> {
        if let Some(dir) = std::env::var_os(CACHE_DIR_ENV) {
            return Some(FileStore::new(dir));
        }
        if let Some(dir) = std::env::var_os("XDG_CACHE_HOME") {
            return Some(FileStore::new(Path::new(&dir).join("frobkit")));
        }
        std::env::var_os("HOME").map(|h| FileStore::new(Path::new(&h).join(".cache").join("frobkit")))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn entry_path(&self, key: &str) -> PathBuf {
        let digest = Sha256::digest(key.as_bytes());
        self.dir.join(format!("{}.json", hex::encode(digest)))
    }

    fn lock_file(&self) -> Option<File> {
        fs::create_dir_all(&self.dir).ok()?;
        OpenOptions::new()
            .create(true)
            .truncate(false)
            .write(true)
            .open(self.dir.join(".lock"))
            .ok()
    }

    fn read_entry(path: &Path, key: &str) -> Option<RawBasis> {
        let text = fs::read_to_string(path).ok()?;
        let value: Value = serde_json::from_str(&text).ok()?;
        let basis = value.get("basis")?;
        if value.get("key")?.as_str()? != key || value.get("checksum")?.as_str()? != checksum(key, basis) {
            return None;
        }
        decode_basis(basis)
    }
}

impl BasisStore for FileStore {
    fn load(&self, key: &str) -> Option<RawBasis> {
        let path = self.entry_path(key);
        if !path.exists() {
            return None;
        }
        let lock = self.lock_file()?;
        lock.lock_shared().ok()?;
        let out = FileStore::read_entry(&path, key);
        let _ = lock.unlock();
        out
    }

    fn store(&self, key: &str, basis: &RawBasis) {
        let Some(lock) = self.lock_file() else { return };
        if lock.lock().is_err() {
            return;
        }
        let path = self.entry_path(key);
        let basis = encode_basis(basis);
        let doc = json!({"key": key, "checksum": checksum(key, &basis), "basis": basis});
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let written = File::create(&tmp).and_then(|mut f| {
            f.write_all(doc.to_string().as_bytes())?;
            f.sync_all()
        });
        if written.is_ok() {
            let _ = fs::rename(&tmp, &path);
        } else {
            let _ = fs::remove_file(&tmp);
        }
        let _ = lock.unlock();
    }
}

fn checksum(key: &str, basis: &Value) -> String {
    let mut h = Sha256::new();
    h.update(key.as_bytes());
    h.update([0]);
    h.update(basis.to_string().as_bytes());
    hex::encode(h.finalize())
}

fn encode_basis(basis: &RawBasis) -> Value {
    Value::Array(
        basis
            .iter()
            .map(|vector| {
                Value::Array(
                    vector
                        .iter()
                        .map(|poly| {
                            Value::Array(poly.iter().map(|(exps, c)| json!([exps, c])).collect())
                        })
                        .collect(),
                )
            })
            .collect(),
    )
}

fn decode_basis(value: &Value) -> Option<RawBasis> {
    value
        .as_array()?
        .iter()
        .map(|vector| {
            vector
                .as_array()?
                .iter()
                .map(|poly| {
                    poly.as_array()?
                        .iter()
                        .map(|term| {
                            let pair = term.as_array()?;
                            if pair.len() != 2 {
                                return None;
                            }
                            let exps = pair[0]
                                .as_array()?
                                .iter()
                                .map(|e| e.as_u64().and_then(|e| u32::try_from(e).ok()))
                                .collect::<Option<Vec<u32>>>()?;
                            let c = u32::try_from(pair[1].as_u64()?).ok()?;
                            Some((exps, c))
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}
