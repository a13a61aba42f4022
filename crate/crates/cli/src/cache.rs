use std::fs::OpenOptions;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::CliError;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "EQMINORS_CACHE_DIR";

const CODE_VERSION: &str = concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION"));

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn sha(s: &str) -> String {
    hex(&Sha256::digest(s.as_bytes()))
}

pub fn cache_dir() -> PathBuf {
    std::env::var_os(CACHE_ENV).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("eqminors-cache"))
}

/// Entries live under `<dir>/<version hash>/<key>.json`, so a new version never reads old entries.
pub struct Cache {
    root: PathBuf,
}

impl Cache {
    pub fn new(dir: &Path) -> Self {
        Cache { root: dir.to_path_buf() }
    }

    fn version_dir(&self) -> PathBuf {
        self.root.join(&sha(CODE_VERSION)[..16])
    }

    pub fn key(params: &str) -> String {
        sha(&format!("{CODE_VERSION}\n{params}"))
    }

    pub fn path(&self, key: &str) -> PathBuf {
        self.version_dir().join(format!("{key}.json"))
    }

    /// A stored `(output, passed)` pair, if present and readable.
    pub fn get(&self, key: &str) -> Option<(Value, bool)> {
        let text = std::fs::read_to_string(self.path(key)).ok()?;
        let v: Value = serde_json::from_str(&text).ok()?;
        Some((v.get("output")?.clone(), v.get("passed")?.as_bool()?))
    }

    /// Atomic write: a temp file in the same directory renamed over the entry.
    pub fn put(&self, key: &str, params: &str, output: &Value, passed: bool) -> Result<(), CliError> {
        let dir = self.version_dir();
        let io = |e: std::io::Error| CliError::Failure(format!("cache {}: {e}", dir.display()));
        std::fs::create_dir_all(&dir).map_err(io)?;
        let mut tmp = tempfile::NamedTempFile::new_in(&dir).map_err(io)?;
        let entry = json!({"params": params, "version": CODE_VERSION, "output": output, "passed": passed});
        tmp.write_all(entry.to_string().as_bytes()).map_err(io)?;
        tmp.persist(self.path(key)).map_err(|e| io(e.error))?;
        Ok(())
    }

    /// Appends `key params` to `hits.log`.
    pub fn record_hit(&self, key: &str, params: &str) {
        let line = format!("{key} {}\n", params.replace('\n', " "));
        if let Ok(mut f) = OpenOptions::new().create(true).append(true).open(self.root.join("hits.log")) {
            let _ = f.write_all(line.as_bytes());
        }
    }
}
