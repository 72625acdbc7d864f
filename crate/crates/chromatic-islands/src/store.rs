//! Append-only store of solver outcomes keyed by instance hash, so sweep
//! reruns skip everything already solved.
//!
//! One JSONL line per outcome. The key is a SHA-256 digest of the
//! serialized instance spec, which makes reruns of the same command
//! idempotent: a hash hit returns the stored outcome instead of solving
//! again, unless the caller forces a re-solve.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};
use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

/// One stored line: the instance spec, its outcome, and bookkeeping.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StoredResult {
    pub hash: String,
    pub spec: Value,
    pub outcome: Value,
    pub timestamp: u64,
}

/// JSONL-backed result cache. All writes go through one handle; the file
/// is only ever appended to.
pub struct ResultStore {
    path: PathBuf,
    file: File,
    by_hash: HashMap<String, StoredResult>,
}

impl ResultStore {
    /// Opens (or creates) the store and indexes existing lines. On
    /// duplicate hashes the last line wins, matching append semantics.
    pub fn open(path: impl AsRef<Path>) -> io::Result<Self> {
        let path = path.as_ref().to_path_buf();
        let file = OpenOptions::new()
            .create(true)
            .append(true)
            .read(true)
            .open(&path)?;
        let mut by_hash = HashMap::new();
        for (i, line) in BufReader::new(File::open(&path)?).lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let rec: StoredResult = serde_json::from_str(&line).map_err(|e| {
                io::Error::new(
                    io::ErrorKind::InvalidData,
                    format!("{}:{}: {e}", path.display(), i + 1),
                )
            })?;
            by_hash.insert(rec.hash.clone(), rec);
        }
        Ok(Self {
            path,
            file,
            by_hash,
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.by_hash.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_hash.is_empty()
    }

    /// Digest of an instance spec; stable across runs because specs are
    /// structs with a fixed field order.
    pub fn hash_of<S: Serialize>(spec: &S) -> String {
        let raw = serde_json::to_vec(spec).expect("spec serializes");
        let mut hasher = Sha256::new();
        hasher.update(&raw);
        format!("{:x}", hasher.finalize())
    }

    pub fn get(&self, hash: &str) -> Option<&StoredResult> {
        self.by_hash.get(hash)
    }

    pub fn get_spec<S: Serialize>(&self, spec: &S) -> Option<&StoredResult> {
        self.by_hash.get(&Self::hash_of(spec))
    }

    /// Appends an outcome for the spec. Returns false (and writes
    /// nothing) when the hash is already present, keeping reruns
    /// idempotent.
    pub fn record<S: Serialize, O: Serialize>(
        &mut self,
        spec: &S,
        outcome: &O,
    ) -> io::Result<bool> {
        let hash = Self::hash_of(spec);
        if self.by_hash.contains_key(&hash) {
            return Ok(false);
        }
        let rec = StoredResult {
            hash: hash.clone(),
            spec: serde_json::to_value(spec).expect("spec serializes"),
            outcome: serde_json::to_value(outcome).expect("outcome serializes"),
            timestamp: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        };
        let mut line = serde_json::to_string(&rec).expect("record serializes");
        line.push('\n');
        self.file.write_all(line.as_bytes())?;
        self.file.flush()?;
        self.by_hash.insert(hash, rec);
        Ok(true)
    }

    /// Runs `solve` only on a cache miss (or when forced), recording the
    /// outcome. Returns the outcome and whether the solver actually ran.
    pub fn run_cached<S, O, F>(&mut self, spec: &S, force: bool, solve: F) -> io::Result<(O, bool)>
    where
        S: Serialize,
        O: Serialize + for<'de> Deserialize<'de>,
        F: FnOnce() -> O,
    {
        let hash = Self::hash_of(spec);
        if !force {
            if let Some(hit) = self.by_hash.get(&hash) {
                if let Ok(outcome) = serde_json::from_value(hit.outcome.clone()) {
                    return Ok((outcome, false));
                }
            }
        }
        let outcome = solve();
        let rec = StoredResult {
            hash: hash.clone(),
            spec: serde_json::to_value(spec).expect("spec serializes"),
            outcome: serde_json::to_value(&outcome).expect("outcome serializes"),
            timestamp: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        };
        let mut line = serde_json::to_string(&rec).expect("record serializes");
        line.push('\n');
        self.file.write_all(line.as_bytes())?;
        self.file.flush()?;
        self.by_hash.insert(hash, rec);
        Ok((outcome, true))
    }
}
