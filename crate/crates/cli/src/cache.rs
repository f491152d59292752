//! On-disk cache of rendered command output, keyed by a hash of the schema
//! version and the full request.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use tempfile::NamedTempFile;

/// Bump whenever the rendered representation changes.
pub const SCHEMA_VERSION: &str = "kqsym-output-v1";

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(request: &str) -> String {
        let mut h = Sha256::new();
        h.update(SCHEMA_VERSION.as_bytes());
        h.update([0]);
        h.update(request.as_bytes());
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.out"))
    }

    pub fn get(&self, request: &str) -> Option<String> {
        fs::read_to_string(self.path(&Self::key(request))).ok()
    }

    /// Writes through a temporary file in the same directory and renames it
    /// into place, so concurrent writers never expose a partial entry.
    pub fn put(&self, request: &str, output: &str) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let mut tmp = NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(output.as_bytes())?;
        tmp.persist(self.path(&Self::key(request))).map_err(|e| e.error)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn put_then_get() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path().join("nested"));
        assert_eq!(cache.get("family GQ 3"), None);
        cache.put("family GQ 3", "{\"x\":1}\n").unwrap();
        assert_eq!(cache.get("family GQ 3").as_deref(), Some("{\"x\":1}\n"));
        cache.put("family GQ 3", "second\n").unwrap();
        assert_eq!(cache.get("family GQ 3").as_deref(), Some("second\n"));
        assert_ne!(Cache::key("a"), Cache::key("b"));
    }
}
