//! Content-addressed JSON cache: one file per key, named by the SHA-256 of
//! the canonical key string.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: String,
    pub schema_version: u32,
    pub payload: Value,
}

pub struct Cache {
    dir: PathBuf,
}

/// `op|name=value|…` with arguments in the given (fixed) order.
pub fn key(op: &str, args: &[(&str, String)]) -> String {
    let mut k = op.to_string();
    for (n, v) in args {
        k.push('|');
        k.push_str(n);
        k.push('=');
        k.push_str(v);
    }
    k
}

impl Cache {
    pub fn open(dir: &Path) -> io::Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(Cache { dir: dir.to_path_buf() })
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{}.json", hex::encode(Sha256::digest(key.as_bytes()))))
    }

    /// The stored payload, if present, readable and of the current schema.
    pub fn get(&self, key: &str) -> Option<Value> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        (entry.key == key && entry.schema_version == SCHEMA_VERSION).then_some(entry.payload)
    }

    /// Writes through a temporary file and a rename, so readers never see a
    /// partial entry.
    pub fn put(&self, key: &str, payload: &Value) -> io::Result<()> {
        let entry = CacheEntry { key: key.to_string(), schema_version: SCHEMA_VERSION, payload: payload.clone() };
        let path = self.path(key);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, serde_json::to_string(&entry)?)?;
        fs::rename(tmp, path)
    }

    /// Every readable entry, ordered by file name.
    pub fn entries(&self) -> io::Result<Vec<CacheEntry>> {
        let mut paths: Vec<PathBuf> = fs::read_dir(&self.dir)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        paths.sort();
        Ok(paths
            .iter()
            .filter_map(|p| serde_json::from_str(&fs::read_to_string(p).ok()?).ok())
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let k = key("dims", &[("weight", "1,0,0,0,0,0,0,0".into())]);
        assert_eq!(cache.get(&k), None);
        let v = serde_json::json!({"dim": "248"});
        cache.put(&k, &v).unwrap();
        assert_eq!(cache.get(&k), Some(v.clone()));
        let entries = cache.entries().unwrap();
        assert_eq!(entries.len(), 1);
        assert_eq!(entries[0].key, k);
        assert_eq!(entries[0].payload, v);
    }
}
