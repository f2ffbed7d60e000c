//! On-disk cache of exact sequences.
//!
//! One file per sequence, `<dir>/<name>.json`, holding the values for indices
//! `0..len` and a SHA-256 checksum over the name and the serialized values.
//! A file that fails to parse or to match its checksum is treated as absent.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const CACHE_ENV: &str = "GEVREY_CACHE_DIR";
const SCHEMA: &str = "gevrey.cache-file/1";

#[derive(Serialize, Deserialize)]
struct CacheFile {
    schema: String,
    name: String,
    values: Vec<Value>,
    checksum: String,
}

fn checksum(name: &str, values: &[Value]) -> String {
    let body = serde_json::to_string(values).expect("values serialize");
    let mut h = Sha256::new();
    h.update(name.as_bytes());
    h.update(b"\n");
    h.update(body.as_bytes());
    hex::encode(h.finalize())
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// The flag value if given, else `GEVREY_CACHE_DIR`, else no cache.
    pub fn configured(flag: Option<&Path>) -> Option<Cache> {
        match flag {
            Some(p) => Some(Cache::new(p)),
            None => std::env::var_os(CACHE_ENV)
                .filter(|v| !v.is_empty())
                .map(Cache::new),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, name: &str) -> PathBuf {
        self.dir.join(format!("{name}.json"))
    }

    /// Stored values, or `None` when missing or corrupt (corruption is reported on `warn`).
    pub fn load(&self, name: &str, warn: &mut dyn Write) -> Option<Vec<Value>> {
        let path = self.path(name);
        let bytes = fs::read(&path).ok()?;
        let parsed: Option<CacheFile> = serde_json::from_slice(&bytes).ok();
        match parsed {
            Some(f)
                if f.schema == SCHEMA
                    && f.name == name
                    && f.checksum == checksum(name, &f.values) =>
            {
                Some(f.values)
            }
            _ => {
                let _ = writeln!(
                    warn,
                    "warning: cache file {} is corrupt; recomputing",
                    path.display()
                );
                None
            }
        }
    }

    /// Writes `values`; on failure reports on `warn` and returns false.
    pub fn store(&self, name: &str, values: &[Value], warn: &mut dyn Write) -> bool {
        let file = CacheFile {
            schema: SCHEMA.into(),
            name: name.into(),
            values: values.to_vec(),
            checksum: checksum(name, values),
        };
        let text = serde_json::to_string(&file).expect("cache file serializes");
        let result = fs::create_dir_all(&self.dir).and_then(|_| {
            // write then rename so readers never see a partial file
            let tmp = self.dir.join(format!(".{name}.json.tmp"));
            fs::write(&tmp, text.as_bytes())?;
            fs::rename(&tmp, self.path(name))
        });
        match result {
            Ok(()) => true,
            Err(e) => {
                let _ = writeln!(
                    warn,
                    "warning: cannot write cache in {} ({e}); continuing uncached",
                    self.dir.display()
                );
                false
            }
        }
    }

    /// Removes the named sequences; returns how many files existed.
    pub fn clear(&self, names: &[&str]) -> std::io::Result<usize> {
        let mut removed = 0;
        for n in names {
            match fs::remove_file(self.path(n)) {
                Ok(()) => removed += 1,
                Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
                Err(e) => return Err(e),
            }
        }
        Ok(removed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn store_load_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let c = Cache::new(dir.path());
        let mut warn = Vec::new();
        let vals = vec![json!("1/1"), json!("-1/48")];
        assert!(c.store("a", &vals, &mut warn));
        assert_eq!(c.load("a", &mut warn), Some(vals));
        assert!(warn.is_empty());

        let p = c.path("a");
        let mut bytes = fs::read(&p).unwrap();
        let i = bytes.iter().position(|&b| b == b'4').unwrap();
        bytes[i] = b'5';
        fs::write(&p, bytes).unwrap();
        assert_eq!(c.load("a", &mut warn), None);
        assert!(String::from_utf8(warn).unwrap().contains("corrupt"));

        assert_eq!(c.clear(&["a", "mu"]).unwrap(), 1);
        let mut warn = Vec::new();
        assert_eq!(c.load("a", &mut warn), None);
        assert!(warn.is_empty());
    }
}
