//! On-disk cache of half-diagram enumerations keyed by `(family, n, lambda, K)`.

use std::fs;
use std::path::{Path, PathBuf};

use moebius_core::cells::{enumerate_half_diagrams, HalfDiagram};
use moebius_core::{parse_diagram, Family, Result};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CacheStatus {
    Hit,
    Miss,
    /// The entry existed but failed validation and was rebuilt.
    Regenerated,
    Disabled,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    schema_version: u32,
    family: Family,
    n: usize,
    lambda_ts: usize,
    k: usize,
    checksum: String,
    halves: Vec<String>,
}

fn checksum(f: Family, n: usize, lambda: usize, k: usize, halves: &[String]) -> String {
    let mut h = Sha256::new();
    h.update(format!("{SCHEMA_VERSION}|{f}|{n}|{lambda}|{k}\n"));
    for line in halves {
        h.update(line.as_bytes());
        h.update(b"\n");
    }
    hex::encode(h.finalize())
}

#[derive(Debug, Clone)]
pub struct HalfCache {
    dir: Option<PathBuf>,
}

impl HalfCache {
    pub fn new(dir: impl Into<PathBuf>) -> HalfCache {
        HalfCache { dir: Some(dir.into()) }
    }

    pub fn disabled() -> HalfCache {
        HalfCache { dir: None }
    }

    pub fn default_dir() -> PathBuf {
        std::env::temp_dir().join("moebius-cache")
    }

    pub fn entry_path(&self, f: Family, n: usize, lambda: usize, k: usize) -> Option<PathBuf> {
        let name = format!("halves-v{SCHEMA_VERSION}-{f}-n{n}-l{lambda}-k{k}.json");
        self.dir.as_ref().map(|d| d.join(name))
    }

    fn read(path: &Path, f: Family, n: usize, lambda: usize, k: usize) -> Option<Vec<HalfDiagram>> {
        let text = fs::read_to_string(path).ok()?;
        let file: CacheFile = serde_json::from_str(&text).ok()?;
        let key_ok =
            file.schema_version == SCHEMA_VERSION && (file.family, file.n, file.lambda_ts, file.k) == (f, n, lambda, k);
        if !key_ok || file.checksum != checksum(f, n, lambda, k, &file.halves) {
            return None;
        }
        file.halves.iter().map(|s| parse_diagram(s).ok().map(|base| HalfDiagram { base, lambda_ts: lambda })).collect()
    }

    fn write(path: &Path, f: Family, n: usize, lambda: usize, k: usize, halves: &[HalfDiagram]) {
        let lines: Vec<String> = halves.iter().map(|h| h.base.to_string()).collect();
        let file = CacheFile {
            schema_version: SCHEMA_VERSION,
            family: f,
            n,
            lambda_ts: lambda,
            k,
            checksum: checksum(f, n, lambda, k, &lines),
            halves: lines,
        };
        let Some(dir) = path.parent() else { return };
        if fs::create_dir_all(dir).is_err() {
            return;
        }
        // write then rename so readers never see a torn file
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let body = serde_json::to_string(&file).expect("cache entries serialize");
        if fs::write(&tmp, body).is_ok() && fs::rename(&tmp, path).is_err() {
            let _ = fs::remove_file(&tmp);
        }
    }

    /// Cached enumeration, rebuilt when missing or corrupt. Write failures are ignored.
    pub fn halves(&self, f: Family, n: usize, lambda: usize, k: usize) -> Result<(Vec<HalfDiagram>, CacheStatus)> {
        let Some(path) = self.entry_path(f, n, lambda, k) else {
            return Ok((enumerate_half_diagrams(f, n, lambda, k)?, CacheStatus::Disabled));
        };
        let existed = path.exists();
        if existed {
            if let Some(h) = Self::read(&path, f, n, lambda, k) {
                return Ok((h, CacheStatus::Hit));
            }
        }
        let halves = enumerate_half_diagrams(f, n, lambda, k)?;
        Self::write(&path, f, n, lambda, k, &halves);
        Ok((halves, if existed { CacheStatus::Regenerated } else { CacheStatus::Miss }))
    }
}
