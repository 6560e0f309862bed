//! On-disk cache of canonical candidate-set files.

use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use super::candidates::{CandidateSet, Columns};
use crate::error::Result;
use crate::format::Format;

pub const CACHE_ENV: &str = "BIRCLASS_CACHE_DIR";

#[derive(Debug, Clone)]
pub struct CandidateCache {
    dir: PathBuf,
}

impl CandidateCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        CandidateCache { dir: dir.into() }
    }

    /// The cache rooted at `$BIRCLASS_CACHE_DIR`, if set.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_ENV).map(Self::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(name: &str, columns: Columns, provenance: &[String]) -> String {
        let mut h = Sha256::new();
        h.update(name.as_bytes());
        h.update([0]);
        h.update(columns.names().join(",").as_bytes());
        for step in provenance {
            h.update([0]);
            h.update(step.as_bytes());
        }
        hex::encode(h.finalize())
    }

    fn path_for(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.txt"))
    }

    pub fn load(
        &self,
        name: &str,
        columns: Columns,
        provenance: &[String],
    ) -> Result<Option<CandidateSet>> {
        let path = self.path_for(&Self::key(name, columns, provenance));
        if !path.exists() {
            return Ok(None);
        }
        let set = CandidateSet::parse(&fs::read_to_string(path)?, Format::Text)?;
        Ok(
            (set.name() == name && set.columns() == columns && set.provenance() == provenance)
                .then_some(set),
        )
    }

    pub fn store(&self, set: &CandidateSet) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path_for(&Self::key(set.name(), set.columns(), set.provenance()));
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, set.serialize(Format::Text)?)?;
        fs::rename(&tmp, &path)?;
        Ok(path)
    }

    pub fn get_or_compute(
        &self,
        name: &str,
        columns: Columns,
        provenance: &[String],
        compute: impl FnOnce() -> CandidateSet,
    ) -> Result<CandidateSet> {
        if let Some(set) = self.load(name, columns, provenance)? {
            return Ok(set);
        }
        let set = compute();
        self.store(&set)?;
        Ok(set)
    }
}
