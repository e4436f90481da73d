//! Versioned, checksummed JSON cache of expensive tables.
//!
//! Each entry is `<dir>/<kind>/<key>.json` holding an envelope with the
//! format version, the SHA-256 of the serialized payload, and the payload.
//! A missing, stale or corrupted entry is treated as a miss.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const CACHE_VERSION: u32 = 1;
pub const CACHE_ENV: &str = "JACKLAB_CACHE";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheKind {
    JackTheta,
    CoeffTable,
}

impl CacheKind {
    pub fn dir_name(self) -> &'static str {
        match self {
            CacheKind::JackTheta => "jack-theta",
            CacheKind::CoeffTable => "coeff-table",
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("cache IO at {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// How a lookup was satisfied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Miss,
    /// An entry existed but failed the version or checksum test.
    Invalid,
    Disabled,
}

#[derive(Serialize, Deserialize)]
struct Envelope {
    version: u32,
    kind: String,
    key: String,
    checksum: String,
    payload: serde_json::Value,
}

fn checksum(payload: &serde_json::Value) -> Result<String, serde_json::Error> {
    Ok(hex::encode(Sha256::digest(serde_json::to_vec(payload)?)))
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: Option<PathBuf>,
    version: u32,
}

impl Cache {
    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: Some(dir.into()), version: CACHE_VERSION }
    }

    pub fn disabled() -> Self {
        Cache { dir: None, version: CACHE_VERSION }
    }

    /// `JACKLAB_CACHE` wins over the given directory.
    pub fn from_env_or(dir: Option<PathBuf>) -> Self {
        match std::env::var_os(CACHE_ENV).map(PathBuf::from).or(dir) {
            Some(d) => Cache::at(d),
            None => Cache::disabled(),
        }
    }

    /// Same cache read and written under another format version.
    pub fn with_version(mut self, version: u32) -> Self {
        self.version = version;
        self
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn path(&self, kind: CacheKind, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(kind.dir_name()).join(format!("{key}.json")))
    }

    pub fn load<T: DeserializeOwned>(&self, kind: CacheKind, key: &str) -> Result<(Option<T>, CacheStatus), CacheError> {
        let Some(path) = self.path(kind, key) else {
            return Ok((None, CacheStatus::Disabled));
        };
        let bytes = match fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok((None, CacheStatus::Miss)),
            Err(source) => return Err(CacheError::Io { path, source }),
        };
        let Ok(env) = serde_json::from_slice::<Envelope>(&bytes) else {
            return Ok((None, CacheStatus::Invalid));
        };
        if env.version != self.version || env.kind != kind.dir_name() || env.key != key || checksum(&env.payload)? != env.checksum {
            return Ok((None, CacheStatus::Invalid));
        }
        match serde_json::from_value(env.payload) {
            Ok(v) => Ok((Some(v), CacheStatus::Hit)),
            Err(_) => Ok((None, CacheStatus::Invalid)),
        }
    }

    /// Writes through a temporary file and a rename.
    pub fn store<T: Serialize>(&self, kind: CacheKind, key: &str, value: &T) -> Result<(), CacheError> {
        let Some(path) = self.path(kind, key) else {
            return Ok(());
        };
        let payload = serde_json::to_value(value)?;
        let env = Envelope {
            version: self.version,
            kind: kind.dir_name().to_string(),
            key: key.to_string(),
            checksum: checksum(&payload)?,
            payload,
        };
        let io = |source| CacheError::Io { path: path.clone(), source };
        let parent = path.parent().expect("cache entries live in a kind directory");
        fs::create_dir_all(parent).map_err(io)?;
        let tmp = path.with_extension("json.tmp");
        let mut f = fs::File::create(&tmp).map_err(io)?;
        f.write_all(&serde_json::to_vec_pretty(&env)?).map_err(io)?;
        f.sync_all().map_err(io)?;
        fs::rename(&tmp, &path).map_err(io)?;
        Ok(())
    }

    /// Loads `key`, or computes, stores and returns it.
    pub fn get_or_compute<T, E>(
        &self,
        kind: CacheKind,
        key: &str,
        compute: impl FnOnce() -> Result<T, E>,
    ) -> anyhow::Result<(T, CacheStatus)>
    where
        T: Serialize + DeserializeOwned,
        E: Into<anyhow::Error>,
    {
        let (hit, status) = self.load(kind, key)?;
        if let Some(v) = hit {
            return Ok((v, status));
        }
        let v = compute().map_err(Into::into)?;
        self.store(kind, key, &v)?;
        Ok((v, status))
    }
}
