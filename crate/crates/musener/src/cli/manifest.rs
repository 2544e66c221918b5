//! Run manifests: a machine-readable record of what a command ran with.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

#[derive(Debug, Serialize)]
pub struct FileDigest {
    pub path: String,
    pub sha256: String,
}

/// Written when `--manifest <path>` is set. Identical inputs and flags yield
/// identical digests; `duration_ms` is the only field that varies between
/// re-runs.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub flags: BTreeMap<String, serde_json::Value>,
    pub inputs: BTreeMap<String, FileDigest>,
    pub tool_version: String,
    pub duration_ms: u64,
}

/// What a command reports back for manifest assembly.
#[derive(Debug, Default)]
pub struct RunInfo {
    pub command: &'static str,
    pub flags: BTreeMap<String, serde_json::Value>,
    pub inputs: Vec<(String, PathBuf)>,
}

impl RunInfo {
    pub fn new(command: &'static str) -> Self {
        RunInfo {
            command,
            ..RunInfo::default()
        }
    }

    pub fn flag(&mut self, name: &str, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("flag values are plain data");
        self.flags.insert(name.to_string(), value);
    }

    pub fn input(&mut self, role: &str, path: impl Into<PathBuf>) {
        self.inputs.push((role.to_string(), path.into()));
    }

    pub fn input_named(&mut self, role: String, path: impl Into<PathBuf>) {
        self.inputs.push((role, path.into()));
    }
}

pub fn sha256_hex(path: &Path) -> Result<String> {
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    let digest = Sha256::digest(&bytes);
    Ok(digest.iter().map(|b| format!("{b:02x}")).collect())
}

pub fn write_manifest(path: &Path, info: &RunInfo, duration_ms: u64) -> Result<()> {
    let mut inputs = BTreeMap::new();
    for (role, input_path) in &info.inputs {
        inputs.insert(
            role.to_string(),
            FileDigest {
                path: input_path.display().to_string(),
                sha256: sha256_hex(input_path)?,
            },
        );
    }
    let manifest = RunManifest {
        command: info.command.to_string(),
        flags: info.flags.clone(),
        inputs,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        duration_ms,
    };
    let json = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    std::fs::write(path, json + "\n").map_err(|e| Error::io(path, e))
}
