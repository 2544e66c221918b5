//! Shared command plumbing.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use crate::corpus::normalize_token;
use crate::error::{Error, Result};
use crate::features::GazetteerSet;
use crate::matcher::default_stopwords;

/// Environment variable naming the default gazetteer directory.
pub const GAZETTEER_ENV: &str = "MUSENER_GAZETTEERS";

/// Where the gazetteers came from, for the manifest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GazetteerSource {
    Flag(PathBuf),
    Env(PathBuf),
    Bundled,
}

impl GazetteerSource {
    pub fn describe(&self) -> String {
        match self {
            GazetteerSource::Flag(p) | GazetteerSource::Env(p) => p.display().to_string(),
            GazetteerSource::Bundled => "<bundled>".to_string(),
        }
    }
}

/// Resolution order: `--gazetteers` flag, then `MUSENER_GAZETTEERS`, then the
/// starter lists compiled into the binary.
pub fn resolve_gazetteers(flag: Option<&Path>) -> Result<(GazetteerSet, GazetteerSource)> {
    if let Some(dir) = flag {
        return Ok((GazetteerSet::load_dir(dir)?, GazetteerSource::Flag(dir.to_path_buf())));
    }
    if let Some(dir) = std::env::var_os(GAZETTEER_ENV) {
        let dir = PathBuf::from(dir);
        return Ok((GazetteerSet::load_dir(&dir)?, GazetteerSource::Env(dir)));
    }
    Ok((GazetteerSet::bundled(), GazetteerSource::Bundled))
}

/// Stop list from a file (one entry per line, `#` comments) or the bundled
/// default.
pub fn resolve_stopwords(flag: Option<&Path>) -> Result<BTreeSet<String>> {
    match flag {
        None => Ok(default_stopwords()),
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
            Ok(text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(normalize_token)
                .filter(|l| !l.is_empty())
                .collect())
        }
    }
}

/// Maps `f` over `items` on up to `jobs` threads, preserving input order.
/// With `jobs == 1` this is a plain sequential map.
pub fn parallel_map<T, R, F>(items: &[T], jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let jobs = jobs.max(1).min(items.len().max(1));
    if jobs == 1 {
        return items.iter().map(f).collect();
    }
    let chunk_size = items.len().div_ceil(jobs);
    let mut results: Vec<Vec<R>> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk_size)
            .map(|chunk| scope.spawn(|| chunk.iter().map(&f).collect::<Vec<R>>()))
            .collect();
        results = handles.into_iter().map(|h| h.join().expect("worker panicked")).collect();
    });
    results.into_iter().flatten().collect()
}

/// Percent formatting used by all tables: two decimals of `100 * value`.
pub fn pct(value: f64) -> String {
    format!("{:.2}", value * 100.0)
}
