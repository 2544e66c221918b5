//! Parsing of "Now Playing" bot messages and schedule reconstruction.

use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::Deserialize;

use super::{format_timestamp, parse_timestamp, Schedule, ScheduleEntry};
use crate::error::{Error, Result};

const PREFIX: &str = "now playing";

/// Parses one bot message into a schedule entry.
///
/// Layout: `Now Playing <name>[, <name>...] - <work title> #hashtags`. The
/// contributor/work separator is the *last* `" - "` before the hashtag block,
/// since work titles may themselves contain hyphens.
pub fn parse_bot_tweet(text: &str, timestamp: i64) -> Result<ScheduleEntry> {
    let trimmed = text.trim();
    let prefixed = trimmed
        .get(..PREFIX.len())
        .is_some_and(|head| head.eq_ignore_ascii_case(PREFIX));
    if !prefixed {
        return Err(Error::BotParse {
            reason: format!("missing `Now Playing` prefix in `{}`", clip(trimmed)),
        });
    }
    let body = &trimmed[PREFIX.len()..];
    let body = match body.find('#') {
        Some(pos) => &body[..pos],
        None => body,
    };
    let sep = body.rfind(" - ").ok_or_else(|| Error::BotParse {
        reason: format!("missing ` - ` separator in `{}`", clip(trimmed)),
    })?;
    let contributors: Vec<String> = body[..sep]
        .split(',')
        .map(|name| name.trim().to_string())
        .filter(|name| !name.is_empty())
        .collect();
    if contributors.is_empty() {
        return Err(Error::BotParse {
            reason: format!("no contributors in `{}`", clip(trimmed)),
        });
    }
    let work = body[sep + 3..].trim().to_string();
    if work.is_empty() {
        return Err(Error::BotParse {
            reason: format!("empty work title in `{}`", clip(trimmed)),
        });
    }
    Ok(ScheduleEntry {
        timestamp,
        contributors,
        work,
        raw: text.to_string(),
    })
}

fn clip(s: &str) -> String {
    if s.chars().count() > 60 {
        let cut: String = s.chars().take(57).collect();
        format!("{cut}...")
    } else {
        s.to_string()
    }
}

/// Builds a schedule from `(timestamp, text)` records. Unparseable records
/// are skipped; the second return value counts them.
pub fn build_schedule(records: &[(i64, String)]) -> (Schedule, usize) {
    let mut entries = Vec::new();
    let mut skipped = 0usize;
    for (ts, text) in records {
        match parse_bot_tweet(text, *ts) {
            Ok(entry) => entries.push(entry),
            Err(_) => skipped += 1,
        }
    }
    (Schedule::from_entries(entries), skipped)
}

/// One line of a schedule JSONL file: either a raw bot message
/// (`{"ts": ..., "text": ...}`) or an already-parsed entry
/// (`{"ts": ..., "contributors": [...], "work": ...}`).
#[derive(Deserialize)]
#[serde(untagged)]
enum ScheduleRecord {
    Raw {
        ts: String,
        text: String,
    },
    Parsed {
        ts: String,
        contributors: Vec<String>,
        work: String,
        #[serde(default)]
        raw: String,
    },
}

/// Reads a schedule from JSONL. Lines that fail to parse (bad JSON, bad
/// timestamp, unparseable bot text) are skipped and counted, never fatal.
pub fn read_schedule_jsonl(path: impl AsRef<Path>) -> Result<(Schedule, usize)> {
    let path = path.as_ref();
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    let mut entries = Vec::new();
    let mut skipped = 0usize;
    for line in BufReader::new(file).lines() {
        let line = line.map_err(|e| Error::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        match parse_schedule_line(&line) {
            Some(entry) => entries.push(entry),
            None => skipped += 1,
        }
    }
    Ok((Schedule::from_entries(entries), skipped))
}

fn parse_schedule_line(line: &str) -> Option<ScheduleEntry> {
    match serde_json::from_str::<ScheduleRecord>(line).ok()? {
        ScheduleRecord::Raw { ts, text } => {
            let ts = parse_timestamp(&ts).ok()?;
            parse_bot_tweet(&text, ts).ok()
        }
        ScheduleRecord::Parsed {
            ts,
            contributors,
            work,
            raw,
        } => {
            let ts = parse_timestamp(&ts).ok()?;
            if contributors.is_empty() || work.is_empty() {
                return None;
            }
            Some(ScheduleEntry {
                timestamp: ts,
                contributors,
                work,
                raw,
            })
        }
    }
}

/// Writes a schedule as parsed-entry JSONL, one entry per line.
pub fn write_schedule_jsonl(path: impl AsRef<Path>, schedule: &Schedule) -> Result<()> {
    let path = path.as_ref();
    let mut file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
    for entry in schedule.entries() {
        let record = serde_json::json!({
            "ts": format_timestamp(entry.timestamp),
            "contributors": entry.contributors,
            "work": entry.work,
            "raw": entry.raw,
        });
        writeln!(file, "{record}").map_err(|e| Error::io(path, e))?;
    }
    Ok(())
}
