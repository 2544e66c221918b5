//! Corpus file reading and writing.
//!
//! Format, one tweet at a time (columns joined by real tabs):
//!
//! ```text
//! # id=t42 ts=2018-05-01T10:00:00Z
//! Beethoven<TAB>NNP<TAB>B-NP<TAB>B-CONTR
//! is<TAB>VBZ<TAB>O<TAB>O
//!
//! ```
//!
//! The header line is optional (either field may be absent). Each token line
//! has exactly four tab-separated columns: surface, POS, chunk, label. The
//! label column is `-` for unlabeled corpora. A blank line ends the tweet.

use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

use super::{format_timestamp, parse_timestamp, Label, TaggedTweet, Token};
use crate::error::{Error, Result};

/// Reads a corpus file. Errors carry 1-based line numbers.
pub fn read_corpus(path: impl AsRef<Path>) -> Result<Vec<TaggedTweet>> {
    let path = path.as_ref();
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    read_corpus_from(BufReader::new(file), path)
}

/// Reads a corpus from any reader; `origin` is used in error messages.
pub fn read_corpus_from(reader: impl Read, origin: impl AsRef<Path>) -> Result<Vec<TaggedTweet>> {
    let origin = origin.as_ref();
    let mut tweets = Vec::new();
    let mut builder = TweetBuilder::default();
    for (idx, line) in BufReader::new(reader).lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| Error::io(origin, e))?;
        if line.trim().is_empty() {
            builder.finish(&mut tweets, origin, lineno)?;
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            if !builder.is_empty() {
                return Err(Error::format(
                    origin,
                    lineno,
                    "header line in the middle of a tweet",
                ));
            }
            builder.parse_header(rest.trim(), origin, lineno)?;
            continue;
        }
        builder.push_token_line(&line, origin, lineno)?;
    }
    builder.finish(&mut tweets, origin, usize::MAX)?;
    Ok(tweets)
}

#[derive(Default)]
struct TweetBuilder {
    id: Option<String>,
    timestamp: Option<i64>,
    tokens: Vec<Token>,
    labels: Vec<Option<Label>>,
    started: bool,
}

impl TweetBuilder {
    fn is_empty(&self) -> bool {
        !self.started
    }

    fn parse_header(&mut self, rest: &str, origin: &Path, lineno: usize) -> Result<()> {
        self.started = true;
        for field in rest.split_whitespace() {
            if let Some(id) = field.strip_prefix("id=") {
                self.id = Some(id.to_string());
            } else if let Some(ts) = field.strip_prefix("ts=") {
                let ts = parse_timestamp(ts).map_err(|m| Error::format(origin, lineno, m))?;
                self.timestamp = Some(ts);
            } else {
                return Err(Error::format(
                    origin,
                    lineno,
                    format!("unknown header field `{field}`"),
                ));
            }
        }
        Ok(())
    }

    fn push_token_line(&mut self, line: &str, origin: &Path, lineno: usize) -> Result<()> {
        self.started = true;
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 4 {
            return Err(Error::format(
                origin,
                lineno,
                format!("expected 4 tab-separated columns, found {}", cols.len()),
            ));
        }
        if cols[0].is_empty() || cols[1].is_empty() || cols[2].is_empty() {
            return Err(Error::format(origin, lineno, "empty surface/POS/chunk column"));
        }
        let label = match cols[3] {
            "-" => None,
            text => Some(
                Label::parse(text)
                    .map_err(|_| Error::format(origin, lineno, format!("unknown label `{text}`")))?,
            ),
        };
        self.tokens.push(Token {
            surface: cols[0].to_string(),
            pos: cols[1].to_string(),
            chunk: cols[2].to_string(),
        });
        self.labels.push(label);
        Ok(())
    }

    fn finish(&mut self, tweets: &mut Vec<TaggedTweet>, origin: &Path, lineno: usize) -> Result<()> {
        if !self.started {
            return Ok(());
        }
        let labeled = self.labels.iter().filter(|l| l.is_some()).count();
        let labels = if labeled == 0 {
            None
        } else if labeled == self.labels.len() {
            Some(self.labels.drain(..).map(|l| l.unwrap()).collect())
        } else {
            return Err(Error::format(
                origin,
                lineno.saturating_sub(1),
                format!(
                    "tweet mixes labeled and unlabeled tokens ({labeled} of {})",
                    self.labels.len()
                ),
            ));
        };
        tweets.push(TaggedTweet {
            id: self.id.take().unwrap_or_default(),
            timestamp: self.timestamp.take(),
            tokens: std::mem::take(&mut self.tokens),
            labels,
        });
        self.labels.clear();
        self.started = false;
        Ok(())
    }
}

/// Writes a corpus file; inverse of [`read_corpus`] on canonical input.
pub fn write_corpus(path: impl AsRef<Path>, tweets: &[TaggedTweet]) -> Result<()> {
    let path = path.as_ref();
    let mut file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
    write_corpus_to(&mut file, tweets).map_err(|e| Error::io(path, e))
}

/// Writes a corpus to any writer.
pub fn write_corpus_to(out: &mut impl Write, tweets: &[TaggedTweet]) -> std::io::Result<()> {
    for tweet in tweets {
        let mut header = String::new();
        if !tweet.id.is_empty() {
            header.push_str(&format!(" id={}", tweet.id));
        }
        if let Some(ts) = tweet.timestamp {
            header.push_str(&format!(" ts={}", format_timestamp(ts)));
        }
        if !header.is_empty() {
            writeln!(out, "#{header}")?;
        }
        for (i, token) in tweet.tokens.iter().enumerate() {
            let label = match &tweet.labels {
                Some(labels) => labels[i].as_str(),
                None => "-",
            };
            writeln!(out, "{}\t{}\t{}\t{}", token.surface, token.pos, token.chunk, label)?;
        }
        writeln!(out)?;
    }
    Ok(())
}
