//! Plain-text model serialization (columns joined by real tabs):
//!
//! ```text
//! musener-model v1
//! E<TAB>gaz.lastname=1<TAB>B-CONTR<TAB>2.5
//! T<TAB>BOS<TAB>O<TAB>0.25
//! ```
//!
//! Zero weights are omitted; weights print in shortest round-trip decimal
//! form, so save followed by load reproduces the model exactly.

use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

use super::{LinearModel, N_LABELS};
use crate::corpus::Label;
use crate::error::{Error, Result};

pub const MODEL_HEADER: &str = "musener-model v1";

const BOS_NAME: &str = "BOS";

fn prev_names() -> [(&'static str, Option<Label>); N_LABELS + 1] {
    [
        (BOS_NAME, None),
        ("O", Some(Label::Outside)),
        ("B-CONTR", Some(Label::BeginContributor)),
        ("I-CONTR", Some(Label::InsideContributor)),
        ("B-WORK", Some(Label::BeginWork)),
        ("I-WORK", Some(Label::InsideWork)),
    ]
}

impl LinearModel {
    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let mut file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
        self.save_to(&mut file)
    }

    /// Writes the model in a deterministic order (features sorted, labels in
    /// declaration order) so identical models produce identical bytes.
    pub fn save_to(&self, out: &mut impl Write) -> Result<()> {
        self.check_finite()?;
        let io_err = |e: std::io::Error| Error::io("<writer>", e);
        writeln!(out, "{MODEL_HEADER}").map_err(io_err)?;
        let mut features: Vec<&String> = self.emissions.keys().collect();
        features.sort_unstable();
        for feature in features {
            let row = &self.emissions[feature];
            for label in Label::ALL {
                let w = row[label.index()];
                if w != 0.0 {
                    writeln!(out, "E\t{feature}\t{label}\t{w}").map_err(io_err)?;
                }
            }
        }
        for (name, prev) in prev_names() {
            for label in Label::ALL {
                let w = self.transition(prev, label);
                if w != 0.0 {
                    writeln!(out, "T\t{name}\t{label}\t{w}").map_err(io_err)?;
                }
            }
        }
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<LinearModel> {
        let path = path.as_ref();
        let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
        LinearModel::load_from(BufReader::new(file), path)
    }

    pub fn load_from(reader: impl Read, origin: impl AsRef<Path>) -> Result<LinearModel> {
        let origin = origin.as_ref();
        let mut lines = BufReader::new(reader).lines().enumerate();
        let header = match lines.next() {
            Some((_, line)) => line.map_err(|e| Error::io(origin, e))?,
            None => String::new(),
        };
        if header != MODEL_HEADER {
            return Err(Error::VersionMismatch {
                expected: MODEL_HEADER.to_string(),
                found: header,
            });
        }
        let mut model = LinearModel::new();
        for (idx, line) in lines {
            let lineno = idx + 1;
            let line = line.map_err(|e| Error::io(origin, e))?;
            if line.is_empty() {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 4 {
                return Err(Error::format(
                    origin,
                    lineno,
                    format!("expected 4 tab-separated columns, found {}", cols.len()),
                ));
            }
            let weight: f64 = cols[3].parse().map_err(|_| {
                Error::format(origin, lineno, format!("bad weight `{}`", cols[3]))
            })?;
            if !weight.is_finite() {
                return Err(Error::format(origin, lineno, "non-finite weight"));
            }
            let label = Label::parse(cols[2])
                .map_err(|_| Error::format(origin, lineno, format!("unknown label `{}`", cols[2])))?;
            match cols[0] {
                "E" => model.set_emission(cols[1], label, weight),
                "T" => {
                    let prev = prev_names()
                        .iter()
                        .find(|(name, _)| *name == cols[1])
                        .map(|(_, prev)| *prev)
                        .ok_or_else(|| {
                            Error::format(
                                origin,
                                lineno,
                                format!("unknown previous label `{}`", cols[1]),
                            )
                        })?;
                    model.set_transition(prev, label, weight);
                }
                other => {
                    return Err(Error::format(
                        origin,
                        lineno,
                        format!("unknown record type `{other}`"),
                    ));
                }
            }
        }
        Ok(model)
    }
}
