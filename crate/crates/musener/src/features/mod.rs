//! Gazetteers and per-token feature extraction.
//!
//! Every token is described by exactly 26 categorical features, each encoded
//! as a literal `name=value` string (these strings are the model's feature
//! ids). The fixed slot layout:
//!
//! | slots | names |
//! |-------|-------|
//! | 5 local | `pos`, `chunk`, `position`, `cap`, `digit` |
//! | 9 gazetteer flags | `gaz.firstname`, `gaz.lastname`, `gaz.ctype`, `gaz.wtype`, `gaz.instrument`, `gaz.opus`, `gaz.number`, `gaz.key`, `gaz.mode` |
//! | 12 context | `w`, `pos`, `chunk` at offsets `[-2] [-1] [+1] [+2]` |
//!
//! `position` is the token index normalized by `n - 1` (0 for single-token
//! tweets). Context surfaces are lowercased; positions past the tweet edges
//! read `<BOS>` / `<EOS>`.

mod fallback;

pub use fallback::{fallback_pos_chunk, fill_missing_pos_chunk};

use std::collections::BTreeSet;
use std::path::Path;

use crate::corpus::{normalize_token, TaggedTweet};
use crate::error::{Error, Result};

/// Number of feature slots per token.
pub const NUM_FEATURES: usize = 26;

/// Sentinel value for context slots before the first token.
pub const BOS: &str = "<BOS>";
/// Sentinel value for context slots past the last token.
pub const EOS: &str = "<EOS>";

/// The nine gazetteer categories.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GazetteerKind {
    ContributorFirstNames,
    ContributorLastNames,
    ContributorTypes,
    WorkTypes,
    Instruments,
    OpusForms,
    WorkNumberForms,
    WorkKeys,
    WorkModes,
}

impl GazetteerKind {
    pub const ALL: [GazetteerKind; 9] = [
        GazetteerKind::ContributorFirstNames,
        GazetteerKind::ContributorLastNames,
        GazetteerKind::ContributorTypes,
        GazetteerKind::WorkTypes,
        GazetteerKind::Instruments,
        GazetteerKind::OpusForms,
        GazetteerKind::WorkNumberForms,
        GazetteerKind::WorkKeys,
        GazetteerKind::WorkModes,
    ];

    /// Canonical name; also the stem of the bundled file.
    pub fn name(&self) -> &'static str {
        match self {
            GazetteerKind::ContributorFirstNames => "contributor_first_names",
            GazetteerKind::ContributorLastNames => "contributor_last_names",
            GazetteerKind::ContributorTypes => "contributor_types",
            GazetteerKind::WorkTypes => "work_types",
            GazetteerKind::Instruments => "instruments",
            GazetteerKind::OpusForms => "opus_forms",
            GazetteerKind::WorkNumberForms => "work_number_forms",
            GazetteerKind::WorkKeys => "work_keys",
            GazetteerKind::WorkModes => "work_modes",
        }
    }

    /// Feature slot name of this gazetteer's flag.
    pub fn feature_name(&self) -> &'static str {
        match self {
            GazetteerKind::ContributorFirstNames => "gaz.firstname",
            GazetteerKind::ContributorLastNames => "gaz.lastname",
            GazetteerKind::ContributorTypes => "gaz.ctype",
            GazetteerKind::WorkTypes => "gaz.wtype",
            GazetteerKind::Instruments => "gaz.instrument",
            GazetteerKind::OpusForms => "gaz.opus",
            GazetteerKind::WorkNumberForms => "gaz.number",
            GazetteerKind::WorkKeys => "gaz.key",
            GazetteerKind::WorkModes => "gaz.mode",
        }
    }

    pub fn parse(name: &str) -> Result<GazetteerKind> {
        GazetteerKind::ALL
            .into_iter()
            .find(|k| k.name() == name)
            .ok_or_else(|| Error::UnknownGazetteer {
                name: name.to_string(),
            })
    }
}

/// One word list; entries are stored normalized and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gazetteer {
    pub kind: GazetteerKind,
    entries: BTreeSet<String>,
}

impl Gazetteer {
    pub fn new(kind: GazetteerKind, raw_entries: impl IntoIterator<Item = String>) -> Self {
        let entries = raw_entries
            .into_iter()
            .map(|e| normalize_token(&e))
            .filter(|e| !e.is_empty())
            .collect();
        Gazetteer { kind, entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Membership test on the normalized surface, hence case-insensitive.
    pub fn contains(&self, surface: &str) -> bool {
        self.entries.contains(&normalize_token(surface))
    }
}

/// Loads a gazetteer file: UTF-8, one entry per line, `#` comments and blank
/// lines ignored.
pub fn load_gazetteer(name: &str, path: impl AsRef<Path>) -> Result<Gazetteer> {
    let kind = GazetteerKind::parse(name)?;
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    Ok(parse_gazetteer(kind, &text))
}

fn parse_gazetteer(kind: GazetteerKind, text: &str) -> Gazetteer {
    let lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_string);
    Gazetteer::new(kind, lines)
}

/// Convenience wrapper over [`Gazetteer::contains`].
pub fn gazetteer_contains(gaz: &Gazetteer, surface: &str) -> bool {
    gaz.contains(surface)
}

/// The full set of nine gazetteers required by feature extraction.
#[derive(Debug, Clone)]
pub struct GazetteerSet {
    by_kind: [Gazetteer; 9],
}

impl GazetteerSet {
    /// Builds the set, requiring one gazetteer per kind.
    pub fn from_gazetteers(gazetteers: Vec<Gazetteer>) -> Result<GazetteerSet> {
        let mut slots: [Option<Gazetteer>; 9] = Default::default();
        for gaz in gazetteers {
            let idx = GazetteerKind::ALL.iter().position(|k| *k == gaz.kind).unwrap();
            slots[idx] = Some(gaz);
        }
        let mut by_kind = Vec::with_capacity(9);
        for (slot, kind) in slots.into_iter().zip(GazetteerKind::ALL) {
            by_kind.push(slot.ok_or_else(|| Error::MissingGazetteer {
                name: kind.name().to_string(),
            })?);
        }
        Ok(GazetteerSet {
            by_kind: by_kind.try_into().unwrap(),
        })
    }

    /// Loads all nine `<name>.txt` files from a directory.
    pub fn load_dir(dir: impl AsRef<Path>) -> Result<GazetteerSet> {
        let dir = dir.as_ref();
        let mut gazetteers = Vec::with_capacity(9);
        for kind in GazetteerKind::ALL {
            let path = dir.join(format!("{}.txt", kind.name()));
            if !path.is_file() {
                return Err(Error::MissingGazetteer {
                    name: format!("{} (expected at {})", kind.name(), path.display()),
                });
            }
            gazetteers.push(load_gazetteer(kind.name(), &path)?);
        }
        GazetteerSet::from_gazetteers(gazetteers)
    }

    /// The starter gazetteers compiled into the binary.
    pub fn bundled() -> GazetteerSet {
        let texts: [(GazetteerKind, &str); 9] = [
            (
                GazetteerKind::ContributorFirstNames,
                include_str!("../../gazetteers/contributor_first_names.txt"),
            ),
            (
                GazetteerKind::ContributorLastNames,
                include_str!("../../gazetteers/contributor_last_names.txt"),
            ),
            (
                GazetteerKind::ContributorTypes,
                include_str!("../../gazetteers/contributor_types.txt"),
            ),
            (
                GazetteerKind::WorkTypes,
                include_str!("../../gazetteers/work_types.txt"),
            ),
            (
                GazetteerKind::Instruments,
                include_str!("../../gazetteers/instruments.txt"),
            ),
            (
                GazetteerKind::OpusForms,
                include_str!("../../gazetteers/opus_forms.txt"),
            ),
            (
                GazetteerKind::WorkNumberForms,
                include_str!("../../gazetteers/work_number_forms.txt"),
            ),
            (
                GazetteerKind::WorkKeys,
                include_str!("../../gazetteers/work_keys.txt"),
            ),
            (
                GazetteerKind::WorkModes,
                include_str!("../../gazetteers/work_modes.txt"),
            ),
        ];
        let gazetteers = texts
            .into_iter()
            .map(|(kind, text)| parse_gazetteer(kind, text))
            .collect();
        GazetteerSet::from_gazetteers(gazetteers).expect("bundled gazetteers are complete")
    }

    pub fn get(&self, kind: GazetteerKind) -> &Gazetteer {
        let idx = GazetteerKind::ALL.iter().position(|k| *k == kind).unwrap();
        &self.by_kind[idx]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Gazetteer> {
        self.by_kind.iter()
    }
}

/// The 26 feature slot names, in slot order.
pub fn slot_names() -> [&'static str; NUM_FEATURES] {
    [
        "pos",
        "chunk",
        "position",
        "cap",
        "digit",
        "gaz.firstname",
        "gaz.lastname",
        "gaz.ctype",
        "gaz.wtype",
        "gaz.instrument",
        "gaz.opus",
        "gaz.number",
        "gaz.key",
        "gaz.mode",
        "w[-2]",
        "w[-1]",
        "w[+1]",
        "w[+2]",
        "pos[-2]",
        "pos[-1]",
        "pos[+1]",
        "pos[+2]",
        "chunk[-2]",
        "chunk[-1]",
        "chunk[+1]",
        "chunk[+2]",
    ]
}

/// A token's 26 `name=value` feature strings, in slot order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeatureVector {
    features: Vec<String>,
}

impl FeatureVector {
    pub fn features(&self) -> &[String] {
        &self.features
    }

    /// Value part of the named slot.
    pub fn value(&self, slot: &str) -> Option<&str> {
        let idx = slot_names().iter().position(|n| *n == slot)?;
        Some(&self.features[idx][slot.len() + 1..])
    }

    /// Slot name of every feature, for contract checks.
    pub fn names(&self) -> Vec<&str> {
        self.features
            .iter()
            .map(|f| &f[..f.find('=').unwrap_or(f.len())])
            .collect()
    }
}

/// Extracts the feature vector for `tweet.tokens[index]`.
///
/// Pure: identical inputs produce identical output. POS and chunk values are
/// taken from the tokens as-is; run [`fill_missing_pos_chunk`] first when the
/// corpus carries `UNK` columns.
pub fn extract_features(
    tweet: &TaggedTweet,
    index: usize,
    gazetteers: &GazetteerSet,
) -> Result<FeatureVector> {
    let n = tweet.tokens.len();
    if index >= n {
        return Err(Error::InvalidConfig {
            reason: format!("token index {index} out of range for {n} tokens"),
        });
    }
    let token = &tweet.tokens[index];
    let position = if n == 1 {
        0.0
    } else {
        index as f64 / (n - 1) as f64
    };
    let capitalized = token.surface.chars().next().is_some_and(char::is_uppercase);
    let digit = !token.surface.is_empty()
        && token.surface.chars().all(|c| c.is_ascii_digit());

    let mut features = Vec::with_capacity(NUM_FEATURES);
    features.push(format!("pos={}", token.pos));
    features.push(format!("chunk={}", token.chunk));
    features.push(format!("position={position:.4}"));
    features.push(format!("cap={}", u8::from(capitalized)));
    features.push(format!("digit={}", u8::from(digit)));
    for kind in GazetteerKind::ALL {
        let hit = gazetteers.get(kind).contains(&token.surface);
        features.push(format!("{}={}", kind.feature_name(), u8::from(hit)));
    }

    let context = |offset: i64| -> (String, String, String) {
        let pos = index as i64 + offset;
        if pos < 0 {
            (BOS.into(), BOS.into(), BOS.into())
        } else if pos >= n as i64 {
            (EOS.into(), EOS.into(), EOS.into())
        } else {
            let t = &tweet.tokens[pos as usize];
            (t.surface.to_lowercase(), t.pos.clone(), t.chunk.clone())
        }
    };
    let offsets = [-2i64, -1, 1, 2];
    let ctx: Vec<(String, String, String)> = offsets.iter().map(|o| context(*o)).collect();
    for (off, c) in offsets.iter().zip(&ctx) {
        features.push(format!("w[{off:+}]={}", c.0));
    }
    for (off, c) in offsets.iter().zip(&ctx) {
        features.push(format!("pos[{off:+}]={}", c.1));
    }
    for (off, c) in offsets.iter().zip(&ctx) {
        features.push(format!("chunk[{off:+}]={}", c.2));
    }
    debug_assert_eq!(features.len(), NUM_FEATURES);
    Ok(FeatureVector { features })
}

/// Feature vectors for every token of a tweet.
pub fn tweet_features(tweet: &TaggedTweet, gazetteers: &GazetteerSet) -> Result<Vec<FeatureVector>> {
    (0..tweet.tokens.len())
        .map(|i| extract_features(tweet, i, gazetteers))
        .collect()
}
