//! Heuristic POS/chunk tagging used when the corpus carries no tag columns.
//!
//! Deliberately crude: when a corpus was produced by an external tagger its
//! columns win; this fallback only keeps the artifact self-contained.

use crate::corpus::{TaggedTweet, UNKNOWN_TAG};

/// Fixed rule table, first match wins:
/// pure punctuation -> `PUNCT`; all digits -> `CD`; leading capital -> `NNP`;
/// suffixes `-ly` -> `RB`, `-ing` -> `VBG`, `-ed` -> `VBD`, `-s` (not `-ss`)
/// -> `NNS`; otherwise `NN`. Chunk is `B-NP` for the nominal tags
/// (`NN/NNS/NNP/CD`), `O` otherwise.
pub fn fallback_pos_chunk(tokens: &[&str]) -> Vec<(&'static str, &'static str)> {
    tokens.iter().map(|t| tag_one(t)).collect()
}

fn tag_one(surface: &str) -> (&'static str, &'static str) {
    let pos = pos_of(surface);
    let chunk = match pos {
        "NN" | "NNS" | "NNP" | "CD" => "B-NP",
        _ => "O",
    };
    (pos, chunk)
}

fn pos_of(surface: &str) -> &'static str {
    if !surface.chars().any(char::is_alphanumeric) {
        return "PUNCT";
    }
    if surface.chars().all(|c| c.is_ascii_digit()) {
        return "CD";
    }
    if surface.chars().next().is_some_and(char::is_uppercase) {
        return "NNP";
    }
    if surface.ends_with("ly") {
        return "RB";
    }
    if surface.ends_with("ing") {
        return "VBG";
    }
    if surface.ends_with("ed") {
        return "VBD";
    }
    if surface.ends_with('s') && !surface.ends_with("ss") && surface.len() > 1 {
        return "NNS";
    }
    "NN"
}

/// Replaces `UNK` POS/chunk columns in place with the heuristic tags.
/// Columns that already carry a tag are left untouched.
pub fn fill_missing_pos_chunk(tweet: &mut TaggedTweet) {
    for token in &mut tweet.tokens {
        let (pos, chunk) = tag_one(&token.surface);
        if token.pos == UNKNOWN_TAG {
            token.pos = pos.to_string();
        }
        if token.chunk == UNKNOWN_TAG {
            token.chunk = chunk.to_string();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::Token;

    #[test]
    fn rule_table() {
        assert_eq!(tag_one("101"), ("CD", "B-NP"));
        assert_eq!(tag_one("Beethoven"), ("NNP", "B-NP"));
        assert_eq!(tag_one("quickly"), ("RB", "O"));
        assert_eq!(tag_one("..."), ("PUNCT", "O"));
        assert_eq!(tag_one("playing"), ("VBG", "O"));
        assert_eq!(tag_one("entered"), ("VBD", "O"));
        assert_eq!(tag_one("tunes"), ("NNS", "B-NP"));
        assert_eq!(tag_one("guess"), ("NN", "B-NP"));
        assert_eq!(tag_one("sonata"), ("NN", "B-NP"));
    }

    #[test]
    fn existing_tags_win() {
        let mut tweet = TaggedTweet::new(
            "t",
            None,
            vec![
                Token {
                    surface: "Beethoven".into(),
                    pos: "X-NNP".into(),
                    chunk: "X-NP".into(),
                },
                Token::untagged("sonata"),
            ],
        );
        fill_missing_pos_chunk(&mut tweet);
        assert_eq!(tweet.tokens[0].pos, "X-NNP");
        assert_eq!(tweet.tokens[0].chunk, "X-NP");
        assert_eq!(tweet.tokens[1].pos, "NN");
        assert_eq!(tweet.tokens[1].chunk, "B-NP");
    }
}
