//! Whitespace-first tokenizer tuned for informal radio-listener messages.
//!
//! Rules, in order:
//! - split on whitespace;
//! - inside a chunk, every maximal punctuation run of length >= 2 becomes its
//!   own token (`"Rusticana...hm"` -> `Rusticana`, `...`, `hm`);
//! - a single `.` or apostrophe next to a word character stays attached, so
//!   `Op.`, `No.6` and `didn't` survive as one token;
//! - a single `-` stays attached only between word characters (`semi-final`);
//! - any other single punctuation character becomes its own token.

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric()
}

/// Splits `text` into surface tokens. Empty input yields an empty list; no
/// non-whitespace character is ever dropped.
pub fn tokenize(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    for chunk in text.split_whitespace() {
        split_chunk(chunk, &mut out);
    }
    out
}

fn split_chunk(chunk: &str, out: &mut Vec<String>) {
    let chars: Vec<char> = chunk.chars().collect();
    let n = chars.len();
    let mut current = String::new();
    let mut i = 0;
    while i < n {
        if is_word_char(chars[i]) {
            current.push(chars[i]);
            i += 1;
            continue;
        }
        let mut j = i;
        while j < n && !is_word_char(chars[j]) {
            j += 1;
        }
        let keep_attached = j - i == 1 && {
            let prev_word = i > 0 && is_word_char(chars[i - 1]);
            let next_word = j < n && is_word_char(chars[j]);
            match chars[i] {
                '.' | '\'' | '\u{2019}' => prev_word || next_word,
                '-' => prev_word && next_word,
                _ => false,
            }
        };
        if keep_attached {
            current.push(chars[i]);
        } else {
            if !current.is_empty() {
                out.push(std::mem::take(&mut current));
            }
            out.push(chars[i..j].iter().collect());
        }
        i = j;
    }
    if !current.is_empty() {
        out.push(current);
    }
}

/// Lowercases and strips leading/trailing punctuation. Pure-punctuation input
/// normalizes to the empty string.
pub fn normalize_token(surface: &str) -> String {
    surface
        .to_lowercase()
        .trim_matches(|c: char| !c.is_alphanumeric())
        .to_string()
}
