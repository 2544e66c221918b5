//! Conversion between IOB label sequences and entity spans.

use super::{EntitySpan, EntityType, Label, Token};
use crate::error::{Error, Result};

/// Decodes maximal `B-X (I-X)*` runs into spans. A dangling `I-X` (no
/// preceding tag of the same type) starts a new span, the usual CoNLL repair.
/// Output is sorted by start index and never overlaps.
pub fn spans_from_iob(labels: &[Label], tokens: &[Token]) -> Vec<EntitySpan> {
    debug_assert_eq!(labels.len(), tokens.len());
    let mut spans = Vec::new();
    let mut open: Option<(EntityType, usize)> = None;
    for (i, label) in labels.iter().enumerate() {
        let next = match label.entity_type() {
            None => None,
            Some(etype) => match open {
                // I-X continues a span of the same type; everything else begins one.
                Some((current, start)) if current == etype && !label.is_begin() => {
                    Some((current, start))
                }
                _ => {
                    if let Some((t, s)) = open {
                        spans.push(EntitySpan::new(t, s, i, tokens));
                    }
                    Some((etype, i))
                }
            },
        };
        if next.is_none() {
            if let Some((t, s)) = open {
                spans.push(EntitySpan::new(t, s, i, tokens));
            }
        }
        open = next;
    }
    if let Some((t, s)) = open {
        spans.push(EntitySpan::new(t, s, labels.len(), tokens));
    }
    spans
}

/// Encodes spans back into a label sequence of length `n_tokens`.
///
/// Spans must be in range and pairwise non-overlapping; they need not be
/// sorted. Inverse of [`spans_from_iob`] on valid input.
pub fn iob_from_spans(spans: &[EntitySpan], n_tokens: usize) -> Result<Vec<Label>> {
    let mut sorted: Vec<&EntitySpan> = spans.iter().collect();
    sorted.sort_by_key(|s| (s.start, s.end));
    let mut labels = vec![Label::Outside; n_tokens];
    let mut prev_end = 0usize;
    for (k, span) in sorted.iter().enumerate() {
        if span.start >= span.end || span.end > n_tokens {
            return Err(Error::SpanOutOfRange {
                start: span.start,
                end: span.end,
                n_tokens,
            });
        }
        if k > 0 && span.start < prev_end {
            let prev = sorted[k - 1];
            return Err(Error::SpanOverlap {
                a_start: prev.start,
                a_end: prev.end,
                b_start: span.start,
                b_end: span.end,
            });
        }
        labels[span.start] = Label::begin(span.etype);
        for slot in labels.iter_mut().take(span.end).skip(span.start + 1) {
            *slot = Label::inside(span.etype);
        }
        prev_end = span.end;
    }
    Ok(labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dummy_tokens(n: usize) -> Vec<Token> {
        (0..n).map(|i| Token::untagged(format!("t{i}"))).collect()
    }

    fn parse_labels(s: &str) -> Vec<Label> {
        s.split_whitespace().map(|x| Label::parse(x).unwrap()).collect()
    }

    #[test]
    fn table5_labels_decode() {
        let labels = parse_labels("B-CONTR O O O O O B-WORK I-WORK I-WORK I-WORK");
        let spans = spans_from_iob(&labels, &dummy_tokens(10));
        assert_eq!(spans.len(), 2);
        assert_eq!(
            (spans[0].etype, spans[0].start, spans[0].end),
            (EntityType::Contributor, 0, 1)
        );
        assert_eq!(
            (spans[1].etype, spans[1].start, spans[1].end),
            (EntityType::MusicalWork, 6, 10)
        );
    }

    #[test]
    fn all_outside_yields_nothing() {
        let labels = vec![Label::Outside; 4];
        assert!(spans_from_iob(&labels, &dummy_tokens(4)).is_empty());
    }

    #[test]
    fn dangling_inside_is_repaired() {
        let labels = parse_labels("I-WORK I-WORK");
        let spans = spans_from_iob(&labels, &dummy_tokens(2));
        assert_eq!(spans.len(), 1);
        assert_eq!(
            (spans[0].etype, spans[0].start, spans[0].end),
            (EntityType::MusicalWork, 0, 2)
        );
    }

    #[test]
    fn type_change_without_begin_starts_new_span() {
        let labels = parse_labels("B-CONTR I-WORK");
        let spans = spans_from_iob(&labels, &dummy_tokens(2));
        assert_eq!(spans.len(), 2);
        assert_eq!(spans[0].etype, EntityType::Contributor);
        assert_eq!((spans[1].start, spans[1].end), (1, 2));
    }

    #[test]
    fn adjacent_begins_close_previous_span() {
        let labels = parse_labels("B-WORK B-WORK I-WORK");
        let spans = spans_from_iob(&labels, &dummy_tokens(3));
        assert_eq!(spans.len(), 2);
        assert_eq!((spans[0].start, spans[0].end), (0, 1));
        assert_eq!((spans[1].start, spans[1].end), (1, 3));
    }

    #[test]
    fn encode_empty_and_single() {
        assert_eq!(
            iob_from_spans(&[], 3).unwrap(),
            vec![Label::Outside, Label::Outside, Label::Outside]
        );
        let tokens = dummy_tokens(2);
        let span = EntitySpan::new(EntityType::Contributor, 0, 1, &tokens);
        assert_eq!(
            iob_from_spans(&[span], 2).unwrap(),
            vec![Label::BeginContributor, Label::Outside]
        );
    }

    #[test]
    fn encode_rejects_overlap_and_range() {
        let tokens = dummy_tokens(4);
        let a = EntitySpan::new(EntityType::Contributor, 0, 2, &tokens);
        let b = EntitySpan::new(EntityType::MusicalWork, 1, 3, &tokens);
        assert!(matches!(
            iob_from_spans(&[a.clone(), b], 4),
            Err(Error::SpanOverlap { .. })
        ));
        let mut oob = a;
        oob.end = 9;
        assert!(matches!(
            iob_from_spans(&[oob], 4),
            Err(Error::SpanOutOfRange { .. })
        ));
    }

    #[test]
    fn table5_round_trip() {
        let labels = parse_labels("B-CONTR O O O O O B-WORK I-WORK I-WORK I-WORK");
        let tokens = dummy_tokens(10);
        let spans = spans_from_iob(&labels, &tokens);
        assert_eq!(iob_from_spans(&spans, 10).unwrap(), labels);
    }
}
