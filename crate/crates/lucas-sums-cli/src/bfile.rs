//! OEIS b-file parsing and conformance checking.
//!
//! A b-file is plain ASCII: one `index value` pair per line, `#`-prefixed
//! comment lines and blank lines ignored, indices strictly increasing,
//! values of arbitrary magnitude. Files may start at any index (OEIS
//! offsets vary), so the checker aligns on the file's own first index: the
//! first data line is compared against term 0, an entry `d` positions after
//! it against term `d`. That avoids off-by-one false alarms without
//! hard-coding per-sequence offsets.

use std::fmt;
use std::str::FromStr;

use lucas_sums::{ExactInt, NamedSequence};

/// One parsed b-file line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFileEntry {
    /// The index as written in the file.
    pub index: i64,
    /// The sequence value claimed for that index.
    pub value: ExactInt,
}

/// A malformed b-file, with the 1-based line number of the offending line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line number.
    pub line: usize,
    /// What was wrong with the line.
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Parses b-file text into entries, enforcing the two-field line shape and
/// strictly increasing indices.
pub fn parse(text: &str) -> Result<Vec<BFileEntry>, ParseError> {
    let mut entries: Vec<BFileEntry> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let err = |message: String| ParseError {
            line: line_no,
            message,
        };
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let index_token = fields.next().expect("non-empty line has a first field");
        let index: i64 = index_token
            .parse()
            .map_err(|e| err(format!("invalid index {index_token:?}: {e}")))?;
        let value_token = fields
            .next()
            .ok_or_else(|| err(format!("missing value after index {index}")))?;
        let value = ExactInt::from_str(value_token)
            .map_err(|e| err(format!("invalid value {value_token:?}: {e}")))?;
        if fields.next().is_some() {
            return Err(err("expected two fields per line, found more".to_string()));
        }
        if let Some(previous) = entries.last() {
            if previous.index >= index {
                return Err(err(format!(
                    "indices not strictly increasing ({index} after {})",
                    previous.index
                )));
            }
        }
        entries.push(BFileEntry { index, value });
    }
    Ok(entries)
}

/// Result of comparing a named sequence against parsed b-file entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    /// Every compared entry matched.
    AllMatch {
        /// Number of entries compared.
        checked: u64,
        /// First b-file index (the alignment anchor, mapped to term 0).
        first_index: i64,
        /// Last b-file index actually compared.
        last_index: i64,
    },
    /// The first disagreement, reported with the b-file's own index.
    Mismatch {
        /// B-file index of the disagreeing entry.
        index: i64,
        /// The value this crate computes for that position.
        computed: ExactInt,
        /// The value the b-file claims.
        found: ExactInt,
    },
    /// The file had no data lines.
    Empty,
}

/// Compares `sequence` term-by-term against `entries`, aligning the file's
/// first index with term 0 and stopping after aligned index `max_n` when
/// given.
#[must_use]
pub fn check(sequence: &NamedSequence, entries: &[BFileEntry], max_n: Option<u64>) -> CheckOutcome {
    let Some(first) = entries.first() else {
        return CheckOutcome::Empty;
    };
    let first_index = first.index;
    let mut checked = 0;
    let mut last_index = first_index;
    for entry in entries {
        // Safe: indices are strictly increasing, so entry.index >= first_index.
        let n = (entry.index - first_index) as u64;
        if matches!(max_n, Some(cap) if n > cap) {
            break;
        }
        let computed = sequence.term(n);
        if computed != entry.value {
            return CheckOutcome::Mismatch {
                index: entry.index,
                computed,
                found: entry.value.clone(),
            };
        }
        checked += 1;
        last_index = entry.index;
    }
    CheckOutcome::AllMatch {
        checked,
        first_index,
        last_index,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lucas_sums::lookup;

    #[test]
    fn parses_plain_pairs() {
        let entries = parse("0 0\n1 1\n2 1\n3 2\n").unwrap();
        assert_eq!(entries.len(), 4);
        assert_eq!(entries[3].index, 3);
        assert_eq!(entries[3].value, ExactInt::from(2));
    }

    #[test]
    fn skips_comments_and_blank_lines() {
        let text = "# a header comment\n\n0 2\n# interior comment\n1 3\n\n2 5\n";
        let entries = parse(text).unwrap();
        assert_eq!(entries.len(), 3);
        assert_eq!(entries[2].value, ExactInt::from(5));
    }

    #[test]
    fn accepts_negative_and_huge_values() {
        let huge = "9".repeat(120);
        let text = format!("-3 -42\n0 {huge}\n");
        let entries = parse(&text).unwrap();
        assert_eq!(entries[0].index, -3);
        assert_eq!(entries[0].value, ExactInt::from(-42));
        assert_eq!(entries[1].value.to_string(), huge);
    }

    #[test]
    fn reports_bad_index_with_line_number() {
        let e = parse("0 0\n1 1\nx 2\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("invalid index"));
    }

    #[test]
    fn reports_bad_value_with_line_number() {
        let e = parse("0 0\n1 one\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("invalid value"));
    }

    #[test]
    fn reports_missing_value() {
        let e = parse("0 0\n7\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("missing value"));
    }

    #[test]
    fn reports_extra_fields() {
        let e = parse("0 0 0\n").unwrap_err();
        assert_eq!(e.line, 1);
        assert!(e.message.contains("two fields"));
    }

    #[test]
    fn rejects_non_increasing_indices() {
        let e = parse("0 0\n2 1\n2 1\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("strictly increasing"));
        let e = parse("5 0\n4 1\n").unwrap_err();
        assert_eq!(e.line, 2);
    }

    #[test]
    fn check_matches_fibonacci_prefix() {
        let seq = lookup("fibonacci").unwrap();
        let entries = parse("0 0\n1 1\n2 1\n3 2\n4 3\n5 5\n").unwrap();
        assert_eq!(
            check(&seq, &entries, None),
            CheckOutcome::AllMatch {
                checked: 6,
                first_index: 0,
                last_index: 5
            }
        );
    }

    #[test]
    fn check_aligns_on_first_index() {
        // Same Fibonacci values, but the file starts its indexing at 1.
        let seq = lookup("fibonacci").unwrap();
        let entries = parse("1 0\n2 1\n3 1\n4 2\n5 3\n").unwrap();
        assert_eq!(
            check(&seq, &entries, None),
            CheckOutcome::AllMatch {
                checked: 5,
                first_index: 1,
                last_index: 5
            }
        );
    }

    #[test]
    fn check_reports_first_mismatch_by_file_index() {
        let seq = lookup("mersenne").unwrap();
        let entries = parse("0 0\n1 1\n2 3\n3 8\n4 15\n").unwrap();
        assert_eq!(
            check(&seq, &entries, None),
            CheckOutcome::Mismatch {
                index: 3,
                computed: ExactInt::from(7),
                found: ExactInt::from(8),
            }
        );
    }

    #[test]
    fn check_honors_max_n() {
        let seq = lookup("mersenne").unwrap();
        // Wrong beyond aligned index 2, but the cap stops before it.
        let entries = parse("0 0\n1 1\n2 3\n3 999\n").unwrap();
        assert_eq!(
            check(&seq, &entries, Some(2)),
            CheckOutcome::AllMatch {
                checked: 3,
                first_index: 0,
                last_index: 2
            }
        );
    }

    #[test]
    fn check_empty_file() {
        let seq = lookup("lucas").unwrap();
        assert_eq!(
            check(&seq, &parse("# nothing\n").unwrap(), None),
            CheckOutcome::Empty
        );
    }
}
