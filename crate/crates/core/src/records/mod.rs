//! Best known snake and coil lengths for `n <= 20`, the bundled record
//! sequences, and the bounds derived from them.

use alloc::string::String;
use alloc::vec::Vec;

use crate::cube::{Dimension, Kind};
use crate::sequence::{complete_cycle, parse_sequence, TransitionSequence};
use crate::validate::{validate, validate_coil, ValidationReport};
use crate::{Error, Result};

mod table;

pub use table::{Cell, TableRow, TABLE};

/// Tag used for the record sequences bundled with this crate.
pub const BUNDLED_SOURCE: &str = "this-paper";

/// The manifest describing the bundled corpus.
pub const MANIFEST: &str = include_str!("corpus/MANIFEST");

const ASSETS: [(&str, &str); 7] = [
    (
        "a1_snake_11_712.seq",
        include_str!("corpus/a1_snake_11_712.seq"),
    ),
    (
        "a2_snake_12_1373.seq",
        include_str!("corpus/a2_snake_12_1373.seq"),
    ),
    (
        "a3_snake_13_2687.seq",
        include_str!("corpus/a3_snake_13_2687.seq"),
    ),
    (
        "a4_coil_10_366.seq",
        include_str!("corpus/a4_coil_10_366.seq"),
    ),
    (
        "a5_coil_11_692.seq",
        include_str!("corpus/a5_coil_11_692.seq"),
    ),
    (
        "a6_coil_12_1344.seq",
        include_str!("corpus/a6_coil_12_1344.seq"),
    ),
    (
        "a7_coil_13_2594.seq",
        include_str!("corpus/a7_coil_13_2594.seq"),
    ),
];

/// One manifest line: `label kind dimension claimed_length filename`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub label: String,
    pub kind: Kind,
    pub dimension: Dimension,
    pub claimed_length: usize,
    pub filename: String,
}

/// Parses a manifest. Blank lines and lines starting with `#` are skipped.
pub fn parse_manifest(text: &str) -> Result<Vec<ManifestEntry>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || Error::Manifest(i + 1);
        let fields: Vec<&str> = line.split_ascii_whitespace().collect();
        let [label, kind, dim, len, file] = fields[..] else {
            return Err(bad());
        };
        out.push(ManifestEntry {
            label: label.into(),
            kind: kind.parse().map_err(|_| bad())?,
            dimension: dim
                .parse()
                .ok()
                .and_then(|d| Dimension::new(d).ok())
                .ok_or_else(bad)?,
            claimed_length: len.parse().map_err(|_| bad())?,
            filename: file.into(),
        });
    }
    Ok(out)
}

/// A bundled record sequence with its manifest data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub manifest: ManifestEntry,
    /// The asset text, verbatim.
    pub text: &'static str,
}

impl CorpusEntry {
    /// The sequence as it should be validated. Coil listings omit their
    /// closing transition, which is restored here.
    pub fn sequence(&self) -> Result<TransitionSequence> {
        let seq = parse_sequence(self.text)?;
        Ok(match self.manifest.kind {
            Kind::Snake => seq,
            Kind::Coil => complete_cycle(&seq, self.manifest.dimension).unwrap_or(seq),
        })
    }
}

/// The bundled corpus in manifest order.
pub fn corpus() -> Vec<CorpusEntry> {
    let manifest = parse_manifest(MANIFEST).expect("bundled manifest is well formed");
    manifest
        .into_iter()
        .map(|m| {
            let text = ASSETS
                .iter()
                .find(|(name, _)| *name == m.filename)
                .map(|(_, text)| *text)
                .expect("manifest names a bundled asset");
            CorpusEntry { manifest: m, text }
        })
        .collect()
}

/// Validates every bundled sequence, in manifest order.
///
/// A report whose length differs from the manifest's claim is returned with
/// `valid` forced to false.
pub fn verify_corpus() -> Vec<ValidationReport> {
    corpus()
        .iter()
        .map(|entry| {
            let m = &entry.manifest;
            let seq = entry.sequence().expect("bundled sequences parse");
            let mut report = validate(m.kind, &seq, m.dimension);
            if report.length != m.claimed_length {
                report.valid = false;
            }
            report
        })
        .collect()
}

/// A row of the bounds table, with the record sequence when one is bundled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecordEntry {
    pub dimension: Dimension,
    pub kind: Kind,
    pub length: usize,
    pub optimal: bool,
    pub source: &'static str,
    pub sequence: Option<TransitionSequence>,
}

pub fn best_known(n: Dimension, kind: Kind) -> Result<RecordEntry> {
    let row = TABLE
        .iter()
        .find(|r| r.dimension == n.get())
        .ok_or(Error::OutOfTable(n.get()))?;
    let cell = match kind {
        Kind::Snake => &row.snake,
        Kind::Coil => &row.coil,
    };
    let sequence = if cell.source == BUNDLED_SOURCE {
        corpus()
            .into_iter()
            .find(|e| e.manifest.kind == kind && e.manifest.dimension == n)
            .map(|e| e.sequence())
            .transpose()?
    } else {
        None
    };
    Ok(RecordEntry {
        dimension: n,
        kind,
        length: cell.length,
        optimal: cell.optimal,
        source: cell.source,
        sequence,
    })
}

/// General coil lower bound `77 * 2^(n-8)`, valid for `n >= 21`.
pub fn ak_coil_bound(n: Dimension) -> Result<u64> {
    if n.get() < 21 {
        return Err(Error::PreconditionViolated(
            "the general coil bound needs n >= 21",
        ));
    }
    Ok(77u64 << (n.get() - 8))
}

/// Drops one coil vertex: the last two transitions of a valid coil leave an
/// induced path of length `|seq| - 2`.
pub fn coil_to_snake(seq: &TransitionSequence, n: Dimension) -> Result<TransitionSequence> {
    if !validate_coil(seq, n).valid {
        return Err(Error::NotACoil);
    }
    Ok(TransitionSequence(seq.as_slice()[..seq.len() - 2].to_vec()))
}

/// A failed consistency rule of the bounds table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableIssue {
    /// For `n >= 14` the snake bound must be the coil bound minus 2.
    DerivedSnakeMismatch { dimension: u8 },
    /// Optimality is only known for `n <= 8`.
    OptimalBeyondEight { dimension: u8, kind: Kind },
    /// Deleting a coil vertex gives a snake, so snake >= coil - 2.
    SnakeBelowCoil { dimension: u8 },
    /// The dimensions are not exactly `1..=20` in order.
    Rows,
}

pub fn table_issues() -> Vec<TableIssue> {
    let mut issues = Vec::new();
    if !TABLE.iter().map(|r| r.dimension).eq(1..=20) {
        issues.push(TableIssue::Rows);
    }
    for r in TABLE.iter() {
        if r.dimension >= 14 && r.snake.length + 2 != r.coil.length {
            issues.push(TableIssue::DerivedSnakeMismatch {
                dimension: r.dimension,
            });
        }
        for (kind, cell) in [(Kind::Snake, &r.snake), (Kind::Coil, &r.coil)] {
            if cell.optimal && r.dimension > 8 {
                issues.push(TableIssue::OptimalBeyondEight {
                    dimension: r.dimension,
                    kind,
                });
            }
        }
        if r.snake.length + 2 < r.coil.length {
            issues.push(TableIssue::SnakeBelowCoil {
                dimension: r.dimension,
            });
        }
    }
    issues
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate::validate_snake;

    fn dim(n: u32) -> Dimension {
        Dimension::new(n).unwrap()
    }

    #[test]
    fn manifest_lists_seven_assets() {
        let m = parse_manifest(MANIFEST).unwrap();
        assert_eq!(m.len(), 7);
        assert_eq!(m[0].label, "A1");
        assert_eq!(m[6].kind, Kind::Coil);
        assert_eq!(m[6].claimed_length, 2594);
    }

    #[test]
    fn manifest_errors() {
        assert_eq!(parse_manifest("A1 snake 11 712"), Err(Error::Manifest(1)));
        assert_eq!(
            parse_manifest("\n# c\nA1 worm 11 712 f"),
            Err(Error::Manifest(3))
        );
        assert_eq!(parse_manifest("A1 snake 40 712 f"), Err(Error::Manifest(1)));
        assert_eq!(parse_manifest("A1 snake 4 x f"), Err(Error::Manifest(1)));
    }

    #[test]
    fn coil_listings_omit_closing_transition() {
        for e in corpus().iter().filter(|e| e.manifest.kind == Kind::Coil) {
            let raw = parse_sequence(e.text).unwrap();
            assert_eq!(raw.len() + 1, e.manifest.claimed_length);
            assert_eq!(e.sequence().unwrap().len(), e.manifest.claimed_length);
        }
    }

    #[test]
    fn corpus_reports() {
        let reports = verify_corpus();
        assert_eq!(reports.len(), 7);
        assert!(reports.iter().all(|r| r.valid));
        assert_eq!(
            (
                reports[0].kind,
                reports[0].dimension.get(),
                reports[0].length
            ),
            (Kind::Snake, 11, 712)
        );
        assert_eq!(
            (
                reports[5].kind,
                reports[5].dimension.get(),
                reports[5].length
            ),
            (Kind::Coil, 12, 1344)
        );
        assert_eq!(
            (
                reports[6].kind,
                reports[6].dimension.get(),
                reports[6].length
            ),
            (Kind::Coil, 13, 2594)
        );
    }

    #[test]
    fn best_known_examples() {
        let r = best_known(dim(9), Kind::Snake).unwrap();
        assert_eq!((r.length, r.optimal, r.source), (190, false, "Wy12"));
        assert!(r.sequence.is_none());
        let r = best_known(dim(8), Kind::Coil).unwrap();
        assert_eq!((r.length, r.optimal, r.source), (96, true, "OP14"));
        let r = best_known(dim(13), Kind::Snake).unwrap();
        assert_eq!((r.length, r.source), (2687, BUNDLED_SOURCE));
        assert!(validate_snake(r.sequence.as_ref().unwrap(), dim(13)).valid);
        assert_eq!(best_known(dim(21), Kind::Coil), Err(Error::OutOfTable(21)));
        let r = best_known(dim(1), Kind::Coil).unwrap();
        assert_eq!((r.length, r.optimal), (0, true));
    }

    #[test]
    fn general_bound() {
        assert_eq!(ak_coil_bound(dim(21)), Ok(630_784));
        assert_eq!(ak_coil_bound(dim(22)), Ok(1_261_568));
        assert!(matches!(
            ak_coil_bound(dim(20)),
            Err(Error::PreconditionViolated(_))
        ));
        assert_eq!(ak_coil_bound(dim(31)), Ok(77 << 23));
    }

    #[test]
    fn coil_to_snake_examples() {
        let s = coil_to_snake(&[0, 1, 0, 1].into(), dim(2)).unwrap();
        assert_eq!(s.0, [0, 1]);
        assert!(validate_snake(&s, dim(2)).valid);
        assert_eq!(
            coil_to_snake(&[0, 1, 2].into(), dim(3)),
            Err(Error::NotACoil)
        );
        let a4 = best_known(dim(10), Kind::Coil).unwrap().sequence.unwrap();
        let s = coil_to_snake(&a4, dim(10)).unwrap();
        let r = validate_snake(&s, dim(10));
        assert!(r.valid);
        assert_eq!(r.length, 364);
    }

    #[test]
    fn table_is_consistent() {
        assert_eq!(table_issues(), []);
    }
}
