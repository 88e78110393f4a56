//! Snake and coil validators.
//!
//! Both validators collect every defect they find (up to
//! [`MAX_VIOLATIONS`]) rather than stopping at the first one.

use alloc::vec::Vec;
use core::fmt;

use crate::cube::{Dimension, Kind, Vertex};
use crate::sequence::{walk, TransitionSequence};

/// Upper bound on the number of violations kept in one report.
pub const MAX_VIOLATIONS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum ViolationReason {
    RepeatedVertex,
    ChordAdjacency,
    NotClosed,
    DimensionOutOfRange,
    TooShort,
}

impl fmt::Display for ViolationReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationReason::RepeatedVertex => "RepeatedVertex",
            ViolationReason::ChordAdjacency => "ChordAdjacency",
            ViolationReason::NotClosed => "NotClosed",
            ViolationReason::DimensionOutOfRange => "DimensionOutOfRange",
            ViolationReason::TooShort => "TooShort",
        })
    }
}

/// One defect, located by a pair of walk positions `i <= j`.
///
/// Out-of-range transitions are located by the two vertices they would join;
/// `NotClosed` and `TooShort` use `(0, L)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Violation {
    pub positions: [usize; 2],
    pub reason: ViolationReason,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ValidationReport {
    pub kind: Kind,
    pub dimension: Dimension,
    /// Number of transitions; for a valid object this is its length.
    pub length: usize,
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    fn new(kind: Kind, dimension: Dimension, length: usize) -> Self {
        ValidationReport {
            kind,
            dimension,
            length,
            valid: true,
            violations: Vec::new(),
        }
    }

    /// Records a violation; returns false once the cap is reached.
    fn push(&mut self, i: usize, j: usize, reason: ViolationReason) -> bool {
        self.valid = false;
        if self.violations.len() >= MAX_VIOLATIONS {
            return false;
        }
        self.violations.push(Violation {
            positions: [i, j],
            reason,
        });
        self.violations.len() < MAX_VIOLATIONS
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid {
            write!(
                f,
                "{} in Q_{}: valid, length {}",
                self.kind, self.dimension, self.length
            )
        } else {
            write!(
                f,
                "{} in Q_{}: invalid ({} transitions, {} violations)",
                self.kind,
                self.dimension,
                self.length,
                self.violations.len()
            )?;
            for v in &self.violations {
                write!(
                    f,
                    "\n  {} at positions {} and {}",
                    v.reason, v.positions[0], v.positions[1]
                )?;
            }
            Ok(())
        }
    }
}

pub fn validate(kind: Kind, seq: &TransitionSequence, n: Dimension) -> ValidationReport {
    match kind {
        Kind::Snake => validate_snake(seq, n),
        Kind::Coil => validate_coil(seq, n),
    }
}

/// Checks that `seq` walked from the origin is an induced path.
pub fn validate_snake(seq: &TransitionSequence, n: Dimension) -> ValidationReport {
    let mut report = ValidationReport::new(Kind::Snake, n, seq.len());
    let Some(vertices) = walk_or_report(seq, n, &mut report) else {
        return report;
    };
    check_induced(&vertices, n, None, &mut report);
    report
}

/// Checks that `seq` is a closed walk from the origin tracing an induced
/// cycle of length `seq.len()`.
pub fn validate_coil(seq: &TransitionSequence, n: Dimension) -> ValidationReport {
    let len = seq.len();
    let mut report = ValidationReport::new(Kind::Coil, n, len);
    if len < 4 && !report.push(0, len, ViolationReason::TooShort) {
        return report;
    }
    let Some(mut vertices) = walk_or_report(seq, n, &mut report) else {
        return report;
    };
    let last = vertices.pop();
    if last != Some(vertices.first().copied().unwrap_or(Vertex::ORIGIN))
        && !report.push(0, len, ViolationReason::NotClosed)
    {
        return report;
    }
    check_induced(&vertices, n, Some(len), &mut report);
    report
}

fn walk_or_report(
    seq: &TransitionSequence,
    n: Dimension,
    report: &mut ValidationReport,
) -> Option<Vec<Vertex>> {
    if seq.first_out_of_range(n).is_none() {
        return walk(seq, n, Vertex::ORIGIN).ok();
    }
    for (p, &t) in seq.as_slice().iter().enumerate() {
        if t >= n.get() as u32 && !report.push(p, p + 1, ViolationReason::DimensionOutOfRange) {
            break;
        }
    }
    None
}

/// Distinctness and chord checks. `cycle` carries the cycle length when
/// positions wrap around.
fn check_induced(
    vertices: &[Vertex],
    n: Dimension,
    cycle: Option<usize>,
    report: &mut ValidationReport,
) {
    let mut index: Vec<(u32, usize)> = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.bits(), i))
        .collect();
    index.sort_unstable();

    for group in index.chunk_by(|a, b| a.0 == b.0) {
        for &(_, j) in &group[1..] {
            if !report.push(group[0].1, j, ViolationReason::RepeatedVertex) {
                return;
            }
        }
    }

    let far = |i: usize, j: usize| -> bool {
        let d = j - i;
        match cycle {
            Some(len) => d.min(len - d) >= 2,
            None => d >= 2,
        }
    };
    for (i, &v) in vertices.iter().enumerate() {
        for w in n.neighbors(v) {
            let start = index.partition_point(|&(b, _)| b < w.bits());
            for &(b, j) in &index[start..] {
                if b != w.bits() {
                    break;
                }
                if j > i && far(i, j) && !report.push(i, j, ViolationReason::ChordAdjacency) {
                    return;
                }
            }
        }
    }
    report
        .violations
        .sort_unstable_by_key(|v| (v.positions, v.reason));
}
