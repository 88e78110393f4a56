//! Transition sequences: entry `j` names the bit flipped between walk
//! vertices `j` and `j + 1`.

use alloc::vec::Vec;
use core::fmt;

use crate::cube::{Dimension, Vertex};
use crate::{Error, Result};

/// Ordered list of dimension indices encoding a walk in the hypercube.
///
/// Entries are kept as parsed; checking them against a dimension is the job
/// of [`walk`] and the validators, which report out-of-range entries and
/// immediate reversals instead of refusing to hold them.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(transparent))]
pub struct TransitionSequence(pub Vec<u32>);

impl TransitionSequence {
    pub fn new(transitions: Vec<u32>) -> Self {
        TransitionSequence(transitions)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn reversed(&self) -> Self {
        TransitionSequence(self.0.iter().rev().copied().collect())
    }

    /// Cyclic left rotation by `k` positions.
    pub fn rotated(&self, k: usize) -> Self {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let k = k % v.len();
            v.rotate_left(k);
        }
        TransitionSequence(v)
    }

    /// Position of the first entry `>= n`, if any.
    pub fn first_out_of_range(&self, n: Dimension) -> Option<usize> {
        self.0.iter().position(|&t| t >= n.get() as u32)
    }

    /// Builds the transition sequence of a vertex walk; every consecutive pair
    /// must be adjacent.
    pub fn from_vertices(vertices: &[Vertex]) -> Result<Self> {
        vertices
            .windows(2)
            .enumerate()
            .map(|(i, w)| {
                w[0].transition_to(w[1])
                    .map(u32::from)
                    .ok_or(Error::NotAdjacent(i))
            })
            .collect::<Result<Vec<_>>>()
            .map(TransitionSequence)
    }
}

impl From<Vec<u32>> for TransitionSequence {
    fn from(v: Vec<u32>) -> Self {
        TransitionSequence(v)
    }
}

impl<const N: usize> From<[u32; N]> for TransitionSequence {
    fn from(v: [u32; N]) -> Self {
        TransitionSequence(v.to_vec())
    }
}

impl fmt::Display for TransitionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Splits on commas and ASCII whitespace, dropping empty tokens.
pub fn parse_sequence(text: &str) -> Result<TransitionSequence> {
    text.split(|c: char| c == ',' || c.is_ascii_whitespace())
        .filter(|tok| !tok.is_empty())
        .enumerate()
        .map(|(i, tok)| {
            if tok.bytes().all(|b| b.is_ascii_digit()) {
                tok.parse::<u32>().map_err(|_| Error::NonIntegerToken(i))
            } else {
                Err(Error::NonIntegerToken(i))
            }
        })
        .collect::<Result<Vec<_>>>()
        .map(TransitionSequence)
}

/// Vertices visited by `seq` from `start`; always `seq.len() + 1` entries.
pub fn walk(seq: &TransitionSequence, n: Dimension, start: Vertex) -> Result<Vec<Vertex>> {
    let start = n.vertex(start.bits())?;
    if let Some(p) = seq.first_out_of_range(n) {
        return Err(Error::DimensionOutOfRange(p));
    }
    let mut out = Vec::with_capacity(seq.len() + 1);
    let mut v = start;
    out.push(v);
    for &t in &seq.0 {
        v = v.flip(t as u8);
        out.push(v);
    }
    Ok(out)
}

/// Relabels every entry `t` as `perm[t]`; `perm` must be a bijection on
/// `0..perm.len()`.
pub fn apply_dimension_permutation(
    seq: &TransitionSequence,
    perm: &[u32],
) -> Result<TransitionSequence> {
    let mut seen = alloc::vec![false; perm.len()];
    for &p in perm {
        match seen.get_mut(p as usize) {
            Some(s) if !*s => *s = true,
            _ => return Err(Error::InvalidPermutation),
        }
    }
    seq.0
        .iter()
        .enumerate()
        .map(|(i, &t)| {
            perm.get(t as usize)
                .copied()
                .ok_or(Error::DimensionOutOfRange(i))
        })
        .collect::<Result<Vec<_>>>()
        .map(TransitionSequence)
}

/// Renames dimensions in order of first appearance: 0, 1, 2, ...
pub fn canonical_relabel(seq: &TransitionSequence) -> TransitionSequence {
    let mut map: Vec<(u32, u32)> = Vec::new();
    let out = seq
        .0
        .iter()
        .map(|&t| match map.iter().find(|(from, _)| *from == t) {
            Some(&(_, to)) => to,
            None => {
                let to = map.len() as u32;
                map.push((t, to));
                to
            }
        })
        .collect();
    TransitionSequence(out)
}

/// Returns the sequence as a closed walk from the origin.
///
/// A walk that already returns to its start is returned unchanged. A walk
/// whose last vertex is adjacent to the start gets the single closing
/// transition appended; record listings of cycles omit it. Anything else
/// (including out-of-range entries) yields `None`.
pub fn complete_cycle(seq: &TransitionSequence, n: Dimension) -> Option<TransitionSequence> {
    let end = walk(seq, n, Vertex::ORIGIN).ok()?.pop()?;
    if end == Vertex::ORIGIN {
        return Some(seq.clone());
    }
    let d = end.transition_to(Vertex::ORIGIN)?;
    let mut closed = seq.clone();
    closed.0.push(d as u32);
    Some(closed)
}
