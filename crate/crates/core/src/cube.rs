//! Hypercube model: dimensions, vertices and dense vertex sets.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// Largest supported dimension. Every vertex of `Q_31` fits in a `u32`.
pub const MAX_DIMENSION: u8 = 31;

/// Number of coordinates of the hypercube, `1 <= n <= 31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(transparent))]
pub struct Dimension(u8);

impl Dimension {
    pub fn new(n: u32) -> Result<Self> {
        if (1..=MAX_DIMENSION as u32).contains(&n) {
            Ok(Dimension(n as u8))
        } else {
            Err(Error::InvalidDimension(n))
        }
    }

    #[inline]
    pub fn get(self) -> u8 {
        self.0
    }

    /// `2^n`.
    #[inline]
    pub fn vertex_count(self) -> usize {
        1usize << self.0
    }

    /// Mask with the low `n` bits set.
    #[inline]
    pub fn mask(self) -> u32 {
        ((1u64 << self.0) - 1) as u32
    }

    pub fn vertex(self, bits: u32) -> Result<Vertex> {
        if bits & !self.mask() == 0 {
            Ok(Vertex(bits))
        } else {
            Err(Error::VertexOutOfRange {
                vertex: bits,
                dimension: self.0,
            })
        }
    }

    /// The `n` neighbours of `v`, in increasing flipped-bit order.
    pub fn neighbors(self, v: Vertex) -> impl Iterator<Item = Vertex> {
        (0..self.0).map(move |d| v.flip(d))
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A hypercube vertex. Bit `d` (least significant first) is coordinate `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(transparent))]
pub struct Vertex(pub u32);

impl Vertex {
    pub const ORIGIN: Vertex = Vertex(0);

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn flip(self, d: u8) -> Vertex {
        Vertex(self.0 ^ (1 << d))
    }

    /// Index of the single differing bit when `self` and `other` are
    /// adjacent.
    #[inline]
    pub fn transition_to(self, other: Vertex) -> Option<u8> {
        let x = self.0 ^ other.0;
        (x.count_ones() == 1).then(|| x.trailing_zeros() as u8)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// True iff the two vertices differ in exactly one bit.
#[inline]
pub fn is_adjacent(u: Vertex, v: Vertex) -> bool {
    (u.0 ^ v.0).count_ones() == 1
}

/// Snake (induced path) or coil (induced cycle).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize),
    serde(rename_all = "lowercase")
)]
pub enum Kind {
    Snake,
    Coil,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Snake => "snake",
            Kind::Coil => "coil",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = ();

    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        match s {
            "snake" => Ok(Kind::Snake),
            "coil" => Ok(Kind::Coil),
            _ => Err(()),
        }
    }
}

/// Dense bitset over the `2^n` vertices of a hypercube.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(n: Dimension) -> Self {
        VertexSet {
            words: vec![0; n.vertex_count().div_ceil(64)],
        }
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        let i = v.0 as usize;
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    /// Inserts `v`, returning true if it was absent.
    #[inline]
    pub fn insert(&mut self, v: Vertex) -> bool {
        let i = v.0 as usize;
        let w = &mut self.words[i >> 6];
        let bit = 1u64 << (i & 63);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, v: Vertex) {
        let i = v.0 as usize;
        self.words[i >> 6] &= !(1u64 << (i & 63));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// `|self \ other|`.
    pub fn difference_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros();
                w &= w - 1;
                Some(Vertex((wi as u32) << 6 | b))
            })
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|v| v.0)).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacency() {
        assert!(is_adjacent(Vertex(0), Vertex(1)));
        assert!(!is_adjacent(Vertex(0), Vertex(3)));
        assert!(is_adjacent(Vertex(5), Vertex(7)));
        assert!(!is_adjacent(Vertex(6), Vertex(6)));
    }

    #[test]
    fn dimension_bounds() {
        assert_eq!(Dimension::new(0), Err(Error::InvalidDimension(0)));
        assert_eq!(Dimension::new(32), Err(Error::InvalidDimension(32)));
        let n = Dimension::new(31).unwrap();
        assert_eq!(n.mask(), u32::MAX >> 1);
        assert!(n.vertex(1 << 31).is_err());
        let n3 = Dimension::new(3).unwrap();
        assert_eq!(n3.vertex(7), Ok(Vertex(7)));
        assert!(n3.vertex(8).is_err());
    }

    #[test]
    fn transition_between() {
        assert_eq!(Vertex(5).transition_to(Vertex(4)), Some(0));
        assert_eq!(Vertex(0).transition_to(Vertex(8)), Some(3));
        assert_eq!(Vertex(0).transition_to(Vertex(3)), None);
    }

    #[test]
    fn vertex_set_ops() {
        let n = Dimension::new(7).unwrap();
        let mut s = VertexSet::new(n);
        assert!(s.insert(Vertex(3)));
        assert!(!s.insert(Vertex(3)));
        s.insert(Vertex(100));
        assert!(s.contains(Vertex(100)));
        assert_eq!(s.len(), 2);
        assert_eq!(s.iter().map(|v| v.0).collect::<Vec<_>>(), [3, 100]);
        let mut t = VertexSet::new(n);
        t.insert(Vertex(3));
        assert_eq!(s.difference_len(&t), 1);
        s.remove(Vertex(3));
        s.remove(Vertex(100));
        assert!(s.is_empty());
    }
}
