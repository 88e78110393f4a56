//! Test-only generators and a naive inducedness checker. Nothing here goes
//! through the library's validators or search code.
#![allow(dead_code)]

use std::collections::HashSet;

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use snakebox_core::beam::{search, SearchConfig};
use snakebox_core::*;

pub fn dim(n: u32) -> Dimension {
    Dimension::new(n).unwrap()
}

pub fn seq(v: &[u32]) -> TransitionSequence {
    v.to_vec().into()
}

fn adjacent(a: u32, b: u32) -> bool {
    (a ^ b).count_ones() == 1
}

fn naive_walk(seq: &[u32], start: u32) -> Vec<u32> {
    let mut out = vec![start];
    for &t in seq {
        out.push(out.last().unwrap() ^ (1 << t));
    }
    out
}

/// Quadratic check that `vertices` is an induced path (or cycle).
pub fn naive_induced(vertices: &[u32], cycle: bool) -> bool {
    let k = vertices.len();
    for i in 0..k {
        for j in i + 1..k {
            if vertices[i] == vertices[j] {
                return false;
            }
            let gap = j - i;
            let consecutive = gap == 1 || (cycle && gap == k - 1);
            if adjacent(vertices[i], vertices[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

pub fn naive_snake(seq: &[u32], n: u32, start: u32) -> bool {
    seq.iter().all(|&t| t < n) && naive_induced(&naive_walk(seq, start), false)
}

pub fn naive_coil(seq: &[u32], n: u32) -> bool {
    if seq.len() < 4 || seq.iter().any(|&t| t >= n) {
        return false;
    }
    let mut w = naive_walk(seq, 0);
    if w.pop() != Some(0) {
        return false;
    }
    naive_induced(&w, true)
}

/// Random induced path driven by `choices`: each byte picks one of the legal
/// moves. Stops at a dead end or when the bytes run out.
pub fn random_snake(n: u32, choices: &[u8]) -> Vec<u32> {
    let mut path = vec![0u32];
    let mut used: HashSet<u32> = HashSet::from([0]);
    let mut out = Vec::new();
    for &c in choices {
        let head = *path.last().unwrap();
        let legal: Vec<u32> = (0..n)
            .filter(|&d| {
                let v = head ^ (1 << d);
                !used.contains(&v) && path[..path.len() - 1].iter().all(|&p| !adjacent(p, v))
            })
            .collect();
        if legal.is_empty() {
            break;
        }
        let d = legal[c as usize % legal.len()];
        out.push(d);
        path.push(head ^ (1 << d));
        used.insert(head ^ (1 << d));
    }
    out
}

/// Random induced cycle through the origin, `n >= 2`. The path grows
/// ignoring the origin's neighbourhood; every point where one more vertex
/// would close an induced cycle is remembered and the last one reached is
/// used (a 4-cycle is always available after two steps).
pub fn random_coil(n: u32, choices: &[u8]) -> Vec<u32> {
    assert!(n >= 2);
    let mut path = vec![0u32];
    let mut out: Vec<u32> = Vec::new();
    let mut best: Option<Vec<u32>> = None;
    let mut bytes = choices.iter().copied().chain(std::iter::repeat(0));
    loop {
        let head = *path.last().unwrap();
        let interior = path.get(1..path.len() - 1).unwrap_or(&[]);
        let mut moves = Vec::new();
        for d in 0..n {
            let v = head ^ (1 << d);
            if path.contains(&v) || interior.iter().any(|&p| adjacent(p, v)) {
                continue;
            }
            if path.len() >= 3 && adjacent(v, 0) {
                let mut closed = out.clone();
                closed.push(d);
                closed.push(v.trailing_zeros());
                best = Some(closed);
            } else if path.len() == 1 || !adjacent(v, 0) {
                moves.push(d);
            }
        }
        let b = bytes.next().unwrap();
        if moves.is_empty() || (best.is_some() && (b % 7 == 0 || out.len() > choices.len())) {
            break;
        }
        let d = moves[b as usize % moves.len()];
        out.push(d);
        path.push(head ^ (1 << d));
    }
    best.expect("a 4-cycle is always reachable")
}

/// Random bijection on `0..n` from a seed byte string.
pub fn random_permutation(n: u32, choices: &[u8]) -> Vec<u32> {
    let mut pool: Vec<u32> = (0..n).collect();
    let mut perm = Vec::new();
    for i in 0..n as usize {
        let c = choices.get(i).copied().unwrap_or(0) as usize;
        perm.push(pool.remove(c % pool.len()));
    }
    perm
}

pub fn bytes() -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(any::<u8>(), 0..160)
}

/// Flips one entry to a different dimension, to produce invalid inputs too.
pub fn mutate(seq: &mut [u32], n: u32, pos: usize, by: u32) {
    if !seq.is_empty() && n > 1 {
        let i = pos % seq.len();
        seq[i] = (seq[i] + 1 + by % (n - 1)) % n;
    }
}

// Properties shared between the property suite and the acceptance gate.

pub fn prop_snake_invariance(
    n: u32,
    choices: &[u8],
    mutate_at: Option<(usize, u32)>,
    start: u32,
) -> std::result::Result<(), TestCaseError> {
    let mut s = random_snake(n, choices);
    if let Some((pos, by)) = mutate_at {
        mutate(&mut s, n, pos, by);
    }
    let d = dim(n);
    let base = validate_snake(&seq(&s), d);
    prop_assert_eq!(base.valid, naive_snake(&s, n, 0));
    let perm = random_permutation(n, choices);
    let permuted = apply_dimension_permutation(&seq(&s), &perm).unwrap();
    prop_assert_eq!(validate_snake(&permuted, d).valid, base.valid);
    prop_assert_eq!(validate_snake(&seq(&s).reversed(), d).valid, base.valid);
    let start = start & d.mask();
    let translated = walk(&seq(&s), d, Vertex(start)).unwrap();
    let bits: Vec<u32> = translated.iter().map(|v| v.bits()).collect();
    prop_assert_eq!(naive_induced(&bits, false), base.valid);
    Ok(())
}

pub fn prop_coil_invariance(
    n: u32,
    choices: &[u8],
    mutate_at: Option<(usize, u32)>,
    rotate: usize,
) -> std::result::Result<(), TestCaseError> {
    let mut c = random_coil(n, choices);
    if let Some((pos, by)) = mutate_at {
        mutate(&mut c, n, pos, by);
    }
    let d = dim(n);
    let base = validate_coil(&seq(&c), d);
    prop_assert_eq!(base.valid, naive_coil(&c, n));
    if mutate_at.is_none() {
        prop_assert!(base.valid);
    }
    let perm = random_permutation(n, choices);
    let permuted = apply_dimension_permutation(&seq(&c), &perm).unwrap();
    prop_assert_eq!(validate_coil(&permuted, d).valid, base.valid);
    prop_assert_eq!(validate_coil(&seq(&c).reversed(), d).valid, base.valid);
    prop_assert_eq!(validate_coil(&seq(&c).rotated(rotate), d).valid, base.valid);
    Ok(())
}

pub fn prop_snake_prefixes(n: u32, choices: &[u8]) -> std::result::Result<(), TestCaseError> {
    let s = random_snake(n, choices);
    prop_assert!(validate_snake(&seq(&s), dim(n)).valid);
    for k in 0..=s.len() {
        let r = validate_snake(&seq(&s[..k]), dim(n));
        prop_assert!(r.valid && r.length == k);
    }
    Ok(())
}

pub fn prop_coil_even_counts(n: u32, choices: &[u8]) -> std::result::Result<(), TestCaseError> {
    let c = random_coil(n, choices);
    prop_assert!(validate_coil(&seq(&c), dim(n)).valid);
    for d in 0..n {
        prop_assert_eq!(c.iter().filter(|&&t| t == d).count() % 2, 0);
    }
    Ok(())
}

pub fn prop_search_deterministic(
    n: u32,
    kind: Kind,
    width: usize,
    seed: u64,
    temp: f64,
) -> std::result::Result<(), TestCaseError> {
    let config = SearchConfig {
        temperature: temp,
        restarts: 1,
        ..SearchConfig::new(dim(n), kind, width, seed)
    };
    let a = search(&config, &NoClock).unwrap();
    let b = search(&config, &NoClock).unwrap();
    prop_assert_eq!(&a.best, &b.best);
    prop_assert_eq!(a.stats.steps, b.stats.steps);
    prop_assert_eq!(a.stats.expansions, b.stats.expansions);
    let r = validate(kind, &a.best, dim(n));
    match kind {
        Kind::Snake => prop_assert!(r.valid),
        Kind::Coil => prop_assert!(r.valid || a.best.is_empty()),
    }
    prop_assert_eq!(a.best_length, a.best.len());
    Ok(())
}
