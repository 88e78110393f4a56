//! Seeded stochastic beam search for long snakes and coils.
//!
//! Each generation extends every candidate by every legal transition, ranks
//! the children by fitness (ties broken by their canonical relabeling so
//! that expansion order never matters), drops dimension-symmetric twins and
//! keeps `beam_width` survivors. Survivors are drawn by softmax sampling
//! without replacement, implemented as Gumbel top-k: each child gets the key
//! `score / temperature + G` with `G` standard Gumbel noise and the largest
//! keys win. Temperature 0 is plain truncation.
//!
//! Coils are harvested from the snake search. In coil mode the start vertex
//! does not make its neighbours illegal; a child that steps next to the
//! start is closed immediately and leaves the beam.

use alloc::vec::Vec;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clock::Clock;
use crate::cube::{is_adjacent, Dimension, Kind, Vertex, VertexSet};
use crate::sequence::TransitionSequence;
use crate::validate::validate_coil;
use crate::{Error, Result};

/// Candidate scoring rule.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Fitness {
    /// `100 * length - |blocked \ occupied|`.
    #[default]
    Tightness,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    pub dimension: Dimension,
    pub kind: Kind,
    pub beam_width: usize,
    pub restarts: u32,
    pub seed: u64,
    pub temperature: f64,
    pub max_seconds: f64,
    pub fitness: Fitness,
}

impl SearchConfig {
    pub fn new(dimension: Dimension, kind: Kind, beam_width: usize, seed: u64) -> Self {
        SearchConfig {
            dimension,
            kind,
            beam_width,
            restarts: 0,
            seed,
            temperature: 1.0,
            max_seconds: f64::INFINITY,
            fitness: Fitness::Tightness,
        }
    }

    pub fn check(&self) -> Result<()> {
        if self.beam_width == 0 {
            return Err(Error::PreconditionViolated("beam width must be at least 1"));
        }
        if self.temperature.is_nan() || self.temperature < 0.0 {
            return Err(Error::PreconditionViolated(
                "temperature must be non-negative",
            ));
        }
        Ok(())
    }
}

/// A partial snake anchored at the origin.
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub seq: TransitionSequence,
    pub head: Vertex,
    /// Exactly the walked vertices.
    pub occupied: VertexSet,
    /// Every neighbour of a non-head walked vertex.
    pub blocked: VertexSet,
    pub score: f64,
    canonical: Vec<u8>,
    labels: [u8; 32],
}

const UNLABELED: u8 = u8::MAX;

impl Candidate {
    /// The zero-length candidate at the origin.
    pub fn empty(n: Dimension) -> Self {
        let mut occupied = VertexSet::new(n);
        occupied.insert(Vertex::ORIGIN);
        Candidate {
            seq: TransitionSequence::default(),
            head: Vertex::ORIGIN,
            occupied,
            blocked: VertexSet::new(n),
            score: 0.0,
            canonical: Vec::new(),
            labels: [UNLABELED; 32],
        }
    }

    /// Replays `seq` from the origin. Legality is not checked; only the
    /// dimension range is.
    pub fn from_sequence(seq: &TransitionSequence, n: Dimension) -> Result<Self> {
        if let Some(p) = seq.first_out_of_range(n) {
            return Err(Error::DimensionOutOfRange(p));
        }
        let mut c = Candidate::empty(n);
        for &t in seq.as_slice() {
            c = c.extend(t as u8, n);
        }
        Ok(c)
    }

    /// Number of transitions.
    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    fn extend(&self, d: u8, n: Dimension) -> Candidate {
        let mut child = self.clone();
        let next = self.head.flip(d);
        for w in n.neighbors(self.head) {
            child.blocked.insert(w);
        }
        child.occupied.insert(next);
        child.head = next;
        child.seq.0.push(d as u32);
        let label = self.label_of(d);
        child.labels[d as usize] = label;
        child.canonical.push(label);
        child.score = fitness(&child, n);
        child
    }

    /// Canonical label `d` would receive if appended.
    fn label_of(&self, d: u8) -> u8 {
        match self.labels[d as usize] {
            UNLABELED => self.labels.iter().filter(|&&l| l != UNLABELED).count() as u8,
            l => l,
        }
    }
}

/// `100 * |seq| - |blocked \ occupied|`.
pub fn fitness(c: &Candidate, _n: Dimension) -> f64 {
    100.0 * c.seq.len() as f64 - c.blocked.difference_len(&c.occupied) as f64
}

/// Score `c.extend(d)` would get, without building it.
fn child_score(c: &Candidate, next: Vertex, n: Dimension) -> f64 {
    let mut waste = c.blocked.difference_len(&c.occupied) as i64;
    if c.blocked.contains(next) {
        waste -= 1;
    }
    for w in n.neighbors(c.head) {
        if w != next && !c.blocked.contains(w) && !c.occupied.contains(w) {
            waste += 1;
        }
    }
    100.0 * (c.seq.len() + 1) as f64 - waste as f64
}

/// Whether the head of `c` may step to `next` under the rules of `kind`.
fn is_legal(c: &Candidate, next: Vertex, n: Dimension, kind: Kind) -> bool {
    if c.occupied.contains(next) {
        return false;
    }
    if !c.blocked.contains(next) {
        return true;
    }
    kind == Kind::Coil
        && n.neighbors(next)
            .all(|w| w == c.head || w == Vertex::ORIGIN || !c.occupied.contains(w))
}

fn closes(c: &Candidate, next: Vertex, kind: Kind) -> bool {
    kind == Kind::Coil && !c.is_empty() && is_adjacent(next, Vertex::ORIGIN)
}

/// If the head is adjacent to the origin and the closing transition yields
/// an induced cycle, returns the closed sequence.
pub fn close_if_possible(c: &Candidate, n: Dimension) -> Option<TransitionSequence> {
    let d = c.head.transition_to(Vertex::ORIGIN)?;
    let mut closed = c.seq.clone();
    closed.0.push(d as u32);
    validate_coil(&closed, n).valid.then_some(closed)
}

/// Deterministic per-run random stream.
#[derive(Debug, Clone)]
pub struct SearchRng(ChaCha8Rng);

impl SearchRng {
    pub fn new(seed: u64) -> Self {
        SearchRng(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Uniform in the open interval (0, 1).
    fn open01(&mut self) -> f64 {
        ((self.0.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
    }

    fn gumbel(&mut self) -> f64 {
        -libm::log(-libm::log(self.open01()))
    }
}

/// Result of one generation.
#[derive(Debug, Clone, PartialEq)]
pub struct Generation {
    pub survivors: Vec<Candidate>,
    /// Coils closed during this generation (coil mode only).
    pub closed: Vec<TransitionSequence>,
    /// Distinct children considered, closing moves included.
    pub expansions: usize,
}

struct Child {
    parent: usize,
    parent_rank: usize,
    dim: u8,
    label: u8,
    score: f64,
}

pub fn step_beam(
    population: &[Candidate],
    config: &SearchConfig,
    rng: &mut SearchRng,
) -> Result<Generation> {
    config.check()?;
    let n = config.dimension;
    if population.is_empty() {
        return Err(Error::PreconditionViolated("population must be non-empty"));
    }

    // Rank parents by canonical form; equal forms share a rank.
    let mut order: Vec<usize> = (0..population.len()).collect();
    order.sort_by(|&a, &b| population[a].canonical.cmp(&population[b].canonical));
    let mut rank = alloc::vec![0usize; population.len()];
    for w in 1..order.len() {
        let same = population[order[w]].canonical == population[order[w - 1]].canonical;
        rank[order[w]] = rank[order[w - 1]] + usize::from(!same);
    }

    let mut children = Vec::new();
    let mut closed = Vec::new();
    let mut closed_keys: Vec<(usize, u8)> = Vec::new();
    for (pi, c) in population.iter().enumerate() {
        for d in 0..n.get() {
            let next = c.head.flip(d);
            if !is_legal(c, next, n, config.kind) {
                continue;
            }
            let label = c.label_of(d);
            if closes(c, next, config.kind) {
                let key = (rank[pi], label);
                if closed_keys.contains(&key) {
                    continue;
                }
                closed_keys.push(key);
                if let Some(coil) = close_if_possible(&c.extend(d, n), n) {
                    closed.push(coil);
                }
                continue;
            }
            children.push(Child {
                parent: pi,
                parent_rank: rank[pi],
                dim: d,
                label,
                score: child_score(c, next, n),
            });
        }
    }
    if children.is_empty() && closed_keys.is_empty() {
        return Err(Error::Extinction);
    }

    // Stable sort keeps expansion order among exact canonical twins.
    children.sort_by(|a, b| {
        b.score
            .total_cmp(&a.score)
            .then(a.parent_rank.cmp(&b.parent_rank))
            .then(a.label.cmp(&b.label))
    });
    children.dedup_by(|b, a| a.parent_rank == b.parent_rank && a.label == b.label);
    let expansions = children.len() + closed_keys.len();

    let keep = config.beam_width.min(children.len());
    let chosen: Vec<usize> = if keep == children.len() {
        (0..children.len()).collect()
    } else if config.temperature == 0.0 {
        (0..keep).collect()
    } else {
        let keys: Vec<f64> = children
            .iter()
            .map(|c| c.score / config.temperature + rng.gumbel())
            .collect();
        let mut idx: Vec<usize> = (0..children.len()).collect();
        idx.sort_by(|&a, &b| keys[b].total_cmp(&keys[a]).then(a.cmp(&b)));
        idx.truncate(keep);
        idx.sort_unstable();
        idx
    };

    let survivors: Vec<Candidate> = chosen
        .into_iter()
        .map(|i| population[children[i].parent].extend(children[i].dim, n))
        .collect();
    #[cfg(debug_assertions)]
    for s in &survivors {
        debug_assert!(
            crate::validate::validate_snake(&s.seq, n).valid,
            "illegal survivor {}",
            s.seq
        );
    }
    Ok(Generation {
        survivors,
        closed,
        expansions,
    })
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct SearchStats {
    pub steps: u64,
    pub expansions: u64,
    pub restarts_used: u32,
    pub seconds: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchOutcome {
    pub best: TransitionSequence,
    pub best_length: usize,
    pub kind: Kind,
    pub stats: SearchStats,
}

/// Runs `restarts + 1` independent beam runs; run `i` is seeded with
/// `seed + i`.
pub fn search(config: &SearchConfig, clock: &dyn Clock) -> Result<SearchOutcome> {
    config.check()?;
    let n = config.dimension;
    let mut best = TransitionSequence::default();
    let mut stats = SearchStats::default();

    for run in 0..=config.restarts {
        if run > 0 && clock.elapsed_secs() > config.max_seconds {
            break;
        }
        stats.restarts_used = run;
        let mut rng = SearchRng::new(config.seed.wrapping_add(run as u64));
        let mut population = alloc::vec![Candidate::empty(n)];
        while !population.is_empty() && clock.elapsed_secs() <= config.max_seconds {
            let generation = match step_beam(&population, config, &mut rng) {
                Ok(g) => g,
                Err(Error::Extinction) => break,
                Err(e) => return Err(e),
            };
            stats.steps += 1;
            stats.expansions += generation.expansions as u64;
            match config.kind {
                Kind::Snake => {
                    if let Some(lead) = generation.survivors.first() {
                        if lead.len() > best.len() {
                            best = lead.seq.clone();
                        }
                    }
                }
                Kind::Coil => {
                    for coil in generation.closed {
                        if coil.len() > best.len() {
                            best = coil;
                        }
                    }
                }
            }
            population = generation.survivors;
        }
    }
    stats.seconds = clock.elapsed_secs();
    Ok(SearchOutcome {
        best_length: best.len(),
        best,
        kind: config.kind,
        stats,
    })
}
