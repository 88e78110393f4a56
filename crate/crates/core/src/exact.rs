//! Exhaustive search for longest snakes and coils in small hypercubes.
//!
//! The search walks from the origin, one transition at a time, keeping an
//! occupancy bitset and a per-vertex count of occupied non-head neighbours
//! (a vertex with a non-zero count is blocked). Dimensions are introduced in
//! increasing order only, which quotients out the `n!` coordinate
//! permutations; together with fixing the start at the origin this leaves
//! one representative per orbit of the hypercube's automorphism group
//! acting on anchored walks.
//!
//! A branch is cut when the head has no legal move, or when the number of
//! free vertices reachable from the head cannot beat the incumbent.

use alloc::vec;
use alloc::vec::Vec;

use crate::clock::Clock;
use crate::cube::{Dimension, Kind, Vertex};
use crate::sequence::TransitionSequence;
use crate::{Error, Result};

/// Limits for one exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_seconds: f64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 1_000_000_000,
            max_seconds: 600.0,
        }
    }
}

impl Budget {
    pub fn new(max_nodes: u64, max_seconds: f64) -> Result<Self> {
        if max_nodes == 0 || max_seconds.is_nan() || max_seconds <= 0.0 {
            return Err(Error::PreconditionViolated(
                "budget limits must be positive",
            ));
        }
        Ok(Budget {
            max_nodes,
            max_seconds,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// The search tree was exhausted: nothing longer exists.
    Proven,
    /// The budget ran out; `best_length` is only a lower bound.
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub kind: Kind,
    pub dimension: Dimension,
    pub best_length: usize,
    pub witness: TransitionSequence,
    pub status: Status,
    /// Search-tree nodes visited.
    pub nodes: u64,
}

/// Switches for the two reductions. Both are on by default; turning them off
/// must never change `best_length`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    pub symmetry_reduction: bool,
    pub reachability_bound: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            symmetry_reduction: true,
            reachability_bound: true,
        }
    }
}

pub fn optimal_snake_length(n: Dimension, budget: Budget, clock: &dyn Clock) -> SolveResult {
    solve(Kind::Snake, n, budget, SolverOptions::default(), clock)
}

pub fn optimal_coil_length(n: Dimension, budget: Budget, clock: &dyn Clock) -> SolveResult {
    solve(Kind::Coil, n, budget, SolverOptions::default(), clock)
}

pub fn solve(
    kind: Kind,
    n: Dimension,
    budget: Budget,
    options: SolverOptions,
    clock: &dyn Clock,
) -> SolveResult {
    let mut search = Search::new(kind, n, budget, options, clock);
    let completed = search.run();
    SolveResult {
        kind,
        dimension: n,
        best_length: search.best_length,
        witness: TransitionSequence(search.best.iter().map(|&d| d as u32).collect()),
        status: if completed {
            Status::Proven
        } else {
            Status::BudgetExhausted
        },
        nodes: search.nodes,
    }
}

const CLOCK_CHECK_INTERVAL: u64 = 1 << 14;

struct Search<'a> {
    kind: Kind,
    n: u8,
    options: SolverOptions,
    budget: Budget,
    clock: &'a dyn Clock,
    occupied: Bits,
    /// Vertices with at least one occupied non-head neighbour.
    blocked: Bits,
    block_count: Vec<u8>,
    path: Vec<u8>,
    best: Vec<u8>,
    best_length: usize,
    nodes: u64,
    aborted: bool,
    scratch: (Bits, Bits, Bits),
}

impl<'a> Search<'a> {
    fn new(
        kind: Kind,
        n: Dimension,
        budget: Budget,
        options: SolverOptions,
        clock: &'a dyn Clock,
    ) -> Self {
        let blank = Bits::new(n);
        Search {
            kind,
            n: n.get(),
            options,
            budget,
            clock,
            occupied: blank.clone(),
            blocked: blank.clone(),
            block_count: vec![0; n.vertex_count()],
            path: Vec::new(),
            best: Vec::new(),
            best_length: 0,
            nodes: 0,
            aborted: false,
            scratch: (blank.clone(), blank.clone(), blank),
        }
    }

    fn run(&mut self) -> bool {
        self.occupied.set(0);
        self.dfs(Vertex::ORIGIN, 0);
        !self.aborted
    }

    fn out_of_budget(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes
            || (self.nodes.is_multiple_of(CLOCK_CHECK_INTERVAL)
                && self.clock.elapsed_secs() > self.budget.max_seconds)
        {
            self.aborted = true;
        }
        self.aborted
    }

    /// `used` is the number of distinct dimensions on the current path.
    fn dfs(&mut self, head: Vertex, used: u8) {
        if self.out_of_budget() {
            return;
        }
        if self.kind == Kind::Snake && self.path.len() > self.best_length {
            self.best_length = self.path.len();
            self.best.clone_from(&self.path);
        }
        if self.options.reachability_bound && !self.can_improve(head) {
            return;
        }

        let limit = if self.options.symmetry_reduction {
            (used + 1).min(self.n)
        } else {
            self.n
        };
        // The head becomes an interior vertex once we step off it; in coil
        // mode the start never blocks, its neighbours are closing vertices.
        let head_blocks = !(self.kind == Kind::Coil && self.path.is_empty());
        for d in 0..limit {
            let next = head.flip(d);
            if self.occupied.get(next.0) || self.blocked.get(next.0) {
                continue;
            }
            let used_next = used.max(d + 1);
            if self.kind == Kind::Coil
                && !self.path.is_empty()
                && next.transition_to(Vertex::ORIGIN).is_some()
            {
                // Closing vertex: path + next + closing edge.
                let len = self.path.len() + 2;
                if len > self.best_length {
                    self.best_length = len;
                    self.best.clone_from(&self.path);
                    self.best.push(d);
                    self.best.push(next.transition_to(Vertex::ORIGIN).unwrap());
                }
                continue;
            }
            if head_blocks {
                self.block_around(head, next);
            }
            self.occupied.set(next.0);
            self.path.push(d);
            self.dfs(next, used_next);
            self.path.pop();
            self.occupied.clear(next.0);
            if head_blocks {
                self.unblock_around(head, next);
            }
            if self.aborted {
                return;
            }
        }
    }

    fn block_around(&mut self, v: Vertex, skip: Vertex) {
        for d in 0..self.n {
            let w = v.flip(d);
            if w == skip {
                continue;
            }
            let c = &mut self.block_count[w.0 as usize];
            *c += 1;
            if *c == 1 {
                self.blocked.set(w.0);
            }
        }
    }

    fn unblock_around(&mut self, v: Vertex, skip: Vertex) {
        for d in 0..self.n {
            let w = v.flip(d);
            if w == skip {
                continue;
            }
            let c = &mut self.block_count[w.0 as usize];
            *c -= 1;
            if *c == 0 {
                self.blocked.clear(w.0);
            }
        }
    }

    /// Every future vertex is currently free and reachable from the head
    /// through free vertices; a coil also gains its closing edge.
    fn can_improve(&mut self, head: Vertex) -> bool {
        let (free, frontier, next) = &mut self.scratch;
        free.assign_free(&self.occupied, &self.blocked);
        let reachable = free.reachable_from(head, self.n, frontier, next);
        let bonus = usize::from(self.kind == Kind::Coil);
        self.path.len() + reachable + bonus > self.best_length
    }
}

/// Plain bitset with the word-level neighbourhood expansion the bound needs.
#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: Dimension) -> Self {
        Bits(vec![0; n.vertex_count().div_ceil(64)])
    }

    #[inline]
    fn get(&self, i: u32) -> bool {
        self.0[(i >> 6) as usize] >> (i & 63) & 1 == 1
    }

    #[inline]
    fn set(&mut self, i: u32) {
        self.0[(i >> 6) as usize] |= 1 << (i & 63);
    }

    #[inline]
    fn clear(&mut self, i: u32) {
        self.0[(i >> 6) as usize] &= !(1 << (i & 63));
    }

    fn assign_free(&mut self, occupied: &Bits, blocked: &Bits) {
        for ((f, o), b) in self.0.iter_mut().zip(&occupied.0).zip(&blocked.0) {
            *f = !(o | b);
        }
    }

    /// Size of the component of free vertices adjacent to `head` (the head
    /// itself excluded). Consumes `self`.
    fn reachable_from(
        &mut self,
        head: Vertex,
        n: u8,
        frontier: &mut Bits,
        next: &mut Bits,
    ) -> usize {
        let valid_bits = if n >= 6 {
            u64::MAX
        } else {
            (1u64 << (1u32 << n)) - 1
        };
        if let Some(w) = self.0.first_mut() {
            *w &= valid_bits;
        }
        frontier.0.iter_mut().for_each(|w| *w = 0);
        frontier.set(head.0);
        let mut count = 0;
        loop {
            frontier.expand_into(n, next);
            let mut any = false;
            for ((nx, free), fr) in next
                .0
                .iter_mut()
                .zip(self.0.iter_mut())
                .zip(frontier.0.iter_mut())
            {
                let fresh = *nx & *free;
                *free &= !fresh;
                *fr = fresh;
                count += fresh.count_ones() as usize;
                any |= fresh != 0;
            }
            if !any {
                return count;
            }
        }
    }

    /// `out` = union of neighbourhoods of `self`.
    fn expand_into(&self, n: u8, out: &mut Bits) {
        out.0.iter_mut().for_each(|w| *w = 0);
        const LOW: [u64; 6] = [
            0x5555_5555_5555_5555,
            0x3333_3333_3333_3333,
            0x0f0f_0f0f_0f0f_0f0f,
            0x00ff_00ff_00ff_00ff,
            0x0000_ffff_0000_ffff,
            0x0000_0000_ffff_ffff,
        ];
        for (i, &w) in self.0.iter().enumerate() {
            if w == 0 {
                continue;
            }
            let mut acc = 0;
            for d in 0..n.min(6) {
                let s = 1u32 << d;
                acc |= ((w & LOW[d as usize]) << s) | ((w >> s) & LOW[d as usize]);
            }
            out.0[i] |= acc;
            for d in 6..n {
                out.0[i ^ (1 << (d - 6))] |= w;
            }
        }
    }
}

/// Longest snake or coil by enumerating every vertex subset of `Q_n` and
/// testing whether its induced subgraph is a path or cycle. No pruning, no
/// symmetry; only meant as an independent oracle.
pub fn brute_force_optimum(n: Dimension, kind: Kind) -> Result<usize> {
    if n.get() > 4 {
        return Err(Error::InstanceTooLarge(n.get()));
    }
    let order = n.vertex_count();
    let adj: Vec<u32> = (0..order as u32)
        .map(|v| n.neighbors(Vertex(v)).fold(0u32, |m, w| m | 1 << w.0))
        .collect();
    let mut best = 0;
    for subset in 1u32..(1u64 << order) as u32 {
        let size = subset.count_ones() as usize;
        let candidate_len = match kind {
            Kind::Snake => size - 1,
            Kind::Coil => size,
        };
        if candidate_len <= best {
            continue;
        }
        let mut edges2 = 0;
        let mut max_deg = 0;
        let mut min_deg = u32::MAX;
        for (v, &nbrs) in adj.iter().enumerate().take(order) {
            if subset >> v & 1 == 1 {
                let deg = (nbrs & subset).count_ones();
                edges2 += deg as usize;
                max_deg = max_deg.max(deg);
                min_deg = min_deg.min(deg);
            }
        }
        let edges = edges2 / 2;
        let shaped = match kind {
            Kind::Snake => max_deg <= 2 && edges == size - 1,
            Kind::Coil => size >= 3 && min_deg == 2 && max_deg == 2,
        };
        if shaped && connected(subset, &adj) {
            best = candidate_len;
        }
    }
    Ok(best)
}

fn connected(subset: u32, adj: &[u32]) -> bool {
    let mut seen = 1u32 << subset.trailing_zeros();
    loop {
        let mut grown = seen;
        let mut s = seen;
        while s != 0 {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            grown |= adj[v] & subset;
        }
        if grown == seen {
            return seen == subset;
        }
        seen = grown;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clock::NoClock;
    use crate::validate::validate;

    fn dim(n: u32) -> Dimension {
        Dimension::new(n).unwrap()
    }

    #[test]
    fn snake_small_optima() {
        for (n, want) in [(1, 1), (2, 2), (3, 4), (4, 7), (5, 13)] {
            let r = optimal_snake_length(dim(n), Budget::default(), &NoClock);
            assert_eq!(r.best_length, want, "n={n}");
            assert_eq!(r.status, Status::Proven);
            let report = validate(Kind::Snake, &r.witness, dim(n));
            assert!(report.valid && report.length == want, "{report}");
        }
    }

    #[test]
    fn coil_small_optima() {
        for (n, want) in [(1, 0), (2, 4), (3, 6), (4, 8), (5, 14)] {
            let r = optimal_coil_length(dim(n), Budget::default(), &NoClock);
            assert_eq!(r.best_length, want, "n={n}");
            assert_eq!(r.status, Status::Proven);
            if want > 0 {
                let report = validate(Kind::Coil, &r.witness, dim(n));
                assert!(report.valid && report.length == want, "{report}");
            } else {
                assert!(r.witness.is_empty());
            }
        }
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_optimum(dim(3), Kind::Snake), Ok(4));
        assert_eq!(brute_force_optimum(dim(3), Kind::Coil), Ok(6));
        assert_eq!(brute_force_optimum(dim(2), Kind::Snake), Ok(2));
        assert_eq!(brute_force_optimum(dim(1), Kind::Coil), Ok(0));
        assert_eq!(
            brute_force_optimum(dim(5), Kind::Snake),
            Err(Error::InstanceTooLarge(5))
        );
    }

    #[test]
    fn node_budget_is_reported() {
        let budget = Budget::new(50, 600.0).unwrap();
        let r = optimal_snake_length(dim(6), budget, &NoClock);
        assert_eq!(r.status, Status::BudgetExhausted);
        assert!(validate(Kind::Snake, &r.witness, dim(6)).valid);
    }

    #[test]
    fn budget_rejects_zero() {
        assert!(Budget::new(0, 1.0).is_err());
        assert!(Budget::new(1, 0.0).is_err());
    }

    #[test]
    fn deterministic_witness() {
        let a = optimal_coil_length(dim(4), Budget::default(), &NoClock);
        let b = optimal_coil_length(dim(4), Budget::default(), &NoClock);
        assert_eq!(a, b);
    }

    #[test]
    fn expansion_matches_flip() {
        for n in 1..=8u8 {
            let d = dim(n as u32);
            for v in [0u32, 1, 5, (1 << n) - 1]
                .into_iter()
                .filter(|&v| v < 1 << n)
            {
                let mut one = Bits::new(d);
                one.set(v);
                let mut out = Bits::new(d);
                one.expand_into(n, &mut out);
                for u in 0..(1u32 << n) {
                    assert_eq!(out.get(u), (u ^ v).count_ones() == 1, "n={n} v={v} u={u}");
                }
            }
        }
    }
}
