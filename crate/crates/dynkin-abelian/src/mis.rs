//! Exact maximum-independent-set search on commutation graphs.
//!
//! The solver runs branch and bound on the complement formulation: a maximum
//! independent set of the graph is a maximum clique of its complement, and
//! greedy coloring of the complement's candidate sets gives the bound. All
//! candidate sets are bit rows. An optional cap (the caller's theoretical
//! upper bound, here always half of `dim g_1`) stops the search as soon as a
//! set of that size is found.
//!
//! A deliberately naive exhaustive scanner, [`brute_force_mis`], doubles as
//! the oracle for graphs of at most 30 vertices; it shares no pruning logic
//! with the main solver.

use thiserror::Error;

use crate::comm_graph::{BitRows, CommutationGraph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MisError {
    #[error("brute-force oracle refuses graphs with {0} > {1} vertices")]
    TooLargeForBruteForce(usize, usize),
    #[error("cardinality {0} exceeds vertex count {1}")]
    CardinalityOutOfRange(usize, usize),
}

/// Result of an exact search.
///
/// `witness` is pairwise non-adjacent with `witness.len() == size`, and is
/// the lexicographically smallest maximum independent set under vertex
/// order. `proven_optimal` is true unless the search stopped early because
/// it reached the caller's cap, in which case `capped_by_bound` is set and
/// `size` equals the cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MisResult {
    pub size: usize,
    pub witness: Vec<usize>,
    pub proven_optimal: bool,
    pub capped_by_bound: bool,
}

/// Word-set helpers over `Vec<u64>` candidate sets.
#[derive(Clone, Debug)]
struct WordSet {
    words: Vec<u64>,
}

impl WordSet {
    fn full(n: usize, words_per_row: usize) -> WordSet {
        let mut words = vec![0u64; words_per_row];
        for v in 0..n {
            words[v / 64] |= 1 << (v % 64);
        }
        WordSet { words }
    }

    fn empty(words_per_row: usize) -> WordSet {
        WordSet {
            words: vec![0; words_per_row],
        }
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn contains(&self, v: usize) -> bool {
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn first(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(k * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    fn intersect_row(&self, row: &[u64]) -> WordSet {
        WordSet {
            words: self.words.iter().zip(row).map(|(a, b)| a & b).collect(),
        }
    }

    fn subtract_row(&self, row: &[u64]) -> WordSet {
        WordSet {
            words: self.words.iter().zip(row).map(|(a, b)| a & !b).collect(),
        }
    }
}

/// Search state for the complement-clique branch and bound.
struct Solver<'g> {
    graph: &'g CommutationGraph,
    /// complement adjacency (bit rows)
    comp: BitRows,
    best: usize,
    cap: Option<usize>,
    capped: bool,
}

impl<'g> Solver<'g> {
    fn new(graph: &'g CommutationGraph) -> Solver<'g> {
        let n = graph.vertex_count();
        let mut comp = BitRows::new(n);
        for u in 0..n {
            for v in 0..n {
                if u != v && !graph.adjacent(u, v) {
                    comp.set(u, v);
                }
            }
        }
        Solver {
            graph,
            comp,
            best: 0,
            cap: None,
            capped: false,
        }
    }

    fn done(&self) -> bool {
        matches!(self.cap, Some(c) if self.best >= c)
    }

    /// Greedy coloring of the candidate set in the complement graph: vertices
    /// of one color class are pairwise non-adjacent in the complement, so any
    /// clique meets each class at most once. Returns vertices ordered by
    /// color with their color numbers (ascending).
    fn color_order(&self, cand: &WordSet) -> Vec<(usize, usize)> {
        let mut ordered = Vec::with_capacity(cand.count());
        let mut uncolored = cand.clone();
        let mut color = 0usize;
        while !uncolored.is_empty() {
            color += 1;
            let mut avail = uncolored.clone();
            while let Some(v) = avail.first() {
                avail.remove(v);
                uncolored.remove(v);
                // vertices adjacent to v in the complement cannot share its color
                avail = avail.subtract_row(self.comp.row(v));
                ordered.push((v, color));
            }
        }
        ordered
    }

    fn expand(&mut self, current: &mut Vec<usize>, cand: &WordSet) {
        if self.done() {
            self.capped = true;
            return;
        }
        if current.len() > self.best {
            self.best = current.len();
            if self.done() {
                self.capped = true;
                return;
            }
        }
        if cand.is_empty() {
            return;
        }
        let ordered = self.color_order(cand);
        // process highest colors first; the color number bounds the clique
        for idx in (0..ordered.len()).rev() {
            let (v, color) = ordered[idx];
            if current.len() + color <= self.best {
                return;
            }
            let mut rest = WordSet::empty(self.comp.words_per_row());
            for &(u, _) in &ordered[..idx] {
                rest.insert(u);
            }
            let next = rest.intersect_row(self.comp.row(v));
            current.push(v);
            self.expand(current, &next);
            current.pop();
            if self.done() {
                return;
            }
        }
    }

    fn solve(&mut self) -> usize {
        let n = self.graph.vertex_count();
        let full = WordSet::full(n, self.comp.words_per_row());
        let mut current = Vec::new();
        self.expand(&mut current, &full);
        self.best
    }

    /// Decision query: can the seed be extended inside `cand` to a set of
    /// total size `target`? Resets the incumbent and stops on first success.
    fn exists_of_size(&mut self, seed: &[usize], cand: &WordSet, target: usize) -> bool {
        self.best = seed.len();
        self.cap = Some(target);
        self.capped = false;
        if seed.len() >= target {
            return true;
        }
        let mut current = seed.to_vec();
        self.expand(&mut current, cand);
        self.best >= target
    }
}

/// Exact maximum independent set.
///
/// `cap`, when given, must be a genuine upper bound supplied by the caller;
/// the search stops as soon as an independent set of that size is found and
/// reports `capped_by_bound` instead of `proven_optimal`.
pub fn max_independent_set(g: &CommutationGraph, cap: Option<usize>) -> MisResult {
    let n = g.vertex_count();
    if n == 0 {
        return MisResult {
            size: 0,
            witness: Vec::new(),
            proven_optimal: true,
            capped_by_bound: false,
        };
    }
    let mut solver = Solver::new(g);
    solver.cap = cap;
    let size = solver.solve();
    let capped = solver.capped;
    debug_assert!(cap.is_none_or(|c| size <= c));

    // lexicographically smallest witness of the found size: force vertices
    // in increasing order whenever an extension to `size` still exists
    let words = solver.comp.words_per_row();
    let mut witness: Vec<usize> = Vec::with_capacity(size);
    let mut cand = WordSet::full(n, words);
    let mut next_vertex = 0usize;
    while witness.len() < size {
        debug_assert!(next_vertex < n);
        let v = (next_vertex..n)
            .find(|&v| {
                if !cand.contains(v) {
                    return false;
                }
                let mut with_v = witness.clone();
                with_v.push(v);
                let mut reduced = cand.intersect_row(solver.comp.row(v));
                for u in 0..=v {
                    reduced.remove(u);
                }
                solver.exists_of_size(&with_v, &reduced, size)
            })
            .expect("a maximum set of the computed size always exists");
        witness.push(v);
        cand = cand.intersect_row(solver.comp.row(v));
        next_vertex = v + 1;
    }
    debug_assert!(verify_witness(g, &witness));

    MisResult {
        size,
        witness,
        proven_optimal: !capped,
        capped_by_bound: capped,
    }
}

/// Checks that a vertex set is pairwise non-adjacent.
pub fn verify_witness(g: &CommutationGraph, set: &[usize]) -> bool {
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if g.adjacent(u, v) {
                return false;
            }
        }
    }
    true
}

/// Lazily enumerates every independent set of cardinality exactly `d`, each
/// once, in lexicographic order on the sorted vertex lists.
pub fn enumerate_independent_sets(
    g: &CommutationGraph,
    d: usize,
) -> Result<IndependentSetIter<'_>, MisError> {
    let n = g.vertex_count();
    if d > n {
        return Err(MisError::CardinalityOutOfRange(d, n));
    }
    Ok(IndependentSetIter {
        graph: g,
        target: d,
        stack: vec![Frame {
            next: 0,
            chosen: Vec::new(),
        }],
        served_empty: false,
    })
}

struct Frame {
    next: usize,
    chosen: Vec<usize>,
}

pub struct IndependentSetIter<'g> {
    graph: &'g CommutationGraph,
    target: usize,
    stack: Vec<Frame>,
    served_empty: bool,
}

impl Iterator for IndependentSetIter<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.target == 0 {
            if self.served_empty {
                return None;
            }
            self.served_empty = true;
            return Some(Vec::new());
        }
        let n = self.graph.vertex_count();
        while let Some(frame) = self.stack.last_mut() {
            if frame.chosen.len() == self.target {
                let out = frame.chosen.clone();
                self.stack.pop();
                return Some(out);
            }
            let needed = self.target - frame.chosen.len();
            if frame.next >= n || n - frame.next < needed {
                self.stack.pop();
                continue;
            }
            let v = frame.next;
            frame.next += 1;
            if frame.chosen.iter().all(|&u| !self.graph.adjacent(u, v)) {
                let mut chosen = frame.chosen.clone();
                chosen.push(v);
                self.stack.push(Frame {
                    next: v + 1,
                    chosen,
                });
            }
        }
        None
    }
}

const BRUTE_FORCE_LIMIT: usize = 30;

/// Exhaustive include/exclude scan over the power set, with only the trivial
/// "remaining vertices cannot beat the incumbent" prune. The testing oracle
/// for everything at most 30 vertices.
pub fn brute_force_mis(g: &CommutationGraph) -> Result<usize, MisError> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_LIMIT {
        return Err(MisError::TooLargeForBruteForce(n, BRUTE_FORCE_LIMIT));
    }
    let masks: Vec<u32> = (0..n)
        .map(|u| {
            let mut m = 0u32;
            for v in 0..n {
                if g.adjacent(u, v) {
                    m |= 1 << v;
                }
            }
            m
        })
        .collect();

    fn go(v: usize, n: usize, taken: u32, count: usize, masks: &[u32], best: &mut usize) {
        if count + (n - v) <= *best {
            return;
        }
        if v == n {
            *best = (*best).max(count);
            return;
        }
        if taken & (1 << v) == 0 {
            go(v + 1, n, taken | masks[v], count + 1, masks, best);
        }
        go(v + 1, n, taken, count, masks, best);
    }

    let mut best = 0;
    go(0, n, 0, 0, &masks, &mut best);
    Ok(best)
}
