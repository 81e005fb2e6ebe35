//! Max-weight-first stack walk over a [`WeightedGraph`].
//!
//! The walk starts with `start` on the stack. Each round marks the stack top
//! visited and scans its adjacency for the unvisited neighbor of greatest
//! weight. That neighbor is pushed; if none exists the top is popped.
//! Visited marks are never cleared, so every vertex is pushed at most once.
//! The deepest stack seen during the walk is the result.

use std::fmt;
use std::str::FromStr;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Path;
use crate::weight::WeightedGraph;

/// How to choose among several unvisited neighbors sharing the maximum
/// weight.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum TieBreakPolicy {
    /// Earliest in adjacency (BFS discovery) order. A strict `>` comparison
    /// during the scan yields exactly this.
    #[default]
    FirstSeen,
    LowestId,
    /// Uniform among the maximizers, drawn from a generator seeded by
    /// `(seed, start)`.
    SeededRandom { seed: u64 },
}

impl TieBreakPolicy {
    pub fn name(&self) -> &'static str {
        match self {
            TieBreakPolicy::FirstSeen => "first",
            TieBreakPolicy::LowestId => "lowest",
            TieBreakPolicy::SeededRandom { .. } => "random",
        }
    }

    /// Policy from its CLI name. `seed` is only used by `random`.
    pub fn from_name(name: &str, seed: u64) -> Result<Self> {
        match name {
            "first" | "first_seen" | "first-seen" => Ok(TieBreakPolicy::FirstSeen),
            "lowest" | "lowest_id" | "lowest-id" => Ok(TieBreakPolicy::LowestId),
            "random" | "seeded_random" | "seeded-random" => Ok(TieBreakPolicy::SeededRandom { seed }),
            other => Err(Error::InvalidParams(format!("unknown tie-break policy {other:?}"))),
        }
    }
}

impl fmt::Display for TieBreakPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TieBreakPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TieBreakPolicy::from_name(s, 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub best_length: usize,
    /// Stack contents at the moment `best_length` was first reached.
    pub best_path: Path,
}

fn mix_seed(seed: u64, start: usize) -> u64 {
    // splitmix64 finalizer over the pair
    let mut z = seed ^ (start as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Reusable scratch space for repeated searches over graphs of one size.
#[derive(Debug, Default)]
pub struct Searcher {
    stamp: Vec<u32>,
    generation: u32,
    stack: Vec<u32>,
}

impl Searcher {
    pub fn new() -> Self {
        Self::default()
    }

    fn reset(&mut self, n: usize) {
        if self.stamp.len() != n || self.generation == u32::MAX {
            self.stamp.clear();
            self.stamp.resize(n, 0);
            self.generation = 0;
        }
        self.generation += 1;
        self.stack.clear();
    }

    pub fn search(
        &mut self,
        wg: &WeightedGraph,
        start: usize,
        policy: TieBreakPolicy,
    ) -> Result<SearchOutcome> {
        let n = wg.n();
        if start >= n {
            return Err(Error::VertexOutOfRange { vertex: start, n });
        }
        self.reset(n);
        let generation = self.generation;
        let mut rng = match policy {
            TieBreakPolicy::SeededRandom { seed } => {
                Some(ChaCha8Rng::seed_from_u64(mix_seed(seed, start)))
            }
            _ => None,
        };

        let mut best_length = 0;
        let mut best_path = vec![start];
        // set while the stack holds a deeper prefix than `best_path`
        let mut uncaptured = false;

        self.stack.push(start as u32);
        while let Some(&top) = self.stack.last() {
            let u = top as usize;
            self.stamp[u] = generation;

            let mut max = 0;
            let mut choice = 0u32;
            let mut ties = 0u32;
            for e in wg.neighbors(u) {
                if self.stamp[e.to as usize] == generation {
                    continue;
                }
                if e.weight > max {
                    max = e.weight;
                    choice = e.to;
                    ties = 1;
                } else if e.weight == max {
                    match policy {
                        TieBreakPolicy::FirstSeen => {}
                        TieBreakPolicy::LowestId => choice = choice.min(e.to),
                        TieBreakPolicy::SeededRandom { .. } => {
                            ties += 1;
                            let rng = rng.as_mut().expect("seeded policy has a generator");
                            if rng.random_range(0..ties) == 0 {
                                choice = e.to;
                            }
                        }
                    }
                }
            }

            if max == 0 {
                if uncaptured {
                    best_path.clear();
                    best_path.extend(self.stack.iter().map(|&v| v as usize));
                    uncaptured = false;
                }
                self.stack.pop();
            } else {
                self.stack.push(choice);
                let depth = self.stack.len() - 1;
                if depth > best_length {
                    best_length = depth;
                    uncaptured = true;
                }
            }
        }

        Ok(SearchOutcome {
            best_length,
            best_path: Path::new(best_path),
        })
    }
}

/// Runs one greedy walk from `start`.
pub fn search(wg: &WeightedGraph, start: usize, policy: TieBreakPolicy) -> Result<SearchOutcome> {
    Searcher::new().search(wg, start, policy)
}
