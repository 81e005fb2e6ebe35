//! Drivers that combine rooted weighting and greedy walks over many
//! `(root, start)` pairs, plus the insertion improvement pass.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::bfs::bfs_distances;
use crate::error::{Error, Result};
use crate::graph::{validate_path, Graph, Path};
use crate::search::{Searcher, TieBreakPolicy};
use crate::weight::create;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Search from every start vertex for every root.
    #[default]
    AllPairs,
    /// Search only from the vertex farthest from each root.
    Farthest,
}

impl Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Variant::AllPairs => "all-pairs",
            Variant::Farthest => "farthest",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all-pairs" | "all_pairs" => Ok(Variant::AllPairs),
            "farthest" => Ok(Variant::Farthest),
            other => Err(Error::InvalidParams(format!("unknown variant {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolveConfig {
    pub variant: Variant,
    pub policy: TieBreakPolicy,
    /// Run [`improve`] on the winning path.
    pub improve: bool,
    /// Only use roots `0..max_roots`.
    pub max_roots: Option<usize>,
    /// Process roots on the rayon pool. Output is identical to a serial run.
    pub parallel: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub roots_processed: usize,
    pub searches_run: usize,
    pub wall_time: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub best: Path,
    pub length: usize,
    /// Length of the greedy winner before any improvement pass.
    pub found_length: usize,
    pub root: usize,
    pub start: usize,
    pub stats: SolveStats,
}

impl SolveResult {
    /// Same result ignoring wall-clock time.
    pub fn same_outcome(&self, other: &SolveResult) -> bool {
        self.best == other.best
            && self.length == other.length
            && self.found_length == other.found_length
            && self.root == other.root
            && self.start == other.start
            && self.stats.roots_processed == other.stats.roots_processed
            && self.stats.searches_run == other.stats.searches_run
    }
}

struct Candidate {
    length: usize,
    root: usize,
    start: usize,
    path: Path,
    searches: usize,
}

pub fn solve_all_pairs(g: &Graph, cfg: &SolveConfig) -> Result<SolveResult> {
    solve(g, &SolveConfig { variant: Variant::AllPairs, ..cfg.clone() })
}

pub fn solve_farthest(g: &Graph, cfg: &SolveConfig) -> Result<SolveResult> {
    solve(g, &SolveConfig { variant: Variant::Farthest, ..cfg.clone() })
}

/// Runs the driver selected by `cfg.variant`.
///
/// The winner is the longest path found; equal lengths go to the
/// lexicographically smallest `(root, start)`.
pub fn solve(g: &Graph, cfg: &SolveConfig) -> Result<SolveResult> {
    let began = Instant::now();
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let roots = match cfg.max_roots {
        None => n,
        Some(k) if (1..=n).contains(&k) => k,
        Some(k) => {
            return Err(Error::InvalidParams(format!(
                "max_roots must lie in [1, {n}], got {k}"
            )))
        }
    };
    if n == 1 {
        return Ok(SolveResult {
            best: Path::single(0),
            length: 0,
            found_length: 0,
            root: 0,
            start: 0,
            stats: SolveStats {
                roots_processed: 1,
                searches_run: 0,
                wall_time: began.elapsed(),
            },
        });
    }

    let candidates: Vec<Candidate> = if cfg.parallel {
        (0..roots)
            .into_par_iter()
            .map_init(Searcher::new, |searcher, root| {
                best_for_root(g, root, cfg, searcher)
            })
            .collect::<Result<_>>()?
    } else {
        let mut searcher = Searcher::new();
        (0..roots)
            .map(|root| best_for_root(g, root, cfg, &mut searcher))
            .collect::<Result<_>>()?
    };

    let searches_run = candidates.iter().map(|c| c.searches).sum();
    let winner = candidates
        .into_iter()
        .reduce(|best, c| if c.length > best.length { c } else { best })
        .expect("at least one root");

    let found_length = winner.length;
    let best = if cfg.improve {
        improve(g, &winner.path)?
    } else {
        winner.path
    };
    Ok(SolveResult {
        length: best.length(),
        best,
        found_length,
        root: winner.root,
        start: winner.start,
        stats: SolveStats {
            roots_processed: roots,
            searches_run,
            wall_time: began.elapsed(),
        },
    })
}

fn best_for_root(
    g: &Graph,
    root: usize,
    cfg: &SolveConfig,
    searcher: &mut Searcher,
) -> Result<Candidate> {
    let wg = create(g, root)?;
    let starts: Vec<usize> = match cfg.variant {
        Variant::AllPairs => (0..g.n()).filter(|&j| j != root).collect(),
        Variant::Farthest => {
            let (far, _) = bfs_distances(g, root)?.farthest();
            // A root alone in its component has no farthest vertex; searching
            // from any other vertex then yields a single-vertex path.
            let start = if far != root { far } else if root == 0 { 1 } else { 0 };
            vec![start]
        }
    };
    let mut best: Option<Candidate> = None;
    for &start in &starts {
        let out = searcher.search(&wg, start, cfg.policy)?;
        if best.as_ref().is_none_or(|b| out.best_length > b.length) {
            best = Some(Candidate {
                length: out.best_length,
                root,
                start,
                path: out.best_path,
                searches: 0,
            });
        }
    }
    let mut best = best.expect("n >= 2 gives every root a start vertex");
    best.searches = starts.len();
    Ok(best)
}

/// Splices unused vertices into `path` until no more fit.
///
/// Repeatedly takes the leftmost consecutive pair `(a, b)` for which some
/// vertex `u` off the path is adjacent to both, and inserts the lowest such
/// `u` between them. The result is a simple path at least as long as the
/// input; the input must itself be valid.
pub fn improve(g: &Graph, path: &Path) -> Result<Path> {
    validate_path(g, path).map_err(Error::InvalidPath)?;
    let mut vs = path.vertices().to_vec();
    let mut on_path = vec![false; g.n()];
    for &v in &vs {
        on_path[v] = true;
    }
    // Inserting a vertex never creates a candidate for an earlier pair, so
    // the scan resumes at the pair that just changed.
    let mut i = 0;
    while i + 1 < vs.len() {
        let (a, b) = (vs[i], vs[i + 1]);
        let found = g
            .neighbors(a)
            .iter()
            .map(|&u| u as usize)
            .find(|&u| !on_path[u] && g.has_edge(u, b));
        match found {
            Some(u) => {
                vs.insert(i + 1, u);
                on_path[u] = true;
            }
            None => i += 1,
        }
    }
    Ok(Path::new(vs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};

    fn cfg() -> SolveConfig {
        SolveConfig::default()
    }

    #[test]
    fn empty_and_single() {
        assert!(matches!(solve(&Graph::empty(0), &cfg()), Err(Error::EmptyGraph)));
        let r = solve(&Graph::empty(1), &cfg()).unwrap();
        assert_eq!((r.length, r.best.vertices()), (0, &[0][..]));
    }

    #[test]
    fn edgeless_graph_keeps_root_and_start_apart() {
        for variant in [Variant::AllPairs, Variant::Farthest] {
            let r = solve(&Graph::empty(3), &SolveConfig { variant, ..cfg() }).unwrap();
            assert_eq!(r.length, 0);
            assert_ne!(r.root, r.start);
            assert_eq!(r.best.vertices(), &[r.start]);
        }
    }

    #[test]
    fn complete_four_is_hamiltonian() {
        let g = generate(&Family::Complete { n: 4 }, 0).unwrap();
        let r = solve_all_pairs(&g, &cfg()).unwrap();
        assert_eq!(r.length, 3);
        validate_path(&g, &r.best).unwrap();
        assert_eq!((r.root, r.start), (0, 1));
        assert_eq!(r.stats.searches_run, 12);
    }

    #[test]
    fn disjoint_triangles() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let r = solve_all_pairs(&g, &cfg()).unwrap();
        assert_eq!(r.length, 2);
        let comps = g.components();
        let c = comps[r.best.vertices()[0]];
        assert!(r.best.vertices().iter().all(|&v| comps[v] == c));
    }

    #[test]
    fn farthest_on_path_and_cycle() {
        let p6 = generate(&Family::Path { n: 6 }, 0).unwrap();
        assert_eq!(solve_farthest(&p6, &cfg()).unwrap().length, 5);
        let c8 = generate(&Family::Cycle { n: 8 }, 0).unwrap();
        let r = solve_farthest(&c8, &cfg()).unwrap();
        assert_eq!(r.length, 7);
        assert_eq!(r.stats.searches_run, 8);
    }

    #[test]
    fn max_roots_bounds() {
        let g = generate(&Family::Cycle { n: 5 }, 0).unwrap();
        let r = solve(&g, &SolveConfig { max_roots: Some(2), ..cfg() }).unwrap();
        assert_eq!(r.stats.roots_processed, 2);
        assert_eq!(r.stats.searches_run, 8);
        assert!(solve(&g, &SolveConfig { max_roots: Some(0), ..cfg() }).is_err());
        assert!(solve(&g, &SolveConfig { max_roots: Some(6), ..cfg() }).is_err());
    }

    #[test]
    fn parallel_matches_serial() {
        let g = generate(&Family::Gnp { n: 40, p: 0.1 }, 11).unwrap();
        for policy in [
            TieBreakPolicy::FirstSeen,
            TieBreakPolicy::LowestId,
            TieBreakPolicy::SeededRandom { seed: 4 },
        ] {
            for variant in [Variant::AllPairs, Variant::Farthest] {
                let serial = SolveConfig { variant, policy, ..cfg() };
                let parallel = SolveConfig { parallel: true, ..serial.clone() };
                let a = solve(&g, &serial).unwrap();
                let b = solve(&g, &parallel).unwrap();
                assert!(a.same_outcome(&b), "{a:?} vs {b:?}");
            }
        }
    }

    #[test]
    fn improve_triangle() {
        let g = generate(&Family::Complete { n: 3 }, 0).unwrap();
        let p = improve(&g, &Path::new(vec![0, 2])).unwrap();
        assert_eq!(p.vertices(), &[0, 1, 2]);
    }

    #[test]
    fn improve_leaves_hamiltonian_alone() {
        let g = generate(&Family::Cycle { n: 5 }, 0).unwrap();
        let p = Path::new(vec![2, 3, 4, 0, 1]);
        assert_eq!(improve(&g, &p).unwrap(), p);
    }

    #[test]
    fn improve_square_with_chord() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        // both (1, 0) and (0, 3) admit vertex 2; the leftmost pair wins
        let p = improve(&g, &Path::new(vec![1, 0, 3])).unwrap();
        assert_eq!(p.vertices(), &[1, 2, 0, 3]);
        assert_eq!(p.length(), 3);
    }

    #[test]
    fn improve_iterates_to_fixpoint() {
        // 0-4 with detours 0-1-4 and then 0-2-1 after 1 is spliced in
        let g = Graph::from_edges(5, [(0, 4), (0, 1), (1, 4), (0, 2), (2, 1)]).unwrap();
        let p = improve(&g, &Path::new(vec![0, 4])).unwrap();
        assert_eq!(p.vertices(), &[0, 2, 1, 4]);
        assert_eq!(improve(&g, &p).unwrap(), p);
    }

    #[test]
    fn improve_rejects_invalid_input() {
        let g = generate(&Family::Path { n: 3 }, 0).unwrap();
        assert!(matches!(
            improve(&g, &Path::new(vec![0, 2])),
            Err(Error::InvalidPath(_))
        ));
    }

    #[test]
    fn solve_with_improve_never_shorter() {
        let g = generate(&Family::Gnp { n: 30, p: 0.15 }, 2).unwrap();
        let plain = solve(&g, &cfg()).unwrap();
        let improved = solve(&g, &SolveConfig { improve: true, ..cfg() }).unwrap();
        assert_eq!(improved.found_length, plain.length);
        assert!(improved.length >= plain.length);
        validate_path(&g, &improved.best).unwrap();
    }
}
