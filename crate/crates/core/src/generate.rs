//! Deterministic graph families.

use std::fmt;
use std::str::FromStr;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::MAX_VERTICES;

/// A graph family together with its parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Grid { rows: usize, cols: usize },
    Dodecahedron,
    Gnp { n: usize, p: f64 },
    RandomTree { n: usize },
}

/// Regular dodecahedron skeleton. Vertices `0..20` in order form a
/// Hamiltonian cycle; each vertex has one further chord, given by the LCF
/// notation `[10, 7, 4, -4, -7, 10, -4, 7, -7, 4]^2`.
///
/// Rooted at 6 and started from its neighbor 2, a first-seen greedy walk
/// visits all twenty vertices and ends at the root.
pub const DODECAHEDRON: [[u32; 3]; 20] = [
    [1, 10, 19],
    [0, 2, 8],
    [1, 3, 6],
    [2, 4, 19],
    [3, 5, 17],
    [4, 6, 15],
    [2, 5, 7],
    [6, 8, 14],
    [1, 7, 9],
    [8, 10, 13],
    [0, 9, 11],
    [10, 12, 18],
    [11, 13, 16],
    [9, 12, 14],
    [7, 13, 15],
    [5, 14, 16],
    [12, 15, 17],
    [4, 16, 18],
    [11, 17, 19],
    [0, 3, 18],
];

impl Family {
    /// Family name as used on the command line.
    pub fn name(&self) -> &'static str {
        match self {
            Family::Path { .. } => "path",
            Family::Cycle { .. } => "cycle",
            Family::Complete { .. } => "complete",
            Family::CompleteBipartite { .. } => "complete_bipartite",
            Family::Grid { .. } => "grid",
            Family::Dodecahedron => "dodecahedron",
            Family::Gnp { .. } => "gnp",
            Family::RandomTree { .. } => "random_tree",
        }
    }

    /// Whether the seed influences the output.
    pub fn is_random(&self) -> bool {
        matches!(self, Family::Gnp { .. } | Family::RandomTree { .. })
    }

    /// Parses `name` followed by its positional parameters, e.g.
    /// `["gnp", "100", "0.05"]`.
    pub fn from_args<S: AsRef<str>>(args: &[S]) -> Result<Self> {
        let Some((name, params)) = args.split_first() else {
            return Err(Error::InvalidParams("missing family name".into()));
        };
        let name = name.as_ref();
        let expect = |count: usize, usage: &str| -> Result<()> {
            if params.len() == count {
                Ok(())
            } else {
                Err(Error::InvalidParams(format!("usage: {usage}")))
            }
        };
        let int = |i: usize| -> Result<usize> {
            let s = params[i].as_ref();
            s.parse()
                .map_err(|_| Error::InvalidParams(format!("{name}: expected an integer, found {s:?}")))
        };
        let family = match name {
            "path" => {
                expect(1, "path <n>")?;
                Family::Path { n: int(0)? }
            }
            "cycle" => {
                expect(1, "cycle <n>")?;
                Family::Cycle { n: int(0)? }
            }
            "complete" => {
                expect(1, "complete <n>")?;
                Family::Complete { n: int(0)? }
            }
            "complete_bipartite" | "complete-bipartite" => {
                expect(2, "complete_bipartite <a> <b>")?;
                Family::CompleteBipartite { a: int(0)?, b: int(1)? }
            }
            "grid" => {
                expect(2, "grid <rows> <cols>")?;
                Family::Grid { rows: int(0)?, cols: int(1)? }
            }
            "dodecahedron" => {
                expect(0, "dodecahedron")?;
                Family::Dodecahedron
            }
            "gnp" => {
                expect(2, "gnp <n> <p>")?;
                let s = params[1].as_ref();
                let p = s
                    .parse()
                    .map_err(|_| Error::InvalidParams(format!("gnp: expected a probability, found {s:?}")))?;
                Family::Gnp { n: int(0)?, p }
            }
            "random_tree" | "random-tree" => {
                expect(1, "random_tree <n>")?;
                Family::RandomTree { n: int(0)? }
            }
            other => return Err(Error::InvalidParams(format!("unknown family {other:?}"))),
        };
        family.validate()?;
        Ok(family)
    }

    fn vertex_count(&self) -> Option<usize> {
        match *self {
            Family::Path { n }
            | Family::Cycle { n }
            | Family::Complete { n }
            | Family::Gnp { n, .. }
            | Family::RandomTree { n } => Some(n),
            Family::CompleteBipartite { a, b } => a.checked_add(b),
            Family::Grid { rows, cols } => rows.checked_mul(cols),
            Family::Dodecahedron => Some(20),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        match *self {
            Family::Path { n } | Family::Complete { n } | Family::RandomTree { n } if n < 1 => {
                return bad(format!("{} requires n >= 1", self.name()))
            }
            Family::Cycle { n } if n < 3 => return bad("cycle requires n >= 3".into()),
            Family::CompleteBipartite { a, b } if a < 1 || b < 1 => {
                return bad("complete_bipartite requires a >= 1 and b >= 1".into())
            }
            Family::Grid { rows, cols } if rows < 1 || cols < 1 => {
                return bad("grid requires rows >= 1 and cols >= 1".into())
            }
            Family::Gnp { n, .. } if n < 1 => return bad("gnp requires n >= 1".into()),
            Family::Gnp { p, .. } if !(0.0..=1.0).contains(&p) => {
                return bad(format!("gnp requires 0 <= p <= 1, got {p}"))
            }
            _ => {}
        }
        match self.vertex_count() {
            Some(n) if n <= MAX_VERTICES => {}
            _ => return bad(format!("{} exceeds {MAX_VERTICES} vertices", self.name())),
        }
        // Dense families are quadratic in n; keep them addressable.
        let dense_limit = 1 << 15;
        match *self {
            Family::Complete { n } | Family::Gnp { n, .. } if n > dense_limit => {
                bad(format!("{} requires n <= {dense_limit}", self.name()))
            }
            Family::CompleteBipartite { a, b } if a.max(b) > dense_limit => {
                bad(format!("complete_bipartite requires a, b <= {dense_limit}"))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        match *self {
            Family::Path { n }
            | Family::Cycle { n }
            | Family::Complete { n }
            | Family::RandomTree { n } => write!(f, " {n}"),
            Family::CompleteBipartite { a, b } => write!(f, " {a} {b}"),
            Family::Grid { rows, cols } => write!(f, " {rows} {cols}"),
            Family::Dodecahedron => Ok(()),
            Family::Gnp { n, p } => write!(f, " {n} {p}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let args: Vec<&str> = s.split_whitespace().collect();
        Family::from_args(&args)
    }
}

/// Builds the graph for `family`. `seed` only matters for random families;
/// equal inputs always give equal graphs.
pub fn generate(family: &Family, seed: u64) -> Result<Graph> {
    family.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let n = match *family {
        Family::Path { n } => {
            edges.extend((1..n).map(|v| (v - 1, v)));
            n
        }
        Family::Cycle { n } => {
            edges.extend((1..n).map(|v| (v - 1, v)));
            edges.push((n - 1, 0));
            n
        }
        Family::Complete { n } => {
            edges.extend((0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))));
            n
        }
        Family::CompleteBipartite { a, b } => {
            edges.extend((0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))));
            a + b
        }
        Family::Grid { rows, cols } => {
            for r in 0..rows {
                for c in 0..cols {
                    let v = r * cols + c;
                    if c + 1 < cols {
                        edges.push((v, v + 1));
                    }
                    if r + 1 < rows {
                        edges.push((v, v + cols));
                    }
                }
            }
            rows * cols
        }
        Family::Dodecahedron => {
            for (u, row) in DODECAHEDRON.iter().enumerate() {
                edges.extend(row.iter().map(|&v| (u, v as usize)).filter(|&(u, v)| u < v));
            }
            20
        }
        Family::Gnp { n, p } => {
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            n
        }
        Family::RandomTree { n } => {
            edges = prufer_tree(n, &mut rng);
            n
        }
    };
    Graph::from_edges(n, edges)
}

/// Uniform labeled tree on `n` vertices via a random Prüfer sequence.
fn prufer_tree(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    if n < 2 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &seq {
        degree[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &seq {
        let Reverse(leaf) = leaves.pop().expect("a Prüfer sequence always leaves a leaf");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dodecahedron_is_cubic() {
        let g = generate(&Family::Dodecahedron, 0).unwrap();
        assert_eq!((g.n(), g.m()), (20, 30));
        assert!((0..20).all(|v| g.degree(v) == 3));
        g.audit().unwrap();
        // The table lists each row in ascending order and symmetrically.
        for (u, row) in DODECAHEDRON.iter().enumerate() {
            assert_eq!(g.neighbors(u), row);
        }
    }

    #[test]
    fn path_family() {
        let g = generate(&Family::Path { n: 5 }, 0).unwrap();
        assert_eq!(g.m(), 4);
        assert_eq!((g.degree(0), g.degree(4)), (1, 1));
        let g = generate(&Family::Path { n: 1 }, 0).unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn gnp_extremes() {
        let g = generate(&Family::Gnp { n: 50, p: 1.0 }, 12345).unwrap();
        assert_eq!(g.m(), 1225);
        let g = generate(&Family::Gnp { n: 50, p: 0.0 }, 12345).unwrap();
        assert_eq!(g.m(), 0);
    }

    #[test]
    fn gnp_reproducible() {
        let f = Family::Gnp { n: 100, p: 0.05 };
        assert_eq!(generate(&f, 7).unwrap(), generate(&f, 7).unwrap());
        assert_ne!(generate(&f, 7).unwrap(), generate(&f, 8).unwrap());
    }

    #[test]
    fn structured_sizes() {
        let g = generate(&Family::Cycle { n: 8 }, 0).unwrap();
        assert_eq!(g.m(), 8);
        assert!((0..8).all(|v| g.degree(v) == 2));
        let g = generate(&Family::Complete { n: 6 }, 0).unwrap();
        assert_eq!(g.m(), 15);
        let g = generate(&Family::CompleteBipartite { a: 3, b: 4 }, 0).unwrap();
        assert_eq!((g.n(), g.m()), (7, 12));
        assert!(!g.has_edge(0, 1));
        let g = generate(&Family::Grid { rows: 3, cols: 4 }, 0).unwrap();
        assert_eq!((g.n(), g.m()), (12, 17));
    }

    #[test]
    fn random_tree_is_tree() {
        for n in [1, 2, 3, 10, 57] {
            for seed in 0..5 {
                let g = generate(&Family::RandomTree { n }, seed).unwrap();
                assert_eq!(g.m(), n - 1);
                assert!(g.is_connected());
            }
        }
    }

    #[test]
    fn invalid_params_named() {
        let err = generate(&Family::Gnp { n: 5, p: 1.5 }, 0).unwrap_err();
        assert!(err.to_string().contains("0 <= p <= 1"), "{err}");
        assert!(generate(&Family::Gnp { n: 5, p: f64::NAN }, 0).is_err());
        let err = generate(&Family::Cycle { n: 2 }, 0).unwrap_err();
        assert!(err.to_string().contains("n >= 3"), "{err}");
        assert!(generate(&Family::Path { n: 0 }, 0).is_err());
        assert!(generate(&Family::Grid { rows: 0, cols: 3 }, 0).is_err());
    }

    #[test]
    fn parse_family_args() {
        assert_eq!("gnp 100 0.05".parse::<Family>().unwrap(), Family::Gnp { n: 100, p: 0.05 });
        assert_eq!("dodecahedron".parse::<Family>().unwrap(), Family::Dodecahedron);
        assert_eq!(
            "complete-bipartite 3 3".parse::<Family>().unwrap(),
            Family::CompleteBipartite { a: 3, b: 3 }
        );
        assert!("path".parse::<Family>().is_err());
        assert!("path x".parse::<Family>().is_err());
        assert!("hypercube 3".parse::<Family>().is_err());
        assert!("".parse::<Family>().is_err());
        let f = Family::Grid { rows: 2, cols: 3 };
        assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
    }
}
