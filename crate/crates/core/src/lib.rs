//! Greedy approximation of the longest simple path in an undirected graph.
//!
//! For a root vertex, [`create`] runs a breadth-first search and weights
//! every edge of the root's component by the depth of its nearer endpoint
//! plus one. [`search`] then walks from a start vertex, always stepping to
//! the heaviest unvisited neighbor and backing up at dead ends, and keeps the
//! deepest stack it reached. The drivers in [`driver`] repeat this over all
//! roots and either all start vertices or only the farthest one, and
//! [`improve`] splices unused vertices into the winning path.
//!
//! [`oracle`] holds an exact exhaustive solver for small graphs, used to
//! measure the heuristic.
//!
//! ```
//! use longpath::{generate, solve, Family, SolveConfig};
//!
//! let g = generate(&Family::Dodecahedron, 0).unwrap();
//! let result = solve(&g, &SolveConfig::default()).unwrap();
//! assert_eq!(result.length, 19);
//! ```

pub mod bfs;
pub mod driver;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod search;
pub mod weight;

pub use bfs::{bfs_distances, DistanceMap};
pub use driver::{
    improve, solve, solve_all_pairs, solve_farthest, SolveConfig, SolveResult, SolveStats, Variant,
};
pub use error::{Error, Result};
pub use generate::{generate, Family};
pub use graph::{validate_path, Graph, Path, PathViolation};
pub use io::{parse_dimacs, parse_edge_list, parse_graph, parse_path, GraphFormat};
pub use oracle::{exact_from_pair, exact_longest_path, OracleLimits, OracleMethod};
pub use search::{search, SearchOutcome, Searcher, TieBreakPolicy};
pub use weight::{create, WeightedEdge, WeightedGraph};
