//! Immutable simple undirected graphs and simple paths over them.

use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph in compressed adjacency form.
///
/// Vertex ids are dense and 0-based. Every neighbor list is sorted ascending,
/// free of duplicates and self-loops, and symmetric. A `Graph` is never
/// mutated after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    ///
    /// Duplicate edges (in either orientation) collapse into one. Self-loops
    /// and endpoints `>= n` are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > u32::MAX as usize {
            return Err(Error::InvalidParams(format!(
                "vertex count {n} exceeds {}",
                u32::MAX
            )));
        }
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { line: 0, vertex: u });
            }
            pairs.push((u as u32, v as u32));
            pairs.push((v as u32, u as u32));
        }
        pairs.sort_unstable();
        pairs.dedup();

        let mut offsets = vec![0usize; n + 1];
        for &(u, _) in &pairs {
            offsets[u as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let targets = pairs.into_iter().map(|(_, v)| v).collect();
        Ok(Graph { offsets, targets })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.n() == 0
    }

    /// Sorted neighbor list `N(v)`.
    ///
    /// Panics if `v >= n`.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    /// Each edge once, as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .map(|&v| v as usize)
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Re-checks the simple-graph invariants: no self-loops, no duplicate
    /// neighbors, symmetric adjacency, and `sum of degrees == 2m`.
    pub fn audit(&self) -> Result<()> {
        let n = self.n();
        if self.offsets[0] != 0 || self.offsets[n] != self.targets.len() {
            return Err(Error::Invariant("offsets do not span targets".into()));
        }
        let mut degree_sum = 0;
        for v in 0..n {
            let nbrs = self.neighbors(v);
            degree_sum += nbrs.len();
            for (k, &w) in nbrs.iter().enumerate() {
                let w = w as usize;
                if w >= n {
                    return Err(Error::Invariant(format!("neighbor {w} of {v} out of range")));
                }
                if w == v {
                    return Err(Error::Invariant(format!("self-loop on {v}")));
                }
                if k > 0 && nbrs[k - 1] >= nbrs[k] {
                    return Err(Error::Invariant(format!(
                        "neighbors of {v} not strictly ascending"
                    )));
                }
                if !self.has_edge(w, v) {
                    return Err(Error::Invariant(format!("edge ({v}, {w}) not symmetric")));
                }
            }
        }
        if degree_sum != 2 * self.m() {
            return Err(Error::Invariant("degree sum differs from 2m".into()));
        }
        Ok(())
    }

    /// Connected-component label per vertex. Labels are assigned in order of
    /// each component's lowest vertex id, starting at 0.
    pub fn components(&self) -> Vec<usize> {
        let n = self.n();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &v in self.neighbors(u) {
                    let v = v as usize;
                    if label[v] == usize::MAX {
                        label[v] = next;
                        stack.push(v);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("m", &self.m())
            .finish()
    }
}

/// A sequence of vertex ids. Whether it is a simple path of some graph is
/// decided by [`validate_path`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path(Vec<usize>);

impl Path {
    pub fn new(vertices: Vec<usize>) -> Self {
        Path(vertices)
    }

    pub fn single(v: usize) -> Self {
        Path(vec![v])
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.0
    }

    /// Number of edges, i.e. vertex count minus one (0 for an empty sequence).
    pub fn length(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }
}

impl From<Vec<usize>> for Path {
    fn from(v: Vec<usize>) -> Self {
        Path(v)
    }
}

/// Space-separated vertex ids on one line, without a trailing newline.
impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// First reason a vertex sequence fails to be a simple path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathViolation {
    Empty,
    OutOfRange { index: usize, vertex: usize },
    RepeatedVertex { index: usize, vertex: usize },
    MissingEdge { index: usize, from: usize, to: usize },
}

impl fmt::Display for PathViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PathViolation::Empty => write!(f, "path has no vertices"),
            PathViolation::OutOfRange { index, vertex } => {
                write!(f, "vertex {vertex} at index {index} out of range")
            }
            PathViolation::RepeatedVertex { index, vertex } => {
                write!(f, "repeated vertex {vertex} at index {index}")
            }
            PathViolation::MissingEdge { index, from, to } => {
                write!(f, "missing edge ({from}, {to}) at index {index}")
            }
        }
    }
}

/// Checks that `path` is a simple path of `g`, reporting the first violation
/// in sequence order.
pub fn validate_path(g: &Graph, path: &Path) -> std::result::Result<(), PathViolation> {
    let vs = path.vertices();
    if vs.is_empty() {
        return Err(PathViolation::Empty);
    }
    let mut seen = vec![false; g.n()];
    for (index, &vertex) in vs.iter().enumerate() {
        if vertex >= g.n() {
            return Err(PathViolation::OutOfRange { index, vertex });
        }
        if seen[vertex] {
            return Err(PathViolation::RepeatedVertex { index, vertex });
        }
        seen[vertex] = true;
        if index > 0 && !g.has_edge(vs[index - 1], vertex) {
            return Err(PathViolation::MissingEdge {
                index,
                from: vs[index - 1],
                to: vertex,
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn from_edges_dedups_and_sorts() {
        let g = Graph::from_edges(4, [(3, 0), (0, 3), (2, 0), (0, 1)]).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        assert_eq!(g.neighbors(3), &[0]);
        g.audit().unwrap();
    }

    #[test]
    fn from_edges_rejects_loops_and_range() {
        assert!(matches!(
            Graph::from_edges(2, [(1, 1)]),
            Err(Error::SelfLoop { vertex: 1, .. })
        ));
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn edges_listed_once() {
        let g = triangle();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn components_label_by_lowest_id() {
        let g = Graph::from_edges(6, [(4, 5), (0, 2)]).unwrap();
        assert_eq!(g.components(), vec![0, 1, 0, 2, 3, 3]);
        assert!(!g.is_connected());
        assert!(triangle().is_connected());
    }

    #[test]
    fn validate_triangle_paths() {
        let g = triangle();
        assert_eq!(validate_path(&g, &Path::new(vec![0, 1, 2])), Ok(()));
        assert_eq!(
            validate_path(&g, &Path::new(vec![0, 1, 0])),
            Err(PathViolation::RepeatedVertex { index: 2, vertex: 0 })
        );
        assert_eq!(validate_path(&g, &Path::default()), Err(PathViolation::Empty));
        assert_eq!(validate_path(&g, &Path::single(2)), Ok(()));
    }

    #[test]
    fn validate_missing_edge() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let err = validate_path(&g, &Path::new(vec![0, 2])).unwrap_err();
        assert_eq!(err, PathViolation::MissingEdge { index: 1, from: 0, to: 2 });
        assert!(err.to_string().contains("missing edge"));
        assert_eq!(
            validate_path(&g, &Path::new(vec![0, 7])),
            Err(PathViolation::OutOfRange { index: 1, vertex: 7 })
        );
    }

    #[test]
    fn path_length_and_display() {
        assert_eq!(Path::single(4).length(), 0);
        assert_eq!(Path::default().length(), 0);
        let p = Path::new(vec![3, 2, 1, 0]);
        assert_eq!(p.length(), 3);
        assert_eq!(p.to_string(), "3 2 1 0");
    }
}
