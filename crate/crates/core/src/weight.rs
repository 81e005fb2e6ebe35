//! Rooted BFS edge weighting.
//!
//! Expanding the BFS queue in order, every edge from the vertex being
//! expanded (at depth `d`) to a vertex not yet expanded is recorded in both
//! directions with weight `d + 1`. Each edge of the root's component is thus
//! recorded exactly once per direction, carrying
//! `min(dist(root, u), dist(root, v)) + 1`.

use std::io::{self, Write};

use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightedEdge {
    pub to: u32,
    pub weight: u32,
}

/// Per-root weighted view of a [`Graph`]. Adjacency entries appear in BFS
/// discovery order. Vertices outside the root's component keep their ids
/// but have no entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    root: usize,
    offsets: Vec<usize>,
    lens: Vec<u32>,
    entries: Vec<WeightedEdge>,
}

impl WeightedGraph {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn n(&self) -> usize {
        self.lens.len()
    }

    pub fn neighbors(&self, u: usize) -> &[WeightedEdge] {
        let start = self.offsets[u];
        &self.entries[start..start + self.lens[u] as usize]
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<u32> {
        self.neighbors(u)
            .iter()
            .find(|e| e.to as usize == v)
            .map(|e| e.weight)
    }

    /// Number of undirected edges carried.
    pub fn m(&self) -> usize {
        self.lens.iter().map(|&l| l as usize).sum::<usize>() / 2
    }

    /// Each edge once as `(u, v, w)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |e| u < e.to as usize)
                .map(move |e| (u, e.to as usize, e.weight))
        })
    }

    /// Writes `u v w` lines, one per edge, sorted by `(u, v)`.
    pub fn write_weights<W: Write>(&self, mut out: W) -> io::Result<()> {
        let mut edges: Vec<_> = self.edges().collect();
        edges.sort_unstable();
        for (u, v, w) in edges {
            writeln!(out, "{u} {v} {w}")?;
        }
        Ok(())
    }
}

/// Builds the weighted graph for `root`.
pub fn create(g: &Graph, root: usize) -> Result<WeightedGraph> {
    g.check_vertex(root)?;
    let n = g.n();
    let mut offsets = Vec::with_capacity(n);
    let mut acc = 0;
    for v in 0..n {
        offsets.push(acc);
        acc += g.degree(v);
    }
    let mut lens = vec![0u32; n];
    let mut entries = vec![WeightedEdge { to: 0, weight: 0 }; acc];

    // queue holds (vertex, depth); `expanded` is the pseudocode's visited[]
    let mut queue: Vec<(u32, u32)> = Vec::with_capacity(n);
    let mut expanded = vec![false; n];
    let mut queued = vec![false; n];
    queue.push((root as u32, 0));
    queued[root] = true;

    let mut head = 0;
    while head < queue.len() {
        let (u, depth) = queue[head];
        let u = u as usize;
        expanded[u] = true;
        let weight = depth + 1;
        for &v in g.neighbors(u) {
            let vi = v as usize;
            if expanded[vi] {
                continue;
            }
            entries[offsets[u] + lens[u] as usize] = WeightedEdge { to: v, weight };
            lens[u] += 1;
            entries[offsets[vi] + lens[vi] as usize] = WeightedEdge { to: u as u32, weight };
            lens[vi] += 1;
            if !queued[vi] {
                queued[vi] = true;
                queue.push((v, weight));
            }
        }
        head += 1;
    }

    Ok(WeightedGraph {
        root,
        offsets,
        lens,
        entries,
    })
}
