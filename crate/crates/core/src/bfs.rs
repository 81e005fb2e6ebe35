use std::collections::VecDeque;

use crate::error::Result;
use crate::graph::Graph;

/// Hop distances from a fixed root. Vertices outside the root's component
/// hold [`DistanceMap::UNREACHABLE`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMap {
    root: usize,
    dist: Vec<u32>,
}

impl DistanceMap {
    pub const UNREACHABLE: u32 = u32::MAX;

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn get(&self, v: usize) -> Option<u32> {
        match self.dist[v] {
            Self::UNREACHABLE => None,
            d => Some(d),
        }
    }

    pub fn raw(&self) -> &[u32] {
        &self.dist
    }

    pub fn is_reachable(&self, v: usize) -> bool {
        self.dist[v] != Self::UNREACHABLE
    }

    /// The reachable vertex at maximum distance, lowest id on ties. A root
    /// with no neighbors is its own farthest vertex.
    pub fn farthest(&self) -> (usize, u32) {
        let mut best = (self.root, 0);
        for (v, &d) in self.dist.iter().enumerate() {
            if d != Self::UNREACHABLE && d > best.1 {
                best = (v, d);
            }
        }
        best
    }

    pub fn eccentricity(&self) -> u32 {
        self.farthest().1
    }
}

/// Plain breadth-first search from `root`.
pub fn bfs_distances(g: &Graph, root: usize) -> Result<DistanceMap> {
    g.check_vertex(root)?;
    let mut dist = vec![DistanceMap::UNREACHABLE; g.n()];
    let mut queue = VecDeque::new();
    dist[root] = 0;
    queue.push_back(root);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &v in g.neighbors(u) {
            let v = v as usize;
            if dist[v] == DistanceMap::UNREACHABLE {
                dist[v] = next;
                queue.push_back(v);
            }
        }
    }
    Ok(DistanceMap { root, dist })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn path_distances() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let d = bfs_distances(&g, 0).unwrap();
        assert_eq!(d.raw(), &[0, 1, 2]);
        assert_eq!(d.farthest(), (2, 2));
    }

    #[test]
    fn isolated_root_sees_nothing() {
        let g = Graph::from_edges(4, [(1, 2), (2, 3)]).unwrap();
        let d = bfs_distances(&g, 0).unwrap();
        assert_eq!(d.get(0), Some(0));
        assert!((1..4).all(|v| d.get(v).is_none()));
        assert_eq!(d.farthest(), (0, 0));
    }

    #[test]
    fn complete_graph_distances() {
        let edges = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)));
        let g = Graph::from_edges(4, edges).unwrap();
        assert_eq!(bfs_distances(&g, 2).unwrap().raw(), &[1, 1, 0, 1]);
    }

    #[test]
    fn farthest_ties_to_lowest_id() {
        // star centered at 2
        let g = Graph::from_edges(4, [(2, 0), (2, 1), (2, 3)]).unwrap();
        assert_eq!(bfs_distances(&g, 2).unwrap().farthest(), (0, 1));
        assert_eq!(bfs_distances(&g, 3).unwrap().farthest(), (0, 2));
    }

    #[test]
    fn root_out_of_range() {
        let g = Graph::empty(2);
        assert!(matches!(
            bfs_distances(&g, 2),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }
}
