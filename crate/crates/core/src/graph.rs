//! Immutable simple undirected graphs.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A simple undirected graph on the vertices `0..vertex_count`.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted lexicographically.
/// Neighbor lists are sorted. A `Graph` never changes after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, repeated edges and endpoints
    /// outside `0..vertex_count`.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= vertex_count {
                return Err(Error::VertexOutOfRange { vertex: u, count: vertex_count });
            }
            if v >= vertex_count {
                return Err(Error::VertexOutOfRange { vertex: v, count: vertex_count });
            }
            if u == v {
                return Err(Error::InvalidEdge(u, v, "self-loop"));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidEdge(w[0].0, w[0].1, "parallel edge"));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &list {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Graph { edges: list, adjacency })
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    /// The star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Index of edge `{u, v}` in [`Graph::edges`], if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, count: self.vertex_count() })
        }
    }

    /// Fails with [`Error::Disconnected`] naming an unreachable vertex.
    pub fn require_connected(&self) -> Result<()> {
        if self.vertex_count() == 0 {
            return Err(Error::EmptyGraph);
        }
        let seen = self.reachable_from(0, |_| true);
        match seen.iter().position(|&s| !s) {
            Some(v) => Err(Error::Disconnected { from: 0, unreachable: v }),
            None => Ok(()),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.require_connected().is_ok()
    }

    /// Vertices reachable from `start` using only edges accepted by `keep`
    /// (called with the edge index).
    pub(crate) fn reachable_from(&self, start: usize, keep: impl Fn(usize) -> bool) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen[v] && keep(self.edge_index(u, v).expect("adjacent")) {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// A proper 2-coloring if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.vertex_count();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for root in 0..n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].expect("colored before enqueue");
                for &v in &self.adjacency[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.expect("all colored")).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Induced subgraph on `vertices`, renumbered in the given order.
    ///
    /// Vertex `i` of the result is `vertices[i]` of `self`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            if local[v] != usize::MAX {
                return Err(Error::domain("induced subgraph", format!("vertex {v} listed twice")));
            }
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
            .map(|&(u, v)| (local[u], local[v]));
        Graph::new(vertices.len(), edges)
    }

    /// Maps vertices through `perm` and reports whether every edge lands on
    /// an edge, i.e. whether `perm` is an automorphism.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        if perm.len() != self.vertex_count() {
            return false;
        }
        let mut hit = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || hit[p] {
                return false;
            }
            hit[p] = true;
        }
        self.edges.iter().all(|&(u, v)| self.has_edge(perm[u], perm[v]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_parallels_and_range() {
        assert!(matches!(Graph::new(2, [(0, 0)]), Err(Error::InvalidEdge(0, 0, _))));
        assert!(matches!(Graph::new(2, [(0, 1), (1, 0)]), Err(Error::InvalidEdge(0, 1, _))));
        assert!(matches!(Graph::new(2, [(0, 2)]), Err(Error::VertexOutOfRange { vertex: 2, .. })));
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted() {
        let g = Graph::new(4, [(3, 0), (1, 0), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (1, 2)]);
        assert_eq!(g.neighbors(0), &[1, 3]);
        for (u, v) in g.edges().iter().copied() {
            assert!(g.neighbors(u).contains(&v) && g.neighbors(v).contains(&u));
        }
    }

    #[test]
    fn connectivity_and_bipartiteness() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.require_connected(), Err(Error::Disconnected { from: 0, unreachable: 2 }));
        assert!(Graph::cycle(6).is_bipartite());
        assert!(!Graph::cycle(5).is_bipartite());
        assert_eq!(Graph::new(0, []).unwrap().require_connected(), Err(Error::EmptyGraph));
    }

    #[test]
    fn induced_subgraph_renumbers() {
        let c6 = Graph::cycle(6);
        let p = c6.induced_subgraph(&[2, 3, 4]).unwrap();
        assert_eq!(p, Graph::path(3));
    }

    #[test]
    fn rotation_is_cycle_automorphism() {
        let c5 = Graph::cycle(5);
        let rot: Vec<usize> = (0..5).map(|i| (i + 1) % 5).collect();
        assert!(c5.is_automorphism(&rot));
        assert!(!c5.is_automorphism(&[0, 2, 1, 3, 4]));
    }
}
