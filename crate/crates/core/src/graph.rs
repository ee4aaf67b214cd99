//! Immutable simple undirected graphs on dense vertex indices.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph on the vertices `0..n`.
///
/// Neighbor lists are sorted and free of duplicates; the adjacency relation
/// is symmetric and loop-free. A `Graph` cannot be mutated after it is built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one; self-loops and out-of-range endpoints
    /// are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut twice_m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice_m += list.len();
        }
        Ok(Graph {
            adj,
            m: twice_m / 2,
        })
    }

    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adj.iter().map(Vec::len)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Returns a copy of the graph with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        Graph::new(self.n(), self.edges().chain(std::iter::once((u, v))))
    }

    /// Shortest-path distances from `source`; `None` marks unreachable
    /// vertices.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Option<u32>>> {
        if source >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: source,
                n: self.n(),
            });
        }
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        self.bfs_into(source, &mut dist, &mut queue);
        Ok(dist)
    }

    /// BFS into caller-owned buffers. `dist` must be all `None` on entry.
    pub(crate) fn bfs_into(
        &self,
        source: usize,
        dist: &mut [Option<u32>],
        queue: &mut VecDeque<usize>,
    ) {
        queue.clear();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u].map(|d| d + 1);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
    }

    /// True iff a BFS from vertex 0 reaches every vertex. Graphs with zero
    /// or one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n() <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.n()
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n()];
        let mut components = 0;
        let mut stack = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        components
    }

    pub fn is_acyclic(&self) -> bool {
        self.m + self.component_count() == self.n()
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m + 1 == self.n() && self.is_connected()
    }

    pub fn is_regular(&self) -> Option<usize> {
        let mut degrees = self.degrees();
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m == n * n.saturating_sub(1) / 2
    }

    /// True for the paths `P_n`, including `P_1` and `P_2`.
    pub fn is_path(&self) -> bool {
        self.is_tree() && self.max_degree() <= 2
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_path() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn collapses_duplicates() {
        let g = Graph::new(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn rejects_self_loop() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(Error::SelfLoop(0)));
    }

    #[test]
    fn rejects_out_of_range() {
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn bfs_on_path_complete_and_disconnected() {
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(
            p4.bfs_distances(0).unwrap(),
            vec![Some(0), Some(1), Some(2), Some(3)]
        );

        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(
            k4.bfs_distances(2).unwrap(),
            vec![Some(1), Some(1), Some(0), Some(1)]
        );

        let split = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(
            split.bfs_distances(0).unwrap(),
            vec![Some(0), Some(1), None]
        );
        assert!(split.bfs_distances(3).is_err());
    }

    #[test]
    fn connectivity() {
        let p5 = Graph::new(5, (0..4).map(|i| (i, i + 1))).unwrap();
        assert!(p5.is_connected());
        let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two.is_connected());
        assert_eq!(two.component_count(), 2);
        assert!(Graph::empty(1).is_connected());
        assert!(Graph::empty(0).is_connected());
    }

    #[test]
    fn shape_predicates() {
        let p1 = Graph::empty(1);
        assert!(p1.is_path() && p1.is_tree() && p1.is_complete());
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!c4.is_acyclic());
        assert_eq!(c4.is_regular(), Some(2));
        assert!(!c4.is_path());
    }
}
