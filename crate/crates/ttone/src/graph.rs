//! Simple undirected graphs with dense vertex ids and capped distance tables.

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("loop edge at vertex {v}")]
    LoopEdge { v: usize },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
}

/// Immutable simple graph. Vertex ids are exactly `0..n`, adjacency lists are
/// sorted, and the edge list is normalized to `u < v` in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n {
                return Err(GraphError::VertexOutOfRange { v: a, n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { v: b, n });
            }
            if a == b {
                return Err(GraphError::LoopEdge { v: a });
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        for w in norm.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge { u: w[0].0, v: w[0].1 });
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, edges: norm })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(0);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    /// Breadth-first order over the whole graph. Components are entered at
    /// their unvisited vertex of maximum degree (smallest id on ties), and
    /// neighbors are expanded in ascending id order.
    pub fn bfs_order_from_max_degree(&self) -> Vec<usize> {
        let n = self.n();
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        while order.len() < n {
            let start = (0..n)
                .filter(|&v| !seen[v])
                .max_by_key(|&v| (self.degree(v), std::cmp::Reverse(v)))
                .expect("unvisited vertex");
            seen[start] = true;
            let mut queue = VecDeque::new();
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                order.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        order
    }

    /// Removes a set of vertices, compacting ids. Returns the new graph and
    /// the map from new ids back to the old ones.
    pub fn remove_vertices(&self, removed: &[usize]) -> (Graph, Vec<usize>) {
        let n = self.n();
        let mut gone = vec![false; n];
        for &v in removed {
            gone[v] = true;
        }
        let mut old_of_new = Vec::new();
        let mut new_of_old = vec![usize::MAX; n];
        for v in 0..n {
            if !gone[v] {
                new_of_old[v] = old_of_new.len();
                old_of_new.push(v);
            }
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if !gone[u] && !gone[v] {
                edges.push((new_of_old[u], new_of_old[v]));
            }
        }
        let g = Graph::new(old_of_new.len(), &edges).expect("subgraph of a valid graph");
        (g, old_of_new)
    }

    /// Copy of this graph with extra edges added.
    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut edges = self.edges.clone();
        edges.extend_from_slice(extra);
        Graph::new(self.n(), &edges)
    }
}

/// Pairwise distances up to a cap. Pairs farther apart (including pairs in
/// different components) are reported as `None`.
#[derive(Debug, Clone)]
pub struct DistanceTable {
    n: usize,
    cap: u32,
    dist: Vec<u32>,
}

const BEYOND: u32 = u32::MAX;

impl DistanceTable {
    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        let d = self.dist[u * self.n + v];
        if d == BEYOND {
            None
        } else {
            Some(d)
        }
    }
}

pub fn distances_up_to(g: &Graph, cap: u32) -> DistanceTable {
    assert!(cap >= 1, "distance cap must be positive");
    let n = g.n();
    let mut dist = vec![BEYOND; n * n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist[s * n + s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = dist[s * n + u];
            if du == cap {
                continue;
            }
            for &w in g.neighbors(u) {
                if dist[s * n + w] == BEYOND {
                    dist[s * n + w] = du + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceTable { n, cap, dist }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_duplicates_and_range() {
        assert_eq!(
            Graph::new(3, &[(0, 0)]),
            Err(GraphError::LoopEdge { v: 0 })
        );
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { v: 2, n: 2 })
        );
    }

    #[test]
    fn degrees_and_adjacency() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g.max_degree(), 2);
        assert_eq!(g.min_degree(), 2);
        assert!(g.has_edge(3, 0));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.neighbors(0), &[1, 3]);
    }

    #[test]
    fn distances_on_a_path_with_cap_two() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = distances_up_to(&g, 2);
        assert_eq!(d.get(0, 1), Some(1));
        assert_eq!(d.get(0, 2), Some(2));
        assert_eq!(d.get(0, 3), None);
        assert_eq!(d.get(3, 0), None);
    }

    #[test]
    fn five_cycle_has_diameter_two() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let d = distances_up_to(&g, 2);
        for u in 0..5 {
            for v in 0..5 {
                if u != v {
                    let got = d.get(u, v).unwrap();
                    assert!(got == 1 || got == 2);
                }
            }
        }
    }

    #[test]
    fn isolated_pair_is_beyond_cap() {
        let g = Graph::new(2, &[]).unwrap();
        let d = distances_up_to(&g, 3);
        assert_eq!(d.get(0, 1), None);
    }

    #[test]
    fn bfs_order_starts_at_max_degree() {
        // Star with center 2.
        let g = Graph::new(4, &[(2, 0), (2, 1), (2, 3)]).unwrap();
        let order = g.bfs_order_from_max_degree();
        assert_eq!(order[0], 2);
        assert_eq!(order.len(), 4);
    }

    #[test]
    fn remove_vertices_compacts_ids() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let (h, old) = g.remove_vertices(&[1]);
        assert_eq!(h.n(), 3);
        assert_eq!(old, vec![0, 2, 3]);
        assert_eq!(h.edges(), &[(1, 2)]);
    }
}
