//! Simple undirected graphs on vertex set `{0..n-1}`.
//!
//! Adjacency is stored as per-vertex sorted neighbor lists. Values are
//! immutable after construction, so every operation here is pure and safe to
//! share across threads.

mod blocks;
mod canon;
mod format;

pub use blocks::BlockDecomposition;

use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} out of range for order {1}")]
    VertexOutOfRange(usize, usize),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("graph is disconnected")]
    Disconnected,
}

impl GraphError {
    /// Stable machine-readable error name (used by the CLI `error:<Name>:` prefix).
    pub fn name(&self) -> &'static str {
        match self {
            GraphError::DuplicateEdge(..) => "DuplicateEdge",
            GraphError::SelfLoop(..) => "SelfLoop",
            GraphError::VertexOutOfRange(..) => "VertexOutOfRange",
            GraphError::MalformedGraph6(..) => "MalformedGraph6",
            GraphError::Disconnected => "Disconnected",
        }
    }
}

/// Simple undirected graph: no loops, no multiple edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Build a graph from an explicit edge list.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(v.min(w[0]), v.max(w[0])));
            }
        }
        Ok(Graph { n, adj })
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).expect("complete graph is always valid")
    }

    /// Path P_n on vertices 0-1-2-...-(n-1).
    pub fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).expect("path graph is always valid")
    }

    /// Cycle C_n.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::new(n, &edges).expect("cycle graph is always valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as (u, v) pairs with u < v, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// (min degree, max degree, Some(k) when the graph is k-regular).
    pub fn degree_profile(&self) -> (usize, usize, Option<usize>) {
        if self.n == 0 {
            return (0, 0, Some(0));
        }
        let mut lo = usize::MAX;
        let mut hi = 0;
        for list in &self.adj {
            lo = lo.min(list.len());
            hi = hi.max(list.len());
        }
        (lo, hi, if lo == hi { Some(lo) } else { None })
    }

    /// True iff the graph has exactly one connected component (true on n=1).
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(0usize);
        let mut count = 1usize;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    /// Relabel the graph: vertex v of the result is `perm[v]` of the original,
    /// i.e. `perm` lists old labels in new order.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut inv = vec![0usize; self.n];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let mut adj = vec![Vec::new(); self.n];
        for (new, &old) in perm.iter().enumerate() {
            adj[new] = self.adj[old].iter().map(|&w| inv[w]).collect();
            adj[new].sort_unstable();
        }
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `verts`, relabeled 0..verts.len()-1 in the given order.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in verts.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(verts.len(), &edges).expect("induced subgraph is valid")
    }

    /// New graph with edge set E \ {ab, cd} ∪ {ac, bd}. Callers validate the move.
    pub(crate) fn swap_edges(
        &self,
        (a, b): (usize, usize),
        (c, d): (usize, usize),
    ) -> Graph {
        let mut adj = self.adj.clone();
        let remove = |adj: &mut Vec<Vec<usize>>, u: usize, v: usize| {
            let i = adj[u].binary_search(&v).expect("edge present");
            adj[u].remove(i);
            let j = adj[v].binary_search(&u).expect("edge present");
            adj[v].remove(j);
        };
        let insert = |adj: &mut Vec<Vec<usize>>, u: usize, v: usize| {
            let i = adj[u].binary_search(&v).unwrap_err();
            adj[u].insert(i, v);
            let j = adj[v].binary_search(&u).unwrap_err();
            adj[v].insert(j, u);
        };
        remove(&mut adj, a, b);
        remove(&mut adj, c, d);
        insert(&mut adj, a, c);
        insert(&mut adj, b, d);
        Graph { n: self.n, adj }
    }

    /// Canonical byte string; equal byte strings iff isomorphic graphs.
    pub fn canonical_form(&self) -> Vec<u8> {
        canon::canonical_form(self)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.n == other.n
            && self.edge_count() == other.edge_count()
            && self.canonical_form() == other.canonical_form()
    }

    /// Block-cut decomposition. Errors on disconnected input.
    pub fn block_decomposition(&self) -> Result<BlockDecomposition, GraphError> {
        blocks::block_decomposition(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
        format::from_graph6(text)
    }

    pub fn to_graph6(&self) -> String {
        format::to_graph6(self)
    }

    pub fn to_dot(&self) -> String {
        format::to_dot(self)
    }

    pub fn to_edge_list(&self) -> String {
        format::to_edge_list(self)
    }
}

/// Convenience alias used by the spec-facing API.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    g1.is_isomorphic(g2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, &[(0, 1), (0, 1)]).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
        assert_eq!(Graph::new(3, &[(1, 1)]).unwrap_err(), GraphError::SelfLoop(1));
        assert_eq!(
            Graph::new(3, &[(0, 5)]).unwrap_err(),
            GraphError::VertexOutOfRange(5, 3)
        );
        // (u, v) and (v, u) describe the same edge
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
    }

    #[test]
    fn degree_profile_examples() {
        assert_eq!(Graph::complete(5).degree_profile(), (4, 4, Some(4)));
        assert_eq!(Graph::path(2).degree_profile(), (1, 1, Some(1)));
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.degree_profile(), (1, 3, None));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::complete(5).is_connected());
        assert!(!Graph::new(2, &[]).unwrap().is_connected());
        assert!(Graph::new(1, &[]).unwrap().is_connected());
    }

    #[test]
    fn relabel_roundtrip() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let perm = vec![3, 1, 0, 2];
        let h = g.relabel(&perm);
        assert_eq!(h.edge_count(), 3);
        // old 3 is new 0; old 3 had one neighbor (old 2 = new 3)
        assert_eq!(h.neighbors(0), &[3]);
    }
}
