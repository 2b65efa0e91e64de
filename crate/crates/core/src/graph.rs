//! Simple undirected graphs with stable vertex ids.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// An undirected edge stored with its smaller endpoint first.
pub type Edge = (usize, usize);

/// Normalizes an edge so that the smaller endpoint comes first.
#[inline]
pub fn normalize(e: Edge) -> Edge {
    if e.0 <= e.1 {
        e
    } else {
        (e.1, e.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    OutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("graph is not unicyclic (n = {n}, m = {m}, connected = {connected})")]
    NotUnicyclic { n: usize, m: usize, connected: bool },
    #[error("vertex {v} is not a cycle vertex")]
    NotCycleVertex { v: usize },
}

/// A simple undirected graph on the vertex set `0..n`.
///
/// Graphs are immutable once built. Edges are kept sorted, and every
/// adjacency list is sorted, so iteration order is deterministic.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = GraphError;

    fn try_from(raw: RawGraph) -> Result<Self, Self::Error> {
        Graph::new(raw.n, raw.edges)
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph { n: g.n, edges: g.edges }
    }
}

impl Graph {
    /// Builds a validated graph from an edge list.
    ///
    /// Rejects out-of-range ids, self-loops and repeated pairs (in either
    /// orientation), reporting the offending pair.
    ///
    /// ```
    /// use unicyclic_ga::Graph;
    ///
    /// let paw = Graph::new(4, [(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
    /// assert_eq!(paw.degree(0), 3);
    /// assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
    /// ```
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v: u });
            }
            if !seen.insert(normalize((u, v))) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
        }
        let edges: Vec<Edge> = seen.into_iter().collect();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges,
            adjacency,
        })
    }

    /// The cycle graph `C_n` on `0..n` in the natural cyclic order.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::NotUnicyclic {
                n,
                m: n.saturating_sub(1),
                connected: true,
            });
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The path `P_n` on `0..n`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        Graph::new(n, (1..n).map(|i| (i - 1, i)))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending order, each with its smaller endpoint first.
    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(a) = stack.pop() {
            for &b in &self.adjacency[a] {
                if !seen[b] {
                    seen[b] = true;
                    reached += 1;
                    stack.push(b);
                }
            }
        }
        reached == self.n
    }

    /// Returns the graph with vertex `v` renamed to `perm[v]`.
    ///
    /// # Panics
    ///
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal order");
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("relabeling by a permutation keeps the graph simple")
    }

    /// Returns a copy with a new leaf vertex (id `n`) hanging from `parent`.
    pub fn with_leaf(&self, parent: usize) -> Graph {
        let n = self.n + 1;
        Graph::new(n, self.edges.iter().copied().chain([(parent, n - 1)]))
            .expect("attaching a fresh leaf keeps the graph simple")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}
