//! Simple undirected graphs on vertices `0..n`.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("{0} is not an edge of the graph")]
    NonEdgeInF(Edge),
    #[error("vertex set {0:?} does not induce a connected subgraph")]
    DisconnectedBlock(Vec<Vertex>),
    #[error("blocks do not partition the vertex set: {0}")]
    InvalidPartition(String),
}

/// An unordered vertex pair, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
}

impl Edge {
    /// Normalizes the pair so that `u < v`. Panics on a loop.
    pub fn new(a: Vertex, b: Vertex) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn contains(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }

    pub fn other(&self, x: Vertex) -> Vertex {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    pub fn map(&self, f: impl Fn(Vertex) -> Vertex) -> Edge {
        Edge::new(f(self.u), f(self.v))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl From<(Vertex, Vertex)> for Edge {
    fn from((a, b): (Vertex, Vertex)) -> Self {
        Edge::new(a, b)
    }
}

/// A set of edges kept sorted and free of duplicates.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet(Vec<Edge>);

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Edge> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Edge] {
        &self.0
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.0.binary_search(e).is_ok()
    }

    pub fn insert(&mut self, e: Edge) -> bool {
        match self.0.binary_search(&e) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, e);
                true
            }
        }
    }

    pub fn remove(&mut self, e: &Edge) -> bool {
        match self.0.binary_search(e) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn extend<I: IntoIterator<Item = Edge>>(&mut self, edges: I) {
        for e in edges {
            self.insert(e);
        }
    }

    /// Relabels every endpoint through `f`.
    pub fn map(&self, f: impl Fn(Vertex) -> Vertex) -> EdgeSet {
        self.0.iter().map(|e| e.map(&f)).collect()
    }

    pub fn into_vec(self) -> Vec<Edge> {
        self.0
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        let mut v: Vec<Edge> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        EdgeSet(v)
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = &'a Edge;
    type IntoIter = std::slice::Iter<'a, Edge>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl IntoIterator for EdgeSet {
    type Item = Edge;
    type IntoIter = std::vec::IntoIter<Edge>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl std::ops::Deref for EdgeSet {
    type Target = [Edge];
    fn deref(&self) -> &[Edge] {
        &self.0
    }
}

/// Immutable simple undirected graph. Adjacency lists are sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph, rejecting loops, duplicates and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator,
        I::Item: Into<(Vertex, Vertex)>,
    {
        let mut seen = BTreeSet::new();
        for pair in edges {
            let (a, b) = pair.into();
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let e = Edge::new(a, b);
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e));
            }
        }
        Ok(Self::from_sorted_unique(n, seen))
    }

    /// Builds a graph from pairs, silently dropping loops and duplicates.
    /// Endpoints must be `< n`.
    pub fn from_pairs_lossy<I>(n: usize, pairs: I) -> Self
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let set: BTreeSet<Edge> = pairs
            .into_iter()
            .filter(|(a, b)| a != b)
            .map(|(a, b)| {
                assert!(a < n && b < n, "endpoint out of range");
                Edge::new(a, b)
            })
            .collect();
        Self::from_sorted_unique(n, set)
    }

    fn from_sorted_unique(n: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for e in edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
            m += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { adj, m }
    }

    pub fn complete(n: usize) -> Self {
        Self::from_sorted_unique(
            n,
            (0..n).flat_map(|u| (u + 1..n).map(move |v| Edge { u, v })),
        )
    }

    pub fn path(n: usize) -> Self {
        Self::from_sorted_unique(n, (1..n).map(|v| Edge { u: v - 1, v }))
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut edges: Vec<Edge> = (1..n).map(|v| Edge { u: v - 1, v }).collect();
        edges.push(Edge::new(0, n - 1));
        edges.sort_unstable();
        Self::from_sorted_unique(n, edges)
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Self::from_sorted_unique(leaves + 1, (1..=leaves).map(|v| Edge { u: 0, v }))
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        if a == b || a >= self.n() || b >= self.n() {
            return false;
        }
        let (x, y) = if self.adj[a].len() <= self.adj[b].len() {
            (a, b)
        } else {
            (b, a)
        };
        self.adj[x].binary_search(&y).is_ok()
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| Edge { u, v })
        })
    }

    pub fn edge_list(&self) -> Vec<Edge> {
        self.edges().collect()
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n {
            let mut it = self.adj[u].iter().peekable();
            for v in 0..n {
                while it.peek().is_some_and(|&&w| w < v) {
                    it.next();
                }
                let present = it.peek().is_some_and(|&&w| w == v);
                if v > u && !present {
                    edges.push(Edge { u, v });
                }
            }
        }
        Self::from_sorted_unique(n, edges)
    }

    /// Induced subgraph on `vertices`; the i-th vertex of the result is
    /// `vertices[i]` after sorting. Returns the graph and that sorted list.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut kept: Vec<Vertex> = vertices.to_vec();
        kept.sort_unstable();
        kept.dedup();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in kept.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && j > i {
                    edges.push(Edge { u: i, v: j });
                }
            }
        }
        edges.sort_unstable();
        (Self::from_sorted_unique(kept.len(), edges), kept)
    }

    /// `self - removed`, with the list of surviving original ids.
    pub fn remove_vertices(&self, removed: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut gone = vec![false; self.n()];
        for &v in removed {
            gone[v] = true;
        }
        let keep: Vec<Vertex> = (0..self.n()).filter(|&v| !gone[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// Number of edges with both endpoints in `s`.
    pub fn induced_edge_count(&self, s: &[Vertex]) -> usize {
        let mut inside = vec![false; self.n()];
        for &v in s {
            inside[v] = true;
        }
        s.iter()
            .map(|&v| self.adj[v].iter().filter(|&&w| w > v && inside[w]).count())
            .sum()
    }

    /// Disjoint union, `other` shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let edges: Vec<Edge> = self
            .edges()
            .chain(other.edges().map(|e| Edge {
                u: e.u + shift,
                v: e.v + shift,
            }))
            .collect();
        Self::from_sorted_unique(self.n() + other.n(), edges)
    }
}
