//! Undirected simple graphs on dense vertex ids `0..n`, plus the edge-list
//! text format used by every tool in this workspace.
//!
//! The text format is line oriented:
//!
//! ```text
//! # optional comment lines
//! <n> <m>
//! <a> <b>      (m lines, 0 <= a, b < n)
//! ```
//!
//! Comment lines are accepted on input and never emitted. The serializer
//! writes every edge as `a < b`, in lexicographic order, one per line, each
//! line newline-terminated.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Vertex identifier. Vertices of a graph with `n` vertices are `0..n`.
pub type Vertex = usize;

/// An undirected edge with normalized endpoints, `a() < b()`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct EdgeId {
    a: Vertex,
    b: Vertex,
}

impl EdgeId {
    /// Builds the normalized edge between `x` and `y` (in either order).
    pub fn new(x: Vertex, y: Vertex) -> Result<Self, GraphError> {
        match x.cmp(&y) {
            std::cmp::Ordering::Less => Ok(EdgeId { a: x, b: y }),
            std::cmp::Ordering::Greater => Ok(EdgeId { a: y, b: x }),
            std::cmp::Ordering::Equal => Err(GraphError::SelfLoop(x)),
        }
    }

    pub fn a(self) -> Vertex {
        self.a
    }

    pub fn b(self) -> Vertex {
        self.b
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.a, self.b)
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.a == v || self.b == v
    }

    /// The endpoint opposite to `v`, if `v` is an endpoint.
    pub fn other(self, v: Vertex) -> Option<Vertex> {
        if v == self.a {
            Some(self.b)
        } else if v == self.b {
            Some(self.a)
        } else {
            None
        }
    }

    pub fn shares_endpoint(self, other: EdgeId) -> bool {
        self.contains(other.a) || self.contains(other.b)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

impl From<EdgeId> for [usize; 2] {
    fn from(e: EdgeId) -> Self {
        [e.a, e.b]
    }
}

impl TryFrom<[usize; 2]> for EdgeId {
    type Error = GraphError;

    fn try_from(value: [usize; 2]) -> Result<Self, Self::Error> {
        EdgeId::new(value[0], value[1])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("duplicate edge {0}")]
    DuplicateEdge(EdgeId),
    #[error("edge {0} is not in the graph")]
    MissingEdge(EdgeId),
}

/// Why a line of an edge-list document was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing header line `<n> <m>`")]
    MissingHeader,
    #[error("malformed line {0:?}")]
    Malformed(String),
    #[error("vertex {vertex} is not below n = {n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("duplicate edge {0}")]
    DuplicateEdge(EdgeId),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("header announces {expected} edges but {found} were listed")]
    EdgeCountMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based physical line number (comment lines count).
    pub line: usize,
    pub kind: ParseErrorKind,
}

/// Finite undirected simple graph. Immutable once built; edge deletion
/// returns a new graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<EdgeId>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Endpoint order and list order do
    /// not matter; self-loops, duplicates and out-of-range endpoints are
    /// rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut set = BTreeSet::new();
        for (x, y) in edges {
            for v in [x, y] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            let e = EdgeId::new(x, y)?;
            if !set.insert(e) {
                return Err(GraphError::DuplicateEdge(e));
            }
        }
        Ok(Self::from_edge_set(n, set))
    }

    fn from_edge_set(n: usize, set: BTreeSet<EdgeId>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for e in &set {
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            n,
            edges: set.into_iter().collect(),
            adj,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn has_edge(&self, x: Vertex, y: Vertex) -> bool {
        x < self.n && self.adj[x].binary_search(&y).is_ok()
    }

    /// Position of `e` in [`Graph::edges`].
    pub fn edge_index(&self, e: EdgeId) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    /// Normalized edge between `x` and `y`, checked against this graph.
    pub fn edge(&self, x: Vertex, y: Vertex) -> Result<EdgeId, GraphError> {
        for v in [x, y] {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let e = EdgeId::new(x, y)?;
        if self.edge_index(e).is_some() {
            Ok(e)
        } else {
            Err(GraphError::MissingEdge(e))
        }
    }

    /// A copy of this graph without `e`. Vertex count is unchanged.
    pub fn delete_edge(&self, e: EdgeId) -> Result<Graph, GraphError> {
        self.delete_edges(&[e])
    }

    /// A copy of this graph without any of `removed`.
    pub fn delete_edges(&self, removed: &[EdgeId]) -> Result<Graph, GraphError> {
        let mut set: BTreeSet<EdgeId> = self.edges.iter().copied().collect();
        for e in removed {
            if !set.remove(e) {
                return Err(GraphError::MissingEdge(*e));
            }
        }
        Ok(Self::from_edge_set(self.n, set))
    }

    /// Subgraph induced by `vertices`, relabelled to `0..vertices.len()` in
    /// the given order. The returned vector maps new ids back to old ones.
    pub fn induced(&self, vertices: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut set = BTreeSet::new();
        for e in &self.edges {
            let (x, y) = (local[e.a], local[e.b]);
            if x != usize::MAX && y != usize::MAX {
                // endpoints are distinct, so EdgeId::new cannot fail
                set.insert(EdgeId::new(x, y).expect("distinct endpoints"));
            }
        }
        (Self::from_edge_set(vertices.len(), set), vertices.to_vec())
    }

    /// Whether the neighborhood of `v` is a clique.
    pub fn neighborhood_is_clique(&self, v: Vertex) -> bool {
        let nbrs = &self.adj[v];
        nbrs.iter()
            .enumerate()
            .all(|(i, &x)| nbrs[i + 1..].iter().all(|&y| self.has_edge(x, y)))
    }
}

/// Parses an edge-list document.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(ParseError {
        line: text.lines().count().max(1),
        kind: ParseErrorKind::MissingHeader,
    })?;
    let (n, m) = parse_pair(header).ok_or_else(|| ParseError {
        line: header_line,
        kind: ParseErrorKind::Malformed(header.to_string()),
    })?;

    let mut set = BTreeSet::new();
    let mut last_line = header_line;
    for (line, body) in lines {
        last_line = line;
        let err = |kind| ParseError { line, kind };
        let (a, b) = parse_pair(body).ok_or_else(|| err(ParseErrorKind::Malformed(body.to_string())))?;
        for v in [a, b] {
            if v >= n {
                return Err(err(ParseErrorKind::VertexOutOfRange { vertex: v, n }));
            }
        }
        let e = EdgeId::new(a, b).map_err(|_| err(ParseErrorKind::SelfLoop(a)))?;
        if !set.insert(e) {
            return Err(err(ParseErrorKind::DuplicateEdge(e)));
        }
    }
    if set.len() != m {
        return Err(ParseError {
            line: last_line,
            kind: ParseErrorKind::EdgeCountMismatch {
                expected: m,
                found: set.len(),
            },
        });
    }
    Ok(Graph::from_edge_set(n, set))
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

/// Serializes `g` in the edge-list format. `parse_graph` inverts it exactly.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n, g.m());
    for e in &g.edges {
        out.push_str(&format!("{} {}\n", e.a, e.b));
    }
    out
}
