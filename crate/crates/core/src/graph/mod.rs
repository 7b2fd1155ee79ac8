//! Simple graphs, graphs with two terminals, and the operations on them.

pub(crate) mod format;
mod iso;
mod structure;
mod terminal;

use std::fmt;

use crate::error::{Error, Result};

pub use format::{parse_records, write_record, GraphRecord};
pub use iso::{are_isomorphic, are_isomorphic_plain, canonical_code, plain_canonical_code, CanonicalCode};
pub use structure::{bars, block_edge_sets, blocks, components};
pub use terminal::{MinorKind, MinorOperation, Orientation, TerminalGraph, XYLabelledGraph};

/// Adjacency is stored as one `u64` word per vertex.
pub const MAX_VERTICES: usize = 64;

/// An undirected edge, always stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn new(u: usize, v: usize) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn other(self, w: usize) -> usize {
        if w == self.0 {
            self.1
        } else {
            self.0
        }
    }

    pub fn touches(self, w: usize) -> bool {
        self.0 == w || self.1 == w
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// Undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges().iter().map(|e| (e.0, e.1)).collect::<Vec<_>>())
    }
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(SimpleGraph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("complete graph")
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).expect("complete bipartite graph")
    }

    pub fn cycle(n: usize) -> Self {
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    /// Edges sorted lexicographically.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !low_mask(u + 1)) {
                out.push(Edge(u, v));
            }
        }
        out
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(Edge::new(u, v)));
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Adds `uv`; a no-op for loops and existing edges.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
        }
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn without_edge(&self, e: Edge) -> Result<SimpleGraph> {
        if !self.has_edge(e.0, e.1) {
            return Err(Error::NoSuchEdge(e));
        }
        let mut g = self.clone();
        g.remove_edge(e.0, e.1);
        Ok(g)
    }

    pub fn with_edge(&self, e: Edge) -> SimpleGraph {
        let mut g = self.clone();
        g.add_edge(e.0, e.1);
        g
    }

    /// Identifies `keep` and `drop`, simplifies, and removes `drop` from the
    /// vertex numbering (ids above `drop` shift down by one).
    pub fn merge_vertices(&self, keep: usize, drop: usize) -> SimpleGraph {
        debug_assert_ne!(keep, drop);
        let n = self.n - 1;
        let map = |w: usize| if w > drop { w - 1 } else { w };
        let mut g = SimpleGraph { n, adj: vec![0; n] };
        for e in self.edges() {
            let a = if e.0 == drop { keep } else { e.0 };
            let b = if e.1 == drop { keep } else { e.1 };
            g.add_edge(map(a), map(b));
        }
        g
    }

    /// Subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph { n: vertices.len(), adj: vec![0; vertices.len()] };
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Graph on `vertices` (renumbered in order) with exactly the given edges.
    pub fn edge_subgraph(vertices: &[usize], edges: &[Edge]) -> SimpleGraph {
        let mut g = SimpleGraph { n: vertices.len(), adj: vec![0; vertices.len()] };
        let pos = |w: usize| vertices.iter().position(|&v| v == w).expect("edge endpoint in vertex list");
        for e in edges {
            g.add_edge(pos(e.0), pos(e.1));
        }
        g
    }

    pub fn disjoint_union(&self, other: &SimpleGraph) -> Result<SimpleGraph> {
        let mut g = SimpleGraph::empty(self.n + other.n)?;
        for e in self.edges() {
            g.add_edge(e.0, e.1);
        }
        for e in other.edges() {
            g.add_edge(e.0 + self.n, e.1 + self.n);
        }
        Ok(g)
    }

    pub fn permuted(&self, perm: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph { n: self.n, adj: vec![0; self.n] };
        for e in self.edges() {
            g.add_edge(perm[e.0], perm[e.1]);
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || components(self).len() == 1
    }

    pub fn connected(&self, a: usize, b: usize) -> bool {
        let mut seen = 1u64 << a;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen >> b & 1 == 1
    }
}

pub(crate) fn low_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Iterates the set bits of a word, lowest first.
pub(crate) fn bits(mut w: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if w == 0 {
            None
        } else {
            let i = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i)
        }
    })
}
