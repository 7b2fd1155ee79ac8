use std::collections::BTreeSet;
use std::fmt;

use super::{Edge, SimpleGraph};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MinorKind {
    Delete,
    Contract,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MinorOperation {
    pub edge: Edge,
    pub kind: MinorKind,
}

impl fmt::Display for MinorOperation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = match self.kind {
            MinorKind::Delete => '-',
            MinorKind::Contract => '/',
        };
        write!(f, "({}{})", self.edge, sym)
    }
}

/// How the terminals of the second part are glued in an xy-sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// `x2 -> x1`, `y2 -> y1`.
    Straight,
    /// `x2 -> y1`, `y2 -> x1`.
    Swapped,
}

/// A simple graph with an ordered pair of distinct terminals.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TerminalGraph {
    graph: SimpleGraph,
    x: usize,
    y: usize,
}

impl TerminalGraph {
    pub fn new(graph: SimpleGraph, x: usize, y: usize) -> Result<Self> {
        let n = graph.vertex_count();
        for t in [x, y] {
            if t >= n {
                return Err(Error::VertexOutOfRange { vertex: t, n });
            }
        }
        if x == y {
            return Err(Error::EqualTerminals);
        }
        Ok(TerminalGraph { graph, x, y })
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn into_graph(self) -> SimpleGraph {
        self.graph
    }

    pub fn x(&self) -> usize {
        self.x
    }

    pub fn y(&self) -> usize {
        self.y
    }

    pub fn is_terminal(&self, v: usize) -> bool {
        v == self.x || v == self.y
    }

    pub fn xy_edge(&self) -> Edge {
        Edge::new(self.x, self.y)
    }

    pub fn has_xy(&self) -> bool {
        self.graph.has_edge(self.x, self.y)
    }

    /// Membership in the class of graphs without the edge `xy`.
    pub fn is_xy_free(&self) -> bool {
        !self.has_xy()
    }

    pub fn swapped(&self) -> TerminalGraph {
        TerminalGraph { graph: self.graph.clone(), x: self.y, y: self.x }
    }

    pub fn delete_edge(&self, e: Edge) -> Result<TerminalGraph> {
        Ok(TerminalGraph { graph: self.graph.without_edge(e)?, x: self.x, y: self.y })
    }

    /// Contracts `e`; a terminal endpoint survives as the merged vertex and
    /// vertex ids are compacted.
    pub fn contract_edge(&self, e: Edge) -> Result<TerminalGraph> {
        if e == self.xy_edge() {
            return Err(Error::ContractXy);
        }
        if !self.graph.has_edge(e.0, e.1) {
            return Err(Error::NoSuchEdge(e));
        }
        let (keep, drop) = if self.is_terminal(e.1) { (e.1, e.0) } else { (e.0, e.1) };
        let shift = |w: usize| if w > drop { w - 1 } else { w };
        let graph = self.graph.merge_vertices(keep, drop);
        Ok(TerminalGraph { graph, x: shift(self.x), y: shift(self.y) })
    }

    pub fn apply(&self, op: MinorOperation) -> Result<TerminalGraph> {
        match op.kind {
            MinorKind::Delete => self.delete_edge(op.edge),
            MinorKind::Contract => self.contract_edge(op.edge),
        }
    }

    /// `G/xy`: terminals identified into a plain vertex, simplified.
    pub fn identify_terminals(&self) -> SimpleGraph {
        let (keep, drop) = (self.x.min(self.y), self.x.max(self.y));
        let mut g = self.graph.clone();
        g.remove_edge(keep, drop);
        g.merge_vertices(keep, drop)
    }

    /// `G+`: adds `xy` if absent.
    pub fn with_xy_edge(&self) -> TerminalGraph {
        TerminalGraph { graph: self.graph.with_edge(self.xy_edge()), x: self.x, y: self.y }
    }

    pub fn without_xy_edge(&self) -> TerminalGraph {
        let mut graph = self.graph.clone();
        graph.remove_edge(self.x, self.y);
        TerminalGraph { graph, x: self.x, y: self.y }
    }

    /// All minor-operations, sorted by edge with deletion first; `(xy, /)` is
    /// never included.
    pub fn minor_operations(&self) -> Vec<MinorOperation> {
        let xy = self.xy_edge();
        let mut ops = Vec::new();
        for e in self.graph.edges() {
            ops.push(MinorOperation { edge: e, kind: MinorKind::Delete });
            if e != xy {
                ops.push(MinorOperation { edge: e, kind: MinorKind::Contract });
            }
        }
        ops
    }

    /// The xy-sum of `self` and `other`. The result's terminals are the
    /// glued pair, with `self`'s vertex ids preserved.
    pub fn xy_sum(&self, other: &TerminalGraph, orientation: Orientation, with_edge: bool) -> Result<TerminalGraph> {
        if self.has_xy() || other.has_xy() {
            return Err(Error::PartsMustAvoidXy);
        }
        let n1 = self.graph.vertex_count();
        let n2 = other.graph.vertex_count();
        let mut graph = SimpleGraph::empty(n1 + n2 - 2)?;
        for e in self.graph.edges() {
            graph.add_edge(e.0, e.1);
        }
        let (to_x, to_y) = match orientation {
            Orientation::Straight => (self.x, self.y),
            Orientation::Swapped => (self.y, self.x),
        };
        let mut map = vec![0; n2];
        let mut next = n1;
        for (v, slot) in map.iter_mut().enumerate() {
            *slot = if v == other.x {
                to_x
            } else if v == other.y {
                to_y
            } else {
                next += 1;
                next - 1
            };
        }
        for e in other.graph.edges() {
            graph.add_edge(map[e.0], map[e.1]);
        }
        if with_edge {
            graph.add_edge(self.x, self.y);
        }
        Ok(TerminalGraph { graph, x: self.x, y: self.y })
    }

    /// The XY-labelled graph `G - x - y`.
    pub fn to_xy_labelled(&self) -> Result<XYLabelledGraph> {
        if self.has_xy() {
            return Err(Error::XyPresent);
        }
        let rest: Vec<usize> = (0..self.graph.vertex_count()).filter(|&v| !self.is_terminal(v)).collect();
        let graph = self.graph.induced(&rest);
        let label = |t: usize| -> BTreeSet<usize> {
            rest.iter().enumerate().filter(|(_, &v)| self.graph.has_edge(v, t)).map(|(i, _)| i).collect()
        };
        Ok(XYLabelledGraph { graph, x_labels: label(self.x), y_labels: label(self.y) })
    }

    pub fn from_xy_labelled(h: &XYLabelledGraph) -> Result<TerminalGraph> {
        h.to_terminal_graph()
    }
}

/// `G - x - y` with the neighbourhoods of the terminals recorded as labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XYLabelledGraph {
    pub graph: SimpleGraph,
    pub x_labels: BTreeSet<usize>,
    pub y_labels: BTreeSet<usize>,
}

impl XYLabelledGraph {
    pub fn new(graph: SimpleGraph, x_labels: BTreeSet<usize>, y_labels: BTreeSet<usize>) -> Result<Self> {
        let n = graph.vertex_count();
        if let Some(&v) = x_labels.iter().chain(&y_labels).find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        Ok(XYLabelledGraph { graph, x_labels, y_labels })
    }

    /// Appends the terminals as vertices `h` (x) and `h + 1` (y).
    pub fn to_terminal_graph(&self) -> Result<TerminalGraph> {
        let h = self.graph.vertex_count();
        let mut graph = SimpleGraph::empty(h + 2)?;
        for e in self.graph.edges() {
            graph.add_edge(e.0, e.1);
        }
        for &v in &self.x_labels {
            graph.add_edge(v, h);
        }
        for &v in &self.y_labels {
            graph.add_edge(v, h + 1);
        }
        TerminalGraph::new(graph, h, h + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;

    fn k5_01() -> TerminalGraph {
        TerminalGraph::new(SimpleGraph::complete(5), 0, 1).unwrap()
    }

    fn k33_nonadjacent() -> TerminalGraph {
        TerminalGraph::new(SimpleGraph::complete_bipartite(3, 3), 0, 1).unwrap()
    }

    #[test]
    fn delete_xy_from_k5() {
        let g = k5_01().delete_edge(Edge(0, 1)).unwrap();
        assert_eq!(g.graph().vertex_count(), 5);
        assert_eq!(g.graph().edge_count(), 9);
        assert!(g.is_xy_free());
    }

    #[test]
    fn delete_keeps_isolated_vertices() {
        let p = TerminalGraph::new(SimpleGraph::path(3), 0, 2).unwrap();
        let g = p.delete_edge(Edge(0, 1)).unwrap();
        assert_eq!(g.graph().vertex_count(), 3);
        assert_eq!(g.graph().degree(0), 0);
        assert_eq!(p.delete_edge(Edge(0, 2)), Err(Error::NoSuchEdge(Edge(0, 2))));
    }

    #[test]
    fn contraction_rules() {
        let tri = TerminalGraph::new(SimpleGraph::cycle(3), 0, 2).unwrap();
        let g = tri.contract_edge(Edge(0, 1)).unwrap();
        assert_eq!(g.graph().vertex_count(), 2);
        assert_eq!(g.graph().edge_count(), 1);

        let g = k5_01().contract_edge(Edge(2, 3)).unwrap();
        assert_eq!(g.graph(), &SimpleGraph::complete(4));

        assert_eq!(k5_01().contract_edge(Edge(0, 1)), Err(Error::ContractXy));

        // Contracting an edge at a terminal keeps the terminal.
        let p = TerminalGraph::new(SimpleGraph::path(4), 3, 0).unwrap();
        let g = p.contract_edge(Edge(2, 3)).unwrap();
        assert_eq!(g.graph().vertex_count(), 3);
        assert_eq!(g.x(), 2);
        assert_eq!(g.y(), 0);
        assert_eq!(g.graph().degree(2), 1);
    }

    #[test]
    fn identify_c4_terminals() {
        // C4 = x, a, y, b
        let c4 = TerminalGraph::new(SimpleGraph::cycle(4), 0, 2).unwrap();
        let g = c4.identify_terminals();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        let k = k33_nonadjacent().identify_terminals();
        // the three common neighbours each lose one of their two terminal edges
        assert_eq!((k.vertex_count(), k.edge_count()), (5, 6));
    }

    #[test]
    fn with_xy_is_idempotent() {
        let g = k33_nonadjacent().with_xy_edge();
        assert_eq!(g.graph().edge_count(), 10);
        assert_eq!(g.with_xy_edge(), g);
        let gap = k5_01().delete_edge(Edge(0, 1)).unwrap();
        assert_eq!(gap.with_xy_edge(), k5_01());
    }

    #[test]
    fn operation_counts() {
        assert_eq!(k33_nonadjacent().minor_operations().len(), 18);
        assert_eq!(k5_01().minor_operations().len(), 19);
        let e = TerminalGraph::new(SimpleGraph::empty(2).unwrap(), 0, 1).unwrap();
        assert!(e.minor_operations().is_empty());
        let ops = k5_01().minor_operations();
        assert_eq!(ops[0], MinorOperation { edge: Edge(0, 1), kind: MinorKind::Delete });
        assert_eq!(ops[1].edge, Edge(0, 2));
    }

    #[test]
    fn xy_sum_counts() {
        let s = k33_nonadjacent().xy_sum(&k33_nonadjacent(), Orientation::Straight, false).unwrap();
        assert_eq!(s.graph().vertex_count(), 10);
        assert_eq!(s.graph().edge_count(), 18);
        let s = k33_nonadjacent().xy_sum(&k33_nonadjacent(), Orientation::Swapped, true).unwrap();
        assert_eq!(s.graph().edge_count(), 19);
        assert!(s.has_xy());
        assert_eq!(k5_01().xy_sum(&k33_nonadjacent(), Orientation::Straight, false), Err(Error::PartsMustAvoidXy));
    }

    #[test]
    fn swapped_sum_with_symmetric_part_is_isomorphic() {
        let a = k33_nonadjacent();
        let b = TerminalGraph::new(SimpleGraph::complete_bipartite(3, 3), 0, 3)
            .unwrap()
            .delete_edge(Edge(0, 3))
            .unwrap();
        let s1 = b.xy_sum(&a, Orientation::Straight, true).unwrap();
        let s2 = b.xy_sum(&a, Orientation::Swapped, true).unwrap();
        assert!(are_isomorphic(&s1, &s2));
    }

    #[test]
    fn xy_labelled_round_trip() {
        let g = k33_nonadjacent();
        let h = g.to_xy_labelled().unwrap();
        assert_eq!(h.graph.vertex_count(), 4);
        let back = h.to_terminal_graph().unwrap();
        assert!(are_isomorphic(&g, &back));
        assert_eq!(k5_01().to_xy_labelled(), Err(Error::XyPresent));

        let bare = XYLabelledGraph::new(SimpleGraph::complete(5), BTreeSet::new(), BTreeSet::new()).unwrap();
        let t = bare.to_terminal_graph().unwrap();
        assert_eq!(t.graph().degree(t.x()), 0);
        assert_eq!(t.graph().degree(t.y()), 0);
    }
}
