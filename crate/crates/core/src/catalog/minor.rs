use std::collections::HashSet;

use crate::graph::{canonical_code, MinorOperation, TerminalGraph};

/// Drops isolated non-terminals, which no minor-operation can remove.
fn strip(t: &TerminalGraph) -> TerminalGraph {
    let g = t.graph();
    let keep: Vec<usize> = (0..g.vertex_count()).filter(|&v| t.is_terminal(v) || g.degree(v) > 0).collect();
    let pos = |v: usize| keep.binary_search(&v).expect("terminal kept");
    TerminalGraph::new(g.induced(&keep), pos(t.x()), pos(t.y())).expect("terminals kept")
}

/// A sequence of minor-operations turning `g` into a graph isomorphic to
/// `h` (terminals may be exchanged), found by breadth-first search over
/// isomorphism classes. Isolated non-terminals are discarded along the way.
pub fn find_minor(g: &TerminalGraph, h: &TerminalGraph) -> Option<Vec<MinorOperation>> {
    let h = strip(h);
    let target = canonical_code(&h);
    let (hn, hm) = (h.graph().vertex_count(), h.graph().edge_count());
    let start = strip(g);
    let mut seen = HashSet::from([canonical_code(&start)]);
    let mut level = vec![(start, Vec::new())];
    while !level.is_empty() {
        let mut next = Vec::new();
        for (t, path) in level {
            if t.graph().vertex_count() == hn && t.graph().edge_count() == hm && canonical_code(&t) == target {
                return Some(path);
            }
            for op in t.minor_operations() {
                let u = strip(&t.apply(op).expect("own operation"));
                if u.graph().vertex_count() < hn || u.graph().edge_count() < hm {
                    continue;
                }
                if seen.insert(canonical_code(&u)) {
                    let mut p = path.clone();
                    p.push(op);
                    next.push((u, p));
                }
            }
        }
        level = next;
    }
    None
}

pub fn has_minor(g: &TerminalGraph, h: &TerminalGraph) -> bool {
    find_minor(g, h).is_some()
}
