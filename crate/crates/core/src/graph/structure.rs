use super::{bits, Edge, SimpleGraph, TerminalGraph};

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
pub fn components(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = 0u64;
    let mut out = Vec::new();
    for s in 0..n {
        if seen >> s & 1 == 1 {
            continue;
        }
        let mut comp = 1u64 << s;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= g.neighbor_mask(v);
            }
            frontier = next & !comp;
            comp |= next;
        }
        seen |= comp;
        out.push(bits(comp).collect());
    }
    out
}

/// Edge sets of the blocks (2-connected components and bridges).
/// Isolated vertices contribute nothing.
pub fn block_edge_sets(g: &SimpleGraph) -> Vec<Vec<Edge>> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut stack: Vec<Edge> = Vec::new();
    let mut out = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, remaining neighbours)
        let mut dfs: Vec<(usize, usize, u64)> = vec![(root, usize::MAX, g.neighbor_mask(root))];
        while let Some(&mut (v, parent, ref mut rest)) = dfs.last_mut() {
            if *rest != 0 {
                let w = rest.trailing_zeros() as usize;
                *rest &= *rest - 1;
                if disc[w] == usize::MAX {
                    stack.push(Edge::new(v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    dfs.push((w, v, g.neighbor_mask(w)));
                } else if w != parent && disc[w] < disc[v] {
                    stack.push(Edge::new(v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                dfs.pop();
                if let Some(&(p, _, _)) = dfs.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = stack.pop() {
                            block.push(e);
                            if e == Edge::new(p, v) {
                                break;
                            }
                        }
                        block.sort();
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

/// The blocks as standalone graphs (vertices renumbered in increasing order).
pub fn blocks(g: &SimpleGraph) -> Vec<SimpleGraph> {
    block_edge_sets(g)
        .into_iter()
        .map(|edges| {
            let mut vs: Vec<usize> = edges.iter().flat_map(|e| [e.0, e.1]).collect();
            vs.sort_unstable();
            vs.dedup();
            SimpleGraph::edge_subgraph(&vs, &edges)
        })
        .collect()
}

/// Cut-edges whose deletion separates the terminals.
pub fn bars(g: &TerminalGraph) -> Vec<Edge> {
    let h = g.graph();
    if !h.connected(g.x(), g.y()) {
        return Vec::new();
    }
    block_edge_sets(h)
        .into_iter()
        .filter(|b| b.len() == 1)
        .map(|b| b[0])
        .filter(|&e| {
            let mut cut = h.clone();
            cut.remove_edge(e.0, e.1);
            !cut.connected(g.x(), g.y())
        })
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect()
}
