//! Planarity by the Demoucron-Malgrange-Pertuiset face-growing algorithm,
//! run on each block separately.

use crate::graph::{bits, block_edge_sets, Edge, SimpleGraph};

pub fn is_planar(g: &SimpleGraph) -> bool {
    block_edge_sets(g).iter().all(|edges| block_is_planar(edges))
}

fn block_is_planar(edges: &[Edge]) -> bool {
    let mut vs: Vec<usize> = edges.iter().flat_map(|e| [e.0, e.1]).collect();
    vs.sort_unstable();
    vs.dedup();
    let (n, m) = (vs.len(), edges.len());
    if n < 5 || m < 9 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    let b = SimpleGraph::edge_subgraph(&vs, edges);
    dmp(&b)
}

/// A cycle through an edge at vertex 0: a shortest path avoiding that edge.
fn initial_cycle(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let t = g.neighbors(0).next().expect("block has edges");
    let mut parent = vec![usize::MAX; n];
    parent[0] = 0;
    let mut queue = std::collections::VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if (v == 0 && w == t) || parent[w] != usize::MAX {
                continue;
            }
            parent[w] = v;
            if w == t {
                let mut cyc = vec![t];
                let mut u = t;
                while u != 0 {
                    u = parent[u];
                    cyc.push(u);
                }
                return cyc;
            }
            queue.push_back(w);
        }
    }
    unreachable!("a 2-connected graph has a cycle through every edge")
}

struct Fragment {
    attachments: u64,
    /// Interior vertices (empty for a single chord).
    interior: u64,
}

fn dmp(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let cycle = initial_cycle(g);
    let mut placed: u64 = cycle.iter().fold(0, |m, &v| m | 1 << v);
    let mut h = SimpleGraph::empty(n).expect("size checked");
    for i in 0..cycle.len() {
        h.add_edge(cycle[i], cycle[(i + 1) % cycle.len()]);
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];
    loop {
        let frags = fragments(g, &h, placed, all);
        if frags.is_empty() {
            return true;
        }
        let face_mask: Vec<u64> = faces.iter().map(|f| f.iter().fold(0, |m, &v| m | 1 << v)).collect();
        let mut choice = None;
        for (fi, fr) in frags.iter().enumerate() {
            let admissible: Vec<usize> =
                (0..faces.len()).filter(|&i| fr.attachments & !face_mask[i] == 0).collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face) = choice.expect("some fragment");
        let path = fragment_path(g, &frags[fi]);
        for w in path.windows(2) {
            h.add_edge(w[0], w[1]);
        }
        for &v in &path {
            placed |= 1 << v;
        }
        let old = faces.swap_remove(face);
        let (i, j) = (
            old.iter().position(|&v| v == path[0]).expect("attachment on face"),
            old.iter().position(|&v| v == *path.last().expect("path")).expect("attachment on face"),
        );
        let len = old.len();
        let arc = |from: usize, to: usize| {
            let mut out = vec![old[from]];
            let mut k = from;
            while k != to {
                k = (k + 1) % len;
                out.push(old[k]);
            }
            out
        };
        let inner = &path[1..path.len() - 1];
        let mut f1 = arc(i, j);
        f1.extend(inner.iter().rev());
        let mut f2 = arc(j, i);
        f2.extend(inner.iter());
        faces.push(f1);
        faces.push(f2);
    }
}

fn fragments(g: &SimpleGraph, h: &SimpleGraph, placed: u64, all: u64) -> Vec<Fragment> {
    let mut out = Vec::new();
    for e in g.edges() {
        if placed >> e.0 & 1 == 1 && placed >> e.1 & 1 == 1 && !h.has_edge(e.0, e.1) {
            out.push(Fragment { attachments: 1 << e.0 | 1 << e.1, interior: 0 });
        }
    }
    let mut rest = all & !placed;
    while rest != 0 {
        let s = rest.trailing_zeros() as usize;
        let mut comp = 1u64 << s;
        let mut frontier = comp;
        while frontier != 0 {
            let mut nb = 0;
            for v in bits(frontier) {
                nb |= g.neighbor_mask(v);
            }
            nb &= !placed;
            frontier = nb & !comp;
            comp |= nb;
        }
        rest &= !comp;
        let attachments = bits(comp).fold(0, |m, v| m | (g.neighbor_mask(v) & placed));
        out.push(Fragment { attachments, interior: comp });
    }
    out
}

/// A path through the fragment between two distinct attachments.
fn fragment_path(g: &SimpleGraph, fr: &Fragment) -> Vec<usize> {
    let mut att = bits(fr.attachments);
    let a = att.next().expect("attachment");
    if fr.interior == 0 {
        return vec![a, att.next().expect("second attachment")];
    }
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for w in bits(g.neighbor_mask(a) & fr.interior) {
        parent[w] = a;
        queue.push_back(w);
    }
    while let Some(v) = queue.pop_front() {
        let targets = g.neighbor_mask(v) & fr.attachments & !(1 << a);
        if targets != 0 {
            let mut path = vec![targets.trailing_zeros() as usize, v];
            let mut u = v;
            while parent[u] != a {
                u = parent[u];
                path.push(u);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for w in bits(g.neighbor_mask(v) & fr.interior) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragments of a 2-connected graph have two attachments")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kuratowski_graphs_are_not_planar() {
        assert!(!is_planar(&SimpleGraph::complete(5)));
        assert!(!is_planar(&SimpleGraph::complete_bipartite(3, 3)));
    }

    #[test]
    fn planar_examples() {
        assert!(is_planar(&SimpleGraph::complete(4)));
        let k5e = SimpleGraph::complete(5).without_edge(Edge(0, 1)).unwrap();
        assert!(is_planar(&k5e));
        let k33e = SimpleGraph::complete_bipartite(3, 3).without_edge(Edge(0, 3)).unwrap();
        assert!(is_planar(&k33e));
        let mut grid = Vec::new();
        for r in 0..4 {
            for c in 0..4 {
                let v = 4 * r + c;
                if c < 3 {
                    grid.push((v, v + 1));
                }
                if r < 3 {
                    grid.push((v, v + 4));
                }
            }
        }
        assert!(is_planar(&SimpleGraph::from_edges(16, grid).unwrap()));
    }

    #[test]
    fn petersen_is_not_planar() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        assert!(!is_planar(&SimpleGraph::from_edges(10, edges).unwrap()));
    }
}
