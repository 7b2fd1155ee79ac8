use std::fmt;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// A dart `(tail, head)`: one end of an edge, oriented away from `tail`.
pub type Dart = (usize, usize);

/// Local rotations of an orientable embedding. The rotation at `v` lists
/// the neighbours of `v` in cyclic order; a neighbour stands for the dart
/// from `v` towards it.
#[derive(Clone, PartialEq, Eq)]
pub struct RotationSystem {
    graph: SimpleGraph,
    rotation: Vec<Vec<usize>>,
}

impl fmt::Debug for RotationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RotationSystem").field("rotation", &self.rotation).finish()
    }
}

impl fmt::Display for RotationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, r) in self.rotation.iter().enumerate() {
            let seq: Vec<String> = r.iter().map(|w| w.to_string()).collect();
            writeln!(f, "{v}: {}", seq.join(" "))?;
        }
        Ok(())
    }
}

impl RotationSystem {
    pub fn new(graph: SimpleGraph, rotation: Vec<Vec<usize>>) -> Result<Self> {
        if rotation.len() != graph.vertex_count() {
            return Err(Error::BadRotation(format!(
                "{} local rotations for {} vertices",
                rotation.len(),
                graph.vertex_count()
            )));
        }
        for (v, r) in rotation.iter().enumerate() {
            let mut sorted = r.clone();
            sorted.sort_unstable();
            let nbrs: Vec<usize> = graph.neighbors(v).collect();
            if sorted != nbrs {
                return Err(Error::BadRotation(format!("rotation at {v} is not a permutation of its neighbours")));
            }
        }
        Ok(RotationSystem { graph, rotation })
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// Successor of `w` in the rotation at `v`.
    pub fn successor(&self, v: usize, w: usize) -> usize {
        let r = &self.rotation[v];
        let i = r.iter().position(|&u| u == w).expect("dart present");
        r[(i + 1) % r.len()]
    }

    /// Mirror image: every local rotation reversed.
    pub fn mirrored(&self) -> RotationSystem {
        let rotation = self
            .rotation
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.reverse();
                r
            })
            .collect();
        RotationSystem { graph: self.graph.clone(), rotation }
    }
}

/// A facial walk as its cyclic sequence of darts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceWalk {
    pub darts: Vec<Dart>,
}

impl FaceWalk {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.darts.iter().map(|d| d.0)
    }

    /// Whether `(x, y, x, y)` is a cyclic subsequence of the walk.
    pub fn alternates(&self, x: usize, y: usize) -> bool {
        alternating_runs(self.vertices(), x, y) >= 4
    }
}

/// Number of maximal cyclic runs of equal symbols in the subsequence of
/// `x`/`y` occurrences.
pub(crate) fn alternating_runs(walk: impl Iterator<Item = usize>, x: usize, y: usize) -> usize {
    let seq: Vec<usize> = walk.filter(|&v| v == x || v == y).collect();
    if seq.is_empty() {
        return 0;
    }
    let changes = (0..seq.len()).filter(|&i| seq[i] != seq[(i + 1) % seq.len()]).count();
    changes.max(1)
}

/// All faces, each starting at its lowest dart, ordered by that dart.
pub fn trace_faces(rs: &RotationSystem) -> Result<Vec<FaceWalk>> {
    let g = &rs.graph;
    if g.edge_count() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut darts: Vec<Dart> = Vec::with_capacity(2 * g.edge_count());
    for v in 0..g.vertex_count() {
        for w in g.neighbors(v) {
            darts.push((v, w));
        }
    }
    let index = |d: Dart| darts.binary_search(&d).expect("dart exists");
    let mut seen = vec![false; darts.len()];
    let mut faces = Vec::new();
    for start in 0..darts.len() {
        if seen[start] {
            continue;
        }
        let mut walk = Vec::new();
        let mut d = darts[start];
        loop {
            seen[index(d)] = true;
            walk.push(d);
            let (u, v) = d;
            d = (v, rs.successor(v, u));
            if d == darts[start] {
                break;
            }
        }
        faces.push(FaceWalk { darts: walk });
    }
    Ok(faces)
}

/// Euler genus of the embedding, `(2 - n + m - f) / 2`.
pub fn embedding_genus(rs: &RotationSystem) -> Result<usize> {
    let f = trace_faces(rs)?.len() as i64;
    let n = rs.graph.vertex_count() as i64;
    let m = rs.graph.edge_count() as i64;
    let twice = 2 - n + m - f;
    assert!(twice >= 0 && twice % 2 == 0, "face tracing produced odd Euler characteristic");
    Ok((twice / 2) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Cyclic order around `v` given by increasing angle in a straight-line drawing.
    fn from_drawing(g: &SimpleGraph, pos: &[(f64, f64)]) -> RotationSystem {
        let rotation = (0..g.vertex_count())
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).collect();
                nb.sort_by(|&a, &b| {
                    let ang = |w: usize| (pos[w].1 - pos[v].1).atan2(pos[w].0 - pos[v].0);
                    ang(a).partial_cmp(&ang(b)).unwrap()
                });
                nb
            })
            .collect();
        RotationSystem::new(g.clone(), rotation).unwrap()
    }

    #[test]
    fn triangle_has_two_faces() {
        let g = SimpleGraph::cycle(3);
        let rs = RotationSystem::new(g, vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
        let faces = trace_faces(&rs).unwrap();
        assert_eq!(faces.len(), 2);
        assert_eq!(embedding_genus(&rs).unwrap(), 0);
    }

    #[test]
    fn planar_k4() {
        let g = SimpleGraph::complete(4);
        let rs = from_drawing(&g, &[(0.0, 0.0), (10.0, 0.0), (5.0, 9.0), (5.0, 3.0)]);
        assert_eq!(trace_faces(&rs).unwrap().len(), 4);
        assert_eq!(embedding_genus(&rs).unwrap(), 0);
    }

    #[test]
    fn cube_standard_rotation() {
        let edges = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)];
        let g = SimpleGraph::from_edges(8, edges).unwrap();
        let outer = [(0.0, 0.0), (10.0, 0.0), (10.0, 10.0), (0.0, 10.0)];
        let inner = [(3.0, 3.0), (7.0, 3.0), (7.0, 7.0), (3.0, 7.0)];
        let pos: Vec<_> = outer.iter().chain(inner.iter()).copied().collect();
        let rs = from_drawing(&g, &pos);
        assert_eq!(trace_faces(&rs).unwrap().len(), 6);
        assert_eq!(embedding_genus(&rs).unwrap(), 0);
    }

    #[test]
    fn tree_has_one_face() {
        let g = SimpleGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let rs = RotationSystem::new(g, vec![vec![1, 2, 3], vec![0], vec![0], vec![0]]).unwrap();
        let faces = trace_faces(&rs).unwrap();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].len(), 6);
        assert_eq!(embedding_genus(&rs).unwrap(), 0);
    }

    #[test]
    fn k5_torus_rotation() {
        // Rotation at v: v+1, v+3, v+4, v+2 (mod 5) embeds K5 in the torus.
        let g = SimpleGraph::complete(5);
        let rotation = (0..5).map(|v| [1, 3, 4, 2].iter().map(|d| (v + d) % 5).collect()).collect();
        let rs = RotationSystem::new(g, rotation).unwrap();
        let faces = trace_faces(&rs).unwrap();
        assert_eq!(faces.len(), 5);
        assert_eq!(embedding_genus(&rs).unwrap(), 1);
        assert!(faces.iter().all(|f| f.len() == 4 && !f.alternates(0, 1)));
        assert_eq!(embedding_genus(&rs.mirrored()).unwrap(), 1);
    }

    #[test]
    fn rejects_bad_rotation_and_disconnected() {
        let g = SimpleGraph::cycle(3);
        assert!(RotationSystem::new(g.clone(), vec![vec![1], vec![2, 0], vec![0, 1]]).is_err());
        let two = SimpleGraph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let rs = RotationSystem::new(two, vec![vec![1], vec![0], vec![3], vec![2]]).unwrap();
        assert_eq!(trace_faces(&rs), Err(Error::Disconnected));
    }

    #[test]
    fn run_counting() {
        assert_eq!(alternating_runs([0, 5, 1, 5, 0, 1].into_iter(), 0, 1), 4);
        assert_eq!(alternating_runs([0, 5, 0, 1, 1].into_iter(), 0, 1), 2);
        assert_eq!(alternating_runs([0, 5, 0].into_iter(), 0, 1), 1);
    }
}
