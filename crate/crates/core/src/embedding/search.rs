//! Branch-and-bound over rotation systems by incremental edge insertion.
//!
//! Edges are inserted one at a time, each new dart placed after an
//! existing dart at its vertex. Inserting an edge whose endpoints already
//! carry darts either splits one face (genus unchanged) or merges two faces
//! (genus plus one), so the genus of the partial embedding never decreases
//! and is a valid lower bound for every completion.

use super::rotation::{alternating_runs, RotationSystem};
use crate::graph::SimpleGraph;

const NONE: u32 = u32::MAX;

pub(crate) struct Embedder {
    graph: SimpleGraph,
    /// Vertex at the tail of each dart; dart `2i` belongs to the `i`th
    /// inserted edge and `d ^ 1` is its reverse.
    tail: Vec<usize>,
    next: Vec<u32>,
    prev: Vec<u32>,
    face: Vec<u32>,
    first: Vec<u32>,
    deg: Vec<u32>,
    merges: usize,
    next_face: u32,
    mirror_fixed: bool,
    undo: Vec<(u32, u32)>,
    stopped: bool,
}

/// Insertion order: maximum cardinality search from a vertex of largest
/// degree, so that cycles close as early as possible.
fn insertion_order(g: &SimpleGraph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let root = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).expect("nonempty");
    let mut rank = vec![usize::MAX; n];
    rank[root] = 0;
    let mut placed = 1u64 << root;
    let mut order = Vec::with_capacity(g.edge_count());
    for step in 1..n {
        let v = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((g.neighbor_mask(v) & placed).count_ones(), g.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        let mut back: Vec<usize> = g.neighbors(v).filter(|&w| placed >> w & 1 == 1).collect();
        assert!(!back.is_empty(), "insertion order needs a connected graph");
        back.sort_by_key(|&w| rank[w]);
        for w in back {
            order.push((w, v));
        }
        rank[v] = step;
        placed |= 1 << v;
    }
    order
}

impl Embedder {
    /// `g` must be connected with at least one edge.
    pub(crate) fn new(g: &SimpleGraph) -> Self {
        let order = insertion_order(g);
        let m = order.len();
        let mut tail = Vec::with_capacity(2 * m);
        for &(u, v) in &order {
            tail.push(u);
            tail.push(v);
        }
        Embedder {
            graph: g.clone(),
            tail,
            next: vec![NONE; 2 * m],
            prev: vec![NONE; 2 * m],
            face: vec![NONE; 2 * m],
            first: vec![NONE; g.vertex_count()],
            deg: vec![0; g.vertex_count()],
            merges: 0,
            next_face: 0,
            mirror_fixed: false,
            undo: Vec::new(),
            stopped: false,
        }
    }

    fn edge_count(&self) -> usize {
        self.tail.len() / 2
    }

    /// Explores every complete embedding of genus at most `k` (up to
    /// mirror image) until `visit` returns true. Returns whether it did.
    pub(crate) fn search(&mut self, k: usize, visit: &mut dyn FnMut(&Embedder) -> bool) -> bool {
        self.stopped = false;
        let (a, b) = (0u32, 1u32);
        self.next[0] = a;
        self.prev[0] = a;
        self.next[1] = b;
        self.prev[1] = b;
        self.face[0] = 0;
        self.face[1] = 0;
        self.first[self.tail[0]] = a;
        self.first[self.tail[1]] = b;
        self.deg[self.tail[0]] = 1;
        self.deg[self.tail[1]] = 1;
        self.next_face = 1;
        self.merges = 0;
        self.mirror_fixed = false;
        self.undo.clear();
        self.descend(1, k, visit);
        self.first[self.tail[0]] = NONE;
        self.first[self.tail[1]] = NONE;
        self.deg[self.tail[0]] = 0;
        self.deg[self.tail[1]] = 0;
        self.stopped
    }

    fn darts_at(&self, v: usize) -> Vec<u32> {
        let start = self.first[v];
        let mut out = vec![start];
        let mut d = self.next[start as usize];
        while d != start {
            out.push(d);
            d = self.next[d as usize];
        }
        out
    }

    fn link_after(&mut self, d: u32, p: u32) {
        let q = self.next[p as usize];
        self.next[p as usize] = d;
        self.prev[d as usize] = p;
        self.next[d as usize] = q;
        self.prev[q as usize] = d;
    }

    fn unlink(&mut self, d: u32) {
        let (p, q) = (self.prev[d as usize], self.next[d as usize]);
        self.next[p as usize] = q;
        self.prev[q as usize] = p;
    }

    /// Relabels the face through `start` with `id`, logging changes.
    fn relabel(&mut self, start: u32, id: u32) {
        let mut d = start;
        loop {
            let old = self.face[d as usize];
            if old != id {
                self.undo.push((d, old));
                self.face[d as usize] = id;
            }
            d = self.next[(d ^ 1) as usize];
            if d == start {
                break;
            }
        }
    }

    fn rollback(&mut self, mark: usize) {
        while self.undo.len() > mark {
            let (d, old) = self.undo.pop().expect("nonempty");
            self.face[d as usize] = old;
        }
    }

    /// Candidate predecessors for a new dart at `v`, honouring the mirror
    /// restriction. Returns whether this insertion fixes the mirror.
    fn slots(&self, v: usize) -> (Vec<u32>, bool) {
        if !self.mirror_fixed && self.deg[v] == 2 {
            // All other vertices carry at most two darts, so a system and its
            // mirror agree so far and differ exactly in this choice.
            (vec![self.first[v]], true)
        } else {
            (self.darts_at(v), false)
        }
    }

    fn descend(&mut self, i: usize, k: usize, visit: &mut dyn FnMut(&Embedder) -> bool) {
        if self.stopped {
            return;
        }
        if i == self.edge_count() {
            if visit(self) {
                self.stopped = true;
            }
            return;
        }
        let a = (2 * i) as u32;
        let b = a + 1;
        let (u, v) = (self.tail[a as usize], self.tail[b as usize]);
        if self.deg[v] == 0 {
            self.insert_pendant(i, k, a, b, u, v, visit);
        } else {
            self.insert_closing(i, k, a, b, u, v, visit);
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn insert_pendant(
        &mut self,
        i: usize,
        k: usize,
        a: u32,
        b: u32,
        u: usize,
        v: usize,
        visit: &mut dyn FnMut(&Embedder) -> bool,
    ) {
        let (slots, fixes) = self.slots(u);
        let saved_mirror = self.mirror_fixed;
        self.mirror_fixed |= fixes;
        self.first[v] = b;
        self.deg[v] = 1;
        self.deg[u] += 1;
        self.next[b as usize] = b;
        self.prev[b as usize] = b;
        for p in slots {
            let q = self.next[p as usize];
            self.link_after(a, p);
            let f = self.face[q as usize];
            self.face[a as usize] = f;
            self.face[b as usize] = f;
            self.descend(i + 1, k, visit);
            self.unlink(a);
            if self.stopped {
                break;
            }
        }
        self.deg[u] -= 1;
        self.deg[v] = 0;
        self.first[v] = NONE;
        self.mirror_fixed = saved_mirror;
    }

    #[allow(clippy::too_many_arguments)]
    fn insert_closing(
        &mut self,
        i: usize,
        k: usize,
        a: u32,
        b: u32,
        u: usize,
        v: usize,
        visit: &mut dyn FnMut(&Embedder) -> bool,
    ) {
        let saved_mirror = self.mirror_fixed;
        let (su, fix_u) = self.slots(u);
        self.mirror_fixed |= fix_u;
        let (sv, fix_v) = self.slots(v);
        self.mirror_fixed |= fix_v;
        let can_merge = self.merges < k;
        let mut splits = Vec::new();
        let mut merges = Vec::new();
        for &p in &su {
            let fp = self.face[self.next[p as usize] as usize];
            for &r in &sv {
                let fr = self.face[self.next[r as usize] as usize];
                if fp == fr {
                    splits.push((p, r));
                } else if can_merge {
                    merges.push((p, r));
                }
            }
        }
        self.deg[u] += 1;
        self.deg[v] += 1;
        for (split, list) in [(true, splits), (false, merges)] {
            for (p, r) in list {
                let mark = self.undo.len();
                let fq = self.face[self.next[p as usize] as usize];
                self.link_after(a, p);
                self.link_after(b, r);
                self.face[a as usize] = fq;
                self.face[b as usize] = fq;
                if split {
                    let fresh = self.next_face;
                    self.next_face += 1;
                    self.relabel(a, fq);
                    self.relabel(b, fresh);
                    self.descend(i + 1, k, visit);
                    self.next_face -= 1;
                } else {
                    self.relabel(a, fq);
                    self.merges += 1;
                    self.descend(i + 1, k, visit);
                    self.merges -= 1;
                }
                self.rollback(mark);
                self.unlink(b);
                self.unlink(a);
                if self.stopped {
                    break;
                }
            }
            if self.stopped {
                break;
            }
        }
        self.deg[u] -= 1;
        self.deg[v] -= 1;
        self.mirror_fixed = saved_mirror;
    }

    /// Genus of the current (complete) embedding.
    pub(crate) fn genus(&self) -> usize {
        self.merges
    }

    /// Facial walks of the current embedding as vertex sequences.
    fn face_vertex_walks(&self) -> Vec<Vec<usize>> {
        let darts = self.tail.len();
        let mut seen = vec![false; darts];
        let mut out = Vec::new();
        for s in 0..darts {
            if seen[s] {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = s;
            loop {
                seen[d] = true;
                walk.push(self.tail[d]);
                d = self.next[d ^ 1] as usize;
                if d == s {
                    break;
                }
            }
            out.push(walk);
        }
        out
    }

    pub(crate) fn has_alternating_face(&self, x: usize, y: usize) -> bool {
        self.face_vertex_walks().into_iter().any(|w| alternating_runs(w.into_iter(), x, y) >= 4)
    }

    pub(crate) fn rotation_system(&self) -> RotationSystem {
        let rotation = (0..self.graph.vertex_count())
            .map(|v| {
                if self.first[v] == NONE {
                    Vec::new()
                } else {
                    self.darts_at(v).into_iter().map(|d| self.tail[(d ^ 1) as usize]).collect()
                }
            })
            .collect();
        RotationSystem::new(self.graph.clone(), rotation).expect("search builds valid rotations")
    }
}

/// Length of a shortest cycle, if any.
pub(crate) fn girth(g: &SimpleGraph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    let len = dist[v] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Euler-formula lower bound on the genus of a connected graph, using that
/// every face of a non-tree embedding has length at least the girth.
pub(crate) fn euler_lower_bound(g: &SimpleGraph) -> usize {
    let Some(girth) = girth(g) else { return 0 };
    let (n, m) = (g.vertex_count() as i64, g.edge_count() as i64);
    let max_faces = 2 * m / girth as i64;
    let twice = 2 - n + m - max_faces;
    if twice <= 0 {
        0
    } else {
        ((twice + 1) / 2) as usize
    }
}

/// A minimum-genus rotation system of a connected graph, searching upwards
/// from `lower`.
pub(crate) fn min_genus_embedding(g: &SimpleGraph, lower: usize) -> (usize, RotationSystem) {
    if g.edge_count() == 0 {
        let empty = vec![Vec::new(); g.vertex_count()];
        return (0, RotationSystem::new(g.clone(), empty).expect("no edges to rotate"));
    }
    let mut e = Embedder::new(g);
    let mut k = lower.max(euler_lower_bound(g));
    loop {
        let mut found = None;
        if e.search(k, &mut |s| {
            found = Some((s.genus(), s.rotation_system()));
            true
        }) {
            return found.expect("visitor saw the embedding");
        }
        k += 1;
    }
}
