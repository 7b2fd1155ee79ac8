//! Terminal-aware isomorphism and canonical codes.
//!
//! Canonical codes are the lexicographically greatest sequence of adjacency
//! rows over all vertex orders that respect a colour-refined ordered
//! partition. At each position only the candidates producing the greatest
//! row are branched on, which keeps the search small for the graphs handled
//! here.

use std::cmp::Ordering;
use std::fmt;

use super::{bits, SimpleGraph, TerminalGraph};

/// Opaque isomorphism-class key; equal codes mean isomorphic graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Option<CanonicalCode> {
        if !s.len().is_multiple_of(2) {
            return None;
        }
        (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(s.get(i..i + 2)?, 16).ok())
            .collect::<Option<Vec<u8>>>()
            .map(CanonicalCode)
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Iterated colour refinement. Returns colour ranks; the order of colours
/// depends only on the isomorphism class of `(g, initial)`.
fn refine(g: &SimpleGraph, initial: &[u32]) -> Vec<u32> {
    let n = g.vertex_count();
    let mut colour = rank(initial.iter().map(|&c| vec![c]).collect());
    loop {
        let sigs: Vec<Vec<u32>> = (0..n)
            .map(|v| {
                let mut s: Vec<u32> = g.neighbors(v).map(|w| colour[w]).collect();
                s.sort_unstable();
                s.insert(0, colour[v]);
                s
            })
            .collect();
        let next = rank(sigs);
        let classes = |c: &[u32]| c.iter().copied().max().map_or(0, |m| m + 1);
        if classes(&next) == classes(&colour) {
            return next;
        }
        colour = next;
    }
}

fn rank(sigs: Vec<Vec<u32>>) -> Vec<u32> {
    let mut sorted = sigs.clone();
    sorted.sort();
    sorted.dedup();
    sigs.iter().map(|s| sorted.binary_search(s).expect("present") as u32).collect()
}

struct Canon<'a> {
    g: &'a SimpleGraph,
    /// Vertices of each cell, cells in colour order.
    cell_of_pos: Vec<u64>,
    order: Vec<usize>,
    rows: Vec<u64>,
    best: Option<Vec<u64>>,
}

impl Canon<'_> {
    fn row(&self, v: usize, k: usize) -> u64 {
        let mut r = 0u64;
        for (i, &w) in self.order[..k].iter().enumerate() {
            if self.g.has_edge(v, w) {
                r |= 1 << (63 - i);
            }
        }
        r
    }

    fn search(&mut self, k: usize, used: u64) {
        let n = self.g.vertex_count();
        let state = match &self.best {
            None => Ordering::Greater,
            Some(best) => self.rows[..k].cmp(&best[..k]),
        };
        if state == Ordering::Less {
            return;
        }
        if k == n {
            if state == Ordering::Greater {
                self.best = Some(self.rows.clone());
            }
            return;
        }
        let cands = self.cell_of_pos[k] & !used;
        let top = bits(cands).map(|v| self.row(v, k)).max().expect("nonempty cell");
        if let (Ordering::Equal, Some(best)) = (state, &self.best) {
            if top < best[k] {
                return;
            }
        }
        for v in bits(cands) {
            if self.row(v, k) != top {
                continue;
            }
            self.order[k] = v;
            self.rows[k] = top;
            self.search(k + 1, used | 1 << v);
        }
    }
}

fn canonical_rows(g: &SimpleGraph, initial: &[u32]) -> Vec<u64> {
    let n = g.vertex_count();
    let colour = refine(g, initial);
    let mut by_colour: Vec<usize> = (0..n).collect();
    by_colour.sort_by_key(|&v| colour[v]);
    let cell_of_pos = by_colour
        .iter()
        .map(|&v| (0..n).filter(|&w| colour[w] == colour[v]).fold(0u64, |m, w| m | 1 << w))
        .collect();
    let mut c = Canon { g, cell_of_pos, order: vec![0; n], rows: vec![0; n], best: None };
    c.search(0, 0);
    c.best.unwrap_or_default()
}

fn encode(tag: u8, n: usize, rows: &[u64]) -> CanonicalCode {
    let mut out = vec![tag, n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for (k, r) in rows.iter().enumerate() {
        for i in 0..k {
            acc = acc << 1 | (r >> (63 - i) & 1) as u8;
            filled += 1;
            if filled == 8 {
                out.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(acc << (8 - filled));
    }
    CanonicalCode(out)
}

/// Code invariant under relabelling and under exchanging the terminals.
pub fn canonical_code(g: &TerminalGraph) -> CanonicalCode {
    let h = g.graph();
    let initial: Vec<u32> = (0..h.vertex_count()).map(|v| if g.is_terminal(v) { 0 } else { 1 }).collect();
    encode(b'T', h.vertex_count(), &canonical_rows(h, &initial))
}

/// Code of the underlying graph with terminals forgotten.
pub fn plain_canonical_code(g: &SimpleGraph) -> CanonicalCode {
    encode(b'P', g.vertex_count(), &canonical_rows(g, &vec![0; g.vertex_count()]))
}

fn degree_profile(g: &SimpleGraph, v: usize) -> (usize, Vec<usize>) {
    let mut nd: Vec<usize> = g.neighbors(v).map(|w| g.degree(w)).collect();
    nd.sort_unstable();
    (g.degree(v), nd)
}

struct Matcher<'a> {
    a: &'a SimpleGraph,
    b: &'a SimpleGraph,
    order: Vec<usize>,
    map: Vec<usize>,
    used: u64,
    profile_a: Vec<(usize, Vec<usize>)>,
    profile_b: Vec<(usize, Vec<usize>)>,
    terminal_a: u64,
    terminal_b: u64,
}

impl Matcher<'_> {
    fn extend(&mut self, k: usize) -> bool {
        if k == self.order.len() {
            return true;
        }
        let v = self.order[k];
        for w in 0..self.b.vertex_count() {
            if self.used >> w & 1 == 1
                || (self.terminal_a >> v & 1) != (self.terminal_b >> w & 1)
                || self.profile_a[v] != self.profile_b[w]
            {
                continue;
            }
            let consistent = self.order[..k].iter().all(|&u| self.a.has_edge(u, v) == self.b.has_edge(self.map[u], w));
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used |= 1 << w;
            if self.extend(k + 1) {
                return true;
            }
            self.used &= !(1 << w);
        }
        false
    }
}

fn search_isomorphism(a: &SimpleGraph, b: &SimpleGraph, pins: &[(usize, usize)], terminals: (u64, u64)) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let profile_a: Vec<_> = (0..n).map(|v| degree_profile(a, v)).collect();
    let profile_b: Vec<_> = (0..n).map(|v| degree_profile(b, v)).collect();
    let mut sa = profile_a.clone();
    let mut sb = profile_b.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return false;
    }
    // Pinned vertices first, then a BFS-like order so adjacency checks bite early.
    let mut order: Vec<usize> = pins.iter().map(|p| p.0).collect();
    let mut placed: u64 = order.iter().fold(0, |m, &v| m | 1 << v);
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((a.neighbor_mask(v) & placed).count_ones(), a.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        order.push(next);
        placed |= 1 << next;
    }
    let mut m = Matcher {
        a,
        b,
        order,
        map: vec![usize::MAX; n],
        used: 0,
        profile_a,
        profile_b,
        terminal_a: terminals.0,
        terminal_b: terminals.1,
    };
    for &(u, w) in pins {
        if m.profile_a[u] != m.profile_b[w] {
            return false;
        }
        m.map[u] = w;
        m.used |= 1 << w;
    }
    let pinned_ok = pins.iter().all(|&(u, w)| pins.iter().all(|&(u2, w2)| a.has_edge(u, u2) == b.has_edge(w, w2)));
    pinned_ok && m.extend(pins.len())
}

/// Isomorphism of the underlying graphs mapping `{x, y}` onto `{x', y'}`.
pub fn are_isomorphic(g1: &TerminalGraph, g2: &TerminalGraph) -> bool {
    let t1 = 1u64 << g1.x() | 1 << g1.y();
    let t2 = 1u64 << g2.x() | 1 << g2.y();
    [(g2.x(), g2.y()), (g2.y(), g2.x())]
        .into_iter()
        .any(|(a, b)| search_isomorphism(g1.graph(), g2.graph(), &[(g1.x(), a), (g1.y(), b)], (t1, t2)))
}

pub fn are_isomorphic_plain(g1: &SimpleGraph, g2: &SimpleGraph) -> bool {
    search_isomorphism(g1, g2, &[], (0, 0))
}
