use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{Catalog, CatalogEntry, Source, Tag};
use crate::criticality::{ClassVariant, Parameter};
use crate::embedding::Engine;
use crate::error::{Error, Result};
use crate::graph::{canonical_code, CanonicalCode, Edge, Orientation, SimpleGraph, TerminalGraph};

/// K5 and K3,3.
pub fn builtin_kuratowski() -> Vec<SimpleGraph> {
    vec![SimpleGraph::complete(5), SimpleGraph::complete_bipartite(3, 3)]
}

fn kuratowski_named() -> [(&'static str, SimpleGraph); 2] {
    [("K5", SimpleGraph::complete(5)), ("K33", SimpleGraph::complete_bipartite(3, 3))]
}

/// Every choice of two terminals on `g`, one per isomorphism class.
pub fn terminal_placements(g: &SimpleGraph) -> Vec<TerminalGraph> {
    let n = g.vertex_count();
    let mut seen = BTreeMap::new();
    for x in 0..n {
        for y in x + 1..n {
            let t = TerminalGraph::new(g.clone(), x, y).expect("distinct terminals");
            seen.entry(canonical_code(&t)).or_insert(t);
        }
    }
    seen.into_values().collect()
}

fn is_member(engine: &Engine, t: &TerminalGraph, p: Parameter) -> bool {
    !t.has_xy() && engine.class_membership(t, p, ClassVariant::XyFree) == Ok(Some(0))
}

/// Keeps the first graph of each isomorphism class, ordered by size then code.
fn dedup(named: Vec<(String, TerminalGraph)>) -> Vec<(String, TerminalGraph)> {
    let mut seen: BTreeMap<CanonicalCode, (String, TerminalGraph)> = BTreeMap::new();
    for (name, t) in named {
        seen.entry(canonical_code(&t)).or_insert((name, t));
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by(|a, b| {
        let size = |t: &TerminalGraph| (t.graph().vertex_count(), t.graph().edge_count());
        size(&a.1 .1).cmp(&size(&b.1 .1)).then_with(|| a.0.cmp(&b.0))
    });
    out.into_iter().map(|(_, v)| v).collect()
}

/// Terminal placements on the Kuratowski graphs and on the Kuratowski graphs
/// minus an edge with the terminals at its ends.
fn c0_candidates() -> Vec<(String, TerminalGraph)> {
    let mut out = Vec::new();
    for (name, k) in kuratowski_named() {
        for t in terminal_placements(&k) {
            let suffix = if t.has_xy() { "adjacent" } else { "nonadjacent" };
            out.push((format!("{name} {suffix}"), t));
        }
        let e = k.edges()[0];
        let gap = TerminalGraph::new(k.without_edge(e).expect("edge exists"), e.0, e.1).expect("distinct ends");
        out.push((format!("{name}-e"), gap));
    }
    out
}

fn build_class(engine: &Engine, p: Parameter, expected: usize) -> Result<Catalog> {
    let found: Vec<(String, TerminalGraph)> =
        c0_candidates().into_par_iter().filter(|(_, t)| is_member(engine, t, p)).collect();
    let found = dedup(found);
    if found.len() != expected {
        let names: Vec<&str> = found.iter().map(|(n, _)| n.as_str()).collect();
        return Err(Error::CountMismatch(format!(
            "C0({}) has {} members {names:?}, expected {expected}",
            p.name(),
            found.len()
        )));
    }
    let tag = Tag::for_parameter(p);
    Catalog::new(found.into_iter().map(|(n, t)| CatalogEntry::new(n, t, [tag], Source::Generated)).collect())
}

/// The single member of C°₀(g): K3,3 with non-adjacent terminals.
pub fn build_c0_g(engine: &Engine) -> Result<Catalog> {
    build_class(engine, Parameter::G, 1)
}

/// The three members of C°₀(g⁺).
pub fn build_c0_gplus(engine: &Engine) -> Result<Catalog> {
    build_class(engine, Parameter::GPlus, 3)
}

fn both_alternating_classes(engine: &Engine, t: &TerminalGraph) -> bool {
    is_member(engine, t, Parameter::GA) && is_member(engine, t, Parameter::GAPlus)
}

fn entries(found: Vec<(String, TerminalGraph)>, tags: &[Tag]) -> Result<Catalog> {
    Catalog::new(
        dedup(found)
            .into_iter()
            .map(|(n, t)| CatalogEntry::new(n, t, tags.iter().copied(), Source::Generated))
            .collect(),
    )
}

/// A Kuratowski graph with one or two isolated terminals, every placement
/// up to isomorphism, kept when it lies in both alternating classes.
pub fn generate_t1(engine: &Engine) -> Result<Catalog> {
    let mut cands = Vec::new();
    for (name, k) in kuratowski_named() {
        let n = k.vertex_count();
        let mut one = SimpleGraph::empty(n + 1)?;
        let mut two = SimpleGraph::empty(n + 2)?;
        for e in k.edges() {
            one.add_edge(e.0, e.1);
            two.add_edge(e.0, e.1);
        }
        for y in 0..n {
            cands.push((format!("{name}+x"), TerminalGraph::new(one.clone(), n, y)?));
        }
        cands.push((format!("{name}+x+y"), TerminalGraph::new(two, n, n + 1)?));
    }
    let found = cands.into_par_iter().filter(|(_, t)| both_alternating_classes(engine, t)).collect();
    entries(found, &[Tag::C0ga, Tag::C0gaPlus, Tag::T1])
}

/// Kuratowski parts with terminals and without the edge `xy`.
fn kuratowski_parts() -> Vec<(String, TerminalGraph)> {
    let mut out = Vec::new();
    for (name, k) in kuratowski_named() {
        for t in terminal_placements(&k) {
            if t.has_xy() {
                out.push((format!("{name}-e"), t.without_xy_edge()));
            } else {
                out.push((name.to_string(), t));
            }
        }
    }
    out
}

/// xy-sums (no `xy`, both orientations) of two Kuratowski parts that lie in
/// both alternating classes.
pub fn generate_t2(engine: &Engine) -> Result<Catalog> {
    let parts = kuratowski_parts();
    let mut cands = Vec::new();
    for (i, (na, a)) in parts.iter().enumerate() {
        for (nb, b) in &parts[i..] {
            for (o, tag) in [(Orientation::Straight, ""), (Orientation::Swapped, " swapped")] {
                cands.push((format!("{na} + {nb}{tag}"), a.xy_sum(b, o, false)?));
            }
        }
    }
    let found = cands.into_par_iter().filter(|(_, t)| both_alternating_classes(engine, t)).collect();
    entries(found, &[Tag::C0ga, Tag::C0gaPlus, Tag::T2])
}

/// Replaces `v` by two new terminals sharing its edges according to `mask`.
fn split_vertex(g: &SimpleGraph, v: usize, mask: u32) -> Result<TerminalGraph> {
    let n = g.vertex_count();
    let nbrs: Vec<usize> = g.neighbors(v).collect();
    let keep: Vec<usize> = (0..n).filter(|&w| w != v).collect();
    let pos = |w: usize| keep.binary_search(&w).expect("kept vertex");
    let mut h = SimpleGraph::empty(n + 1)?;
    for Edge(a, b) in g.edges() {
        if a != v && b != v {
            h.add_edge(pos(a), pos(b));
        }
    }
    let (x, y) = (n - 1, n);
    for (i, &w) in nbrs.iter().enumerate() {
        h.add_edge(pos(w), if mask >> i & 1 == 1 { x } else { y });
    }
    TerminalGraph::new(h, x, y)
}

/// Splits of a Kuratowski vertex into two non-adjacent terminals that lie in
/// C°₀(g_a⁺) but not in C°₀(g_a).
pub fn generate_t5(engine: &Engine) -> Result<Catalog> {
    let mut cands = Vec::new();
    for (name, k) in kuratowski_named() {
        for v in 0..k.vertex_count() {
            let d = k.degree(v);
            for mask in 1u32..(1 << d) - 1 {
                let t = split_vertex(&k, v, mask)?;
                let a = mask.count_ones() as usize;
                cands.push((format!("{name} split {}-{}", a.min(d - a), a.max(d - a)), t));
            }
        }
    }
    let found = cands
        .into_par_iter()
        .filter(|(_, t)| is_member(engine, t, Parameter::GAPlus) && !is_member(engine, t, Parameter::GA))
        .collect();
    entries(found, &[Tag::C0gaPlus, Tag::T5])
}
