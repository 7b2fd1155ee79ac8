use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use super::generate::{build_c0_g, build_c0_gplus, generate_t1, generate_t2, generate_t5};
use super::{has_minor, Catalog, CatalogEntry, Tag};
use crate::criticality::{ClassVariant, Parameter};
use crate::embedding::Engine;
use crate::error::Result;
use crate::graph::{components, plain_canonical_code, CanonicalCode, SimpleGraph, TerminalGraph};

/// Each T4 member and the T6 member it must contain as a proper minor.
pub const T4_MINORS: [(&str, &str); 5] = [
    ("Rocket", "Pentagon"),
    ("Lollipop", "Pentagon"),
    ("Bullet", "Hexagon"),
    ("Frog", "Hexagon"),
    ("Hive", "Hexagon"),
];

#[derive(Clone, Debug)]
pub struct ValidationOptions {
    /// Entries up to this many vertices are re-checked with decomposition off.
    pub raw_cross_check_max_vertices: usize,
    pub expected_t4: usize,
    pub expected_connected: usize,
    /// Compare generated families against the catalog.
    pub check_generators: bool,
    pub check_minors: bool,
}

impl Default for ValidationOptions {
    fn default() -> Self {
        ValidationOptions {
            raw_cross_check_max_vertices: 11,
            expected_t4: 5,
            expected_connected: 27,
            check_generators: true,
            check_minors: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Discrepancy {
    /// Entry name, or a `<...>` label for catalog-wide checks.
    pub entry: String,
    pub message: String,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.entry, self.message)
    }
}

#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub entries: usize,
    pub discrepancies: Vec<Discrepancy>,
    /// Verified family sizes.
    pub family_counts: BTreeMap<Tag, usize>,
    /// Connected members of C°₀(g_a) ∪ C°₀(g_a⁺).
    pub connected_members: usize,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }

    pub fn family_count(&self, tag: Tag) -> usize {
        self.family_counts.get(&tag).copied().unwrap_or(0)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.discrepancies {
            writeln!(f, "DISCREPANCY {d}")?;
        }
        let families: Vec<String> = self.family_counts.iter().map(|(t, n)| format!("{t}={n}")).collect();
        write!(
            f,
            "entries={} {} connected={} discrepancies={}",
            self.entries,
            families.join(" "),
            self.connected_members,
            self.discrepancies.len()
        )
    }
}

/// Which T-family a member of the alternating classes falls in, from its
/// shape alone.
pub fn family_of(t: &TerminalGraph, in_ga: bool, in_ga_plus: bool) -> Option<Tag> {
    match (in_ga, in_ga_plus) {
        (true, true) if !t.graph().is_connected() => Some(Tag::T1),
        (true, true) => {
            let rest: Vec<usize> = (0..t.graph().vertex_count()).filter(|&v| !t.is_terminal(v)).collect();
            Some(if components(&t.graph().induced(&rest)).len() > 1 { Tag::T2 } else { Tag::T3 })
        }
        (true, false) => Some(Tag::T4),
        (false, true) => {
            let code = plain_canonical_code(&t.identify_terminals());
            let kuratowski = [SimpleGraph::complete(5), SimpleGraph::complete_bipartite(3, 3)];
            Some(if kuratowski.iter().any(|k| plain_canonical_code(k) == code) { Tag::T5 } else { Tag::T6 })
        }
        (false, false) => None,
    }
}

/// The class and family tags `t` actually earns. Graphs containing `xy`
/// belong to none of the C° classes.
pub fn verified_tags(engine: &Engine, t: &TerminalGraph) -> BTreeSet<Tag> {
    let mut tags = BTreeSet::new();
    if t.has_xy() {
        return tags;
    }
    for p in Parameter::ALL {
        if engine.class_membership(t, p, ClassVariant::XyFree) == Ok(Some(0)) {
            tags.insert(Tag::for_parameter(p));
        }
    }
    if let Some(f) = family_of(t, tags.contains(&Tag::C0ga), tags.contains(&Tag::C0gaPlus)) {
        tags.insert(f);
    }
    tags
}

fn show(tags: &BTreeSet<Tag>) -> String {
    let v: Vec<&str> = tags.iter().map(|t| t.as_str()).collect();
    format!("{{{}}}", v.join(","))
}

fn without_vertex(t: &TerminalGraph, v: usize) -> SimpleGraph {
    let keep: Vec<usize> = (0..t.graph().vertex_count()).filter(|&w| w != v).collect();
    t.graph().induced(&keep)
}

/// Per-entry checks; returns the verified tags and the messages.
fn check_entry(engine: &Engine, raw: &Engine, e: &CatalogEntry, opts: &ValidationOptions) -> (BTreeSet<Tag>, Vec<String>) {
    let t = &e.graph;
    let mut out = Vec::new();
    if t.has_xy() {
        out.push("terminals are adjacent".to_string());
    }
    let tags = verified_tags(engine, t);
    if tags != e.classes {
        out.push(format!("claimed {} but verified {}", show(&e.classes), show(&tags)));
    }

    let in_ga = tags.contains(&Tag::C0ga);
    let in_ga_plus = tags.contains(&Tag::C0gaPlus);
    let p = engine.profile(t);
    if in_ga || in_ga_plus {
        if p.g_plus != 1 || p.epsilon_plus != 0 || (in_ga && p.g != 1) {
            out.push(format!("expected g+ = 1 and eps+ = 0 (and g = 1 in C0(ga)), found {p}"));
        }
        if (p.theta == 1) != (in_ga_plus && !in_ga) {
            out.push(format!("theta = {} but membership is ga={in_ga} ga+={in_ga_plus}", p.theta));
        }
    }

    for &v in &e.marked {
        let g = engine.min_genus(&without_vertex(t, v));
        if g != 1 {
            out.push(format!("marked vertex {v}: g(G - v) = {g}, expected 1"));
        }
    }

    if t.graph().vertex_count() <= opts.raw_cross_check_max_vertices {
        let rp = raw.profile(t);
        if rp != p {
            out.push(format!("raw search profile {rp} differs from {p}"));
        }
        let rtags = verified_tags(raw, t);
        if rtags != tags {
            out.push(format!("raw search tags {} differ from {}", show(&rtags), show(&tags)));
        }
    }
    (tags, out)
}

fn codes<'a>(entries: impl Iterator<Item = &'a CatalogEntry>) -> BTreeSet<CanonicalCode> {
    entries.map(|e| e.code()).collect()
}

/// The Kuratowski-class generators only see graphs without isolated
/// vertices; T1 graphs also satisfy the C0(g) and C0(g+) definitions.
fn in_scope(tag: Tag, e: &CatalogEntry) -> bool {
    let g = e.graph.graph();
    tag == Tag::T1 || (0..g.vertex_count()).all(|v| g.degree(v) > 0)
}

fn check_generators(engine: &Engine, c: &Catalog, out: &mut Vec<Discrepancy>) {
    type Generator = fn(&Engine) -> Result<Catalog>;
    let generators: [(Tag, &str, Generator); 5] = [
        (Tag::C0g, "build_c0_g", build_c0_g),
        (Tag::C0gPlus, "build_c0_gplus", build_c0_gplus),
        (Tag::T1, "generate_t1", generate_t1),
        (Tag::T2, "generate_t2", generate_t2),
        (Tag::T5, "generate_t5", generate_t5),
    ];
    for (tag, label, generator) in generators {
        let label = format!("<{label}>");
        match generator(engine) {
            Err(err) => out.push(Discrepancy { entry: label, message: err.to_string() }),
            Ok(generated) => {
                let made = codes(generated.entries.iter());
                let listed = codes(c.tagged(tag).filter(|e| in_scope(tag, e)));
                if made != listed {
                    let missing: Vec<&str> =
                        generated.entries.iter().filter(|g| !listed.contains(&g.code())).map(|g| g.name.as_str()).collect();
                    let extra: Vec<&str> = c
                        .tagged(tag)
                        .filter(|e| in_scope(tag, e) && !made.contains(&e.code()))
                        .map(|e| e.name.as_str())
                        .collect();
                    out.push(Discrepancy {
                        entry: label,
                        message: format!(
                            "generated {} {} graphs, catalog lists {}; not in catalog {missing:?}, not generated {extra:?}",
                            made.len(),
                            tag,
                            listed.len()
                        ),
                    });
                }
            }
        }
    }
}

fn check_minors(c: &Catalog, out: &mut Vec<Discrepancy>) {
    let found: Vec<Option<Discrepancy>> = T4_MINORS
        .par_iter()
        .map(|&(big, small)| {
            let (Some(g), Some(h)) = (c.get(big), c.get(small)) else {
                return Some(Discrepancy { entry: big.into(), message: format!("{big} or {small} missing from the catalog") });
            };
            let proper = g.graph.graph().edge_count() > h.graph.graph().edge_count();
            (!(proper && has_minor(&g.graph, &h.graph)))
                .then(|| Discrepancy { entry: big.into(), message: format!("{small} is not a proper minor") })
        })
        .collect();
    out.extend(found.into_iter().flatten());
}

/// Re-derives every claim in the catalog from scratch.
pub fn validate_catalog(engine: &Engine, c: &Catalog, opts: &ValidationOptions) -> ValidationReport {
    let raw = Engine::new(false);
    let results: Vec<(BTreeSet<Tag>, Vec<String>)> =
        c.entries.par_iter().map(|e| check_entry(engine, &raw, e, opts)).collect();

    let mut report = ValidationReport { entries: c.len(), ..Default::default() };
    for (e, (tags, messages)) in c.entries.iter().zip(&results) {
        for m in messages {
            report.discrepancies.push(Discrepancy { entry: e.name.clone(), message: m.clone() });
        }
        for t in tags.iter().filter(|t| t.is_family()) {
            *report.family_counts.entry(*t).or_default() += 1;
        }
        if (tags.contains(&Tag::C0ga) || tags.contains(&Tag::C0gaPlus)) && e.graph.graph().is_connected() {
            report.connected_members += 1;
        }
    }

    if report.family_count(Tag::T4) != opts.expected_t4 {
        report.discrepancies.push(Discrepancy {
            entry: "<counts>".into(),
            message: format!("|T4| = {}, expected {}", report.family_count(Tag::T4), opts.expected_t4),
        });
    }
    if report.connected_members != opts.expected_connected {
        report.discrepancies.push(Discrepancy {
            entry: "<counts>".into(),
            message: format!(
                "{} connected members of C0(ga) and C0(ga+), expected {}",
                report.connected_members, opts.expected_connected
            ),
        });
    }
    if opts.check_generators {
        check_generators(engine, c, &mut report.discrepancies);
    }
    if opts.check_minors {
        check_minors(c, &mut report.discrepancies);
    }
    report
}
