//! Connectivity-2 obstructions for the torus, built as xy-sums of a member
//! of C°₀(g⁺) and a connected member of C°₀(g_a) ∪ C°₀(g_a⁺).

mod emit;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::catalog::{validate_catalog, Catalog, CatalogEntry, Tag, ValidationOptions, ValidationReport};
use crate::criticality::xy_edge_is_tight;
use crate::embedding::{eta, Engine};
use crate::error::{Error, Result};
use crate::graph::{block_edge_sets, components, plain_canonical_code, CanonicalCode, Orientation, SimpleGraph, TerminalGraph};

pub use emit::{write_dot, write_json, write_records};

/// A catalog that passed [`validate_catalog`] without discrepancies.
#[derive(Clone, Debug)]
pub struct ValidatedCatalog {
    catalog: Catalog,
    report: ValidationReport,
}

impl ValidatedCatalog {
    pub fn new(engine: &Engine, catalog: Catalog, opts: &ValidationOptions) -> Result<Self> {
        let report = validate_catalog(engine, &catalog, opts);
        if !report.is_clean() {
            let lines: Vec<String> = report.discrepancies.iter().map(|d| d.to_string()).collect();
            return Err(Error::Catalog(format!("catalog failed validation:\n{}", lines.join("\n"))));
        }
        Ok(ValidatedCatalog { catalog, report })
    }

    pub fn catalog(&self) -> &Catalog {
        &self.catalog
    }

    pub fn report(&self) -> &ValidationReport {
        &self.report
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Pair<'a> {
    pub g1: &'a CatalogEntry,
    pub g2: &'a CatalogEntry,
}

/// Pairs to glue: `G1` a connected member of C°₀(g⁺), `G2` a connected
/// member of C°₀(g_a) ∪ C°₀(g_a⁺).
pub fn candidate_pairs(c: &ValidatedCatalog) -> Vec<Pair<'_>> {
    let connected = |e: &&CatalogEntry| e.graph.graph().is_connected();
    let firsts: Vec<&CatalogEntry> = c.catalog.tagged(Tag::C0gPlus).filter(connected).collect();
    let seconds: Vec<&CatalogEntry> =
        c.catalog.entries.iter().filter(|e| e.has(Tag::C0ga) || e.has(Tag::C0gaPlus)).filter(connected).collect();
    firsts.iter().flat_map(|&g1| seconds.iter().map(move |&g2| Pair { g1, g2 })).collect()
}

/// Extra filter: when both parts have `θ = 0`, `G2` must lie in C°₀(g_a⁺).
pub fn apply_condition_iv<'a>(engine: &Engine, pairs: Vec<Pair<'a>>) -> Vec<Pair<'a>> {
    pairs
        .into_iter()
        .filter(|p| {
            let both_flat = engine.profile(&p.g1.graph).theta == 0 && engine.profile(&p.g2.graph).theta == 0;
            !both_flat || p.g2.has(Tag::C0gaPlus)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verification {
    Formula,
    Search,
    Both,
}

impl Verification {
    pub fn as_str(self) -> &'static str {
        match self {
            Verification::Formula => "formula-verified",
            Verification::Search => "search-verified",
            Verification::Both => "both",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionRecord {
    /// The xy-sum with terminals forgotten; `part1` keeps its vertex ids.
    pub graph: SimpleGraph,
    pub part1_name: String,
    pub part2_name: String,
    pub part1: TerminalGraph,
    pub part2: TerminalGraph,
    pub with_edge: bool,
    pub orientation: Orientation,
    pub verification: Option<Verification>,
}

impl ObstructionRecord {
    pub fn code(&self) -> CanonicalCode {
        plain_canonical_code(&self.graph)
    }

    /// The glued terminal pair, a 2-vertex cut of `graph`.
    pub fn terminals(&self) -> (usize, usize) {
        (self.part1.x(), self.part1.y())
    }

    fn sort_key(&self) -> (usize, usize, CanonicalCode) {
        (self.graph.vertex_count(), self.graph.edge_count(), self.code())
    }
}

fn glue(g1: &CatalogEntry, part1: TerminalGraph, g2: &CatalogEntry, orientation: Orientation) -> ObstructionRecord {
    // xy is present iff G1 ∉ C°₀(g) and G2 ∉ C°₀(g_a).
    let with_edge = !g1.has(Tag::C0g) && !g2.has(Tag::C0ga);
    let sum = part1.xy_sum(&g2.graph, orientation, with_edge).expect("catalog parts avoid xy");
    ObstructionRecord {
        graph: sum.into_graph(),
        part1_name: g1.name.clone(),
        part2_name: g2.name.clone(),
        part1,
        part2: g2.graph.clone(),
        with_edge,
        orientation,
        verification: None,
    }
}

/// The xy-sum of a pair, straight gluing; every member of C°₀(g⁺) has an
/// automorphism exchanging its terminals, so the other gluing is isomorphic.
pub fn compose(pair: Pair<'_>) -> ObstructionRecord {
    glue(pair.g1, pair.g1.graph.clone(), pair.g2, Orientation::Straight)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountReport {
    pub pairs: usize,
    pub filtered: usize,
    pub obstructions: usize,
    /// Filtered pairs whose second part is in T2, and what survives dedup.
    pub t2_pairs: usize,
    pub t2_survivors: usize,
    pub other_pairs: usize,
    pub other_survivors: usize,
}

impl CountReport {
    pub const EXPECTED: CountReport = CountReport {
        pairs: 81,
        filtered: 76,
        obstructions: 68,
        t2_pairs: 18,
        t2_survivors: 10,
        other_pairs: 58,
        other_survivors: 58,
    };

    pub fn summary(&self) -> String {
        format!("pairs={} filtered={} obstructions={}", self.pairs, self.filtered, self.obstructions)
    }

    /// One line per count that differs from `expected`.
    pub fn diff(&self, expected: &CountReport) -> Vec<String> {
        let rows = [
            ("pairs", self.pairs, expected.pairs),
            ("filtered", self.filtered, expected.filtered),
            ("obstructions", self.obstructions, expected.obstructions),
            ("t2_pairs", self.t2_pairs, expected.t2_pairs),
            ("t2_survivors", self.t2_survivors, expected.t2_survivors),
            ("other_pairs", self.other_pairs, expected.other_pairs),
            ("other_survivors", self.other_survivors, expected.other_survivors),
        ];
        rows.iter().filter(|r| r.1 != r.2).map(|(k, got, want)| format!("{k}: got {got}, expected {want}")).collect()
    }
}

impl fmt::Display for CountReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} t2={}->{} other={}->{}",
            self.summary(),
            self.t2_pairs,
            self.t2_survivors,
            self.other_pairs,
            self.other_survivors
        )
    }
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    /// Sorted by (n, m, canonical code).
    pub records: Vec<ObstructionRecord>,
    pub counts: CountReport,
}

fn dedup_sorted(records: Vec<ObstructionRecord>) -> Vec<ObstructionRecord> {
    let mut seen = BTreeMap::new();
    for r in records {
        seen.entry(r.code()).or_insert(r);
    }
    let mut out: Vec<ObstructionRecord> = seen.into_values().collect();
    out.sort_by_key(ObstructionRecord::sort_key);
    out
}

fn distinct(records: &[ObstructionRecord]) -> usize {
    records.iter().map(ObstructionRecord::code).collect::<BTreeSet<_>>().len()
}

/// Counts and records without checking them against the expected numbers.
pub fn enumerate_unchecked(engine: &Engine, c: &ValidatedCatalog) -> Enumeration {
    let pairs = candidate_pairs(c);
    let n_pairs = pairs.len();
    let filtered = apply_condition_iv(engine, pairs);
    let composed: Vec<(bool, ObstructionRecord)> =
        filtered.par_iter().map(|&p| (p.g2.has(Tag::T2), compose(p))).collect();
    let (t2, other): (Vec<_>, Vec<_>) = composed.into_iter().partition(|(is_t2, _)| *is_t2);
    let t2: Vec<ObstructionRecord> = t2.into_iter().map(|(_, r)| r).collect();
    let other: Vec<ObstructionRecord> = other.into_iter().map(|(_, r)| r).collect();
    let counts = CountReport {
        pairs: n_pairs,
        filtered: filtered.len(),
        obstructions: 0,
        t2_pairs: t2.len(),
        t2_survivors: distinct(&t2),
        other_pairs: other.len(),
        other_survivors: distinct(&other),
    };
    let records = dedup_sorted(t2.into_iter().chain(other).collect());
    let counts = CountReport { obstructions: records.len(), ..counts };
    Enumeration { records, counts }
}

/// All connectivity-2 torus obstructions; any count other than the expected
/// (81, 76, 68) with 18 → 10 is an error listing the differences.
pub fn enumerate_torus_c2(engine: &Engine, c: &ValidatedCatalog) -> Result<Enumeration> {
    let e = enumerate_unchecked(engine, c);
    let diff = e.counts.diff(&CountReport::EXPECTED);
    if diff.is_empty() {
        Ok(e)
    } else {
        Err(Error::CountMismatch(diff.join("; ")))
    }
}

/// Every filtered pair glued all four ways (either terminal order of `G1`,
/// both orientations), deduplicated.
pub fn enumerate_all_gluings(engine: &Engine, c: &ValidatedCatalog) -> Vec<ObstructionRecord> {
    let filtered = apply_condition_iv(engine, candidate_pairs(c));
    let all: Vec<ObstructionRecord> = filtered
        .par_iter()
        .flat_map_iter(|p| {
            [p.g1.graph.clone(), p.g1.graph.swapped()].into_iter().flat_map(move |part1| {
                [Orientation::Straight, Orientation::Swapped].map(|o| glue(p.g1, part1.clone(), p.g2, o))
            })
        })
        .collect();
    dedup_sorted(all)
}

#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub checked: usize,
    /// Record index and what failed.
    pub failures: Vec<(usize, String)>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Exactly 2-connected with `{x, y}` separating.
fn two_cut_ok(g: &SimpleGraph, x: usize, y: usize) -> bool {
    if !g.is_connected() || block_edge_sets(g).len() != 1 {
        return false;
    }
    let rest: Vec<usize> = (0..g.vertex_count()).filter(|&v| v != x && v != y).collect();
    components(&g.induced(&rest)).len() > 1
}

fn formula_failures(engine: &Engine, r: &ObstructionRecord) -> Vec<String> {
    let mut out = Vec::new();
    let (x, y) = r.terminals();
    let rebuilt = r.part1.xy_sum(&r.part2, r.orientation, r.with_edge).map(TerminalGraph::into_graph);
    if rebuilt.as_ref().map(plain_canonical_code).ok() != Some(r.code()) {
        out.push("graph is not the xy-sum of its parts".to_string());
        return out;
    }
    if !two_cut_ok(&r.graph, x, y) {
        out.push("not 2-connected with the glued pair as a cut".into());
    }
    let p1 = engine.profile(&r.part1);
    let p2 = engine.profile(&r.part2);
    if p1.g_plus != 1 || p2.g_plus != 1 || p1.epsilon_plus * p2.epsilon_plus != 0 {
        out.push(format!("parts violate g+ = 1 and eps+ product 0: {p1} / {p2}"));
    }
    if (eta(&p1, &p2) == 2) != r.with_edge {
        out.push(format!("eta = {} but with_edge = {}", eta(&p1, &p2), r.with_edge));
    }
    if engine.dumbbell_class_d(&r.part1) || engine.dumbbell_class_d(&r.part2) {
        out.push("a part is a class-D dumbbell".into());
    }
    match engine.two_sum_genus(&r.part1, &r.part2, r.with_edge) {
        Ok(s) if s.genus == 2 => {}
        Ok(s) => out.push(format!("2-sum genus {} instead of 2", s.genus)),
        Err(e) => out.push(e.to_string()),
    }
    for (name, a, pb) in [("part1", &r.part1, &p2), ("part2", &r.part2, &p1)] {
        match engine.part_is_minor_tight(a, pb, r.with_edge) {
            Ok(true) => {}
            Ok(false) => out.push(format!("{name} is not minor-tight")),
            Err(e) => out.push(format!("{name}: {e}")),
        }
    }
    if r.with_edge {
        let over1 = engine.min_genus(&r.part1.identify_terminals());
        let over2 = engine.min_genus(&r.part2.identify_terminals());
        if !xy_edge_is_tight(&p1, over1, &p2, over2) {
            out.push("edge xy is not minor-tight".into());
        }
    }
    out
}

/// Checks records by the 2-sum formulas, by direct genus search, or both.
/// Passing records get their `verification` field set.
pub fn verify_all(engine: &Engine, records: &mut [ObstructionRecord], mode: Verification) -> VerificationReport {
    let results: Vec<Vec<String>> = records
        .par_iter()
        .map(|r| {
            let mut out = Vec::new();
            if mode != Verification::Search {
                out.extend(formula_failures(engine, r));
            }
            if mode != Verification::Formula && !engine.is_obstruction(&r.graph, 1) {
                out.push("genus search: not an obstruction for the torus".into());
            }
            out
        })
        .collect();
    let mut report = VerificationReport { checked: records.len(), failures: Vec::new() };
    for (i, (r, fails)) in records.iter_mut().zip(results).enumerate() {
        if fails.is_empty() {
            r.verification = Some(match (r.verification, mode) {
                (Some(Verification::Formula), Verification::Search) | (Some(Verification::Search), Verification::Formula) => {
                    Verification::Both
                }
                _ => mode,
            });
        }
        report.failures.extend(fails.into_iter().map(|m| (i, m)));
    }
    report
}
