//! Decrease sets, critical classes and minor-tightness of 2-sum parts.
//!
//! Everything here is defined by evaluating parameters on every single
//! minor-operation, so all answers are exact for the graphs the engine can
//! handle.

use std::fmt;

use rayon::prelude::*;

use crate::embedding::{default_engine, eta, two_sum_from_profiles, Engine, ParameterProfile};
use crate::error::{Error, Result};
use crate::graph::{bars, components, MinorOperation, SimpleGraph, TerminalGraph};

/// The four genus parameters a critical class can be built on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parameter {
    G,
    GPlus,
    GA,
    GAPlus,
}

impl Parameter {
    pub const ALL: [Parameter; 4] = [Parameter::G, Parameter::GPlus, Parameter::GA, Parameter::GAPlus];

    pub fn value(self, p: &ParameterProfile) -> usize {
        match self {
            Parameter::G => p.g,
            Parameter::GPlus => p.g_plus,
            Parameter::GA => p.g_a,
            Parameter::GAPlus => p.g_a_plus,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Parameter::G => "g",
            Parameter::GPlus => "g+",
            Parameter::GA => "ga",
            Parameter::GAPlus => "ga+",
        }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Pairs `(P, Q)` that are 1-separated, i.e. `Q - P` is always 0 or 1.
pub const SEPARATED_PAIRS: [(Parameter, Parameter); 4] = [
    (Parameter::G, Parameter::GPlus),
    (Parameter::GA, Parameter::G),
    (Parameter::GAPlus, Parameter::GPlus),
    (Parameter::GA, Parameter::GAPlus),
];

/// `dc_k(P, G)`: the operations lowering `P` by at least `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecreaseSet {
    pub parameter: Parameter,
    pub k: usize,
    /// In the order of [`TerminalGraph::minor_operations`].
    pub operations: Vec<MinorOperation>,
}

impl DecreaseSet {
    pub fn contains(&self, op: &MinorOperation) -> bool {
        self.operations.contains(op)
    }

    pub fn len(&self) -> usize {
        self.operations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operations.is_empty()
    }

    pub fn is_subset(&self, other: &DecreaseSet) -> bool {
        self.operations.iter().all(|op| other.contains(op))
    }
}

/// One alternative of a tightness requirement: lower `parameter` by `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Decrease {
    pub parameter: Parameter,
    pub k: usize,
}

impl Decrease {
    pub fn holds(self, before: &ParameterProfile, after: &ParameterProfile) -> bool {
        self.parameter.value(after) + self.k <= self.parameter.value(before)
    }
}

const fn dec(parameter: Parameter, k: usize) -> Decrease {
    Decrease { parameter, k }
}

/// What every operation on a part must decrease for the part to be
/// minor-tight, given the edge flag, `ε⁺` of the other part and `η`.
/// `None` for combinations that cannot occur.
pub fn tightness_requirement(with_edge: bool, eps_plus_other: usize, eta: i32) -> Option<&'static [Decrease]> {
    use Parameter::*;
    const PLUS: &[Decrease] = &[dec(GPlus, 1)];
    const APLUS: &[Decrease] = &[dec(GAPlus, 1)];
    const G_OR_PLUS: &[Decrease] = &[dec(G, 1), dec(GPlus, 1)];
    const G1: &[Decrease] = &[dec(G, 1)];
    const G2_OR_APLUS: &[Decrease] = &[dec(G, 2), dec(GAPlus, 1)];
    const G_OR_APLUS: &[Decrease] = &[dec(G, 1), dec(GAPlus, 1)];
    const G_OR_APLUS2: &[Decrease] = &[dec(G, 1), dec(GAPlus, 2)];
    if with_edge {
        return match eps_plus_other {
            0 => Some(PLUS),
            1 => Some(APLUS),
            _ => None,
        };
    }
    match (eps_plus_other, eta) {
        (0, 0) => Some(PLUS),
        (0, 1) => Some(G_OR_PLUS),
        (0, 2) => Some(G1),
        (1, -1) => Some(APLUS),
        (1, 0) => Some(G2_OR_APLUS),
        (1, 1) => Some(G_OR_APLUS),
        (1, 2) => Some(G_OR_APLUS2),
        _ => None,
    }
}

/// Kinds of classes a minor-tight part can fall in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassKind {
    /// `C°(P)`, or `C(P)` where terminals may be adjacent.
    Critical(Parameter),
    /// The dumbbell class `D`.
    Dumbbell,
    /// Hoppers of level 0, 1 or 2.
    Hopper(u8),
}

/// A verified class membership. `k` is the genus index: `P - 1` for
/// critical classes, `g⁺` for hoppers, absent for `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassLabel {
    pub kind: ClassKind,
    pub k: Option<usize>,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.k.map(|k| k.to_string()).unwrap_or_default();
        match self.kind {
            ClassKind::Critical(p) => write!(f, "C°{k}({p})"),
            ClassKind::Dumbbell => write!(f, "D"),
            ClassKind::Hopper(l) => write!(f, "H{l}_{k}"),
        }
    }
}

/// Classes a minor-tight part must belong to, for the same row selection
/// as [`tightness_requirement`].
pub fn predicted_classes(with_edge: bool, eps_plus_other: usize, eta: i32) -> Option<&'static [ClassKind]> {
    use ClassKind::*;
    use Parameter::*;
    if with_edge {
        return match eps_plus_other {
            0 => Some(&[Critical(GPlus)]),
            1 => Some(&[Critical(GAPlus)]),
            _ => None,
        };
    }
    match (eps_plus_other, eta) {
        (0, 0) => Some(&[Critical(GPlus)]),
        (0, 1) => Some(&[Critical(G), Critical(GPlus)]),
        (0, 2) => Some(&[Critical(G)]),
        (1, -1) => Some(&[Critical(GAPlus)]),
        (1, 0) => Some(&[Critical(GAPlus), Hopper(1)]),
        (1, 1) => Some(&[Critical(G), Critical(GA), Critical(GAPlus), Dumbbell]),
        (1, 2) => Some(&[Critical(G), Hopper(0)]),
        _ => None,
    }
}

/// Whether the edge `xy` of an xy-sum is minor-tight, from the parts'
/// profiles and the genera of the parts with terminals identified.
pub fn xy_edge_is_tight(p1: &ParameterProfile, g1_over_xy: usize, p2: &ParameterProfile, g2_over_xy: usize) -> bool {
    eta(p1, p2) == 2 && (g1_over_xy < p1.g_plus || g2_over_xy < p2.g_plus)
}

/// Which of `C(P)` and `C°(P)` a membership query refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassVariant {
    /// Terminals may be adjacent.
    Any,
    /// Terminals must be non-adjacent; asking about a graph with `xy` is an error.
    XyFree,
}

fn isolate(g: &TerminalGraph, v: usize) -> TerminalGraph {
    let mut h = g.graph().clone();
    for w in g.graph().neighbors(v).collect::<Vec<_>>() {
        h.remove_edge(v, w);
    }
    TerminalGraph::new(h, g.x(), g.y()).expect("terminals unchanged")
}

/// Genus of a disconnected `μG` built from the components of `μG₁` and a
/// partner described only by its profile.
fn split_part_genus(engine: &Engine, mu_g1: &TerminalGraph, p2: &ParameterProfile, with_edge: bool) -> usize {
    let h = mu_g1.graph();
    let (x, y) = (mu_g1.x(), mu_g1.y());
    let mut total = 0;
    let mut joined = false;
    for comp in components(h) {
        let has_x = comp.binary_search(&x).is_ok();
        let has_y = comp.binary_search(&y).is_ok();
        let sub = h.induced(&comp);
        if has_x && has_y {
            let pos = |v: usize| comp.binary_search(&v).expect("terminal in component");
            let c = TerminalGraph::new(sub, pos(x), pos(y)).expect("distinct terminals");
            total += two_sum_from_profiles(&engine.profile(&c), p2, with_edge).genus;
            joined = true;
        } else {
            // Attached to the partner at a single vertex or not at all.
            total += engine.min_genus(&sub);
        }
    }
    if !joined {
        total += if with_edge { p2.g_plus } else { p2.g };
    }
    total
}

/// Result of checking one part of an xy-sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartTightness {
    pub tight: bool,
    /// Operations that do not lower the genus of the sum.
    pub failing: Vec<MinorOperation>,
}

impl Engine {
    /// Value of one parameter, computing only what it needs.
    pub fn parameter_value(&self, g: &TerminalGraph, p: Parameter) -> usize {
        match p {
            Parameter::G => self.min_genus(g.graph()),
            Parameter::GPlus => self.min_genus(g.with_xy_edge().graph()),
            _ => p.value(&self.profile(g)),
        }
    }

    /// Profiles of `μG` for every `μ ∈ ℳ(G)`, in operation order.
    pub fn operation_profiles(&self, g: &TerminalGraph) -> Vec<(MinorOperation, ParameterProfile)> {
        g.minor_operations()
            .into_par_iter()
            .map(|op| (op, self.profile(&g.apply(op).expect("operation from the graph itself"))))
            .collect()
    }

    pub fn decreasing_set(&self, g: &TerminalGraph, p: Parameter, k: usize) -> DecreaseSet {
        let before = self.parameter_value(g, p);
        let operations = g
            .minor_operations()
            .into_par_iter()
            .filter(|&op| self.parameter_value(&g.apply(op).expect("own operation"), p) + k <= before)
            .collect();
        DecreaseSet { parameter: p, k, operations }
    }

    /// Plain-graph obstruction test: genus exactly `k + 1` and every edge
    /// deletion or contraction embeds in genus `k`.
    pub fn is_obstruction(&self, g: &SimpleGraph, k: usize) -> bool {
        if self.embeds_in(g, k) || !self.embeds_in(g, k + 1) {
            return false;
        }
        g.edges().into_par_iter().all(|e| {
            let del = g.without_edge(e).expect("edge present");
            self.embeds_in(&del, k) && self.embeds_in(&g.merge_vertices(e.0, e.1), k)
        })
    }

    /// Non-terminal vertices `v` with edges and `P(G - v) = P(G)`. No
    /// operation on an edge at such a vertex lowers `P`.
    pub fn stable_vertices(&self, g: &TerminalGraph, p: Parameter) -> Vec<usize> {
        let before = self.parameter_value(g, p);
        (0..g.graph().vertex_count())
            .into_par_iter()
            .filter(|&v| !g.is_terminal(v) && g.graph().degree(v) > 0)
            .filter(|&v| self.parameter_value(&isolate(g, v), p) == before)
            .collect()
    }

    /// `Some(k)` when every operation lowers `P` (so `G` lies in the
    /// critical class with `P = k + 1`), `None` otherwise.
    pub fn class_membership(&self, g: &TerminalGraph, p: Parameter, variant: ClassVariant) -> Result<Option<usize>> {
        if variant == ClassVariant::XyFree && g.has_xy() {
            return Err(Error::XyPresent);
        }
        let before = self.parameter_value(g, p);
        if before == 0 {
            return Ok(None);
        }
        // Cheap rejection first: a stable vertex carries a non-decreasing operation.
        let stable = (0..g.graph().vertex_count())
            .into_par_iter()
            .filter(|&v| !g.is_terminal(v) && g.graph().degree(v) > 0)
            .any(|v| self.parameter_value(&isolate(g, v), p) == before);
        if stable {
            return Ok(None);
        }
        let all = g
            .minor_operations()
            .into_par_iter()
            .all(|op| self.parameter_value(&g.apply(op).expect("own operation"), p) < before);
        Ok(all.then_some(before - 1))
    }

    fn part_tightness(
        &self,
        g1: &TerminalGraph,
        p2: &ParameterProfile,
        with_edge: bool,
        cross_check: bool,
    ) -> Result<PartTightness> {
        if g1.has_xy() {
            return Err(Error::PartsMustAvoidXy);
        }
        if !g1.graph().is_connected() {
            return Err(Error::Disconnected);
        }
        let p1 = self.profile(g1);
        let whole = two_sum_from_profiles(&p1, p2, with_edge).genus;
        let row = tightness_requirement(with_edge, p2.epsilon_plus, eta(&p1, p2))
            .ok_or_else(|| Error::ClassificationViolation(format!("no row for profiles {p1} / {p2}")))?;
        let verdicts: Vec<Result<(MinorOperation, bool)>> = g1
            .minor_operations()
            .into_par_iter()
            .map(|op| {
                let mu = g1.apply(op).expect("own operation");
                if !mu.graph().is_connected() {
                    return Ok((op, split_part_genus(self, &mu, p2, with_edge) < whole));
                }
                let after = self.profile(&mu);
                let by_table = row.iter().any(|d| d.holds(&p1, &after));
                if cross_check {
                    let by_formula = two_sum_from_profiles(&after, p2, with_edge).genus < whole;
                    if by_formula != by_table {
                        return Err(Error::ClassificationViolation(format!(
                            "operation {op}: decrease table says {by_table}, 2-sum formula says {by_formula}"
                        )));
                    }
                }
                Ok((op, by_table))
            })
            .collect();
        let mut failing = Vec::new();
        for v in verdicts {
            let (op, ok) = v?;
            if !ok {
                failing.push(op);
            }
        }
        Ok(PartTightness { tight: failing.is_empty(), failing })
    }

    /// Whether `g1` is minor-tight in an xy-sum with a connected partner of
    /// profile `p2`. Operations that keep `μg1` connected are judged by the
    /// decrease table; the others by block additivity.
    pub fn part_is_minor_tight(&self, g1: &TerminalGraph, p2: &ParameterProfile, with_edge: bool) -> Result<bool> {
        Ok(self.part_tightness(g1, p2, with_edge, false)?.tight)
    }

    /// As [`Engine::part_is_minor_tight`], but every table verdict is
    /// compared against the 2-sum genus formula applied to `μg1`.
    pub fn part_tightness_checked(
        &self,
        g1: &TerminalGraph,
        p2: &ParameterProfile,
        with_edge: bool,
    ) -> Result<PartTightness> {
        self.part_tightness(g1, p2, with_edge, true)
    }

    /// Membership in `D`: a dumbbell with a unique bar `b`, `θ = 0`, every
    /// operation other than those on `b` lowering `g`, and `ε⁺(G/b) = 1`.
    pub fn dumbbell_class_d(&self, g: &TerminalGraph) -> bool {
        if g.has_xy() {
            return false;
        }
        let bs = bars(g);
        let [b] = bs.as_slice() else { return false };
        let p = self.profile(g);
        if p.theta != 0 || p.g == 0 {
            return false;
        }
        let contracted = g.contract_edge(*b).expect("bar is an edge");
        if self.profile(&contracted).epsilon_plus != 1 {
            return false;
        }
        g.minor_operations()
            .into_par_iter()
            .filter(|op| op.edge != *b)
            .all(|op| self.min_genus(g.apply(op).expect("own operation").graph()) < p.g)
    }

    /// Hopper level of an xy-free graph, if any. The structural facts every
    /// hopper must satisfy are checked and reported as violations.
    pub fn hopper_level(&self, g: &TerminalGraph) -> Result<Option<u8>> {
        if g.has_xy() {
            return Err(Error::XyPresent);
        }
        let p = self.profile(g);
        if p.g_plus == 0 || g.graph().edge_count() == 0 {
            return Ok(None);
        }
        let ops = self.operation_profiles(g);
        let every = |ds: &[Decrease]| ops.iter().all(|(_, a)| ds.iter().any(|d| d.holds(&p, a)));
        use Parameter::*;
        let in_c = |q: Parameter| Parameter::value(q, &p) >= 1 && every(&[dec(q, 1)]);
        let level = if in_c(GAPlus) && p.epsilon_plus == 1 {
            Some(2)
        } else if every(&[dec(GAPlus, 1), dec(G, 2)]) && !in_c(GAPlus) {
            Some(1)
        } else if every(&[dec(G, 1), dec(GAPlus, 2)]) && !in_c(G) {
            Some(0)
        } else {
            None
        };
        let consistent = match level {
            Some(0) => in_c(GPlus) && p.epsilon_plus == 0 && p.theta == 1,
            Some(1) => in_c(GPlus) && p.epsilon_plus == 1 && p.theta == 0,
            Some(2) => in_c(GPlus),
            _ => true,
        };
        if !consistent {
            return Err(Error::ClassificationViolation(format!(
                "hopper of level {} with profile {p} breaks the hopper structure",
                level.expect("some level")
            )));
        }
        Ok(level)
    }

    /// Classes of a minor-tight part, verified one by one against the
    /// prediction for its row. A tight part matching none of them is an
    /// error, as is a part that is not minor-tight in the first place.
    pub fn classify_part(&self, g1: &TerminalGraph, p2: &ParameterProfile, with_edge: bool) -> Result<Vec<ClassLabel>> {
        let t = self.part_tightness(g1, p2, with_edge, false)?;
        if !t.tight {
            return Err(Error::ClassificationViolation(format!(
                "part is not minor-tight: {} operations fail",
                t.failing.len()
            )));
        }
        let p1 = self.profile(g1);
        let row = predicted_classes(with_edge, p2.epsilon_plus, eta(&p1, p2))
            .ok_or_else(|| Error::ClassificationViolation(format!("no row for profiles {p1} / {p2}")))?;
        let mut labels = Vec::new();
        for &kind in row {
            let label = match kind {
                ClassKind::Critical(q) => self
                    .class_membership(g1, q, ClassVariant::XyFree)?
                    .map(|k| ClassLabel { kind, k: Some(k) }),
                ClassKind::Dumbbell => self.dumbbell_class_d(g1).then_some(ClassLabel { kind, k: None }),
                ClassKind::Hopper(l) => (self.hopper_level(g1)? == Some(l))
                    .then_some(ClassLabel { kind, k: Some(p1.g_plus) }),
            };
            labels.extend(label);
        }
        if labels.is_empty() {
            return Err(Error::ClassificationViolation(format!(
                "minor-tight part with profile {p1} is in none of the predicted classes"
            )));
        }
        Ok(labels)
    }

    /// Checks the separation rules for every 1-separated pair and the
    /// inclusion `dc₁g_a ⊆ dc₁g ∪ dc₁g_a⁺` on one graph.
    pub fn lattice_violations(&self, g: &TerminalGraph) -> Vec<String> {
        let p = self.profile(g);
        let ops = self.operation_profiles(g);
        let dc = |q: Parameter, k: usize| -> Vec<bool> { ops.iter().map(|(_, a)| dec(q, k).holds(&p, a)).collect() };
        let subset = |a: &[bool], b: &[bool]| a.iter().zip(b).all(|(&u, &v)| !u || v);
        let mut out = Vec::new();
        for (lo, hi) in SEPARATED_PAIRS {
            let sep = hi.value(&p) as i64 - lo.value(&p) as i64;
            if !(0..=1).contains(&sep) {
                out.push(format!("{lo}/{hi} differ by {sep}"));
                continue;
            }
            for k in 1..=p.g_plus + 1 {
                let (dp, dq) = (dc(lo, k), dc(hi, k));
                if sep == 1 && !subset(&dp, &dq) {
                    out.push(format!("(S1) dc{k} {lo} not in dc{k} {hi}"));
                }
                if sep == 0 && !subset(&dq, &dp) {
                    out.push(format!("(S2) dc{k} {hi} not in dc{k} {lo}"));
                }
                if !subset(&dc(lo, k + 1), &dq) || !subset(&dc(hi, k + 1), &dp) {
                    out.push(format!("(S3) fails for {lo}/{hi} at k={k}"));
                }
            }
        }
        let (a, g1, ap) = (dc(Parameter::GA, 1), dc(Parameter::G, 1), dc(Parameter::GAPlus, 1));
        if a.iter().zip(g1.iter().zip(&ap)).any(|(&u, (&v, &w))| u && !v && !w) {
            out.push("dc1 ga not in dc1 g + dc1 ga+".to_string());
        }
        out
    }
}

pub fn decreasing_set(g: &TerminalGraph, p: Parameter, k: usize) -> DecreaseSet {
    default_engine().decreasing_set(g, p, k)
}

pub fn is_obstruction(g: &SimpleGraph, k: usize) -> bool {
    default_engine().is_obstruction(g, k)
}

pub fn class_membership(g: &TerminalGraph, p: Parameter, variant: ClassVariant) -> Result<Option<usize>> {
    default_engine().class_membership(g, p, variant)
}

pub fn part_is_minor_tight(g1: &TerminalGraph, p2: &ParameterProfile, with_edge: bool) -> Result<bool> {
    default_engine().part_is_minor_tight(g1, p2, with_edge)
}

pub fn dumbbell_class_d(g: &TerminalGraph) -> bool {
    default_engine().dumbbell_class_d(g)
}

pub fn hopper_level(g: &TerminalGraph) -> Result<Option<u8>> {
    default_engine().hopper_level(g)
}

pub fn classify_part(g1: &TerminalGraph, p2: &ParameterProfile, with_edge: bool) -> Result<Vec<ClassLabel>> {
    default_engine().classify_part(g1, p2, with_edge)
}
