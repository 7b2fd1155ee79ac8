use std::collections::HashMap;
use std::fs;
use std::path::Path;
use std::sync::{OnceLock, RwLock};

use super::planarity::is_planar;
use super::profile::{eta, ParameterProfile};
use super::rotation::{trace_faces, FaceWalk, RotationSystem};
use super::search::{euler_lower_bound, min_genus_embedding, Embedder};
use crate::error::{Error, Result};
use crate::graph::{
    block_edge_sets, canonical_code, components, plain_canonical_code, CanonicalCode, Edge, SimpleGraph,
    TerminalGraph,
};

/// Genus of an xy-sum predicted from the parts' profiles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoSum {
    pub genus: usize,
    pub epsilon_plus: usize,
    pub theta: usize,
}

/// A minimum-genus embedding of the terminals' component with a face
/// meeting x, y, x, y in cyclic order.
#[derive(Clone, Debug)]
pub struct AlternatingCertificate {
    /// The component, renumbered; `vertex_map[i]` is its vertex `i` in the input.
    pub component: TerminalGraph,
    pub vertex_map: Vec<usize>,
    pub rotation: RotationSystem,
    pub face: FaceWalk,
}

/// Genus computations with memoisation. With `decompose` off every
/// connected component is searched as a whole and planarity is left to
/// the search, which makes the raw mode an independent cross-check.
pub struct Engine {
    decompose: bool,
    genus_memo: RwLock<HashMap<CanonicalCode, usize>>,
    epsilon_memo: RwLock<HashMap<CanonicalCode, usize>>,
    profiles: RwLock<HashMap<CanonicalCode, ParameterProfile>>,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new(true)
    }
}

/// Shared engine with decomposition enabled.
pub fn default_engine() -> &'static Engine {
    static ENGINE: OnceLock<Engine> = OnceLock::new();
    ENGINE.get_or_init(Engine::default)
}

/// Vertex set of the edge list, sorted.
fn edge_vertices(edges: &[Edge]) -> Vec<usize> {
    let mut vs: Vec<usize> = edges.iter().flat_map(|e| [e.0, e.1]).collect();
    vs.sort_unstable();
    vs.dedup();
    vs
}

impl Engine {
    pub fn new(decompose: bool) -> Self {
        Engine {
            decompose,
            genus_memo: RwLock::new(HashMap::new()),
            epsilon_memo: RwLock::new(HashMap::new()),
            profiles: RwLock::new(HashMap::new()),
        }
    }

    pub fn decomposes(&self) -> bool {
        self.decompose
    }

    /// Connected pieces whose genera add up to the genus of `g`: blocks, or
    /// components in raw mode. Pieces without edges are dropped.
    fn pieces(&self, g: &SimpleGraph) -> Vec<SimpleGraph> {
        if self.decompose {
            block_edge_sets(g)
                .into_iter()
                .filter(|b| b.len() >= 3)
                .map(|b| SimpleGraph::edge_subgraph(&edge_vertices(&b), &b))
                .collect()
        } else {
            components(g)
                .into_iter()
                .map(|c| g.induced(&c))
                .filter(|c| c.edge_count() > 0)
                .collect()
        }
    }

    /// Genus of a connected piece if it is at most `budget`.
    fn piece_genus(&self, piece: &SimpleGraph, budget: usize) -> Option<usize> {
        if self.decompose && (piece.edge_count() < 9 || is_planar(piece)) {
            return Some(0);
        }
        let code = plain_canonical_code(piece);
        if let Some(&k) = self.genus_memo.read().expect("memo lock").get(&code) {
            return (k <= budget).then_some(k);
        }
        let lower = euler_lower_bound(piece).max(usize::from(self.decompose));
        let mut embedder = Embedder::new(piece);
        for k in lower..=budget {
            if embedder.search(k, &mut |_| true) {
                self.genus_memo.write().expect("memo lock").insert(code, k);
                return Some(k);
            }
        }
        None
    }

    /// Minimum orientable genus.
    pub fn min_genus(&self, g: &SimpleGraph) -> usize {
        self.pieces(g)
            .iter()
            .map(|p| self.piece_genus(p, usize::MAX).expect("unbounded search finishes"))
            .sum()
    }

    /// A minimum-genus rotation system of a connected graph.
    pub fn genus_witness(&self, g: &SimpleGraph) -> Result<RotationSystem> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(min_genus_embedding(g, self.min_genus(g)).1)
    }

    /// Whether `g` embeds in the orientable surface of genus `k`; stops at
    /// the first embedding found within the remaining budget.
    pub fn embeds_in(&self, g: &SimpleGraph, k: usize) -> bool {
        let mut budget = k;
        for p in self.pieces(g) {
            match self.piece_genus(&p, budget) {
                Some(used) => budget -= used,
                None => return false,
            }
        }
        true
    }

    /// The connected graph on which alternation is decided, with terminals:
    /// the blocks lying between the terminals, or their component in raw
    /// mode. Blocks hanging off that chain can be re-embedded contiguously
    /// at their attachment vertex without touching any face through x and y.
    fn alternation_piece(&self, g: &TerminalGraph) -> Option<(TerminalGraph, Vec<usize>)> {
        let (x, y) = (g.x(), g.y());
        let h = g.graph();
        if !h.connected(x, y) {
            return None;
        }
        let vertices = if self.decompose {
            // Rotations may interleave at a cut vertex, so the chain of
            // blocks is kept whole rather than cut down to a single block.
            let chain: Vec<Edge> = block_edge_sets(h)
                .into_iter()
                .filter(|b| {
                    let mut rest = h.clone();
                    for e in b {
                        rest.remove_edge(e.0, e.1);
                    }
                    !rest.connected(x, y)
                })
                .flatten()
                .collect();
            edge_vertices(&chain)
        } else {
            components(h).into_iter().find(|c| c.binary_search(&x).is_ok())?
        };
        let sub = h.induced(&vertices);
        let pos = |v: usize| vertices.binary_search(&v).expect("terminal in piece");
        let t = TerminalGraph::new(sub, pos(x), pos(y)).expect("distinct terminals");
        Some((t, vertices))
    }

    /// 1 when some minimum-genus embedding has an xy-alternating face.
    pub fn epsilon(&self, g: &TerminalGraph) -> usize {
        let Some((piece, _)) = self.alternation_piece(g) else { return 0 };
        let code = canonical_code(&piece);
        if let Some(&e) = self.epsilon_memo.read().expect("memo lock").get(&code) {
            return e;
        }
        let genus = self.piece_genus(piece.graph(), usize::MAX).expect("unbounded search finishes");
        let (x, y) = (piece.x(), piece.y());
        let found = Embedder::new(piece.graph()).search(genus, &mut |s| s.has_alternating_face(x, y));
        let e = usize::from(found);
        self.epsilon_memo.write().expect("memo lock").insert(code, e);
        e
    }

    pub fn profile(&self, g: &TerminalGraph) -> ParameterProfile {
        let code = canonical_code(g);
        if let Some(p) = self.profiles.read().expect("memo lock").get(&code) {
            return *p;
        }
        let plus = g.with_xy_edge();
        let gen = self.min_genus(g.graph());
        let (gen_plus, eps_plus) = if g.has_xy() {
            (gen, None)
        } else {
            (self.min_genus(plus.graph()), Some(self.epsilon(&plus)))
        };
        // An alternating face contains both terminals, so xy could be drawn
        // inside it: ε = 1 forces g⁺ = g, and θ = 1 settles ε = 0.
        let eps = if gen_plus > gen { 0 } else { self.epsilon(g) };
        let eps_plus = eps_plus.unwrap_or(eps);
        let p = ParameterProfile::from_parts(gen, gen_plus, eps, eps_plus)
            .unwrap_or_else(|| panic!("inconsistent parameters {gen} {gen_plus} {eps} {eps_plus}"));
        self.profiles.write().expect("memo lock").insert(code, p);
        p
    }

    /// Genus, ε⁺ and θ of the xy-sum of two connected parts, from their
    /// profiles alone.
    pub fn two_sum_genus(&self, g1: &TerminalGraph, g2: &TerminalGraph, with_edge: bool) -> Result<TwoSum> {
        if g1.has_xy() || g2.has_xy() {
            return Err(Error::PartsMustAvoidXy);
        }
        if !g1.graph().is_connected() || !g2.graph().is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(two_sum_from_profiles(&self.profile(g1), &self.profile(g2), with_edge))
    }

    pub fn alternating_face_certificate(&self, g: &TerminalGraph) -> Option<AlternatingCertificate> {
        if self.epsilon(g) == 0 {
            return None;
        }
        let comp = components(g.graph()).into_iter().find(|c| c.binary_search(&g.x()).is_ok())?;
        let sub = g.graph().induced(&comp);
        let pos = |v: usize| comp.binary_search(&v).expect("terminal in component");
        let (x, y) = (pos(g.x()), pos(g.y()));
        let genus = self.min_genus(&sub);
        let mut rotation = None;
        Embedder::new(&sub).search(genus, &mut |s| {
            if s.has_alternating_face(x, y) {
                rotation = Some(s.rotation_system());
                true
            } else {
                false
            }
        });
        let rotation = rotation?;
        let face = trace_faces(&rotation).ok()?.into_iter().find(|f| f.alternates(x, y))?;
        Some(AlternatingCertificate {
            component: TerminalGraph::new(sub, x, y).expect("distinct terminals"),
            vertex_map: comp,
            rotation,
            face,
        })
    }

    pub fn cached_profiles(&self) -> Vec<(CanonicalCode, ParameterProfile)> {
        let mut out: Vec<_> = self.profiles.read().expect("memo lock").iter().map(|(c, p)| (c.clone(), *p)).collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// Loads profile lines `code g g+ theta eps eps+`; returns the number
    /// accepted and a warning per rejected line.
    pub fn load_cache_text(&self, text: &str) -> (usize, Vec<String>) {
        let mut warnings = Vec::new();
        let mut accepted = 0;
        let mut profiles = self.profiles.write().expect("memo lock");
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let parsed = (|| {
                let [code, rest @ ..] = toks.as_slice() else { return None };
                let nums: Vec<usize> = rest.iter().map(|t| t.parse().ok()).collect::<Option<_>>()?;
                let [g, gp, theta, e, ep] = nums.as_slice() else { return None };
                let p = ParameterProfile::from_parts(*g, *gp, *e, *ep)?;
                (p.theta == *theta && p.violations().is_empty()).then_some((CanonicalCode::from_hex(code)?, p))
            })();
            match parsed {
                Some((code, p)) => {
                    profiles.insert(code, p);
                    accepted += 1;
                }
                None => warnings.push(format!("cache line {}: ignored malformed entry", i + 1)),
            }
        }
        (accepted, warnings)
    }

    pub fn cache_text(&self) -> String {
        self.cached_profiles()
            .into_iter()
            .map(|(c, p)| format!("{} {} {} {} {} {}\n", c, p.g, p.g_plus, p.theta, p.epsilon, p.epsilon_plus))
            .collect()
    }

    /// Reads a cache file if present; warnings are printed to stderr.
    pub fn load_cache_file(&self, path: &Path) -> Result<usize> {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
            Err(e) => return Err(e.into()),
        };
        let (n, warnings) = self.load_cache_text(&text);
        for w in warnings {
            eprintln!("warning: {}: {w}", path.display());
        }
        Ok(n)
    }

    pub fn save_cache_file(&self, path: &Path) -> Result<()> {
        fs::write(path, self.cache_text())?;
        Ok(())
    }
}

/// The 2-sum rule on profiles: `h0 = g1 + g2 + 1`,
/// `h1 = g1⁺ + g2⁺ - ε1⁺ε2⁺`; the sum has genus `h1` with the edge and
/// `min(h0, h1)` without.
pub fn two_sum_from_profiles(p1: &ParameterProfile, p2: &ParameterProfile, with_edge: bool) -> TwoSum {
    let h0 = p1.g + p2.g + 1;
    let h1 = p1.g_plus + p2.g_plus - p1.epsilon_plus * p2.epsilon_plus;
    TwoSum {
        genus: if with_edge { h1 } else { h0.min(h1) },
        epsilon_plus: usize::from(p1.epsilon_plus != p2.epsilon_plus),
        theta: usize::from(!with_edge && eta(p1, p2) == 2),
    }
}

pub fn min_genus(g: &SimpleGraph) -> usize {
    default_engine().min_genus(g)
}

pub fn embeds_in(g: &SimpleGraph, k: usize) -> bool {
    default_engine().embeds_in(g, k)
}

pub fn epsilon(g: &TerminalGraph) -> usize {
    default_engine().epsilon(g)
}

pub fn parameter_profile(g: &TerminalGraph) -> ParameterProfile {
    default_engine().profile(g)
}

pub fn two_sum_genus(g1: &TerminalGraph, g2: &TerminalGraph, with_edge: bool) -> Result<TwoSum> {
    default_engine().two_sum_genus(g1, g2, with_edge)
}

pub fn alternating_face_certificate(g: &TerminalGraph) -> Option<AlternatingCertificate> {
    default_engine().alternating_face_certificate(g)
}
