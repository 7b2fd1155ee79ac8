use std::collections::BTreeSet;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use genus_forge::embedding::is_planar;
use genus_forge::graph::*;
use genus_forge::Error;

fn t(g: SimpleGraph, x: usize, y: usize) -> TerminalGraph {
    TerminalGraph::new(g, x, y).unwrap()
}

fn random_terminal(rng: &mut ChaCha8Rng, n: usize) -> TerminalGraph {
    let mut g = SimpleGraph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(0.4) {
                g.try_add_edge(u, v).unwrap();
            }
        }
    }
    let x = rng.random_range(0..n);
    let y = (x + 1 + rng.random_range(0..n - 1)) % n;
    t(g, x, y)
}

fn relabel(rng: &mut ChaCha8Rng, g: &TerminalGraph) -> TerminalGraph {
    let mut perm: Vec<usize> = (0..g.graph().vertex_count()).collect();
    perm.shuffle(rng);
    t(g.graph().permuted(&perm), perm[g.x()], perm[g.y()])
}

/// Isomorphism respecting the terminal pair setwise, by trying every permutation.
fn iso_brute(a: &TerminalGraph, b: &TerminalGraph) -> bool {
    let n = a.graph().vertex_count();
    if n != b.graph().vertex_count() || a.graph().edge_count() != b.graph().edge_count() {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let terminals_ok = BTreeSet::from([perm[a.x()], perm[a.y()]]) == BTreeSet::from([b.x(), b.y()]);
        if terminals_ok && a.graph().edges().iter().all(|e| b.graph().has_edge(perm[e.0], perm[e.1])) {
            return true;
        }
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else { return false };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

#[test]
fn deletion() {
    let k5 = t(SimpleGraph::complete(5), 0, 1);
    let d = k5.delete_edge(Edge(0, 1)).unwrap();
    assert_eq!((d.graph().vertex_count(), d.graph().edge_count()), (5, 9));
    assert!(d.is_xy_free());
    assert_eq!(d.delete_edge(Edge(0, 1)), Err(Error::NoSuchEdge(Edge(0, 1))));

    let path = t(SimpleGraph::path(3), 0, 2);
    let d = path.delete_edge(Edge(0, 1)).unwrap();
    assert_eq!(d.graph().vertex_count(), 3);
    assert_eq!(d.graph().degree(0), 0);

    let k33 = t(SimpleGraph::complete_bipartite(3, 3), 0, 1);
    for e in k33.graph().edges() {
        assert!(is_planar(k33.delete_edge(e).unwrap().graph()));
    }
}

#[test]
fn contraction() {
    let tri = t(SimpleGraph::cycle(3), 0, 2);
    let c = tri.contract_edge(Edge(0, 1)).unwrap();
    assert_eq!((c.graph().vertex_count(), c.graph().edge_count()), (2, 1));

    let k5 = t(SimpleGraph::complete(5), 0, 1);
    let c = k5.contract_edge(Edge(2, 3)).unwrap();
    assert!(are_isomorphic_plain(c.graph(), &SimpleGraph::complete(4)));
    assert_eq!(k5.contract_edge(Edge(0, 1)), Err(Error::ContractXy));
    assert!(matches!(k5.delete_edge(Edge(2, 3)).unwrap().contract_edge(Edge(2, 3)), Err(Error::NoSuchEdge(_))));

    // The merged vertex keeps the terminal role.
    let p = t(SimpleGraph::path(4), 0, 3);
    let c = p.contract_edge(Edge(0, 1)).unwrap();
    assert_eq!(c.graph().vertex_count(), 3);
    assert_eq!(c.graph().degree(c.x()), 1);
    assert!(c.graph().connected(c.x(), c.y()));
}

#[test]
fn identification() {
    let c4 = t(SimpleGraph::cycle(4), 0, 2);
    let h = c4.identify_terminals();
    assert_eq!((h.vertex_count(), h.edge_count()), (3, 2));

    let k33 = t(SimpleGraph::complete_bipartite(3, 3), 0, 1);
    let h = k33.identify_terminals();
    assert_eq!((h.vertex_count(), h.edge_count()), (5, 6));
    assert!(is_planar(&h));

    let k5e = t(SimpleGraph::complete(5).without_edge(Edge(0, 1)).unwrap(), 0, 1);
    assert!(is_planar(&k5e.identify_terminals()));
    assert_eq!(k5e.with_xy_edge().graph(), &SimpleGraph::complete(5));
    assert_eq!(k5e.with_xy_edge().with_xy_edge(), k5e.with_xy_edge());
}

#[test]
fn operation_sets() {
    let k33 = t(SimpleGraph::complete_bipartite(3, 3), 0, 1);
    assert_eq!(k33.minor_operations().len(), 18);
    let k5 = t(SimpleGraph::complete(5), 0, 1);
    let ops = k5.minor_operations();
    assert_eq!(ops.len(), 19);
    assert!(!ops.contains(&MinorOperation { edge: Edge(0, 1), kind: MinorKind::Contract }));
    assert!(ops.windows(2).all(|w| w[0] < w[1]));
    assert!(t(SimpleGraph::empty(2).unwrap(), 0, 1).minor_operations().is_empty());
}

#[test]
fn operations_terminate_and_stay_simple() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let n = rng.random_range(2..=8);
        let mut g = random_terminal(&mut rng, n);
        loop {
            let ops = g.minor_operations();
            let Some(&op) = ops.choose(&mut rng) else { break };
            let m = g.graph().edge_count();
            g = g.apply(op).unwrap();
            assert!(g.graph().edge_count() < m);
            let edges = g.graph().edges();
            assert!(edges.iter().all(|e| e.0 < e.1));
            assert_eq!(edges.iter().collect::<BTreeSet<_>>().len(), edges.len());
        }
    }
}

#[test]
fn sums() {
    let k33 = t(SimpleGraph::complete_bipartite(3, 3), 0, 1);
    let s = k33.xy_sum(&k33, Orientation::Straight, false).unwrap();
    assert_eq!((s.graph().vertex_count(), s.graph().edge_count()), (10, 18));
    let s = k33.xy_sum(&k33, Orientation::Swapped, true).unwrap();
    assert_eq!(s.graph().edge_count(), 19);
    assert!(s.has_xy());

    let k5 = t(SimpleGraph::complete(5), 0, 1);
    assert_eq!(k5.xy_sum(&k33, Orientation::Straight, false), Err(Error::PartsMustAvoidXy));

    // K3,3 has an automorphism exchanging the terminals.
    let a = k33.xy_sum(&k33, Orientation::Straight, false).unwrap();
    let b = k33.xy_sum(&k33, Orientation::Swapped, false).unwrap();
    assert!(are_isomorphic(&a, &b));
    assert!(iso_brute(&a, &b));

    let k5e = t(SimpleGraph::complete(5).without_edge(Edge(0, 1)).unwrap(), 0, 1);
    let k5k5 = k5e.xy_sum(&k5e, Orientation::Straight, true).unwrap();
    assert_eq!((k5k5.graph().vertex_count(), k5k5.graph().edge_count()), (8, 19));
}

#[test]
fn sum_edge_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let a = random_terminal(&mut rng, 5).without_xy_edge();
        let b = random_terminal(&mut rng, 6).without_xy_edge();
        let with_edge = rng.random_bool(0.5);
        let s = a.xy_sum(&b, Orientation::Straight, with_edge).unwrap();
        assert_eq!(s.graph().vertex_count(), 9);
        assert_eq!(s.graph().edge_count(), a.graph().edge_count() + b.graph().edge_count() + usize::from(with_edge));
    }
}

#[test]
fn block_structure() {
    let bowtie = SimpleGraph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
    let bs = blocks(&bowtie);
    assert_eq!(bs.len(), 2);
    assert!(bs.iter().all(|b| b.edge_count() == 3));
    assert_eq!(blocks(&SimpleGraph::complete(5)).len(), 1);

    let mut db = SimpleGraph::complete(5).disjoint_union(&SimpleGraph::complete(5)).unwrap();
    db.try_add_edge(4, 5).unwrap();
    let bs = blocks(&db);
    assert_eq!(bs.len(), 3);
    assert_eq!(bs.iter().map(|b| b.edge_count()).sum::<usize>(), 21);

    assert_eq!(bars(&t(db, 0, 9)), vec![Edge(4, 5)]);
    assert!(bars(&t(SimpleGraph::complete_bipartite(3, 3), 0, 1)).is_empty());
    assert_eq!(bars(&t(SimpleGraph::path(4), 0, 3)).len(), 3);
}

#[test]
fn isomorphism_and_codes() {
    let k33 = t(SimpleGraph::complete_bipartite(3, 3), 0, 1);
    assert!(are_isomorphic(&k33, &k33.swapped()));
    assert_eq!(canonical_code(&k33), canonical_code(&k33.swapped()));

    let k5e = SimpleGraph::complete(5).without_edge(Edge(0, 1)).unwrap();
    let gap = t(k5e.clone(), 0, 1);
    let elsewhere = t(k5e, 2, 3);
    assert!(!are_isomorphic(&gap, &elsewhere));
    assert!(!iso_brute(&gap, &elsewhere));
    assert_ne!(canonical_code(&gap), canonical_code(&elsewhere));
    assert_ne!(canonical_code(&t(SimpleGraph::complete(5), 0, 1)), canonical_code(&k33));

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let sample: Vec<TerminalGraph> = (0..40).map(|_| random_terminal(&mut rng, 6)).collect();
    for a in &sample {
        let b = relabel(&mut rng, a);
        assert!(are_isomorphic(a, &b));
        assert_eq!(canonical_code(a), canonical_code(&b));
        assert_eq!(plain_canonical_code(a.graph()), plain_canonical_code(b.graph()));
    }
    for a in &sample[..15] {
        for b in &sample[..15] {
            let brute = iso_brute(a, b);
            assert_eq!(are_isomorphic(a, b), brute);
            assert_eq!(canonical_code(a) == canonical_code(b), brute);
        }
    }
}

#[test]
fn xy_labelled_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..60 {
        let n = rng.random_range(2..=8);
        let g = random_terminal(&mut rng, n).without_xy_edge();
        let h = g.to_xy_labelled().unwrap();
        let back = TerminalGraph::from_xy_labelled(&h).unwrap();
        assert!(are_isomorphic(&g, &back));
    }
    let h = XYLabelledGraph::new(SimpleGraph::complete(5), BTreeSet::new(), BTreeSet::new()).unwrap();
    let g = TerminalGraph::from_xy_labelled(&h).unwrap();
    assert_eq!(g.graph().degree(g.x()) + g.graph().degree(g.y()), 0);
    assert_eq!(t(SimpleGraph::complete(3), 0, 1).to_xy_labelled().unwrap_err(), Error::XyPresent);
}

#[test]
fn text_format_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..30 {
        let n = rng.random_range(2..=8);
        let g = random_terminal(&mut rng, n);
        for r in [GraphRecord::Terminal(g.clone()), GraphRecord::Plain(g.graph().clone())] {
            let text = write_record(&r);
            let parsed = parse_records(&text).unwrap();
            assert_eq!(parsed.len(), 1);
            assert_eq!(write_record(&parsed[0]), text);
        }
    }
    let err = parse_records("3 2 0 1\n0 1\n0 1\n").unwrap_err();
    assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
}
