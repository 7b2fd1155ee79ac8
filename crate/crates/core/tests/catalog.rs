use genus_forge::catalog::*;
use genus_forge::embedding::{default_engine, Engine};
use genus_forge::graph::{canonical_code, Edge, TerminalGraph};
use genus_forge::Error;

fn quick() -> ValidationOptions {
    ValidationOptions { raw_cross_check_max_vertices: 0, check_generators: false, check_minors: false, ..Default::default() }
}

#[test]
fn shipped_round_trip() {
    let c = Catalog::shipped();
    let again = parse_catalog(&write_catalog(&c)).unwrap();
    assert_eq!(again, c);
    assert_eq!(write_catalog(&again), write_catalog(&c));
}

#[test]
fn shipped_families() {
    let c = Catalog::shipped();
    let count = |t| c.tagged(t).count();
    assert_eq!(count(Tag::C0g), 5);
    assert_eq!(c.tagged(Tag::C0gPlus).filter(|e| e.graph.graph().is_connected()).count(), 3);
    assert_eq!(count(Tag::T1), 4);
    assert_eq!(count(Tag::T2), 6);
    assert_eq!(count(Tag::T3), 11);
    assert_eq!(count(Tag::T4), 5);
    assert_eq!(count(Tag::T5), 3);
    assert_eq!(count(Tag::T6), 2);
    for name in ["Pinch", "Star", "Ribbon", "Five", "Four", "Saddle", "Human", "Alien", "Bowtie", "Extra", "Doll"] {
        assert!(c.get(name).unwrap().has(Tag::T3), "{name}");
    }
    // T1 is the only disconnected family.
    for e in c.entries.iter().filter(|e| e.family().is_some()) {
        assert_eq!(e.graph.graph().is_connected(), e.family() != Some(Tag::T1), "{}", e.name);
    }
}

#[test]
fn shipped_validates_clean() {
    let report = validate_catalog(default_engine(), &Catalog::shipped(), &ValidationOptions::default());
    assert!(report.is_clean(), "{report}");
    assert_eq!(report.family_count(Tag::T4), 5);
    assert_eq!(report.connected_members, 27);
}

#[test]
fn parse_errors_carry_lines() {
    let bad_tag = "# genus-forge catalog v1\n\nname A\nclasses C0g,T9\n2 0 0 1\n";
    assert!(matches!(parse_catalog(bad_tag), Err(Error::Parse { line: 4, .. })));
    let dup = "# genus-forge catalog v1\nname A\nclasses T1\n2 0 0 1\n\nname A\nclasses T1\n3 0 0 1\n";
    assert!(matches!(parse_catalog(dup), Err(Error::Parse { line: 6, .. })));
    let iso = "# genus-forge catalog v1\nname A\nclasses T1\n3 1 0 1\n0 2\n\nname B\nclasses T1\n3 1 0 1\n1 2\n";
    assert!(matches!(parse_catalog(iso), Err(Error::Parse { line: 7, .. })));
    assert!(matches!(parse_catalog("name A\n"), Err(Error::Parse { line: 1, .. })));
    let plain = "# genus-forge catalog v1\nname A\nclasses T1\n3 1\n0 1\n";
    assert!(matches!(parse_catalog(plain), Err(Error::Parse { line: 4, .. })));
}

#[test]
fn swapped_terminals_still_validate() {
    let c = Catalog::shipped();
    let mut e = c.get("Pinch").unwrap().clone();
    e.graph = e.graph.swapped();
    let report = validate_catalog(default_engine(), &Catalog::new(vec![e]).unwrap(), &ValidationOptions {
        expected_t4: 0,
        expected_connected: 1,
        ..quick()
    });
    assert!(report.is_clean(), "{report}");
}

fn flip(t: &TerminalGraph, e: Edge) -> TerminalGraph {
    let g = if t.graph().has_edge(e.0, e.1) { t.graph().without_edge(e).unwrap() } else { t.graph().with_edge(e) };
    TerminalGraph::new(g, t.x(), t.y()).unwrap()
}

#[test]
fn corrupted_edge_is_named() {
    let c = Catalog::shipped();
    for name in ["Rocket", "K5 split 2-2", "Bowtie"] {
        let mut entries = c.entries.clone();
        let i = entries.iter().position(|e| e.name == name).unwrap();
        let e = entries[i].graph.graph().edges()[0];
        entries[i].graph = flip(&entries[i].graph, e);
        let bad = Catalog::new(entries).unwrap();
        let report = validate_catalog(default_engine(), &bad, &quick());
        assert!(report.discrepancies.iter().any(|d| d.entry == name), "{name}: {report}");
    }
}

#[test]
fn t4_members_contain_t6() {
    let c = Catalog::shipped();
    for (big, small) in T4_MINORS {
        let path = find_minor(&c.get(big).unwrap().graph, &c.get(small).unwrap().graph).unwrap();
        assert!(!path.is_empty());
    }
    assert!(!has_minor(&c.get("Pentagon").unwrap().graph, &c.get("Hexagon").unwrap().graph));
}

#[test]
fn generators_match_data() {
    let engine = Engine::default();
    let c = Catalog::shipped();
    for (tag, generated) in [
        (Tag::C0g, build_c0_g(&engine).unwrap()),
        (Tag::C0gPlus, build_c0_gplus(&engine).unwrap()),
        (Tag::T2, generate_t2(&engine).unwrap()),
        (Tag::T5, generate_t5(&engine).unwrap()),
    ] {
        let mut a: Vec<_> = generated.entries.iter().map(|e| e.code()).collect();
        let mut b: Vec<_> = c.tagged(tag).filter(|e| e.graph.graph().is_connected()).map(|e| canonical_code(&e.graph)).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b, "{tag}");
    }
}
