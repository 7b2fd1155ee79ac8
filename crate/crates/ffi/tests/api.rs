use std::ffi::{CStr, CString};
use std::ptr;

use genus_forge_ffi::*;

fn graph(n: u32, edges: &[(u32, u32)]) -> *mut GfGraph {
    let flat: Vec<u32> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { gf_graph_new(n, flat.as_ptr(), edges.len(), &mut g) }, GfStatus::Ok);
    g
}

fn complete(n: u32) -> *mut GfGraph {
    let edges: Vec<(u32, u32)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    graph(n, &edges)
}

fn k33() -> *mut GfGraph {
    let edges: Vec<(u32, u32)> = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
    graph(6, &edges)
}

#[test]
fn genus_and_obstruction() {
    unsafe {
        let e = gf_engine_new(true);
        let k5 = complete(5);
        assert_eq!(gf_graph_vertex_count(k5), 5);
        assert_eq!(gf_graph_edge_count(k5), 10);
        let mut genus = 99;
        assert_eq!(gf_min_genus(e, k5, &mut genus), GfStatus::Ok);
        assert_eq!(genus, 1);
        let mut obs = false;
        assert_eq!(gf_is_obstruction(e, k5, 0, &mut obs), GfStatus::Ok);
        assert!(obs);
        assert_eq!(gf_is_obstruction(e, k5, 1, &mut obs), GfStatus::Ok);
        assert!(!obs);
        gf_graph_free(k5);
        gf_engine_free(e);
    }
}

#[test]
fn profile_needs_terminals() {
    unsafe {
        let e = gf_engine_new(false);
        let g = k33();
        let mut p = GfProfile::default();
        assert_eq!(gf_profile(e, g, &mut p), GfStatus::NoTerminals);
        assert_eq!(p, GfProfile::default());
        assert_eq!(gf_graph_set_terminals(g, 0, 0), GfStatus::InvalidGraph);
        assert_eq!(gf_graph_set_terminals(g, 0, 1), GfStatus::Ok);
        assert_eq!(gf_profile(e, g, &mut p), GfStatus::Ok);
        assert_eq!((p.g, p.g_plus, p.theta, p.epsilon, p.epsilon_plus, p.g_a, p.g_a_plus), (1, 1, 0, 1, 1, 0, 0));

        let mut s = 0;
        // Both parts alternate, so the sum stays on the torus with or without xy.
        for with_edge in [false, true] {
            assert_eq!(gf_two_sum_genus(e, g, g, with_edge, &mut s), GfStatus::Ok);
            assert_eq!(s, 1);
        }
        gf_graph_free(g);
        gf_engine_free(e);
    }
}

#[test]
fn parse_and_errors() {
    unsafe {
        let text = CString::new("4 3 0 3\n0 1\n1 2\n2 3\n").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(gf_graph_parse(text.as_ptr(), &mut g), GfStatus::Ok);
        assert_eq!(gf_graph_edge_count(g), 3);
        let e = gf_engine_new(true);
        let mut p = GfProfile::default();
        assert_eq!(gf_profile(e, g, &mut p), GfStatus::Ok);
        assert_eq!(p.g, 0);
        gf_graph_free(g);

        let bad = CString::new("3 1 0 1\n0 9\n").unwrap();
        let mut h = ptr::null_mut();
        assert_eq!(gf_graph_parse(bad.as_ptr(), &mut h), GfStatus::Parse);
        assert!(h.is_null());

        let looped = [1u32, 1];
        assert_eq!(gf_graph_new(2, looped.as_ptr(), 1, &mut h), GfStatus::InvalidGraph);
        assert_eq!(gf_graph_new(2, ptr::null(), 1, &mut h), GfStatus::NullPointer);
        let mut genus = 0;
        assert_eq!(gf_min_genus(ptr::null(), ptr::null(), &mut genus), GfStatus::NullPointer);
        assert_eq!(gf_graph_vertex_count(ptr::null()), 0);

        let msg = CStr::from_ptr(gf_status_message(GfStatus::XyPresent));
        assert_eq!(msg.to_str().unwrap(), "terminals are adjacent");
        gf_engine_free(e);
        gf_graph_free(ptr::null_mut());
    }
}

#[test]
fn torus_obstructions() {
    unsafe {
        let e = gf_engine_new(true);
        let mut counts = GfTorusCounts::default();
        let mut list = ptr::null_mut();
        assert_eq!(gf_enumerate_torus(e, &mut counts, &mut list), GfStatus::Ok);
        assert_eq!((counts.pairs, counts.filtered, counts.obstructions), (81, 76, 68));
        assert_eq!((counts.t2_pairs, counts.t2_survivors), (18, 10));
        assert_eq!(gf_obstructions_len(list), 68);

        let mut g = ptr::null_mut();
        assert_eq!(gf_obstructions_get(list, 68, &mut g), GfStatus::IndexOutOfRange);
        assert_eq!(gf_obstructions_get(list, 0, &mut g), GfStatus::Ok);
        let mut genus = 0;
        assert_eq!(gf_min_genus(e, g, &mut genus), GfStatus::Ok);
        assert_eq!(genus, 2);
        let mut p = GfProfile::default();
        assert_eq!(gf_profile(e, g, &mut p), GfStatus::Ok);
        gf_graph_free(g);
        gf_obstructions_free(list);
        gf_engine_free(e);
    }
}
