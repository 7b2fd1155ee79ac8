use std::path::Path;
use std::process::Command;

const NAMES: [&str; 16] = [
    "gf_status_message",
    "gf_engine_new",
    "gf_engine_free",
    "gf_graph_new",
    "gf_graph_parse",
    "gf_graph_set_terminals",
    "gf_graph_vertex_count",
    "gf_graph_edge_count",
    "gf_graph_free",
    "gf_min_genus",
    "gf_profile",
    "gf_two_sum_genus",
    "gf_is_obstruction",
    "gf_enumerate_torus",
    "gf_obstructions_get",
    "gf_obstructions_free",
];

#[test]
fn header_declares_the_api() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/genus_forge.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in NAMES {
        assert!(text.contains(&format!("{name}(")), "{name} missing from the header");
    }
    assert!(text.contains("typedef struct GfGraph GfGraph;"));
    assert!(text.contains("GF_STATUS_OK = 0"));
}

#[test]
fn header_compiles_as_c() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let tmp = Path::new(env!("CARGO_TARGET_TMPDIR"));
    let src = tmp.join("use_header.c");
    std::fs::write(
        &src,
        "#include \"genus_forge.h\"\n\
         int main(void) {\n\
           GfGraph *g = 0;\n\
           GfStatus s = gf_graph_new(3, 0, 0, &g);\n\
           return s == GF_STATUS_OK ? 0 : 1;\n\
         }\n",
    )
    .unwrap();
    let out = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-c", "-o"])
        .arg(tmp.join("use_header.o"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&src)
        .output()
        .expect("a C compiler on PATH");
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
