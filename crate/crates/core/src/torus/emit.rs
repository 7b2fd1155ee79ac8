//! Output formats for obstruction records.
//!
//! The adjacency format is plain JSON written by hand:
//!
//! ```text
//! document := '{"obstructions": [' record (',' record)* ']}'
//! record   := '{"index": N, "n": N, "m": N, "part1": S, "part2": S,
//!              "with_edge": B, "orientation": S, "verification": S|null,
//!              "adjacency": [[N, ...], ...]}'
//! ```
//!
//! `adjacency[v]` lists the neighbours of `v` in increasing order.

use std::fmt::Write as _;

use super::ObstructionRecord;
use crate::graph::{write_record, GraphRecord, Orientation};

/// Records in the plain graph text format, blank-line separated.
pub fn write_records(records: &[ObstructionRecord]) -> String {
    records.iter().map(|r| write_record(&GraphRecord::Plain(r.graph.clone()))).collect::<Vec<_>>().join("\n")
}

fn quoted(s: &str) -> String {
    let mut out = String::from('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn orientation(o: Orientation) -> &'static str {
    match o {
        Orientation::Straight => "straight",
        Orientation::Swapped => "swapped",
    }
}

pub fn write_json(records: &[ObstructionRecord]) -> String {
    let mut out = String::from("{\"obstructions\": [\n");
    for (i, r) in records.iter().enumerate() {
        let g = &r.graph;
        let adjacency: Vec<String> = (0..g.vertex_count())
            .map(|v| format!("[{}]", g.neighbors(v).map(|w| w.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        let verification = r.verification.map_or("null".to_string(), |v| quoted(v.as_str()));
        let _ = write!(
            out,
            "  {{\"index\": {i}, \"n\": {}, \"m\": {}, \"part1\": {}, \"part2\": {}, \"with_edge\": {}, \"orientation\": \"{}\", \"verification\": {verification}, \"adjacency\": [{}]}}",
            g.vertex_count(),
            g.edge_count(),
            quoted(&r.part1_name),
            quoted(&r.part2_name),
            r.with_edge,
            orientation(r.orientation),
            adjacency.join(", ")
        );
        out.push_str(if i + 1 < records.len() { ",\n" } else { "\n" });
    }
    out.push_str("]}\n");
    out
}

/// One undirected `graph` block; the glued terminals are drawn as boxes.
pub fn write_dot(index: usize, r: &ObstructionRecord) -> String {
    let (x, y) = r.terminals();
    let mut out = format!("graph obstruction_{index} {{\n");
    let _ = writeln!(out, "  label={};", quoted(&format!("{} + {}", r.part1_name, r.part2_name)));
    for v in 0..r.graph.vertex_count() {
        let shape = if v == x || v == y { "box" } else { "circle" };
        let _ = writeln!(out, "  {v} [shape={shape}];");
    }
    for e in r.graph.edges() {
        let _ = writeln!(out, "  {} -- {};", e.0, e.1);
    }
    out.push_str("}\n");
    out
}
