//! ```text
//! # genus-forge catalog v1
//!
//! name K33
//! classes C0g,C0g+
//! source generated          (optional, default figure-transcription)
//! marked 2 3                (optional)
//! 6 9 0 1
//! 0 3
//! ...
//! ```
//!
//! Lines starting with `#` after the header are comments.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use super::{Catalog, CatalogEntry, Source, Tag};
use crate::error::{parse_err, Result};
use crate::graph::format::{parse_record, LineCursor};
use crate::graph::{write_record, GraphRecord};

pub const CATALOG_HEADER: &str = "# genus-forge catalog v1";

fn keyword<'a>(cur: &mut LineCursor<'a>, key: &str) -> Result<(usize, &'a str)> {
    let (line, text) = cur.next_line().ok_or_else(|| parse_err(cur.last_line_number() + 1, format!("expected `{key}`")))?;
    match text.split_once(char::is_whitespace) {
        Some((k, rest)) if k == key => Ok((line, rest.trim())),
        _ if text == key => Ok((line, "")),
        _ => Err(parse_err(line, format!("expected `{key} ...`, found {text:?}"))),
    }
}

fn optional<'a>(cur: &mut LineCursor<'a>, key: &str) -> Result<Option<(usize, &'a str)>> {
    match cur.peek() {
        Some((_, text)) if text.split_whitespace().next() == Some(key) => keyword(cur, key).map(Some),
        _ => Ok(None),
    }
}

pub fn parse_catalog(text: &str) -> Result<Catalog> {
    let mut lines = text.lines();
    match lines.next().map(str::trim) {
        Some(CATALOG_HEADER) => {}
        other => return Err(parse_err(1, format!("expected header {CATALOG_HEADER:?}, found {other:?}"))),
    }
    // Blank out the header and comments so line numbers stay true.
    let body: String = std::iter::once("")
        .chain(lines)
        .map(|l| if l.trim_start().starts_with('#') { "" } else { l })
        .collect::<Vec<_>>()
        .join("\n");
    let mut cur = LineCursor::new(&body);
    let mut entries: Vec<CatalogEntry> = Vec::new();
    let mut names = HashSet::new();
    let mut codes = HashSet::new();
    while cur.peek().is_some() {
        let (line, name) = keyword(&mut cur, "name")?;
        if name.is_empty() {
            return Err(parse_err(line, "empty entry name"));
        }
        if !names.insert(name.to_string()) {
            return Err(parse_err(line, format!("duplicate name {name:?}")));
        }
        let (cl, classes) = keyword(&mut cur, "classes")?;
        let classes: BTreeSet<Tag> = classes
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|m: String| parse_err(cl, m)))
            .collect::<Result<_>>()?;
        let source = match optional(&mut cur, "source")? {
            Some((sl, s)) => s.parse().map_err(|m: String| parse_err(sl, m))?,
            None => Source::Transcribed,
        };
        let marked = match optional(&mut cur, "marked")? {
            Some((ml, s)) => s
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| parse_err(ml, format!("bad vertex {t:?}"))))
                .collect::<Result<Vec<usize>>>()?,
            None => Vec::new(),
        };
        let record_line = cur.peek().map_or(0, |l| l.0);
        let (graph, labelled) = match parse_record(&mut cur)? {
            GraphRecord::Terminal(t) => (t, false),
            GraphRecord::Labelled(h) => (h.to_terminal_graph().map_err(|e| parse_err(record_line, e.to_string()))?, true),
            GraphRecord::Plain(_) => return Err(parse_err(record_line, "catalog entries need terminals")),
        };
        if let Some(&v) = marked.iter().find(|&&v| v >= graph.graph().vertex_count() || graph.is_terminal(v)) {
            return Err(parse_err(line, format!("marked vertex {v} is not a non-terminal")));
        }
        let entry = CatalogEntry { name: name.to_string(), graph, classes, source, marked, labelled };
        if !codes.insert(entry.code()) {
            return Err(parse_err(line, format!("{name:?} is isomorphic to an earlier entry")));
        }
        entries.push(entry);
    }
    Catalog::new(entries)
}

pub fn write_catalog(catalog: &Catalog) -> String {
    let mut out = String::new();
    out.push_str(CATALOG_HEADER);
    out.push('\n');
    for e in &catalog.entries {
        let classes: Vec<&str> = e.classes.iter().map(|t| t.as_str()).collect();
        let _ = writeln!(out, "\nname {}", e.name);
        let _ = writeln!(out, "classes {}", classes.join(","));
        let _ = writeln!(out, "source {}", e.source.as_str());
        if !e.marked.is_empty() {
            let marked: Vec<String> = e.marked.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "marked {}", marked.join(" "));
        }
        let record = match e.graph.to_xy_labelled() {
            Ok(h) if e.labelled => GraphRecord::Labelled(h),
            _ => GraphRecord::Terminal(e.graph.clone()),
        };
        out.push_str(&write_record(&record));
    }
    out
}
