//! Plain-text graph records.
//!
//! ```text
//! n m x y          terminals, or `n m - -` for a plain graph
//! u v              m edge lines, 0-based, u < v
//! ```
//!
//! The XY-labelled variant replaces the header with `n m | X: i j | Y: k`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::{SimpleGraph, TerminalGraph, XYLabelledGraph};
use crate::error::{parse_err, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphRecord {
    Plain(SimpleGraph),
    Terminal(TerminalGraph),
    Labelled(XYLabelledGraph),
}

impl GraphRecord {
    /// The record as a terminal graph when it has terminals (labelled records
    /// are converted).
    pub fn terminal_graph(&self) -> Option<TerminalGraph> {
        match self {
            GraphRecord::Plain(_) => None,
            GraphRecord::Terminal(t) => Some(t.clone()),
            GraphRecord::Labelled(h) => h.to_terminal_graph().ok(),
        }
    }

    pub fn simple_graph(&self) -> SimpleGraph {
        match self {
            GraphRecord::Plain(g) => g.clone(),
            GraphRecord::Terminal(t) => t.graph().clone(),
            GraphRecord::Labelled(h) => h.to_terminal_graph().expect("labelled graph converts").into_graph(),
        }
    }
}

/// Cursor over numbered, non-blank lines.
pub(crate) struct LineCursor<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> LineCursor<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        LineCursor { lines, pos: 0 }
    }

    pub(crate) fn peek(&self) -> Option<(usize, &'a str)> {
        self.lines.get(self.pos).copied()
    }

    pub(crate) fn next_line(&mut self) -> Option<(usize, &'a str)> {
        let l = self.peek();
        self.pos += 1;
        l
    }

    pub(crate) fn last_line_number(&self) -> usize {
        self.lines.last().map_or(0, |l| l.0)
    }
}

fn num(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| parse_err(line, format!("expected a non-negative integer, found {tok:?}")))
}

fn label_set(line: usize, part: &str, tag: &str) -> Result<BTreeSet<usize>> {
    let rest = part
        .trim()
        .strip_prefix(tag)
        .ok_or_else(|| parse_err(line, format!("expected {tag:?} section")))?;
    rest.split_whitespace().map(|t| num(line, t)).collect()
}

/// Parses one record starting at the cursor.
pub(crate) fn parse_record(cur: &mut LineCursor<'_>) -> Result<GraphRecord> {
    let (line, header) = cur
        .next_line()
        .ok_or_else(|| parse_err(cur.last_line_number() + 1, "expected a graph header"))?;
    let parts: Vec<&str> = header.split('|').collect();
    let head: Vec<&str> = parts[0].split_whitespace().collect();
    let (n, m, kind) = match (parts.len(), head.as_slice()) {
        (1, [n, m, x, y]) => {
            let term = match (*x, *y) {
                ("-", "-") => None,
                _ => Some((num(line, x)?, num(line, y)?)),
            };
            (num(line, n)?, num(line, m)?, Ok(term))
        }
        (3, [n, m]) => {
            let xs = label_set(line, parts[1], "X:")?;
            let ys = label_set(line, parts[2], "Y:")?;
            (num(line, n)?, num(line, m)?, Err((xs, ys)))
        }
        _ => return Err(parse_err(line, format!("malformed header {header:?}"))),
    };
    let mut g = SimpleGraph::empty(n).map_err(|e| parse_err(line, e.to_string()))?;
    for _ in 0..m {
        let (el, text) = cur.next_line().ok_or_else(|| parse_err(cur.last_line_number() + 1, "missing edge line"))?;
        let toks: Vec<&str> = text.split_whitespace().collect();
        let [u, v] = toks.as_slice() else {
            return Err(parse_err(el, format!("expected an edge `u v`, found {text:?}")));
        };
        g.try_add_edge(num(el, u)?, num(el, v)?).map_err(|e| parse_err(el, e.to_string()))?;
    }
    match kind {
        Ok(None) => Ok(GraphRecord::Plain(g)),
        Ok(Some((x, y))) => TerminalGraph::new(g, x, y)
            .map(GraphRecord::Terminal)
            .map_err(|e| parse_err(line, e.to_string())),
        Err((xs, ys)) => XYLabelledGraph::new(g, xs, ys)
            .map(GraphRecord::Labelled)
            .map_err(|e| parse_err(line, e.to_string())),
    }
}

/// Parses consecutive records; blank lines between records are ignored.
pub fn parse_records(text: &str) -> Result<Vec<GraphRecord>> {
    let mut cur = LineCursor::new(text);
    let mut out = Vec::new();
    while cur.peek().is_some() {
        out.push(parse_record(&mut cur)?);
    }
    Ok(out)
}

fn write_edges(out: &mut String, g: &SimpleGraph) {
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.0, e.1);
    }
}

/// Writes one record with edges in canonical (sorted) order.
pub fn write_record(record: &GraphRecord) -> String {
    let mut out = String::new();
    match record {
        GraphRecord::Plain(g) => {
            let _ = writeln!(out, "{} {} - -", g.vertex_count(), g.edge_count());
            write_edges(&mut out, g);
        }
        GraphRecord::Terminal(t) => {
            let g = t.graph();
            let _ = writeln!(out, "{} {} {} {}", g.vertex_count(), g.edge_count(), t.x(), t.y());
            write_edges(&mut out, g);
        }
        GraphRecord::Labelled(h) => {
            let join = |s: &BTreeSet<usize>| s.iter().map(|v| format!(" {v}")).collect::<String>();
            let g = &h.graph;
            let _ = writeln!(
                out,
                "{} {} | X:{} | Y:{}",
                g.vertex_count(),
                g.edge_count(),
                join(&h.x_labels),
                join(&h.y_labels)
            );
            write_edges(&mut out, g);
        }
    }
    out
}
