//! The `mixedgraph v1` text format.
//!
//! ```text
//! mixedgraph v1
//! vertices 3
//! 1 -> 2      # arc 1 -> 2
//! 2 -- 3      # un-oriented edge
//! ```

use std::fmt::Write;

use super::{EdgeRecord, MixedGraph};
use crate::error::{Error, Result};

const MAGIC: &str = "mixedgraph v1";

fn strip(line: &str) -> &str {
    let line = line.strip_suffix('\r').unwrap_or(line);
    match line.find('#') {
        Some(k) => &line[..k],
        None => line,
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_vertex(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| parse_err(line, format!("invalid vertex label `{tok}`")))
}

pub fn parse_graph(text: &str) -> Result<MixedGraph> {
    let mut lines = text.split('\n').enumerate().map(|(i, l)| (i + 1, strip(l)));

    match lines.next() {
        Some((_, l)) if l.split_whitespace().eq(MAGIC.split_whitespace()) => {}
        _ => return Err(parse_err(1, format!("expected `{MAGIC}`"))),
    }

    let n = match lines.next() {
        Some((no, l)) => {
            let toks: Vec<&str> = l.split_whitespace().collect();
            match toks.as_slice() {
                ["vertices", count] => count
                    .parse::<usize>()
                    .ok()
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| parse_err(no, format!("invalid vertex count `{count}`")))?,
                _ => return Err(parse_err(no, "expected `vertices <n>`")),
            }
        }
        None => return Err(parse_err(2, "missing `vertices <n>` line")),
    };

    let mut g = MixedGraph::new(n)?;
    for (no, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        let edge = match toks.as_slice() {
            [u, "--", v] => EdgeRecord::unoriented(parse_vertex(u, no)?, parse_vertex(v, no)?),
            [u, "->", v] => EdgeRecord::arc(parse_vertex(u, no)?, parse_vertex(v, no)?),
            _ => {
                return Err(parse_err(
                    no,
                    format!("expected `<u> -- <v>` or `<u> -> <v>`, got `{}`", l.trim()),
                ))
            }
        };
        g.add_edge(edge).map_err(|e| parse_err(no, e.to_string()))?;
    }
    Ok(g)
}

pub fn serialize_graph(g: &MixedGraph) -> String {
    let mut out = String::with_capacity(32 + 10 * g.size());
    out.push_str(MAGIC);
    out.push('\n');
    let _ = writeln!(out, "vertices {}", g.order());
    for e in g.edges() {
        let _ = writeln!(out, "{e}");
    }
    out
}
