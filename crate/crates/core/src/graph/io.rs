//! Edge-list text format.
//!
//! ```text
//! # optional comments
//! n m
//! u v
//! ...
//! ```
//! Ids are 0-based. Writers emit `u < v` in lexicographic order.

use std::fmt::Write as _;

use super::{Graph, GraphError};

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        message: message.into(),
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let t = l.trim();
        if t.is_empty() || t.starts_with('#') {
            None
        } else {
            Some((i + 1, t.split_whitespace().collect()))
        }
    })
}

fn parse_usize(line: usize, tok: &str) -> Result<usize, GraphError> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected a non-negative integer, found {tok:?}")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = data_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing \"n m\" header"))?;
    if header.len() != 2 {
        return Err(parse_err(hline, "header must be \"n m\""));
    }
    let n = parse_usize(hline, header[0])?;
    let m = parse_usize(hline, header[1])?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = hline;
    for (line, toks) in lines {
        if toks.len() != 2 {
            return Err(parse_err(line, "edge lines must be \"u v\""));
        }
        let u = parse_usize(line, toks[0])?;
        let v = parse_usize(line, toks[1])?;
        if u >= n || v >= n {
            return Err(parse_err(line, format!("vertex id out of range for n = {n}")));
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop on vertex {u}")));
        }
        edges.push((u, v));
        last_line = line;
        if edges.len() > m {
            return Err(parse_err(line, format!("more than {m} edge lines")));
        }
    }
    if edges.len() != m {
        return Err(parse_err(
            last_line,
            format!("expected {m} edge lines, found {}", edges.len()),
        ));
    }
    Graph::new(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.order(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
