//! Canonical edge-list text format: a header line `n m`, then `m` lines `u v`
//! with `0 <= u < v < n`.

use std::collections::HashSet;
use std::fmt::Write;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header \"n m\"".into(),
    })?;
    let (n, m) = parse_pair(hline, header)?;

    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        if edges.len() == m {
            return Err(parse_err(line, format!("more than {m} edges")));
        }
        let (u, v) = parse_pair(line, text)?;
        if u >= n || v >= n {
            return Err(parse_err(line, format!("vertex out of range for n = {n}")));
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop at {u}")));
        }
        if u > v {
            return Err(parse_err(
                line,
                format!("edge {u} {v} not written as u < v"),
            ));
        }
        if !seen.insert((u, v)) {
            return Err(parse_err(line, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            hline,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn parse_pair(line: usize, text: &str) -> Result<(Vertex, Vertex)> {
    let mut it = text.split_ascii_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| parse_err(line, "expected two integers".into()))?;
        tok.parse()
            .map_err(|_| parse_err(line, format!("not a nonnegative integer: {tok:?}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(parse_err(line, "trailing tokens".into()));
    }
    Ok((a, b))
}

fn parse_err(line: usize, message: String) -> Error {
    Error::Parse { line, message }
}
