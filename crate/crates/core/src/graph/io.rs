//! Text formats for graphs.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with 0-based ids.
//! Lines starting with `#` are comments. METIS/DIMACS `.graph` files
//! (header `n m`, then one 1-based adjacency line per vertex) are also read.

use std::fmt::Write as _;
use std::path::Path;

use super::Graph;
use crate::error::{Error, Result};

fn numbers(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::parse(lineno, format!("expected a nonnegative integer, found {tok:?}")))
        })
        .collect()
}

/// Non-comment lines paired with their 1-based line numbers.
fn content_lines(text: &str, comment: char) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(move |(_, l)| !l.starts_with(comment))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text, '#').filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header line \"n m\""))?;
    let header = numbers(header, hline)?;
    let [n, m] = header[..] else {
        return Err(Error::parse(hline, "header must be \"n m\""));
    };
    let mut edges = Vec::with_capacity(m);
    let mut last_line = hline;
    for _ in 0..m {
        let (lineno, line) = lines
            .next()
            .ok_or_else(|| Error::parse(last_line + 1, format!("expected {m} edges, found {}", edges.len())))?;
        last_line = lineno;
        let nums = numbers(line, lineno)?;
        let [u, v] = nums[..] else {
            return Err(Error::parse(lineno, "edge line must be \"u v\""));
        };
        if u >= n || v >= n {
            return Err(Error::parse(lineno, format!("vertex id out of range 0..{n}")));
        }
        if u == v {
            return Err(Error::parse(lineno, "self-loop"));
        }
        edges.push((u, v));
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(Error::parse(lineno, "trailing content after the declared edges"));
    }
    Graph::from_edges(n, edges)
}

pub fn parse_metis(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text, '%');
    let (hline, header) = lines
        .by_ref()
        .find(|(_, l)| !l.is_empty())
        .ok_or_else(|| Error::parse(1, "missing header line"))?;
    let header = numbers(header, hline)?;
    if header.len() < 2 {
        return Err(Error::parse(hline, "header must start with \"n m\""));
    }
    if header.len() > 2 && header[2] != 0 {
        return Err(Error::parse(hline, "weighted METIS graphs are not supported"));
    }
    let n = header[0];
    let mut edges = Vec::new();
    for v in 0..n {
        let (lineno, line) = lines
            .next()
            .ok_or_else(|| Error::parse(hline + v + 1, "missing adjacency line"))?;
        for w in numbers(line, lineno)? {
            if w == 0 || w > n {
                return Err(Error::parse(lineno, format!("neighbor {w} out of range 1..={n}")));
            }
            if w - 1 == v {
                return Err(Error::parse(lineno, "self-loop"));
            }
            edges.push((v, w - 1));
        }
    }
    Graph::from_edges(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Reads either format, choosing METIS for a `.graph` extension.
pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    if path.extension().is_some_and(|e| e == "graph") {
        parse_metis(&text)
    } else {
        parse_edge_list(&text)
    }
}
