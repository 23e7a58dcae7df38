//! MacKay's alist format for sparse parity-check matrices.
//!
//! ```text
//! N M                 bits, checks
//! max_col max_row
//! col weights (N)
//! row weights (M)
//! N lines of 1-based check indices per bit
//! M lines of 1-based bit indices per check
//! ```
//!
//! Zero entries are padding and are ignored.

use std::fmt::Write as _;
use std::path::Path;

use super::ParityCheckMatrix;
use crate::error::{Error, Result};

pub fn write_alist(h: &ParityCheckMatrix) -> String {
    let n = h.n();
    let m = h.num_checks();
    let rows: Vec<Vec<usize>> = (0..m).map(|c| h.support(c)).collect();
    let mut cols = vec![Vec::new(); n];
    for (c, row) in rows.iter().enumerate() {
        for &b in row {
            cols[b].push(c);
        }
    }
    let max_col = cols.iter().map(Vec::len).max().unwrap_or(0);
    let max_row = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = String::new();
    let line = |out: &mut String, items: &mut dyn Iterator<Item = usize>| {
        let words: Vec<String> = items.map(|x| x.to_string()).collect();
        writeln!(out, "{}", words.join(" ")).unwrap();
    };
    writeln!(out, "{n} {m}").unwrap();
    writeln!(out, "{max_col} {max_row}").unwrap();
    line(&mut out, &mut cols.iter().map(Vec::len));
    line(&mut out, &mut rows.iter().map(Vec::len));
    for col in &cols {
        line(&mut out, &mut col.iter().map(|c| c + 1));
    }
    for row in &rows {
        line(&mut out, &mut row.iter().map(|b| b + 1));
    }
    out
}

type LineReader<'a> = dyn FnMut(&str) -> Result<(usize, Vec<usize>)> + 'a;

pub fn parse_alist(text: &str) -> Result<ParityCheckMatrix> {
    let lines: Vec<&str> = text.lines().collect();
    let mut cursor = 0usize;
    let mut next_line = |what: &str| -> Result<(usize, Vec<usize>)> {
        let number = cursor + 1;
        let Some(line) = lines.get(cursor) else {
            return Err(Error::parse(number, format!("unexpected end of file, expected {what}")));
        };
        cursor += 1;
        let values = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::parse(number, format!("`{tok}` is not a non-negative integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((number, values))
    };
    let exact = |(line, values): (usize, Vec<usize>), count: usize, what: &str| -> Result<Vec<usize>> {
        if values.len() != count {
            return Err(Error::parse(
                line,
                format!("expected {count} {what}, found {}", values.len()),
            ));
        }
        Ok(values)
    };

    let header = exact(next_line("`N M`")?, 2, "header values")?;
    let (n, m) = (header[0], header[1]);
    let (max_line, maxes) = next_line("maximum weights")?;
    let maxes = exact((max_line, maxes), 2, "maximum weights")?;
    let col_weights = exact(next_line("column weights")?, n, "column weights")?;
    let row_weights = exact(next_line("row weights")?, m, "row weights")?;
    if col_weights.iter().max().copied().unwrap_or(0) > maxes[0]
        || row_weights.iter().max().copied().unwrap_or(0) > maxes[1]
    {
        return Err(Error::parse(max_line, "a weight exceeds the declared maximum"));
    }

    let read_lists = |next_line: &mut LineReader<'_>,
                      weights: &[usize],
                      bound: usize,
                      what: &str|
     -> Result<Vec<(usize, Vec<usize>)>> {
        weights
            .iter()
            .map(|&w| {
                let (line, values) = next_line(what)?;
                let mut entries: Vec<usize> = values.into_iter().filter(|&v| v != 0).collect();
                if let Some(&bad) = entries.iter().find(|&&v| v > bound) {
                    return Err(Error::parse(line, format!("index {bad} exceeds {bound}")));
                }
                if entries.len() != w {
                    return Err(Error::parse(
                        line,
                        format!("expected {w} entries, found {}", entries.len()),
                    ));
                }
                entries.sort_unstable();
                if entries.windows(2).any(|p| p[0] == p[1]) {
                    return Err(Error::parse(line, "repeated index"));
                }
                Ok((line, entries.into_iter().map(|v| v - 1).collect()))
            })
            .collect()
    };
    let cols = read_lists(&mut next_line, &col_weights, m, "a column list")?;
    let rows = read_lists(&mut next_line, &row_weights, n, "a row list")?;
    for (c, (line, row)) in rows.iter().enumerate() {
        if let Some(&b) = row.iter().find(|&&b| !cols[b].1.contains(&c)) {
            return Err(Error::parse(
                *line,
                format!("check {} lists bit {} but not vice versa", c + 1, b + 1),
            ));
        }
        if row.is_empty() {
            return Err(Error::parse(*line, format!("check {} is empty", c + 1)));
        }
    }
    if let Some(extra) = lines[cursor..].iter().position(|l| !l.trim().is_empty()) {
        return Err(Error::parse(cursor + extra + 1, "trailing content"));
    }
    ParityCheckMatrix::from_supports(n, rows.into_iter().map(|(_, r)| r))
}

pub fn read_alist(path: &Path) -> Result<ParityCheckMatrix> {
    parse_alist(&std::fs::read_to_string(path)?)
}
