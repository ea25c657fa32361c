//! Plain-text edge lists.
//!
//! ```text
//! # comment lines start with '#', blank lines are ignored
//! 4 6
//! 0 1
//! 0 2
//! ...
//! ```
//!
//! The header is `n m`; exactly `m` edge lines `u v` with 0-based endpoints
//! follow. Repeated edges collapse into one.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Larger vertex counts are rejected before anything is allocated.
pub const MAX_VERTICES: usize = 1 << 22;

/// Yields `(1-based line number, trimmed content)` for non-comment lines.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn fields<const N: usize>(line: usize, content: &str) -> Result<[&str; N]> {
    let tokens: Vec<&str> = content.split_whitespace().collect();
    tokens.try_into().map_err(|t: Vec<&str>| {
        Error::parse(line, format!("expected {N} fields, found {}", t.len()))
    })
}

pub(crate) fn integer<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T> {
    token.parse().map_err(|_| {
        Error::parse(
            line,
            format!("{what}: '{token}' is not a nonnegative integer"),
        )
    })
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let Some((hline, header)) = lines.next() else {
        return Err(Error::parse(
            text.lines().count() + 1,
            "missing 'n m' header",
        ));
    };
    let [n, m] = fields::<2>(hline, header)?;
    let n: usize = integer(hline, n, "vertex count")?;
    let m: usize = integer(hline, m, "edge count")?;
    if n > MAX_VERTICES {
        return Err(Error::parse(
            hline,
            format!("vertex count {n} exceeds {MAX_VERTICES}"),
        ));
    }

    let mut pairs = Vec::new();
    let mut last = hline;
    for (line, content) in lines {
        if pairs.len() == m {
            return Err(Error::parse(
                line,
                format!("more than the declared {m} edges"),
            ));
        }
        let [u, v] = fields::<2>(line, content)?;
        let u: usize = integer(line, u, "endpoint")?;
        let v: usize = integer(line, v, "endpoint")?;
        Graph::from_edge_list(n, &[(u, v)]).map_err(|e| Error::parse(line, e.to_string()))?;
        pairs.push((u, v));
        last = line;
    }
    if pairs.len() < m {
        return Err(Error::parse(
            last + 1,
            format!("expected {m} edges, found {}", pairs.len()),
        ));
    }
    Graph::from_edge_list(n, &pairs)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for e in g.edges() {
        writeln!(out, "{} {}", e.u(), e.v()).unwrap();
    }
    out
}
