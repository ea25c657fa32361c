//! Renders an [`IndexReport`] for people (`text`) or scripts (`machine`).
//!
//! The machine form is one `key=value` per line in a fixed key order. Exact
//! fractions (`p/q`, lowest terms) are normative; `*_decimal` keys are
//! rounded to six places for convenience.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Edge;
use crate::indices::IndexReport;
use crate::ratio::RatioValue;

fn edge_list(edges: &[Edge]) -> String {
    edges
        .iter()
        .map(|e| format!("{}-{}", e.u(), e.v()))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn render_machine(r: &IndexReport) -> String {
    let mut out = String::new();
    let mut kv = |k: &str, v: &dyn std::fmt::Display| writeln!(out, "{k}={v}").unwrap();
    kv("n", &r.n);
    kv("m", &r.m);
    kv("rank", &r.rank);
    kv("k_r", &r.k_r);
    kv("k_r_decimal", &format!("{:.6}", r.k_r.to_f64()));
    kv("redundant_count", &r.redundant_edges.len());
    kv("k_u", &r.k_u);
    kv("k_u_decimal", &format!("{:.6}", r.k_u.to_f64()));
    kv("redundant_edges", &edge_list(&r.redundant_edges));
    kv("rigid", &r.rigid);
    kv("minimally_rigid", &r.minimally_rigid);
    kv("redundantly_rigid", &r.redundantly_rigid);
    kv("three_connected", &r.three_connected);
    kv("globally_rigid", &r.globally_rigid);
    if let Some(Ok(h)) = &r.higher_order {
        kv("k", &h.k);
        kv("k_u_k", &h.value);
        kv("k_u_k_decimal", &format!("{:.6}", h.value.to_f64()));
    }
    out
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render_text(r: &IndexReport) -> String {
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "graph: {} vertices, {} edges", r.n, r.m).unwrap();
    writeln!(w, "rank of rigidity matroid: {}", r.rank).unwrap();
    writeln!(w, "rigidity index K_r  = {} ({:.6})", r.k_r, r.k_r.to_f64()).unwrap();
    writeln!(
        w,
        "redundancy index K_u = {} ({:.6}), {} of {} edges redundant",
        r.k_u,
        r.k_u.to_f64(),
        r.redundant_edges.len(),
        r.m
    )
    .unwrap();
    if let Some(Ok(h)) = &r.higher_order {
        writeln!(w, "K_u^{} = {} ({:.6})", h.k, h.value, h.value.to_f64()).unwrap();
    }
    if !r.redundant_edges.is_empty() {
        let list: Vec<String> = r.redundant_edges.iter().map(Edge::to_string).collect();
        writeln!(w, "redundant edges: {}", list.join(" ")).unwrap();
    }
    writeln!(w, "rigid: {}", yes_no(r.rigid)).unwrap();
    writeln!(w, "minimally rigid: {}", yes_no(r.minimally_rigid)).unwrap();
    writeln!(w, "redundantly rigid: {}", yes_no(r.redundantly_rigid)).unwrap();
    writeln!(w, "3-connected: {}", yes_no(r.three_connected)).unwrap();
    writeln!(w, "globally rigid: {}", yes_no(r.globally_rigid)).unwrap();
    out
}

/// Reads a machine-format document back into its key/value pairs, checking
/// that the exact fractions are well formed. Unknown keys are kept.
pub fn parse_machine(text: &str) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::parse(line_no, "expected key=value"))?;
        if k.is_empty() || k.contains(char::is_whitespace) {
            return Err(Error::parse(line_no, format!("bad key '{k}'")));
        }
        if matches!(k, "k_r" | "k_u" | "k_u_k") {
            parse_fraction(v)
                .ok_or_else(|| Error::parse(line_no, format!("bad fraction '{v}'")))?;
        }
        if map.insert(k.to_string(), v.to_string()).is_some() {
            return Err(Error::parse(line_no, format!("duplicate key '{k}'")));
        }
    }
    Ok(map)
}

/// Parses `p/q` with `q > 0`.
pub fn parse_fraction(s: &str) -> Option<RatioValue> {
    let (p, q) = s.split_once('/')?;
    let p: u64 = p.parse().ok()?;
    let q: u64 = q.parse().ok()?;
    (q > 0).then(|| RatioValue::new(p, q))
}
