//! Deployment files: a `n side seed` header, then `n` lines `x y`.
//!
//! Coordinates are written with Rust's shortest round-trip float formatting,
//! so reading a file back reproduces the deployment bit for bit.

use std::fmt::Write as _;

use super::edge_list::{content_lines, fields, integer, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::geometric::Deployment;

pub fn write_deployment(dep: &Deployment) -> String {
    let mut out = String::new();
    writeln!(out, "{} {} {}", dep.len(), dep.side(), dep.seed()).unwrap();
    for &(x, y) in dep.points() {
        writeln!(out, "{x} {y}").unwrap();
    }
    out
}

fn real(line: usize, token: &str, what: &str) -> Result<f64> {
    match token.parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        _ => Err(Error::parse(
            line,
            format!("{what}: '{token}' is not a finite number"),
        )),
    }
}

pub fn parse_deployment(text: &str) -> Result<Deployment> {
    let mut lines = content_lines(text);
    let Some((hline, header)) = lines.next() else {
        return Err(Error::parse(
            text.lines().count() + 1,
            "missing 'n side seed' header",
        ));
    };
    let [n, side, seed] = fields::<3>(hline, header)?;
    let n: usize = integer(hline, n, "point count")?;
    let side = real(hline, side, "side")?;
    let seed: u64 = integer(hline, seed, "seed")?;
    if n > MAX_VERTICES {
        return Err(Error::parse(
            hline,
            format!("point count {n} exceeds {MAX_VERTICES}"),
        ));
    }
    if side <= 0.0 {
        return Err(Error::parse(hline, Error::InvalidSide(side).to_string()));
    }

    let mut points = Vec::new();
    let mut last = hline;
    for (line, content) in lines {
        if points.len() == n {
            return Err(Error::parse(
                line,
                format!("more than the declared {n} points"),
            ));
        }
        let [x, y] = fields::<2>(line, content)?;
        let p = (real(line, x, "x")?, real(line, y, "y")?);
        if !(0.0..=side).contains(&p.0) || !(0.0..=side).contains(&p.1) {
            return Err(Error::parse(line, format!("point outside [0, {side}]^2")));
        }
        points.push(p);
        last = line;
    }
    if points.len() < n {
        return Err(Error::parse(
            last + 1,
            format!("expected {n} points, found {}", points.len()),
        ));
    }
    Deployment::from_points(side, seed, points)
}
