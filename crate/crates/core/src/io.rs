//! Text formats: edge lists, vertex sequences, intervals, disks,
//! permutations, and DOT export of burning and firefighting runs.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::burn::BurnSchedule;
use crate::contact::FirefightRun;
use crate::graph::{Disk, Graph, Interval, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

/// Non-blank lines with `#` comments removed, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim())).filter(|(_, l)| !l.is_empty())
}

fn parse_usize(tok: &str, line: usize) -> Result<usize, ParseError> {
    tok.parse().or_else(|_| err(line, format!("expected a non-negative integer, got `{tok}`")))
}

/// Reads `n m` followed by `m` lines `u v` with 0-based vertices.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let Some((hline, header)) = lines.next() else {
        return err(1, "missing `n m` header");
    };
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 2 {
        return err(hline, "header must be `n m`");
    }
    let n = parse_usize(head[0], hline)?;
    let m = parse_usize(head[1], hline)?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return err(line, "edge must be `u v`");
        }
        let (u, v) = (parse_usize(toks[0], line)?, parse_usize(toks[1], line)?);
        if u >= n || v >= n {
            return err(line, format!("vertex out of range for n = {n}"));
        }
        if u == v {
            return err(line, "self-loop");
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return err(line, "duplicate edge");
        }
        if edges.len() == m {
            return err(line, format!("more than the declared {m} edges"));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return err(hline, format!("declared {m} edges, found {}", edges.len()));
    }
    Ok(Graph::from_edges(n, edges).expect("edges validated"))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Vertices separated by commas and/or whitespace.
pub fn parse_sequence(text: &str) -> Result<Vec<Vertex>, ParseError> {
    text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()).map(|t| parse_usize(t, 1)).collect()
}

/// Integer, fraction `p/q` or decimal such as `-3.25`.
pub fn parse_rational(tok: &str) -> Option<BigRational> {
    if let Some((p, q)) = tok.split_once('/') {
        let (p, q): (BigInt, BigInt) = (p.parse().ok()?, q.parse().ok()?);
        return (!q.is_zero()).then(|| BigRational::new(p, q));
    }
    if let Some((int, frac)) = tok.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int.starts_with('-');
        let whole: BigInt = if int.is_empty() || int == "-" { BigInt::zero() } else { int.parse().ok()? };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let f = BigRational::new(frac.parse().ok()?, scale);
        let w = BigRational::from_integer(whole);
        return Some(if negative { w - f } else { w + f });
    }
    Some(BigRational::from_integer(tok.parse().ok()?))
}

fn rationals(l: &str, line: usize, count: usize) -> Result<Vec<BigRational>, ParseError> {
    let toks: Vec<&str> = l.split_whitespace().collect();
    if toks.len() != count {
        return err(line, format!("expected {count} numbers"));
    }
    toks.iter().map(|t| parse_rational(t).map_or_else(|| err(line, format!("bad number `{t}`")), Ok)).collect()
}

/// One interval `start end` per line.
pub fn parse_intervals(text: &str) -> Result<Vec<Interval>, ParseError> {
    content_lines(text)
        .map(|(line, l)| {
            let mut v = rationals(l, line, 2)?;
            let end = v.pop().unwrap();
            let start = v.pop().unwrap();
            if start >= end {
                return err(line, "interval needs start < end");
            }
            Ok(Interval::new(start, end))
        })
        .collect()
}

pub fn write_intervals(intervals: &[Interval]) -> String {
    intervals.iter().map(|iv| format!("{} {}\n", iv.start, iv.end)).collect()
}

/// One disk `x y radius` per line.
pub fn parse_disks(text: &str) -> Result<Vec<Disk>, ParseError> {
    content_lines(text)
        .map(|(line, l)| {
            let mut v = rationals(l, line, 3)?;
            let radius = v.pop().unwrap();
            let y = v.pop().unwrap();
            let x = v.pop().unwrap();
            if radius <= BigRational::zero() {
                return err(line, "radius must be positive");
            }
            Ok(Disk { x, y, radius })
        })
        .collect()
}

pub fn write_disks(disks: &[Disk]) -> String {
    disks.iter().map(|d| format!("{} {} {}\n", d.x, d.y, d.radius)).collect()
}

/// A permutation of `1..=k` as whitespace-separated values.
pub fn parse_permutation(text: &str) -> Result<Vec<usize>, ParseError> {
    let mut out = Vec::new();
    for (line, l) in content_lines(text) {
        for t in l.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            out.push(parse_usize(t, line)?);
        }
    }
    let k = out.len();
    let mut seen = vec![false; k + 1];
    for &e in &out {
        if e == 0 || e > k || std::mem::replace(&mut seen[e], true) {
            return err(1, format!("not a permutation of 1..={k}"));
        }
    }
    Ok(out)
}

pub fn write_permutation(p: &[usize]) -> String {
    let parts: Vec<String> = p.iter().map(usize::to_string).collect();
    parts.join(" ") + "\n"
}

const PALETTE: [&str; 8] = ["#d62728", "#ff7f0e", "#e6b800", "#2ca02c", "#17becf", "#1f77b4", "#9467bd", "#8c564b"];

/// DOT graph with each vertex carrying `burnstep`, `role` and a `ta`/`tb` label.
pub fn burn_dot(g: &Graph, schedule: &BurnSchedule) -> String {
    let mut out = String::from("graph burning {\n  node [style=filled];\n");
    for v in 0..g.order() {
        let _ = match (schedule.burn_step[v], schedule.role[v]) {
            (Some(t), Some(role)) => writeln!(
                out,
                "  {v} [label=\"{v}\\n{}\", burnstep={t}, role=\"{}\", fillcolor=\"{}\"];",
                schedule.label(v).unwrap(),
                match role {
                    crate::burn::BurnRole::Source => "source",
                    crate::burn::BurnRole::Spread => "spread",
                },
                PALETTE[(t - 1) % PALETTE.len()],
            ),
            _ => writeln!(out, "  {v} [label=\"{v}\", role=\"unburned\", fillcolor=\"white\"];"),
        };
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// DOT graph marking burned, protected and saved vertices; burned ones carry `burnstep`.
pub fn firefight_dot(g: &Graph, run: &FirefightRun) -> String {
    let mut step = vec![None; g.order()];
    for (i, layer) in run.burned_per_step.iter().enumerate() {
        for &v in layer {
            step[v] = Some(i + 1);
        }
    }
    let mut protected = vec![false; g.order()];
    run.protected.iter().for_each(|&v| protected[v] = true);
    let mut out = String::from("graph firefighter {\n  node [style=filled];\n");
    for v in 0..g.order() {
        let _ = match step[v] {
            Some(t) => writeln!(out, "  {v} [burnstep={t}, role=\"burned\", fillcolor=\"#d62728\"];"),
            None if protected[v] => writeln!(out, "  {v} [role=\"protected\", fillcolor=\"#1f77b4\"];"),
            None => writeln!(out, "  {v} [role=\"saved\", fillcolor=\"#2ca02c\"];"),
        };
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// Reduced fraction as `p/q`, or `p` for integers.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
