//! Text formats: edge lists and parenthesized contraction trees.
//!
//! Edge list: a header line `n m`, then `m` lines `u v w` with
//! `0 <= u, v < n`, `u != v`, `w > 0`. Repeated pairs add up. Blank lines
//! and lines starting with `#` are skipped.

use std::fmt::Write as _;

use congestion_core::contraction::{ContractionTree, TreeShape};
use congestion_core::{Error, Graph};

use crate::error::{LabError, LabResult};

pub fn parse_edge_list(text: &str) -> LabResult<Graph> {
    let mut header: Option<(usize, usize, Graph)> = None;
    let mut seen = 0usize;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        match (&mut header, fields.len()) {
            (None, 2) => {
                let n = parse_count(fields[0], line, "vertex count")?;
                let m = parse_count(fields[1], line, "edge count")?;
                let g = Graph::new(n).map_err(|e| LabError::parse(line, e.to_string()))?;
                header = Some((n, m, g));
            }
            (None, _) => return Err(LabError::parse(line, "expected header `n m`")),
            (Some(_), 2) => return Err(LabError::parse(line, "duplicate header")),
            (Some((n, m, g)), 3) => {
                seen += 1;
                if seen > *m {
                    return Err(LabError::parse(
                        line,
                        format!("more than the {m} declared edges"),
                    ));
                }
                let u = parse_count(fields[0], line, "vertex")?;
                let v = parse_count(fields[1], line, "vertex")?;
                let w: f64 = fields[2]
                    .parse()
                    .map_err(|_| LabError::parse(line, format!("bad weight `{}`", fields[2])))?;
                for x in [u, v] {
                    if x >= *n {
                        return Err(LabError::parse(
                            line,
                            format!("vertex {x} out of range for n = {n}"),
                        ));
                    }
                }
                g.add_edge(u, v, w).map_err(|e| match e {
                    Error::SelfLoop { vertex } => {
                        LabError::parse(line, format!("self-loop at {vertex}"))
                    }
                    Error::InvalidWeight { weight, .. } => {
                        LabError::parse(line, format!("weight {weight} must be positive"))
                    }
                    other => LabError::parse(line, other.to_string()),
                })?;
            }
            (Some(_), k) => {
                return Err(LabError::parse(
                    line,
                    format!("expected `u v w`, found {k} fields"),
                ))
            }
        }
    }
    match header {
        None => Err(LabError::parse(last_line.max(1), "missing header `n m`")),
        Some((_, m, _)) if seen != m => Err(LabError::parse(
            last_line.max(1),
            format!("header declares {m} edges, found {seen}"),
        )),
        Some((_, _, g)) => Ok(g),
    }
}

fn parse_count(s: &str, line: usize, what: &str) -> LabResult<usize> {
    s.parse()
        .map_err(|_| LabError::parse(line, format!("bad {what} `{s}`")))
}

/// Canonical text: edges in `(u, v)` order with `u < v`, shortest
/// round-trip weights.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.num_edges());
    for (u, v, w) in g.edges() {
        writeln!(out, "{u} {v} {w}").unwrap();
    }
    out
}

/// Parses `((0 1) ((2 3) (4 5)))`-style trees; whitespace is optional
/// between parentheses and required only between adjacent numbers.
pub fn parse_tree(text: &str) -> LabResult<TreeShape> {
    let mut p = TreeParser {
        src: text.as_bytes(),
        pos: 0,
    };
    let shape = p.tree()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input after tree"));
    }
    Ok(shape)
}

/// Parses a tree and checks it against a vertex count.
pub fn parse_tree_for(text: &str, n: usize) -> LabResult<ContractionTree> {
    let shape = parse_tree(text)?;
    Ok(ContractionTree::from_shape(n, &shape)?)
}

pub fn serialize_tree(t: &ContractionTree) -> String {
    t.shape().to_string()
}

struct TreeParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl TreeParser<'_> {
    // Trees are usually one line; report the line anyway for multi-line files.
    fn err(&self, msg: &str) -> LabError {
        let line = 1 + self.src[..self.pos.min(self.src.len())]
            .iter()
            .filter(|&&b| b == b'\n')
            .count();
        LabError::parse(line, format!("{msg} (offset {})", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn tree(&mut self) -> LabResult<TreeShape> {
        self.skip_ws();
        match self.src.get(self.pos) {
            Some(b'(') => {
                self.pos += 1;
                let left = self.tree()?;
                let right = self.tree()?;
                self.skip_ws();
                if self.src.get(self.pos) != Some(&b')') {
                    return Err(self.err("expected `)`: internal nodes have exactly two children"));
                }
                self.pos += 1;
                Ok(TreeShape::join(left, right))
            }
            Some(b) if b.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                s.parse()
                    .map(TreeShape::Leaf)
                    .map_err(|_| self.err("leaf index too large"))
            }
            Some(_) => Err(self.err("expected `(` or a leaf index")),
            None => Err(self.err("unexpected end of tree")),
        }
    }
}
