//! Text formats: a plain 0-based edge list and DIMACS `.col` (1-based).
//!
//! Edge list:
//!
//! ```text
//! c optional comment
//! 4 4
//! 0 1
//! 1 2
//! 2 3
//! 3 0
//! ```
//!
//! DIMACS:
//!
//! ```text
//! c optional comment
//! p edge 3 2
//! e 1 2
//! e 2 3
//! ```
//!
//! In both formats lines starting with `c` and blank lines are skipped, and
//! the number of edge lines must match the header.

use std::fmt::Write;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Upper bound on the vertex count a header may declare.
pub const MAX_VERTICES: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    EdgeList,
    Dimacs,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edgelist" => Ok(Format::EdgeList),
            "dimacs" => Ok(Format::Dimacs),
            other => Err(format!("unknown format {other:?}, expected edgelist or dimacs")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("missing header line")]
    MissingHeader,
    #[error("header declares {declared} edges but {found} edge lines were read")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("header declares {n} vertices, more than the supported {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

fn malformed(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Malformed {
        line,
        message: message.into(),
    }
}

/// Non-comment, non-blank lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c'))
}

fn parse_usize(line: usize, tok: &str) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| malformed(line, format!("expected a non-negative integer, found {tok:?}")))
}

fn exact_fields(line: usize, text: &str, count: usize) -> Result<Vec<&str>, ParseError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != count {
        return Err(malformed(
            line,
            format!("expected {count} fields, found {}", fields.len()),
        ));
    }
    Ok(fields)
}

struct Builder {
    n: usize,
    declared: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new(n: usize, declared: usize) -> Result<Self, ParseError> {
        if n > MAX_VERTICES {
            return Err(ParseError::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Builder {
            n,
            declared,
            edges: Vec::new(),
        })
    }

    fn push(&mut self, line: usize, u: usize, v: usize) -> Result<(), ParseError> {
        if u >= self.n || v >= self.n {
            return Err(ParseError::Graph {
                line,
                source: GraphError::EdgeOutOfRange { u, v, n: self.n },
            });
        }
        if u == v {
            return Err(ParseError::Graph {
                line,
                source: GraphError::SelfLoop { v },
            });
        }
        self.edges.push((u, v));
        Ok(())
    }

    fn finish(self) -> Result<Graph, ParseError> {
        if self.edges.len() != self.declared {
            return Err(ParseError::EdgeCountMismatch {
                declared: self.declared,
                found: self.edges.len(),
            });
        }
        Ok(Graph::from_edges(self.n, &self.edges).expect("edges validated while parsing"))
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let f = exact_fields(hl, header, 2)?;
    let mut b = Builder::new(parse_usize(hl, f[0])?, parse_usize(hl, f[1])?)?;
    for (line, text) in lines {
        let f = exact_fields(line, text, 2)?;
        b.push(line, parse_usize(line, f[0])?, parse_usize(line, f[1])?)?;
    }
    b.finish()
}

pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut builder: Option<Builder> = None;
    for (line, text) in content_lines(text) {
        match text.split_whitespace().next() {
            Some("p") => {
                if builder.is_some() {
                    return Err(malformed(line, "duplicate problem line"));
                }
                let f = exact_fields(line, text, 4)?;
                if f[1] != "edge" && f[1] != "col" {
                    return Err(malformed(line, format!("unsupported problem type {:?}", f[1])));
                }
                builder = Some(Builder::new(parse_usize(line, f[2])?, parse_usize(line, f[3])?)?);
            }
            Some("e") => {
                let b = builder
                    .as_mut()
                    .ok_or_else(|| malformed(line, "edge before problem line"))?;
                let f = exact_fields(line, text, 3)?;
                let (u, v) = (parse_usize(line, f[1])?, parse_usize(line, f[2])?);
                if u == 0 || v == 0 {
                    return Err(malformed(line, "DIMACS vertices are numbered from 1"));
                }
                b.push(line, u - 1, v - 1)?;
            }
            _ => return Err(malformed(line, format!("unrecognized line {text:?}"))),
        }
    }
    builder.ok_or(ParseError::MissingHeader)?.finish()
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => write_edge_list(g),
        Format::Dimacs => write_dimacs(g),
    }
}
