//! Plain-text graph format.
//!
//! ```text
//! p edge <n> <m>
//! e <u> <v>        (m lines, 0-based ids, u < v, ascending by (u, v))
//! ```
//!
//! Lines starting with `c` are comments; they are skipped on read and never
//! written. A graph whose ids have gaps is written with `n = max id + 1`, so
//! the gaps come back as isolated vertices.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `p edge <n> <m>` header")]
    MissingHeader,
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn write_graph(g: &Graph) -> String {
    let n = g.max_id().map_or(0, |v| u64::from(v.0) + 1);
    let mut out = format!("p edge {n} {}\n", g.edge_count());
    for e in g.edges() {
        writeln!(out, "e {} {}", e.lo(), e.hi()).unwrap();
    }
    out
}

pub fn read_graph(text: &str) -> Result<Graph, FormatError> {
    let mut header: Option<(u32, usize)> = None;
    let mut seen = BTreeSet::new();
    let mut g = Graph::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let syntax = |msg: &str| FormatError::Syntax {
            line,
            msg: msg.to_string(),
        };
        if raw.trim_start().starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields.first().copied() {
            None => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(syntax("duplicate header"));
                }
                let [_, "edge", n, m] = fields[..] else {
                    return Err(syntax("expected `p edge <n> <m>`"));
                };
                let n: u32 = n
                    .parse()
                    .map_err(|_| syntax("vertex count is not a non-negative integer"))?;
                let m: usize = m
                    .parse()
                    .map_err(|_| syntax("edge count is not a non-negative integer"))?;
                for v in 0..n {
                    g.add_vertex(v);
                }
                header = Some((n, m));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(FormatError::MissingHeader);
                };
                let [_, u, v] = fields[..] else {
                    return Err(syntax("expected `e <u> <v>`"));
                };
                let u: u32 = u
                    .parse()
                    .map_err(|_| syntax("vertex id is not a non-negative integer"))?;
                let v: u32 = v
                    .parse()
                    .map_err(|_| syntax("vertex id is not a non-negative integer"))?;
                if u >= n || v >= n {
                    return Err(syntax(&format!("vertex id out of range 0..{n}")));
                }
                let e = Edge::new(u, v).map_err(|err| syntax(&err.to_string()))?;
                if !seen.insert(e) {
                    return Err(syntax(&format!("duplicate edge {e}")));
                }
                g.add_edge(u, v)?;
            }
            Some(_) => return Err(syntax("unrecognised line")),
        }
    }

    let (_, m) = header.ok_or(FormatError::MissingHeader)?;
    if g.edge_count() != m {
        return Err(FormatError::EdgeCount {
            expected: m,
            found: g.edge_count(),
        });
    }
    Ok(g)
}
