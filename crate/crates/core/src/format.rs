//! Plain-text graph and incidence files.
//!
//! ```text
//! pgqgraph 1          pgqinc 1
//! n m                 points lines s t
//! u v   (m lines)     p0 p1 ... ps   (one line per line, sorted)
//! ```
//!
//! Graph edges satisfy `0 <= u < v < n` and are written in lexicographic
//! order; reading accepts them in any order.

use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::graph::Graph;
use crate::incidence::IncidenceStructure;
use crate::params::GqParams;

pub const GRAPH_HEADER: &str = "pgqgraph 1";
pub const INCIDENCE_HEADER: &str = "pgqinc 1";

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

struct Lines<R> {
    inner: io::Lines<R>,
    number: usize,
}

impl<R: BufRead> Lines<R> {
    fn new(reader: R) -> Self {
        Lines { inner: reader.lines(), number: 0 }
    }

    fn next_line(&mut self, what: &str) -> Result<String, FormatError> {
        self.number += 1;
        match self.inner.next() {
            Some(line) => Ok(line?),
            None => Err(syntax(self.number, format!("unexpected end of input, expected {what}"))),
        }
    }

    fn numbers(&mut self, what: &str, count: Option<usize>) -> Result<Vec<usize>, FormatError> {
        let line = self.next_line(what)?;
        let fields: Vec<usize> = line
            .split_ascii_whitespace()
            .map(|f| f.parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|e| syntax(self.number, format!("bad {what}: {e}")))?;
        if let Some(count) = count {
            if fields.len() != count {
                return Err(syntax(
                    self.number,
                    format!("expected {count} numbers for {what}, found {}", fields.len()),
                ));
            }
        }
        Ok(fields)
    }

    fn expect_header(&mut self, header: &str) -> Result<(), FormatError> {
        let line = self.next_line("header")?;
        if line.trim_end() != header {
            return Err(syntax(self.number, format!("expected header {header:?}, found {line:?}")));
        }
        Ok(())
    }

    fn expect_end(&mut self) -> Result<(), FormatError> {
        for line in self.inner.by_ref() {
            self.number += 1;
            if !line?.trim().is_empty() {
                return Err(syntax(self.number, "trailing data"));
            }
        }
        Ok(())
    }
}

pub fn read_graph<R: BufRead>(reader: R) -> Result<Graph, FormatError> {
    let mut lines = Lines::new(reader);
    lines.expect_header(GRAPH_HEADER)?;
    let head = lines.numbers("vertex and edge counts", Some(2))?;
    let (n, m) = (head[0], head[1]);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let e = lines.numbers("edge", Some(2))?;
        let (u, v) = (e[0], e[1]);
        if u >= v || v >= n {
            return Err(syntax(lines.number, format!("edge {u} {v} violates 0 <= u < v < {n}")));
        }
        edges.push((u, v));
    }
    lines.expect_end()?;
    Graph::from_edges(n, edges).map_err(|e| syntax(lines.number, e.to_string()))
}

pub fn write_graph<W: Write>(g: &Graph, mut out: W) -> io::Result<()> {
    writeln!(out, "{GRAPH_HEADER}")?;
    writeln!(out, "{} {}", g.n(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

pub fn graph_to_string(g: &Graph) -> String {
    let mut buf = Vec::new();
    write_graph(g, &mut buf).expect("writing to a Vec");
    String::from_utf8(buf).expect("ASCII output")
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    read_graph(text.as_bytes())
}

pub fn read_incidence<R: BufRead>(reader: R) -> Result<IncidenceStructure, FormatError> {
    let mut lines = Lines::new(reader);
    lines.expect_header(INCIDENCE_HEADER)?;
    let head = lines.numbers("points, lines, s and t", Some(4))?;
    let (points, count) = (head[0], head[1]);
    let params = GqParams::new(head[2] as u64, head[3] as u64)
        .map_err(|e| syntax(lines.number, e.to_string()))?;
    let mut rows = Vec::with_capacity(count);
    for _ in 0..count {
        let row = lines.numbers("line", None)?;
        if row.windows(2).any(|w| w[0] >= w[1]) {
            return Err(syntax(lines.number, "points of a line must be strictly increasing"));
        }
        rows.push(row);
    }
    lines.expect_end()?;
    IncidenceStructure::new(points, rows, params).map_err(|e| syntax(lines.number, e.to_string()))
}

pub fn write_incidence<W: Write>(inc: &IncidenceStructure, mut out: W) -> io::Result<()> {
    let p = inc.params();
    writeln!(out, "{INCIDENCE_HEADER}")?;
    writeln!(out, "{} {} {} {}", inc.points(), inc.lines().len(), p.s(), p.t())?;
    for line in inc.lines() {
        let fields: Vec<String> = line.iter().map(usize::to_string).collect();
        writeln!(out, "{}", fields.join(" "))?;
    }
    Ok(())
}

pub fn incidence_to_string(inc: &IncidenceStructure) -> String {
    let mut buf = Vec::new();
    write_incidence(inc, &mut buf).expect("writing to a Vec");
    String::from_utf8(buf).expect("ASCII output")
}

pub fn parse_incidence(text: &str) -> Result<IncidenceStructure, FormatError> {
    read_incidence(text.as_bytes())
}
