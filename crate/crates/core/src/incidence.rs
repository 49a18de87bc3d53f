//! Point-line incidence structures, the generalized quadrangle axioms, and
//! recovery of a quadrangle from a graph whose claw numbers are all `t + 1`.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

use crate::error::{Error, Result};
use crate::graph::{self, claw_numbers, clique_partition_of_local, Graph, SrgError};
use crate::params::{GqParams, SrgParams};

/// Points `0..points` and lines given as sorted point lists, with declared
/// orders `(s, t)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidenceStructure {
    points: usize,
    lines: Vec<Vec<usize>>,
    params: GqParams,
}

impl IncidenceStructure {
    /// Sorts every line and rejects out-of-range or repeated points. The
    /// axioms are not checked; see [`verify_axioms`].
    pub fn new(points: usize, lines: Vec<Vec<usize>>, params: GqParams) -> Result<Self> {
        let mut sorted = Vec::with_capacity(lines.len());
        for (i, mut line) in lines.into_iter().enumerate() {
            line.sort_unstable();
            if let Some(&p) = line.iter().find(|&&p| p >= points) {
                return Err(Error::InvalidParams(format!(
                    "line {i} contains point {p}, but there are only {points} points"
                )));
            }
            if line.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParams(format!("line {i} repeats a point")));
            }
            sorted.push(line);
        }
        Ok(IncidenceStructure { points, lines: sorted, params })
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn params(&self) -> GqParams {
        self.params
    }

    /// Line indices through each point, in increasing order.
    pub fn pencils(&self) -> Vec<Vec<usize>> {
        let mut pencils = vec![Vec::new(); self.points];
        for (i, line) in self.lines.iter().enumerate() {
            for &p in line {
                pencils[p].push(i);
            }
        }
        pencils
    }

    pub fn without_line(&self, index: usize) -> IncidenceStructure {
        let mut lines = self.lines.clone();
        lines.remove(index);
        IncidenceStructure { lines, ..self.clone() }
    }
}

/// First violated axiom, scanning points and lines in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "axiom", rename_all = "kebab-case")]
pub enum AxiomViolation {
    #[error("line {line} has {size} points, expected s + 1 = {expected}")]
    LineSize { line: usize, size: usize, expected: u64 },
    #[error("point {point} is on {degree} lines, expected t + 1 = {expected}")]
    PointDegree { point: usize, degree: usize, expected: u64 },
    #[error("points {p} and {q} lie on more than one common line")]
    SharedLines { p: usize, q: usize },
    #[error("point {point} is collinear with {collinear} points of line {line}, expected 1")]
    NotUniqueProjection { point: usize, line: usize, collinear: usize },
}

/// Checks line sizes, point degrees, that two points share at most one line
/// (equivalently two lines at most one point), and that every point off a
/// line is collinear with exactly one of its points.
pub fn verify_axioms(inc: &IncidenceStructure) -> std::result::Result<(), AxiomViolation> {
    let (s, t) = (inc.params.s(), inc.params.t());
    if let Some((line, l)) = inc.lines.iter().enumerate().find(|(_, l)| l.len() as u64 != s + 1) {
        return Err(AxiomViolation::LineSize { line, size: l.len(), expected: s + 1 });
    }
    let pencils = inc.pencils();
    if let Some((point, p)) = pencils.iter().enumerate().find(|(_, p)| p.len() as u64 != t + 1) {
        return Err(AxiomViolation::PointDegree { point, degree: p.len(), expected: t + 1 });
    }

    let n = inc.points;
    let mut collinear = vec![FixedBitSet::with_capacity(n); n];
    let mut shared = vec![0usize; n];
    for p in 0..n {
        for &l in &pencils[p] {
            for &q in &inc.lines[l] {
                if q != p {
                    shared[q] += 1;
                    collinear[p].insert(q);
                }
            }
        }
        if let Some(q) = (0..n).find(|&q| shared[q] > 1) {
            return Err(AxiomViolation::SharedLines { p: p.min(q), q: p.max(q) });
        }
        shared.iter_mut().for_each(|c| *c = 0);
    }

    for (p, row) in collinear.iter().enumerate() {
        for (l, line) in inc.lines.iter().enumerate() {
            if line.binary_search(&p).is_ok() {
                continue;
            }
            let count = line.iter().filter(|&&q| row.contains(q)).count();
            if count != 1 {
                return Err(AxiomViolation::NotUniqueProjection { point: p, line: l, collinear: count });
            }
        }
    }
    Ok(())
}

/// Swaps points and lines: point `i` of the dual is line `i`, and line `p`
/// of the dual is the pencil of point `p`. Declared orders become `(t, s)`.
pub fn dual(inc: &IncidenceStructure) -> Result<IncidenceStructure> {
    verify_axioms(inc).map_err(|e| Error::Domain(format!("dual of a non-quadrangle: {e}")))?;
    Ok(IncidenceStructure {
        points: inc.lines.len(),
        lines: inc.pencils(),
        params: inc.params.dual(),
    })
}

/// Points adjacent when they share a line.
pub fn collinearity_graph(inc: &IncidenceStructure) -> Graph {
    let mut collinear = vec![FixedBitSet::with_capacity(inc.points); inc.points];
    for line in &inc.lines {
        let set = line_set(line, inc.points);
        for &p in line {
            collinear[p].union_with(&set);
        }
    }
    Graph::from_fn(inc.points, |u, v| collinear[u].contains(v))
}

fn line_set(line: &[usize], n: usize) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(n);
    set.extend(line.iter().copied());
    set
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtractError {
    #[error(transparent)]
    Params(#[from] Error),
    #[error("not strongly regular: {0}")]
    NotStronglyRegular(SrgError),
    #[error("graph is {found}, but the parameters require {expected}")]
    ParamMismatch { found: SrgParams, expected: SrgParams },
    /// Some vertex centres a claw larger than `t + 1`: evidence that the
    /// graph is a pseudo-quadrangle rather than a collinearity graph.
    #[error("pseudo-GQ evidence: vertex {vertex} has claw number {claw_number} > t + 1 = {required}")]
    PseudoGq { vertex: usize, claw_number: usize, required: u64 },
    /// The extraction produced something that is not a quadrangle even
    /// though every claw number is `t + 1`; this indicates a bug.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// Rebuilds the quadrangle of a graph in which every vertex has claw number
/// `t + 1`: lines are the sets `{x} ∪ C` over all cliques `C` of every local
/// partition.
pub fn extract_gq(g: &Graph, p: GqParams) -> std::result::Result<IncidenceStructure, ExtractError> {
    let expected = p.srg()?;
    let found = graph::verify_srg(g).map_err(ExtractError::NotStronglyRegular)?;
    if found != expected {
        return Err(ExtractError::ParamMismatch { found, expected });
    }
    let required = p.t() + 1;
    let claws = claw_numbers(g);
    for (vertex, &c) in claws.iter().enumerate() {
        if c as u64 > required {
            return Err(ExtractError::PseudoGq { vertex, claw_number: c, required });
        }
        if (c as u64) < required {
            return Err(ExtractError::Internal(format!(
                "vertex {vertex} has claw number {c} < t + 1 = {required}"
            )));
        }
    }

    let mut local_lines: Vec<Vec<Vec<usize>>> = Vec::with_capacity(g.n());
    for x in 0..g.n() {
        let cover = clique_partition_of_local(g, x, p)
            .map_err(|e| ExtractError::Internal(format!("local partition at {x}: {e}")))?;
        let lines = cover
            .cliques
            .into_iter()
            .map(|mut c| {
                c.push(x);
                c.sort_unstable();
                c
            })
            .collect();
        local_lines.push(lines);
    }

    let line_through = |x: usize, y: usize| {
        local_lines[x]
            .iter()
            .find(|l| l.binary_search(&y).is_ok())
            .expect("partition covers every neighbour")
    };
    for (x, y) in g.edges() {
        if line_through(x, y) != line_through(y, x) {
            return Err(ExtractError::Internal(format!(
                "edge ({x}, {y}) gets different lines from its two ends"
            )));
        }
    }

    let lines: BTreeSet<Vec<usize>> = local_lines.into_iter().flatten().collect();
    let inc = IncidenceStructure::new(g.n(), lines.into_iter().collect(), p)?;
    let want = p.line_count()?;
    if inc.lines.len() as u64 != want {
        return Err(ExtractError::Internal(format!(
            "{} lines extracted, expected (st+1)(t+1) = {want}",
            inc.lines.len()
        )));
    }
    verify_axioms(&inc).map_err(|e| ExtractError::Internal(format!("axiom check failed: {e}")))?;
    Ok(inc)
}
