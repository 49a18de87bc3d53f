//! Simple undirected graphs with bitset adjacency rows, and the local
//! structure checks used to recognise generalized quadrangles.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

use crate::error::Error;
use crate::mis;
use crate::params::{GqParams, SrgParams};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
}

/// Immutable simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<FixedBitSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Loops, duplicate edges (in either
    /// orientation) and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if rows[u].contains(v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Graph { rows })
    }

    /// Builds a graph from a symmetric, loop-free adjacency predicate.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    rows[u].insert(v);
                    rows[v].insert(u);
                }
            }
        }
        Graph { rows }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn neighbours(&self, x: usize) -> &FixedBitSet {
        &self.rows[x]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.rows[x].count_ones(..)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// `|N(u) ∩ N(v)|`.
    pub fn common_neighbours(&self, u: usize, v: usize) -> usize {
        self.rows[u].intersection_count(&self.rows[v])
    }

    pub fn is_connected(&self) -> bool {
        self.first_unreached().is_none()
    }

    fn first_unreached(&self) -> Option<usize> {
        let n = self.n();
        if n == 0 {
            return None;
        }
        let mut seen = FixedBitSet::with_capacity(n);
        let mut queue = VecDeque::from([0]);
        seen.insert(0);
        while let Some(u) = queue.pop_front() {
            for v in self.rows[u].ones() {
                if !seen.put(v) {
                    queue.push_back(v);
                }
            }
        }
        seen.toggle_range(..);
        seen.minimum()
    }

    /// Subgraph induced on `vertices` (in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        Graph::from_fn(vertices.len(), |i, j| self.adjacent(vertices[i], vertices[j]))
    }

    /// Whether `vertices` are pairwise adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.adjacent(u, v)))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Why a graph is not strongly regular. Pairs are reported as the first
/// offending pair in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SrgError {
    #[error("the empty graph has no parameters")]
    Empty,
    #[error("vertex {vertex} has degree {degree}, vertex 0 has {expected}")]
    NotRegular { vertex: usize, degree: usize, expected: usize },
    #[error("graph is complete or edgeless")]
    Degenerate,
    #[error("graph is disconnected (vertex {0} unreachable from 0)")]
    Disconnected(usize),
    #[error("adjacent pair ({u}, {v}) has {found} common neighbours, expected {expected}")]
    Lambda { u: usize, v: usize, found: usize, expected: usize },
    #[error("non-adjacent pair ({u}, {v}) has {found} common neighbours, expected {expected}")]
    Mu { u: usize, v: usize, found: usize, expected: usize },
}

/// Returns `(v, k, lambda, mu)` if `g` is a connected, non-complete strongly
/// regular graph.
pub fn verify_srg(g: &Graph) -> Result<SrgParams, SrgError> {
    let n = g.n();
    if n == 0 {
        return Err(SrgError::Empty);
    }
    let k = g.degree(0);
    if let Some(vertex) = (1..n).find(|&x| g.degree(x) != k) {
        return Err(SrgError::NotRegular { vertex, degree: g.degree(vertex), expected: k });
    }
    if k == 0 || k == n - 1 {
        return Err(SrgError::Degenerate);
    }
    if let Some(x) = g.first_unreached() {
        return Err(SrgError::Disconnected(x));
    }
    let (mut lambda, mut mu) = (None, None);
    for u in 0..n {
        for v in u + 1..n {
            let found = g.common_neighbours(u, v);
            let (slot, adjacent) = if g.adjacent(u, v) {
                (&mut lambda, true)
            } else {
                (&mut mu, false)
            };
            let expected = *slot.get_or_insert(found);
            if found != expected {
                return Err(if adjacent {
                    SrgError::Lambda { u, v, found, expected }
                } else {
                    SrgError::Mu { u, v, found, expected }
                });
            }
        }
    }
    let params = SrgParams::new(
        n as u64,
        k as u64,
        lambda.unwrap_or(0) as u64,
        mu.unwrap_or(0) as u64,
    );
    Ok(params.expect("connected non-complete regular graph has valid parameters"))
}

/// The subgraph induced on the neighbourhood of `center`.
#[derive(Debug, Clone)]
pub struct LocalGraph {
    pub center: usize,
    /// Neighbours of `center` in increasing order; local vertex `i` is
    /// `vertices[i]`.
    pub vertices: Vec<usize>,
    pub graph: Graph,
}

pub fn local_graph(g: &Graph, x: usize) -> LocalGraph {
    let vertices: Vec<usize> = g.neighbours(x).ones().collect();
    let graph = g.induced(&vertices);
    LocalGraph { center: x, vertices, graph }
}

/// Size of a largest induced star centred at `x`, i.e. the independence
/// number of the local graph at `x`. Exact; exponential in the worst case.
pub fn claw_number(g: &Graph, x: usize) -> usize {
    mis::independence_number(&local_graph(g, x).graph)
}

/// Claw numbers of every vertex, in vertex order.
pub fn claw_numbers(g: &Graph) -> Vec<usize> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..g.n()).into_par_iter().map(|x| claw_number(g, x)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..g.n()).map(|x| claw_number(g, x)).collect()
    }
}

/// A family of vertex sets, each expected to induce a clique. Every set is
/// stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueCover {
    pub cliques: Vec<Vec<usize>>,
}

impl CliqueCover {
    pub fn new(cliques: Vec<Vec<usize>>) -> Self {
        let cliques = cliques
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        CliqueCover { cliques }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("vertex {vertex} has degree {degree}, expected k = {expected}")]
    DegreeMismatch { vertex: usize, degree: usize, expected: u64 },
    #[error("{{{vertex}}} + common neighbourhood has {size} vertices, expected {expected}")]
    WrongSize { vertex: usize, size: usize, expected: u64 },
    #[error("{{{vertex}}} + common neighbourhood is not a clique")]
    NotAClique { vertex: usize },
    #[error("candidate clique at {vertex} overlaps the clique of {other}")]
    Overlap { vertex: usize, other: usize },
    #[error("member {member} of the clique at {vertex} sees a different clique")]
    Inconsistent { vertex: usize, member: usize },
    #[error("found {found} cliques, expected t + 1 = {expected}")]
    WrongCount { found: usize, expected: u64 },
}

/// Splits the local graph at `x` into the `t + 1` cliques `{y} ∪ Γ(x, y)`
/// of order `s`, or reports the first vertex `y` for which that fails.
///
/// Only the degree of `x` is checked against `p`; callers are expected to
/// have matched the whole graph to `p` already.
pub fn clique_partition_of_local(
    g: &Graph,
    x: usize,
    p: GqParams,
) -> Result<CliqueCover, PartitionError> {
    let expected_k = p.s() * (p.t() + 1);
    let degree = g.degree(x);
    if degree as u64 != expected_k {
        return Err(PartitionError::DegreeMismatch { vertex: x, degree, expected: expected_k });
    }
    let local = g.neighbours(x);
    let mut owner: Vec<Option<usize>> = vec![None; g.n()];
    let mut cliques = Vec::new();
    for y in local.ones() {
        if owner[y].is_some() {
            continue;
        }
        let clique = candidate(g, local, y);
        if clique.len() as u64 != p.s() {
            return Err(PartitionError::WrongSize { vertex: y, size: clique.len(), expected: p.s() });
        }
        if !g.is_clique(&clique) {
            return Err(PartitionError::NotAClique { vertex: y });
        }
        if let Some(other) = clique.iter().find_map(|&z| owner[z]) {
            return Err(PartitionError::Overlap { vertex: y, other });
        }
        if let Some(&member) = clique.iter().find(|&&z| candidate(g, local, z) != clique) {
            return Err(PartitionError::Inconsistent { vertex: y, member });
        }
        for &z in &clique {
            owner[z] = Some(y);
        }
        cliques.push(clique);
    }
    if cliques.len() as u64 != p.t() + 1 {
        return Err(PartitionError::WrongCount { found: cliques.len(), expected: p.t() + 1 });
    }
    Ok(CliqueCover { cliques })
}

/// `{y} ∪ (N(y) ∩ local)`, sorted.
fn candidate(g: &Graph, local: &FixedBitSet, y: usize) -> Vec<usize> {
    let mut set = g.neighbours(y).clone();
    set.intersect_with(local);
    set.insert(y);
    set.ones().collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("clique {index} contains vertex {vertex}, which is out of range")]
    OutOfRange { index: usize, vertex: usize },
    #[error("clique {index} lists vertex {vertex} twice")]
    Repeated { index: usize, vertex: usize },
    #[error("set {index} is not a clique ({u} and {v} are not adjacent)")]
    NotAClique { index: usize, u: usize, v: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CoverViolation {
    Uncovered { u: usize, v: usize },
    Repeated { u: usize, v: usize, count: usize },
}

/// Result of checking a clique family against the edge set.
///
/// With `R` the vertex-clique incidence matrix, `RRᵀ - A` is diagonal
/// exactly when every edge lies in one clique; `diagonal[j]` is the number
/// of cliques on vertex `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub diagonal: Vec<usize>,
    pub violation: Option<CoverViolation>,
}

impl CoverReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks that every edge of `g` lies in exactly one set of `cover`.
/// Off-diagonal entries of `RRᵀ` are accumulated one row at a time.
pub fn verify_clique_cover(g: &Graph, cover: &CliqueCover) -> Result<CoverReport, CoverError> {
    let n = g.n();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (index, clique) in cover.cliques.iter().enumerate() {
        let mut seen = FixedBitSet::with_capacity(n);
        for &vertex in clique {
            if vertex >= n {
                return Err(CoverError::OutOfRange { index, vertex });
            }
            if seen.put(vertex) {
                return Err(CoverError::Repeated { index, vertex });
            }
        }
        for (i, &u) in clique.iter().enumerate() {
            if let Some(&v) = clique[i + 1..].iter().find(|&&v| !g.adjacent(u, v)) {
                return Err(CoverError::NotAClique { index, u: u.min(v), v: u.max(v) });
            }
            incident[u].push(index);
        }
    }

    let diagonal: Vec<usize> = incident.iter().map(Vec::len).collect();
    let mut row = vec![0usize; n];
    let mut violation = None;
    'rows: for u in 0..n {
        for &c in &incident[u] {
            for &w in &cover.cliques[c] {
                if w > u {
                    row[w] += 1;
                }
            }
        }
        for w in u + 1..n {
            let count = row[w];
            let expected = usize::from(g.adjacent(u, w));
            if count != expected {
                violation = Some(if count == 0 {
                    CoverViolation::Uncovered { u, v: w }
                } else {
                    CoverViolation::Repeated { u, v: w, count }
                });
                break 'rows;
            }
        }
        row.iter_mut().for_each(|x| *x = 0);
    }
    Ok(CoverReport { diagonal, violation })
}

/// Claw numbers of a graph matched to GQ-form parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClawCensus {
    pub claw_numbers: Vec<usize>,
    pub histogram: BTreeMap<usize, usize>,
    /// `t + 1`
    pub required: u64,
}

impl ClawCensus {
    pub fn from_claw_numbers(claw_numbers: Vec<usize>, p: GqParams) -> Self {
        let mut histogram = BTreeMap::new();
        for &c in &claw_numbers {
            *histogram.entry(c).or_insert(0) += 1;
        }
        ClawCensus { claw_numbers, histogram, required: p.t() + 1 }
    }

    pub fn min(&self) -> Option<usize> {
        self.histogram.keys().next().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.histogram.keys().next_back().copied()
    }

    /// Every claw number is at least `t + 1`.
    pub fn passed(&self) -> bool {
        self.min().is_some_and(|m| m as u64 >= self.required)
    }

    /// Smallest vertex whose claw number exceeds `t + 1`.
    pub fn first_excess(&self) -> Option<(usize, usize)> {
        self.claw_numbers
            .iter()
            .enumerate()
            .find(|&(_, &c)| c as u64 > self.required)
            .map(|(x, &c)| (x, c))
    }
}

/// Computes all claw numbers of `g` after checking that it is strongly
/// regular with the parameters derived from `p`.
pub fn claw_lower_bound_check(g: &Graph, p: GqParams) -> Result<ClawCensus, Error> {
    require_params(g, p)?;
    Ok(ClawCensus::from_claw_numbers(claw_numbers(g), p))
}

pub(crate) fn require_params(g: &Graph, p: GqParams) -> Result<SrgParams, Error> {
    let expected = p.srg()?;
    let found = verify_srg(g).map_err(|e| Error::Domain(format!("not strongly regular: {e}")))?;
    if found != expected {
        return Err(Error::Domain(format!(
            "graph is {found}, parameters {p} require {expected}"
        )));
    }
    Ok(found)
}
