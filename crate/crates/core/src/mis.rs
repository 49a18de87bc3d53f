//! Exact maximum independent set by branch and bound.
//!
//! An independent set of `G` is a clique of the complement, so this is a
//! maximum-clique search on complement rows: candidates are greedily split
//! into classes that are pairwise non-adjacent in the complement (cliques
//! of `G`), and a branch is cut once `current + classes` cannot beat the
//! incumbent, since an independent set meets each clique of `G` at most once.

use fixedbitset::FixedBitSet;

use crate::graph::Graph;

struct Search {
    /// complement adjacency
    rows: Vec<FixedBitSet>,
    best: Vec<usize>,
}

impl Search {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let rows = (0..n)
            .map(|u| {
                let mut row = g.neighbours(u).clone();
                row.toggle_range(..);
                row.set(u, false);
                row
            })
            .collect();
        Search { rows, best: Vec::new() }
    }

    /// Greedy classes over `candidates`: returns vertices in class order
    /// together with the (1-based) class of each.
    fn classify(&self, candidates: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
        let mut uncoloured = candidates.clone();
        let mut order = Vec::with_capacity(candidates.count_ones(..));
        let mut classes = Vec::with_capacity(order.capacity());
        let mut class = 0;
        while !uncoloured.is_clear() {
            class += 1;
            let mut open = uncoloured.clone();
            while let Some(v) = open.minimum() {
                open.set(v, false);
                open.difference_with(&self.rows[v]);
                uncoloured.set(v, false);
                order.push(v);
                classes.push(class);
            }
        }
        (order, classes)
    }

    fn expand(&mut self, current: &mut Vec<usize>, mut candidates: FixedBitSet) {
        let (order, classes) = self.classify(&candidates);
        for i in (0..order.len()).rev() {
            if current.len() + classes[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            current.push(v);
            let mut next = candidates.clone();
            next.intersect_with(&self.rows[v]);
            if next.is_clear() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, next);
            }
            current.pop();
            candidates.set(v, false);
        }
    }
}

/// A maximum independent set of `g`, sorted. Deterministic for a given
/// graph.
pub fn max_independent_set(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut search = Search::new(g);
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    search.expand(&mut Vec::new(), all);
    let mut best = search.best;
    best.sort_unstable();
    best
}

pub fn independence_number(g: &Graph) -> usize {
    max_independent_set(g).len()
}
