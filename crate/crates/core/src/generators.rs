//! Small graphs with GQ-form parameters, used as a test corpus.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn require_m(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::InvalidParams(format!("m must be at least 2 (got {m})")));
    }
    Ok(())
}

/// `m x m` rook's graph: vertex `m*i + j`, adjacent when in the same row or
/// column. Collinearity graph of a GQ(m-1, 1).
pub fn rook(m: usize) -> Result<Graph> {
    require_m(m)?;
    Ok(Graph::from_fn(m * m, |a, b| a / m == b / m || a % m == b % m))
}

/// `K_{m,m}` with parts `0..m` and `m..2m`. Collinearity graph of a
/// GQ(1, m-1).
pub fn complete_bipartite(m: usize) -> Result<Graph> {
    require_m(m)?;
    Ok(Graph::from_fn(2 * m, |a, b| (a < m) != (b < m)))
}

/// 2-subsets of `{0..6}` in lexicographic order, adjacent when disjoint.
/// Collinearity graph of the GQ(2, 2).
pub fn kneser_6_2() -> Graph {
    let duads: Vec<(usize, usize)> = (0..6)
        .flat_map(|i| (i + 1..6).map(move |j| (i, j)))
        .collect();
    Graph::from_fn(duads.len(), |a, b| {
        let (x, y) = (duads[a], duads[b]);
        x.0 != y.0 && x.0 != y.1 && x.1 != y.0 && x.1 != y.1
    })
}

/// Points of PG(3, 3) whose first nonzero coordinate is 1, in
/// lexicographic order.
pub fn projective_points_f3() -> Vec<[u8; 4]> {
    let mut points = Vec::with_capacity(40);
    for code in 0..81u32 {
        let mut x = [0u8; 4];
        let mut c = code;
        for slot in x.iter_mut().rev() {
            *slot = (c % 3) as u8;
            c /= 3;
        }
        if x.iter().find(|&&a| a != 0) == Some(&1) {
            points.push(x);
        }
    }
    points
}

/// The symplectic quadrangle W(3): the 40 points of PG(3, 3), adjacent when
/// distinct and orthogonal under `x0 y1 - x1 y0 + x2 y3 - x3 y2`.
/// Strongly regular with parameters (40, 12, 2, 4).
pub fn symplectic_w3() -> Graph {
    let points = projective_points_f3();
    Graph::from_fn(points.len(), |a, b| {
        let (x, y) = (points[a].map(i32::from), points[b].map(i32::from));
        let form = x[0] * y[1] - x[1] * y[0] + x[2] * y[3] - x[3] * y[2];
        form.rem_euclid(3) == 0
    })
}

/// Cayley graph on `Z4 x Z4` (vertex `4a + b`) with connection set
/// `{±(1,0), ±(0,1), ±(1,1)}`. Same parameters as the 4 x 4 rook's graph.
pub fn shrikhande() -> Graph {
    const STEPS: [(usize, usize); 6] = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)];
    Graph::from_fn(16, |u, v| {
        let d = ((v / 4 + 4 - u / 4) % 4, (v % 4 + 4 - u % 4) % 4);
        STEPS.contains(&d)
    })
}

/// Generator by name, as used on the command line and in the web demo.
pub fn by_name(name: &str, m: Option<usize>) -> Result<Graph> {
    let needs_m = || m.ok_or_else(|| Error::InvalidParams(format!("generator {name} needs m")));
    match name {
        "rook" => rook(needs_m()?),
        "bipartite" => complete_bipartite(needs_m()?),
        "kneser" => Ok(kneser_6_2()),
        "w3" => Ok(symplectic_w3()),
        "shrikhande" => Ok(shrikhande()),
        _ => Err(Error::InvalidParams(format!("unknown generator {name}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(rook(4).unwrap().n(), 16);
        assert_eq!(rook(4).unwrap().edge_count(), 48);
        assert_eq!(complete_bipartite(3).unwrap().edge_count(), 9);
        assert_eq!(kneser_6_2().edge_count(), 45);
        assert_eq!(projective_points_f3().len(), 40);
        assert_eq!(symplectic_w3().edge_count(), 240);
        assert_eq!(shrikhande().edge_count(), 48);
        assert!(rook(1).is_err());
        assert!(complete_bipartite(0).is_err());
    }

    #[test]
    fn named() {
        assert_eq!(by_name("rook", Some(3)).unwrap(), rook(3).unwrap());
        assert!(by_name("rook", None).is_err());
        assert!(by_name("petersen", None).is_err());
        assert_eq!(by_name("w3", None).unwrap().n(), 40);
    }
}
