//! WebAssembly bindings for the browser demo. Each export returns a JSON
//! string; the plain functions underneath are what the tests exercise.

use std::collections::BTreeMap;

use num_rational::Ratio;
use pgq::bounds::{neumaier_bound, optimal_four_term_bound, quadratic_bound};
use pgq::graph::claw_numbers;
use pgq::incidence::extract_gq;
use pgq::scan::check_one;
use pgq::{generators, verify_srg, GqParams};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest `t` the bound plot accepts.
pub const MAX_T: u64 = 100;
/// Largest generator parameter the graph explorer accepts.
pub const MAX_M: usize = 12;

#[derive(Debug, Serialize)]
pub struct BoundRow {
    pub t: u64,
    pub neumaier: u64,
    pub quadratic: u64,
    /// exact value, e.g. `"45/2"`
    pub four_term: String,
    pub four_term_value: f64,
    pub theta: u64,
    pub beta: u64,
    pub t_squared: u64,
}

fn to_f64(r: &Ratio<i128>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

pub fn bound_rows(t_max: u64) -> Result<Vec<BoundRow>, String> {
    if !(2..=MAX_T).contains(&t_max) {
        return Err(format!("t_max must lie in [2, {MAX_T}]"));
    }
    (2..=t_max)
        .map(|t| {
            let optimal = optimal_four_term_bound(t).map_err(|e| e.to_string())?;
            Ok(BoundRow {
                t,
                neumaier: neumaier_bound(t).map_err(|e| e.to_string())?,
                quadratic: quadratic_bound(t).map_err(|e| e.to_string())?,
                four_term: optimal.bound.to_string(),
                four_term_value: to_f64(&optimal.bound),
                theta: optimal.choice.theta,
                beta: optimal.choice.beta,
                t_squared: t * t,
            })
        })
        .collect()
}

pub fn check_json(s: u64, t: u64) -> Result<String, String> {
    let p = GqParams::new(s, t).map_err(|e| e.to_string())?;
    let report = check_one(p).map_err(|e| e.to_string())?;
    serde_json::to_string(&report.record()).map_err(|e| e.to_string())
}

#[derive(Debug, Serialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
    /// `[v, k, lambda, mu]`, absent if the graph is not strongly regular
    pub srg: Option<[u64; 4]>,
    pub srg_error: Option<String>,
    /// `[s, t]` when the parameters have generalized quadrangle form
    pub gq_form: Option<[u64; 2]>,
    /// claw number to vertex count
    pub claws: BTreeMap<usize, usize>,
    /// line count when the graph is a GQ collinearity graph
    pub lines: Option<usize>,
    pub extraction_error: Option<String>,
}

pub fn explore(name: &str, m: Option<usize>) -> Result<GraphSummary, String> {
    if m.is_some_and(|m| m > MAX_M) {
        return Err(format!("m must be at most {MAX_M}"));
    }
    let g = generators::by_name(name, m).map_err(|e| e.to_string())?;
    let mut claws = BTreeMap::new();
    for c in claw_numbers(&g) {
        *claws.entry(c).or_insert(0) += 1;
    }
    let mut summary = GraphSummary {
        vertices: g.n(),
        edges: g.edge_count(),
        srg: None,
        srg_error: None,
        gq_form: None,
        claws,
        lines: None,
        extraction_error: None,
    };
    let q = match verify_srg(&g) {
        Ok(q) => q,
        Err(e) => {
            summary.srg_error = Some(e.to_string());
            return Ok(summary);
        }
    };
    summary.srg = Some([q.v(), q.k(), q.lambda(), q.mu()]);
    if let Some(p) = q.identify_gq_form() {
        summary.gq_form = Some([p.s(), p.t()]);
        match extract_gq(&g, p) {
            Ok(inc) => summary.lines = Some(inc.lines().len()),
            Err(e) => summary.extraction_error = Some(e.to_string()),
        }
    }
    Ok(summary)
}

fn js_result(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

/// Neumaier, quadratic and optimal four-term bounds for `t = 2..=t_max`.
#[wasm_bindgen]
pub fn bound_series(t_max: u32) -> Result<String, JsError> {
    js_result(bound_rows(t_max.into()).and_then(|rows| serde_json::to_string(&rows).map_err(|e| e.to_string())))
}

/// Feasibility report for `(s, t)`.
#[wasm_bindgen]
pub fn check_params(s: u32, t: u32) -> Result<String, JsError> {
    js_result(check_json(s.into(), t.into()))
}

/// Builds a named graph and summarises its structure. `m` is ignored by
/// the fixed-size generators; pass 0 to omit it.
#[wasm_bindgen]
pub fn explore_graph(name: &str, m: u32) -> Result<String, JsError> {
    let m = (m > 0).then_some(m as usize);
    js_result(explore(name, m).and_then(|s| serde_json::to_string(&s).map_err(|e| e.to_string())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_shape() {
        let rows = bound_rows(10).unwrap();
        assert_eq!(rows.len(), 9);
        assert_eq!((rows[0].neumaier, rows[0].quadratic, rows[0].four_term.as_str()), (12, 12, "14"));
        let t4 = &rows[2];
        assert_eq!((t4.t, t4.quadratic, t4.four_term_value), (4, 44, 44.0));
        assert!(bound_rows(1).is_err());
        assert!(bound_rows(MAX_T + 1).is_err());
    }

    #[test]
    fn check_report() {
        let v: serde_json::Value = serde_json::from_str(&check_json(56, 4).unwrap()).unwrap();
        assert_eq!(v["classification"], "ruled-out-by-new-bound");
        assert!(check_json(0, 3).is_err());
    }

    #[test]
    fn explorer() {
        let s = explore("shrikhande", None).unwrap();
        assert_eq!(s.srg, Some([16, 6, 2, 2]));
        assert_eq!(s.gq_form, Some([3, 1]));
        assert_eq!(s.claws, BTreeMap::from([(3, 16)]));
        assert!(s.lines.is_none() && s.extraction_error.is_some());

        let r = explore("rook", Some(4)).unwrap();
        assert_eq!(r.lines, Some(8));
        assert_eq!(explore("w3", None).unwrap().lines, Some(40));
        assert!(explore("rook", Some(MAX_M + 1)).is_err());
        assert!(explore("petersen", None).is_err());
    }
}
