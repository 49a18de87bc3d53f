//! Exact feasibility checks for strongly regular graphs with the parameters
//! `((s+1)(st+1), s(t+1), s-1, t+1)` of a generalized quadrangle, and
//! verification tools for concrete graphs and incidence structures with
//! those parameters.

pub mod bounds;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod incidence;
pub mod mis;
pub mod params;
pub mod scan;
pub mod verdict;

pub use bounds::{
    claw_inequality_check, four_term_bound, neumaier_bound, optimal_four_term_bound, pgq_ruled_out,
    quadratic_bound, BoundChoice, BoundResult, OptimalBound,
};
pub use error::{Error, Result};
pub use graph::{verify_srg, CliqueCover, Graph};
pub use incidence::{collinearity_graph, dual, extract_gq, verify_axioms, IncidenceStructure};
pub use params::{derive_srg, GqParams, Spectrum, SrgParams};
pub use scan::{check_one, scan, Classification, FeasibilityReport, ScanRange};
pub use verdict::{Check, Verdict};
