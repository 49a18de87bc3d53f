use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

/// Outcome of a single necessary condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "na")]
    NotApplicable,
}

impl Verdict {
    pub fn from_bool(pass: bool) -> Self {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "na",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A named condition together with its verdict and a human-readable witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub verdict: Verdict,
    pub witness: String,
}

impl Check {
    pub fn new(name: &'static str, verdict: Verdict, witness: impl Into<String>) -> Self {
        Check {
            name,
            verdict,
            witness: witness.into(),
        }
    }

    pub fn not_applicable(name: &'static str, why: impl Into<String>) -> Self {
        Check::new(name, Verdict::NotApplicable, why)
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }
}

/// Renders an exact rational as a reduced fraction, followed by a short
/// decimal approximation when it is not an integer. Display only.
pub fn format_ratio(r: &Ratio<i128>) -> String {
    if r.is_integer() {
        return r.numer().to_string();
    }
    let approx = *r.numer() as f64 / *r.denom() as f64;
    let mut dec = format!("{approx:.4}");
    while dec.ends_with('0') {
        dec.pop();
    }
    if dec.ends_with('.') {
        dec.pop();
    }
    format!("{}/{} (~{dec})", r.numer(), r.denom())
}

/// `numerator/denominator` (or the integer) and a decimal rendering,
/// separated by a tab.
pub fn ratio_columns(r: &Ratio<i128>) -> String {
    let exact = if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    };
    let approx = *r.numer() as f64 / *r.denom() as f64;
    format!("{exact}\t{approx}")
}
