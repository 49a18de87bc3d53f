//! Per-parameter feasibility reports and the `(s, t)` scan.

use std::fmt;
use std::io::{self, Write};

use serde::Serialize;

use crate::bounds::{neumaier_bound, optimal_four_term_bound, OptimalBound};
use crate::error::{Error, Result};
use crate::params::{derive_srg, gq_possible, krein_check, multiplicity_integrality, GqParams, SrgParams};
use crate::verdict::{format_ratio, Check, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    /// `s <= t^2` and every condition passes; a genuine GQ is not excluded.
    GqPossible,
    /// `s > t^2` but below the four-term bound; only a pseudo-GQ could exist.
    PgqPossibleOnly,
    /// Passes the classical conditions, excluded only by the four-term bound.
    RuledOutByNewBound,
    /// Fails Krein, divisibility or the Neumaier bound.
    RuledOutByPriorConditions,
    /// `s = 1` or `t = 1`.
    Trivial,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::GqPossible => "gq-possible",
            Classification::PgqPossibleOnly => "pgq-possible-only",
            Classification::RuledOutByNewBound => "ruled-out-by-new-bound",
            Classification::RuledOutByPriorConditions => "ruled-out-by-prior-conditions",
            Classification::Trivial => "trivial",
        }
    }

    pub fn is_ruled_out(self) -> bool {
        matches!(
            self,
            Classification::RuledOutByNewBound | Classification::RuledOutByPriorConditions
        )
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Names of the verdicts, in report order.
pub const CONDITIONS: [&str; 7] = [
    "consistency",
    "trivial-flag",
    "krein",
    "divisibility",
    "neumaier",
    "gq-duality",
    "quadratic-bound",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub params: GqParams,
    pub derived: SrgParams,
    pub verdicts: Vec<Check>,
    pub classification: Classification,
}

impl FeasibilityReport {
    pub fn verdict(&self, name: &str) -> Option<&Check> {
        self.verdicts.iter().find(|c| c.name == name)
    }

    pub fn record(&self) -> ReportRecord<'_> {
        ReportRecord {
            s: self.params.s(),
            t: self.params.t(),
            v: self.derived.v(),
            k: self.derived.k(),
            lambda: self.derived.lambda(),
            mu: self.derived.mu(),
            verdicts: &self.verdicts,
            classification: self.classification,
        }
    }
}

/// Flat JSON shape of a report.
#[derive(Debug, Serialize)]
pub struct ReportRecord<'a> {
    pub s: u64,
    pub t: u64,
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
    pub verdicts: &'a [Check],
    pub classification: Classification,
}

/// Per-`t` quantities shared by every `s` in a scan block.
struct Block {
    neumaier: u64,
    optimal: OptimalBound,
}

impl Block {
    fn new(t: u64) -> Result<Block> {
        Ok(Block {
            neumaier: neumaier_bound(t)?,
            optimal: optimal_four_term_bound(t)?,
        })
    }
}

/// Runs every condition on one parameter pair.
pub fn check_one(p: GqParams) -> Result<FeasibilityReport> {
    let block = if p.is_trivial() { None } else { Some(Block::new(p.t())?) };
    check_with(p, block.as_ref())
}

fn check_with(p: GqParams, block: Option<&Block>) -> Result<FeasibilityReport> {
    let derived = derive_srg(p)?;
    let mut verdicts = Vec::with_capacity(CONDITIONS.len());

    let consistent = derived.satisfies_counting_identity();
    verdicts.push(Check::new(
        "consistency",
        Verdict::from_bool(consistent),
        format!("{derived} satisfies k(k-lambda-1) = (v-k-1)mu: {consistent}"),
    ));

    let Some(block) = block else {
        verdicts.push(Check::new(
            "trivial-flag",
            Verdict::Fail,
            format!("trivial parameters {p}"),
        ));
        for name in &CONDITIONS[2..] {
            verdicts.push(Check::not_applicable(name, "trivial parameters"));
        }
        return Ok(FeasibilityReport { params: p, derived, verdicts, classification: Classification::Trivial });
    };
    verdicts.push(Check::new("trivial-flag", Verdict::Pass, "s >= 2 and t >= 2"));

    let krein = krein_check(p);
    let divisibility = multiplicity_integrality(p)?;
    let s = p.s();
    let neumaier = Check::new(
        "neumaier",
        Verdict::from_bool(s <= block.neumaier),
        format!("s = {s} {} t(t+1)(t+2)/2 = {}", if s <= block.neumaier { "<=" } else { ">" }, block.neumaier),
    );
    let duality = gq_possible(p);
    let excluded = block.optimal.excludes(s);
    let quadratic = Check::new(
        "quadratic-bound",
        Verdict::from_bool(!excluded),
        format!(
            "s = {s} {} {} ({})",
            if excluded { ">" } else { "<=" },
            format_ratio(&block.optimal.bound),
            block.optimal.choice
        ),
    );

    let prior_failed = krein.failed() || divisibility.failed() || neumaier.failed();
    let classification = if prior_failed {
        Classification::RuledOutByPriorConditions
    } else if duality.passed() {
        Classification::GqPossible
    } else if excluded {
        Classification::RuledOutByNewBound
    } else {
        Classification::PgqPossibleOnly
    };
    verdicts.extend([krein, divisibility, neumaier, duality, quadratic]);
    Ok(FeasibilityReport { params: p, derived, verdicts, classification })
}

/// Inclusive range of `t`; each `t` is scanned over `s in [2, t(t+1)(t+2)/2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanRange {
    t_min: u64,
    t_max: u64,
}

impl ScanRange {
    pub fn new(t_min: u64, t_max: u64) -> Result<ScanRange> {
        if t_min < 2 || t_min > t_max {
            return Err(Error::InvalidParams(format!(
                "need 2 <= t_min <= t_max (got {t_min}..={t_max})"
            )));
        }
        Ok(ScanRange { t_min, t_max })
    }

    pub fn t_min(&self) -> u64 {
        self.t_min
    }

    pub fn t_max(&self) -> u64 {
        self.t_max
    }
}

fn scan_block(t: u64) -> Result<Vec<FeasibilityReport>> {
    let block = Block::new(t)?;
    let mut rows = Vec::new();
    for s in 2..=block.neumaier {
        let report = check_with(GqParams::new(s, t)?, Some(&block))?;
        if report.classification == Classification::RuledOutByNewBound {
            rows.push(report);
        }
    }
    Ok(rows)
}

/// Parameter sets excluded only by the four-term bound, ordered by `t`
/// and then `s`.
pub fn scan(range: ScanRange) -> Result<Vec<FeasibilityReport>> {
    let ts: Vec<u64> = (range.t_min..=range.t_max).collect();
    #[cfg(feature = "parallel")]
    let blocks: Vec<Result<Vec<FeasibilityReport>>> = {
        use rayon::prelude::*;
        ts.into_par_iter().map(scan_block).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let blocks: Vec<Result<Vec<FeasibilityReport>>> = ts.into_iter().map(scan_block).collect();

    let mut rows = Vec::new();
    for block in blocks {
        rows.extend(block?);
    }
    Ok(rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

pub const CSV_HEADER: &str = "s,t,v,k,lambda,mu";

pub fn write_csv<W: Write>(reports: &[FeasibilityReport], mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in reports {
        let q = r.derived;
        writeln!(out, "{},{},{},{},{},{}", r.params.s(), r.params.t(), q.v(), q.k(), q.lambda(), q.mu())?;
    }
    Ok(())
}

pub fn write_json<W: Write>(reports: &[FeasibilityReport], mut out: W) -> io::Result<()> {
    let records: Vec<ReportRecord<'_>> = reports.iter().map(FeasibilityReport::record).collect();
    serde_json::to_writer_pretty(&mut out, &records)?;
    writeln!(out)
}

pub fn emit<W: Write>(reports: &[FeasibilityReport], format: OutputFormat, out: W) -> io::Result<()> {
    match format {
        OutputFormat::Csv => write_csv(reports, out),
        OutputFormat::Json => write_json(reports, out),
    }
}
