//! Parameter sets of the form `((s+1)(st+1), s(t+1), s-1, t+1)` and the
//! elementary arithmetic conditions on them.
//!
//! Everything here is exact: integers use checked `u64` arithmetic and
//! eigenvalue multiplicities are carried as reduced `i128` rationals.

use std::fmt;

use num_integer::Roots;
use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::verdict::{format_ratio, Check, Verdict};

macro_rules! checked {
    ($what:expr; $a:ident $(. $op:ident ( $b:expr ))+) => {
        Some($a)$(.and_then(|x| x.$op($b)))+.ok_or(Error::Overflow($what))
    };
}

/// The pair `(s, t)`: lines carry `s + 1` points and each point is on
/// `t + 1` lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GqParams {
    s: u64,
    t: u64,
}

impl GqParams {
    pub fn new(s: u64, t: u64) -> Result<Self> {
        if s == 0 || t == 0 {
            return Err(Error::InvalidParams(format!(
                "s and t must be at least 1 (got s = {s}, t = {t})"
            )));
        }
        Ok(GqParams { s, t })
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// `s = 1` (complete bipartite) and `t = 1` (rook's graph) are the
    /// trivial families; the bounds only speak about `s, t >= 2`.
    pub fn is_trivial(&self) -> bool {
        self.s == 1 || self.t == 1
    }

    pub fn dual(&self) -> GqParams {
        GqParams {
            s: self.t,
            t: self.s,
        }
    }

    pub fn srg(&self) -> Result<SrgParams> {
        derive_srg(*self)
    }

    /// Number of lines of a GQ with these parameters, `(st+1)(t+1)`.
    pub fn line_count(&self) -> Result<u64> {
        let (s, t) = (self.s, self.t);
        checked!("line count"; s.checked_mul(t).checked_add(1).checked_mul(t + 1))
    }

    fn nontrivial(&self, name: &'static str) -> Option<Check> {
        if self.is_trivial() {
            Some(Check::not_applicable(
                name,
                format!("trivial parameters (s = {}, t = {})", self.s, self.t),
            ))
        } else {
            None
        }
    }
}

impl fmt::Display for GqParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(s = {}, t = {})", self.s, self.t)
    }
}

/// A strongly regular parameter quadruple `(v, k, lambda, mu)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SrgParams {
    v: u64,
    k: u64,
    lambda: u64,
    mu: u64,
}

impl SrgParams {
    /// Accepts a quadruple with `0 <= lambda <= k - 1`, `1 <= mu <= k` and
    /// `k < v`. The counting identity is not enforced here; see
    /// [`SrgParams::satisfies_counting_identity`].
    pub fn new(v: u64, k: u64, lambda: u64, mu: u64) -> Result<Self> {
        if k >= v || mu == 0 || mu > k || lambda >= k {
            return Err(Error::InvalidParams(format!(
                "({v}, {k}, {lambda}, {mu}) violates 0 <= lambda < k, 1 <= mu <= k, k < v"
            )));
        }
        Ok(SrgParams { v, k, lambda, mu })
    }

    pub fn v(&self) -> u64 {
        self.v
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    pub fn mu(&self) -> u64 {
        self.mu
    }

    /// `k(k - lambda - 1) == (v - k - 1) mu`, evaluated in `u128`.
    pub fn satisfies_counting_identity(&self) -> bool {
        let (v, k, l, m) = (
            self.v as u128,
            self.k as u128,
            self.lambda as u128,
            self.mu as u128,
        );
        k * (k - l - 1) == (v - k - 1) * m
    }

    /// Inverse of [`derive_srg`]: `Some((lambda + 1, mu - 1))` when that pair
    /// reproduces the quadruple exactly.
    pub fn identify_gq_form(&self) -> Option<GqParams> {
        let p = GqParams::new(self.lambda + 1, self.mu.checked_sub(1)?).ok()?;
        match derive_srg(p) {
            Ok(q) if q == *self => Some(p),
            _ => None,
        }
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "srg({}, {}, {}, {})", self.v, self.k, self.lambda, self.mu)
    }
}

/// Restricted eigenvalues and their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    pub theta_pos: i64,
    pub theta_neg: i64,
    pub mult_pos: Ratio<i128>,
    pub mult_neg: Ratio<i128>,
}

impl Spectrum {
    /// Spectrum of a GQ-form parameter set: eigenvalues `s - 1` and
    /// `-(t + 1)`, the former with multiplicity `st(s+1)(t+1)/(s+t)`.
    pub fn of_gq(p: GqParams) -> Result<Spectrum> {
        let q = derive_srg(p)?;
        let (s, t) = (p.s as i128, p.t as i128);
        let num = s
            .checked_mul(t)
            .and_then(|x| x.checked_mul(s + 1))
            .and_then(|x| x.checked_mul(t + 1))
            .ok_or(Error::Overflow("eigenvalue multiplicity"))?;
        let mult_pos = Ratio::new(num, s + t);
        let mult_neg = Ratio::from_integer(q.v as i128 - 1) - mult_pos;
        Ok(Spectrum {
            theta_pos: p.s as i64 - 1,
            theta_neg: -(p.t as i64 + 1),
            mult_pos,
            mult_neg,
        })
    }

    /// Spectrum of a general quadruple, or `None` when the restricted
    /// eigenvalues are not integers (conference-type parameters).
    pub fn of_srg(q: &SrgParams) -> Option<Spectrum> {
        let (v, k, l, m) = (q.v as i128, q.k as i128, q.lambda as i128, q.mu as i128);
        // eigenvalues are the roots of x^2 - (lambda - mu) x - (k - mu)
        let disc = (l - m) * (l - m) + 4 * (k - m);
        let root = disc.sqrt();
        if root * root != disc || (l - m + root) % 2 != 0 {
            return None;
        }
        let r = (l - m + root) / 2;
        let s = (l - m - root) / 2;
        if r == s {
            return None;
        }
        Some(Spectrum {
            theta_pos: r as i64,
            theta_neg: s as i64,
            mult_pos: Ratio::new(-k - (v - 1) * s, r - s),
            mult_neg: Ratio::new(k + (v - 1) * r, r - s),
        })
    }

    pub fn is_integral(&self) -> bool {
        self.mult_pos.is_integer() && self.mult_neg.is_integer()
    }
}

/// `((s+1)(st+1), s(t+1), s-1, t+1)` with overflow detection.
pub fn derive_srg(p: GqParams) -> Result<SrgParams> {
    let (s, t) = (p.s, p.t);
    let st1 = checked!("v"; s.checked_mul(t).checked_add(1))?;
    let v = st1
        .checked_mul(s.checked_add(1).ok_or(Error::Overflow("v"))?)
        .ok_or(Error::Overflow("v"))?;
    let t1 = t.checked_add(1).ok_or(Error::Overflow("mu"))?;
    let k = s.checked_mul(t1).ok_or(Error::Overflow("k"))?;
    SrgParams::new(v, k, s - 1, t1)
}

/// Integrality of the eigenvalue multiplicities: `(s+t) | s(s+1)t(t+1)`.
pub fn multiplicity_integrality(p: GqParams) -> Result<Check> {
    const NAME: &str = "divisibility";
    if let Some(na) = p.nontrivial(NAME) {
        return Ok(na);
    }
    let (s, t) = (p.s, p.t);
    let product = checked!("s(s+1)t(t+1)"; s.checked_mul(s + 1).checked_mul(t).checked_mul(t + 1))?;
    let divisor = s + t;
    let (q, r) = (product / divisor, product % divisor);
    Ok(if r == 0 {
        Check::new(
            NAME,
            Verdict::Pass,
            format!("{divisor} divides {product} (quotient {q})"),
        )
    } else {
        Check::new(
            NAME,
            Verdict::Fail,
            format!("{divisor} does not divide {product} (remainder {r})"),
        )
    })
}

/// `t <= s^2`, which holds for every graph with these parameters.
pub fn krein_check(p: GqParams) -> Check {
    const NAME: &str = "krein";
    if let Some(na) = p.nontrivial(NAME) {
        return na;
    }
    let sq = (p.s as u128) * (p.s as u128);
    let pass = (p.t as u128) <= sq;
    let rel = if pass { "<=" } else { ">" };
    Check::new(
        NAME,
        Verdict::from_bool(pass),
        format!("t = {} {rel} s^2 = {sq}", p.t),
    )
}

/// `s <= t^2`. A failure means no genuine GQ can have these parameters, so
/// any graph with them would be a pseudo-GQ.
pub fn gq_possible(p: GqParams) -> Check {
    const NAME: &str = "gq-duality";
    if let Some(na) = p.nontrivial(NAME) {
        return na;
    }
    let sq = (p.t as u128) * (p.t as u128);
    let pass = (p.s as u128) <= sq;
    let rel = if pass { "<=" } else { ">" };
    Check::new(
        NAME,
        Verdict::from_bool(pass),
        format!("s = {} {rel} t^2 = {sq}", p.s),
    )
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}^{} {}^{}",
            self.theta_pos,
            format_ratio(&self.mult_pos),
            self.theta_neg,
            format_ratio(&self.mult_neg)
        )
    }
}
