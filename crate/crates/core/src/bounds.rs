//! Upper bounds on `s` in terms of `t` for graphs with GQ-form parameters.
//!
//! * [`neumaier_bound`]: the cubic claw bound `t(t+1)(t+2)/2`.
//! * [`four_term_bound`]: the maximum of four rational terms, valid for
//!   every integer pair `theta >= t + 2`, `2 <= beta <= t + 1`.
//! * [`optimal_four_term_bound`]: the exhaustive minimum of the above.
//! * [`quadratic_bound`]: the closed form `t * floor(8t/3 + 1)`.
//!
//! All comparisons are carried out on exact rationals.

use std::fmt;

use num_integer::Roots;
use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::{GqParams, SrgParams};
use crate::verdict::{format_ratio, Check, Verdict};

fn require_t(t: u64) -> Result<i128> {
    if t < 2 {
        return Err(Error::Domain(format!("bounds require t >= 2 (got t = {t})")));
    }
    Ok(t as i128)
}

fn binom2(n: i128) -> i128 {
    n * (n - 1) / 2
}

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow("bound term"))
}

/// `t(t+1)(t+2)/2`.
pub fn neumaier_bound(t: u64) -> Result<u64> {
    require_t(t)?;
    t.checked_mul(t + 1)
        .and_then(|x| x.checked_mul(t + 2))
        .map(|x| x / 2)
        .ok_or(Error::Overflow("Neumaier bound"))
}

/// `t * floor(8t/3 + 1)`, i.e. `t * floor((8t + 3) / 3)`.
pub fn quadratic_bound(t: u64) -> Result<u64> {
    require_t(t)?;
    let floor = t
        .checked_mul(8)
        .and_then(|x| x.checked_add(3))
        .ok_or(Error::Overflow("quadratic bound"))?
        / 3;
    t.checked_mul(floor).ok_or(Error::Overflow("quadratic bound"))
}

/// Claw inequality for a graph with an induced `r`-claw:
/// `(mu - 1) * C(r, 2) >= r(lambda + 1) - k`. A failure excludes `r`-claws.
pub fn claw_inequality_check(q: &SrgParams, r: u64) -> Result<Check> {
    const NAME: &str = "claw-inequality";
    if r < 2 {
        return Err(Error::Domain(format!("claw size must be at least 2 (got {r})")));
    }
    let r = r as i128;
    let lhs = mul(q.mu() as i128 - 1, binom2(r))?;
    let rhs = mul(r, q.lambda() as i128 + 1)? - q.k() as i128;
    let pass = lhs >= rhs;
    let rel = if pass { ">=" } else { "<" };
    Ok(Check::new(
        NAME,
        Verdict::from_bool(pass),
        format!("(mu-1)C(r,2) = {lhs} {rel} r(lambda+1)-k = {rhs} at r = {r}"),
    ))
}

/// An admissible `(theta, beta)` for a given `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BoundChoice {
    pub theta: u64,
    pub beta: u64,
}

impl BoundChoice {
    pub fn new(t: u64, theta: u64, beta: u64) -> Result<Self> {
        let c = BoundChoice { theta, beta };
        c.validate(t)?;
        Ok(c)
    }

    pub fn validate(&self, t: u64) -> Result<()> {
        require_t(t)?;
        if self.theta < t + 2 || self.beta < 2 || self.beta > t + 1 {
            return Err(Error::Domain(format!(
                "need theta >= t+2 = {} and 2 <= beta <= t+1 = {} (got theta = {}, beta = {})",
                t + 2,
                t + 1,
                self.theta,
                self.beta
            )));
        }
        Ok(())
    }
}

impl fmt::Display for BoundChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "theta = {}, beta = {}", self.theta, self.beta)
    }
}

/// Which case of the argument a term of the four-term bound covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TermSource {
    /// Some vertex has claw number at least `theta + 1`.
    LargeClaw,
    /// A neighbour lies outside every clique attached to a maximum claw.
    UncoveredNeighbour,
    /// Some high-claw vertex lies on at least `t + 2 - beta` full cliques.
    ManyFullCliques,
    /// Every high-claw vertex lies on few full cliques.
    FewFullCliques,
}

impl TermSource {
    pub fn as_str(self) -> &'static str {
        match self {
            TermSource::LargeClaw => "large-claw",
            TermSource::UncoveredNeighbour => "uncovered-neighbour",
            TermSource::ManyFullCliques => "many-full-cliques",
            TermSource::FewFullCliques => "few-full-cliques",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundTerm {
    pub source: TermSource,
    pub value: Ratio<i128>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundResult {
    pub terms: [BoundTerm; 4],
    pub bound: Ratio<i128>,
}

impl BoundResult {
    pub fn values(&self) -> [Ratio<i128>; 4] {
        self.terms.map(|term| term.value)
    }
}

/// The four terms
///
/// ```text
/// t/(theta - t) * C(theta+1, 2),  t(2 theta - 1),  C(beta, 2) t,  (t+1)^2 theta / C(beta, 2)
/// ```
///
/// and their maximum.
pub fn four_term_bound(t: u64, choice: BoundChoice) -> Result<BoundResult> {
    choice.validate(t)?;
    let tt = t as i128;
    let theta = choice.theta as i128;
    let beta2 = binom2(choice.beta as i128);

    let large_claw = Ratio::new(mul(tt, binom2(theta + 1))?, theta - tt);
    let uncovered = Ratio::from_integer(mul(tt, 2 * theta - 1)?);
    let many = Ratio::from_integer(mul(beta2, tt)?);
    let few = Ratio::new(mul(mul(tt + 1, tt + 1)?, theta)?, beta2);

    let terms = [
        BoundTerm { source: TermSource::LargeClaw, value: large_claw },
        BoundTerm { source: TermSource::UncoveredNeighbour, value: uncovered },
        BoundTerm { source: TermSource::ManyFullCliques, value: many },
        BoundTerm { source: TermSource::FewFullCliques, value: few },
    ];
    let bound = terms.iter().map(|term| term.value).max().expect("four terms");
    Ok(BoundResult { terms, bound })
}

/// Minimum of the four-term bound over all admissible `(theta, beta)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OptimalBound {
    pub bound: Ratio<i128>,
    pub choice: BoundChoice,
}

impl OptimalBound {
    /// Largest integer `s` not excluded, i.e. `floor(bound)`.
    pub fn threshold(&self) -> u64 {
        self.bound.floor().to_integer() as u64
    }

    pub fn excludes(&self, s: u64) -> bool {
        Ratio::from_integer(s as i128) > self.bound
    }
}

impl fmt::Display for OptimalBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}", format_ratio(&self.bound), self.choice)
    }
}

/// Exhaustive sweep over `theta in [t+2, 4t]`, `beta in [2, t+1]`; ties go
/// to the smallest `theta`, then the smallest `beta`.
///
/// The cap `theta <= 4t` loses nothing. For `theta > 4t` the second term
/// alone is at least `t(8t + 1)`. Inside the range, [`quadratic_witness`]
/// keeps the maximum at or below `t * floor(8t/3 + 1) < t(8t + 1)` for
/// `t >= 3`, and at `t = 2` the choice `(4, 3)` gives `14 < 34`.
pub fn optimal_four_term_bound(t: u64) -> Result<OptimalBound> {
    require_t(t)?;
    let theta_max = t.checked_mul(4).ok_or(Error::Overflow("theta range"))?;
    sweep(t, theta_max)
}

pub(crate) fn sweep(t: u64, theta_max: u64) -> Result<OptimalBound> {
    let mut best: Option<OptimalBound> = None;
    for theta in t + 2..=theta_max {
        for beta in 2..=t + 1 {
            let choice = BoundChoice { theta, beta };
            let bound = four_term_bound(t, choice)?.bound;
            // strict comparison keeps the lexicographically first minimiser
            if best.is_none_or(|b| bound < b.bound) {
                best = Some(OptimalBound { bound, choice });
            }
        }
    }
    best.ok_or_else(|| Error::Domain(format!("empty (theta, beta) range for t = {t}")))
}

/// The explicit choice `theta = floor(4t/3 + 1)`, `beta = ceil(2 sqrt t)`
/// whose maximum stays within [`quadratic_bound`] for `t >= 3`.
pub fn quadratic_witness(t: u64) -> Result<BoundChoice> {
    if t < 3 {
        return Err(Error::Domain(format!(
            "the explicit witness needs t >= 3 (got t = {t})"
        )));
    }
    let theta = (4 * t + 3) / 3;
    let four_t = t.checked_mul(4).ok_or(Error::Overflow("beta"))?;
    let root = four_t.sqrt();
    let beta = if root * root == four_t { root } else { root + 1 };
    BoundChoice::new(t, theta, beta)
}

/// Which structures a parameter set `(s, t)` leaves open.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exclusion {
    /// `s > t^2`: no generalized quadrangle.
    pub gq_excluded: bool,
    /// `s` exceeds the optimal four-term bound: no pseudo-GQ.
    pub pgq_excluded: bool,
    pub optimal: OptimalBound,
}

impl Exclusion {
    pub fn ruled_out(&self) -> bool {
        self.gq_excluded && self.pgq_excluded
    }
}

pub fn pgq_ruled_out(p: GqParams) -> Result<Exclusion> {
    if p.is_trivial() {
        return Err(Error::Domain(format!("trivial parameters {p}")));
    }
    let optimal = optimal_four_term_bound(p.t())?;
    let t2 = (p.t() as u128) * (p.t() as u128);
    Ok(Exclusion {
        gq_excluded: p.s() as u128 > t2,
        pgq_excluded: optimal.excludes(p.s()),
        optimal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i128, d: i128) -> Ratio<i128> {
        Ratio::new(n, d)
    }

    fn int(n: i128) -> Ratio<i128> {
        Ratio::from_integer(n)
    }

    #[test]
    fn neumaier_values() {
        assert_eq!(neumaier_bound(2).unwrap(), 12);
        assert_eq!(neumaier_bound(4).unwrap(), 60);
        assert_eq!(neumaier_bound(10).unwrap(), 660);
        assert!(neumaier_bound(1).is_err());
        assert!(matches!(neumaier_bound(u64::MAX / 2), Err(Error::Overflow(_))));
    }

    #[test]
    fn quadratic_values() {
        assert_eq!(quadratic_bound(2).unwrap(), 12);
        assert_eq!(quadratic_bound(4).unwrap(), 44);
        assert_eq!(quadratic_bound(10).unwrap(), 270);
        assert!(quadratic_bound(0).is_err());
    }

    #[test]
    fn four_term_examples() {
        let res = four_term_bound(4, BoundChoice::new(4, 6, 4).unwrap()).unwrap();
        assert_eq!(res.values(), [int(42), int(44), int(24), int(25)]);
        assert_eq!(res.bound, int(44));

        let res = four_term_bound(2, BoundChoice::new(2, 4, 3).unwrap()).unwrap();
        assert_eq!(res.values(), [int(10), int(14), int(6), int(12)]);
        assert_eq!(res.bound, int(14));

        let res = four_term_bound(3, BoundChoice::new(3, 5, 2).unwrap()).unwrap();
        assert_eq!(res.values(), [r(45, 2), int(27), int(3), int(80)]);
        assert_eq!(res.bound, int(80));
        assert!(res.terms[1].value.is_integer() && res.terms[2].value.is_integer());
    }

    #[test]
    fn invalid_choices() {
        assert!(BoundChoice::new(4, 5, 2).is_err());
        assert!(BoundChoice::new(4, 6, 1).is_err());
        assert!(BoundChoice::new(4, 6, 6).is_err());
        assert!(BoundChoice::new(1, 6, 2).is_err());
        let bad = BoundChoice { theta: 3, beta: 2 };
        assert!(matches!(four_term_bound(2, bad), Err(Error::Domain(_))));
    }

    #[test]
    fn claw_inequality_examples() {
        let q = SrgParams::new(15, 6, 1, 3).unwrap();
        assert!(claw_inequality_check(&q, 4).unwrap().passed());

        let q = GqParams::new(56, 4).unwrap().srg().unwrap();
        let c = claw_inequality_check(&q, 7).unwrap();
        assert!(c.failed());
        assert!(c.witness.contains("84 < r(lambda+1)-k = 112"), "{}", c.witness);

        // r(lambda + 1) <= k makes the right side nonpositive
        let q = GqParams::new(3, 4).unwrap().srg().unwrap();
        assert!(claw_inequality_check(&q, 2).unwrap().passed());
        assert!(claw_inequality_check(&q, 1).is_err());
    }

    #[test]
    fn optimal_examples() {
        let o = optimal_four_term_bound(4).unwrap();
        assert_eq!(o.bound, int(44));
        assert_eq!(o.choice, BoundChoice { theta: 6, beta: 4 });
        assert_eq!(optimal_four_term_bound(3).unwrap().bound, int(27));

        // at t = 2 the sweep alone gives 14; the bound 12 there comes from
        // multiplicity divisibility, not from the four terms
        let o = optimal_four_term_bound(2).unwrap();
        assert_eq!(o.bound, int(14));
        assert_eq!(o.choice, BoundChoice { theta: 4, beta: 3 });
        assert_eq!(o.threshold(), 14);
    }

    #[test]
    fn theta_cap_loses_nothing() {
        for t in 2..=30 {
            let capped = optimal_four_term_bound(t).unwrap();
            let wide = sweep(t, 12 * t).unwrap();
            assert_eq!(capped, wide, "t = {t}");
        }
    }

    #[test]
    fn witness_stays_within_quadratic_bound() {
        for t in 3..=100 {
            let choice = quadratic_witness(t).unwrap();
            let res = four_term_bound(t, choice).unwrap();
            assert!(
                res.bound <= int(quadratic_bound(t).unwrap() as i128),
                "t = {t}, {choice}: {}",
                format_ratio(&res.bound)
            );
        }
        assert!(quadratic_witness(2).is_err());
    }

    #[test]
    fn claw_inequality_reproduces_large_claw_term() {
        for t in 2..=8u64 {
            for theta in t + 2..=4 * t {
                let term = four_term_bound(t, BoundChoice { theta, beta: 2 }).unwrap().terms[0].value;
                for s in 2..=120u64 {
                    let q = GqParams::new(s, t).unwrap().srg().unwrap();
                    let excluded = claw_inequality_check(&q, theta + 1).unwrap().failed();
                    assert_eq!(excluded, int(s as i128) > term, "s = {s}, t = {t}, theta = {theta}");
                }
            }
        }
    }

    #[test]
    fn ruled_out_examples() {
        let e = pgq_ruled_out(GqParams::new(56, 4).unwrap()).unwrap();
        assert!(e.ruled_out());
        let e = pgq_ruled_out(GqParams::new(44, 4).unwrap()).unwrap();
        assert!(e.gq_excluded && !e.pgq_excluded && !e.ruled_out());
        let e = pgq_ruled_out(GqParams::new(650, 10).unwrap()).unwrap();
        assert!(e.ruled_out());
        assert!(pgq_ruled_out(GqParams::new(5, 1).unwrap()).is_err());
    }
}
