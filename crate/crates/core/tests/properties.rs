use std::collections::BTreeSet;

use pgq::bounds::{four_term_bound, optimal_four_term_bound, quadratic_witness, BoundChoice};
use pgq::format::{graph_to_string, incidence_to_string, parse_graph, parse_incidence};
use pgq::generators::by_name;
use pgq::graph::{claw_numbers, clique_partition_of_local};
use pgq::incidence::{dual, extract_gq};
use pgq::scan::{check_one, scan, Classification, ScanRange};
use pgq::GqParams;

/// Is `s` excluded by some `(theta, beta)`? Integer comparisons only, and a
/// much wider `theta` range than the library searches.
fn excluded_by_oracle(s: u64, t: u64) -> bool {
    let (s, t) = (s as u128, t as u128);
    (t + 2..=12 * t).any(|theta| {
        (2..=t + 1).any(|beta| {
            let pairs = beta * (beta - 1);
            2 * s * (theta - t) > t * theta * (theta + 1)
                && s > t * (2 * theta - 1)
                && 2 * s > pairs * t
                && s * pairs > 2 * (t + 1) * (t + 1) * theta
        })
    })
}

fn oracle_rows(t: u64) -> Vec<u64> {
    let neumaier = t * (t + 1) * (t + 2) / 2;
    (2..=neumaier)
        .filter(|&s| {
            s > t * t
                && t <= s * s
                && (s * (s + 1) * t * (t + 1)).is_multiple_of(s + t)
                && excluded_by_oracle(s, t)
        })
        .collect()
}

#[test]
fn scan_matches_integer_oracle() {
    let rows = scan(ScanRange::new(2, 12).unwrap()).unwrap();
    for t in 2..=12 {
        let got: Vec<u64> = rows.iter().filter(|r| r.params.t() == t).map(|r| r.params.s()).collect();
        assert_eq!(got, oracle_rows(t), "t = {t}");
    }
}

#[test]
fn scan_rows_recheck_and_are_sorted() {
    let rows = scan(ScanRange::new(2, 14).unwrap()).unwrap();
    let keys: Vec<(u64, u64)> = rows.iter().map(|r| (r.params.t(), r.params.s())).collect();
    let mut sorted = keys.clone();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(keys, sorted);
    for r in &rows {
        let again = check_one(r.params).unwrap();
        assert_eq!(&again, r);
        assert_eq!(r.derived, r.params.srg().unwrap());
        assert!(r.verdicts.iter().filter(|c| c.failed()).map(|c| c.name).eq(["gq-duality", "quadratic-bound"]));
    }
}

#[test]
fn scan_is_deterministic_and_monotone() {
    let small = scan(ScanRange::new(2, 8).unwrap()).unwrap();
    let again = scan(ScanRange::new(2, 8).unwrap()).unwrap();
    assert_eq!(small, again);
    let large = scan(ScanRange::new(2, 11).unwrap()).unwrap();
    assert_eq!(&large[..small.len()], &small[..]);
    let split: Vec<_> = [(2, 5), (6, 11)]
        .into_iter()
        .flat_map(|(a, b)| scan(ScanRange::new(a, b).unwrap()).unwrap())
        .collect();
    assert_eq!(split, large);
}

#[test]
fn optimal_bound_never_beats_a_sampled_choice() {
    for t in 2..=25 {
        let best = optimal_four_term_bound(t).unwrap();
        for theta in t + 2..=6 * t {
            for beta in 2..=t + 1 {
                let r = four_term_bound(t, BoundChoice::new(t, theta, beta).unwrap()).unwrap();
                assert!(best.bound <= r.bound, "t = {t} ({theta}, {beta})");
            }
        }
        if t >= 3 {
            let w = four_term_bound(t, quadratic_witness(t).unwrap()).unwrap();
            assert!(best.bound <= w.bound);
        }
    }
}

#[test]
fn cameron_family_survives() {
    // (q^2 - 1, q + 1) never ruled out by the new bound for small prime powers.
    for q in [2u64, 3, 4, 5, 7] {
        let r = check_one(GqParams::new(q * q - 1, q + 1).unwrap()).unwrap();
        assert!(!r.classification.is_ruled_out(), "q = {q}: {}", r.classification);
    }
}

fn corpus() -> Vec<(&'static str, Option<usize>, GqParams)> {
    let gq = |s, t| GqParams::new(s, t).unwrap();
    vec![
        ("kneser", None, gq(2, 2)),
        ("w3", None, gq(3, 3)),
        ("rook", Some(4), gq(3, 1)),
        ("rook", Some(6), gq(5, 1)),
        ("bipartite", Some(3), gq(1, 2)),
        ("bipartite", Some(5), gq(1, 4)),
    ]
}

#[test]
fn claw_t_plus_one_gives_local_partition() {
    for (name, m, p) in corpus() {
        let g = by_name(name, m).unwrap();
        assert!(claw_numbers(&g).iter().all(|&c| c as u64 == p.t() + 1));
        for x in 0..g.n() {
            let cover = clique_partition_of_local(&g, x, p).unwrap();
            assert_eq!(cover.cliques.len() as u64, p.t() + 1, "{name} at {x}");
            let covered: BTreeSet<usize> = cover.cliques.iter().flatten().copied().collect();
            assert_eq!(covered, g.neighbours(x).ones().collect());
        }
    }
}

#[test]
fn file_formats_round_trip() {
    for (name, m, p) in corpus() {
        let g = by_name(name, m).unwrap();
        let text = graph_to_string(&g);
        assert_eq!(parse_graph(&text).unwrap(), g, "{name}");
        let inc = extract_gq(&g, p).unwrap();
        let text = incidence_to_string(&inc);
        assert_eq!(parse_incidence(&text).unwrap(), inc, "{name}");
    }
}

#[test]
fn double_dual_preserves_shape() {
    for (name, m, p) in corpus() {
        let inc = extract_gq(&by_name(name, m).unwrap(), p).unwrap();
        let back = dual(&dual(&inc).unwrap()).unwrap();
        assert_eq!(back.params(), inc.params());
        assert_eq!(back.points(), inc.points());
        assert_eq!(back.lines().len(), inc.lines().len());
        let degrees = |i: &pgq::incidence::IncidenceStructure| {
            let mut d: Vec<usize> = i.pencils().iter().map(Vec::len).collect();
            d.sort_unstable();
            d
        };
        assert_eq!(degrees(&back), degrees(&inc), "{name}");
    }
}

#[test]
fn classification_partitions_small_range() {
    for t in 2..=6u64 {
        for s in 2..=60u64 {
            let r = check_one(GqParams::new(s, t).unwrap()).unwrap();
            let expect_gq = r.classification == Classification::GqPossible;
            assert_eq!(expect_gq, r.verdicts.iter().all(|c| c.passed()), "({s}, {t})");
        }
    }
}
