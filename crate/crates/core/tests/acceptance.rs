//! Acceptance gate. Each test prints one `[PASS]`/`[FAIL]` line and then
//! asserts; run with `--nocapture` to see the lines.

mod common;

use std::collections::BTreeSet;
use std::thread;

use wilf_core::bounds::{self, equality_family};
use wilf_core::enumeration::{sweep_verify, Check, Sweep, SweepSummary};
use wilf_core::subset_bound::{
    enumerate_downsets, simplex_equality_case, HypothesisCheck, SubsetBoundInstance,
};
use wilf_core::Rational;

fn workers() -> usize {
    thread::available_parallelism().map_or(1, |n| n.get())
}

fn report(id: &str, description: &str, ok: bool, detail: String) {
    let tag = if ok { "PASS" } else { "FAIL" };
    println!("[{tag}] {id} {description}: {detail}");
}

fn sweep(max_genus: usize, checks: &[Check]) -> SweepSummary {
    let checks: BTreeSet<Check> = checks.iter().copied().collect();
    sweep_verify(Sweep::new(max_genus).with_workers(workers()), &checks)
}

fn violations(summary: &SweepSummary, check: Check) -> usize {
    summary.violations[&check].len()
}

#[test]
fn ac01_c_prime_formula_matches_direct_count() {
    let s = sweep(18, &[Check::CPrimeCrosscheck]);
    let bad = violations(&s, Check::CPrimeCrosscheck);
    report(
        "AC-1",
        "Apery c' formula = direct count, genus <= 18",
        bad == 0,
        format!("{} semigroups, {bad} mismatches", s.total),
    );
    assert_eq!(bad, 0);
    assert_eq!(s.per_genus[18], 13467);
}

#[test]
fn ac02_apery_elements_bounded() {
    let s = sweep(18, &[Check::AperyBound]);
    let bad = violations(&s, Check::AperyBound);
    report(
        "AC-2",
        "a <= c + m - 1, genus <= 18",
        bad == 0,
        format!("{} semigroups, {bad} violations", s.total),
    );
    assert_eq!(bad, 0);
}

fn unit_downsets_scan() -> (usize, usize, Vec<String>) {
    let mut checked = 0;
    let mut failures = 0;
    let mut bad_equalities = Vec::new();
    for (d, side) in [(2usize, 3u64), (3, 2)] {
        let downsets: Vec<_> = enumerate_downsets(d, side).unwrap().collect();
        for cap in 1..=6u64 {
            let simplex = simplex_equality_case(d, cap).unwrap();
            for points in &downsets {
                let inst =
                    SubsetBoundInstance::new(vec![1; d], cap, points.iter().cloned()).unwrap();
                if inst.check_hypotheses() != HypothesisCheck::Ok {
                    continue;
                }
                checked += 1;
                let r = inst.lemma_inequality().unwrap();
                if !r.holds {
                    failures += 1;
                }
                if !points.is_empty() && r.is_equality() && inst.points() != simplex.points() {
                    bad_equalities.push(format!("d={d} C={cap} S={points:?}"));
                }
            }
        }
    }
    (checked, failures, bad_equalities)
}

#[test]
fn ac03_subset_inequality() {
    let s = sweep(14, &[Check::Lemma31]);
    let bad = violations(&s, Check::Lemma31);
    let (checked, failures, _) = unit_downsets_scan();
    let ok = bad == 0 && failures == 0 && checked > 0;
    report(
        "AC-3",
        "subset inequality on Apery factorization sets (genus <= 14) and unit-weight boxes",
        ok,
        format!(
            "{} semigroups with {bad} violations; {checked} box down-sets with {failures} failures",
            s.total
        ),
    );
    assert!(ok);
}

#[test]
fn ac04_simplex_equality() {
    let mut simplex_fail = Vec::new();
    for d in 1..=5 {
        for cap in 1..=6 {
            let r = simplex_equality_case(d, cap)
                .unwrap()
                .lemma_inequality()
                .unwrap();
            if r.lhs != r.rhs {
                simplex_fail.push((d, cap));
            }
        }
    }
    let (_, _, bad_equalities) = unit_downsets_scan();
    let ok = simplex_fail.is_empty() && bad_equalities.is_empty();
    report(
        "AC-4",
        "simplex equality for d <= 5, C <= 6; equality only at simplices in the box scan",
        ok,
        format!(
            "{} simplex failures, {} non-simplex equalities",
            simplex_fail.len(),
            bad_equalities.len()
        ),
    );
    assert!(ok, "{simplex_fail:?} {bad_equalities:?}");
}

#[test]
fn ac05_theorem1_bound() {
    let s = sweep(20, &[Check::Theorem1]);
    let bad = violations(&s, Check::Theorem1);
    report(
        "AC-5",
        "c' >= c/e - (m-1)(e-2)/(2e), genus <= 20",
        bad == 0,
        format!("{} semigroups, {bad} violations", s.total),
    );
    assert_eq!(bad, 0);
}

#[test]
fn ac06_wilf_sweep() {
    let s = sweep(22, &[Check::Wilf]);
    let bad = violations(&s, Check::Wilf);
    let mut problems = Vec::new();
    for (&e, stats) in &s.per_embedding_dimension {
        let Some(min) = &stats.min_quotient else {
            continue;
        };
        let threshold = Rational::new(1, e as i64);
        if min.quotient < threshold {
            problems.push(format!("e={e} min {} below 1/{e}", min.quotient));
        }
        // Minimum sits at 1/e exactly when some record is flagged as equality.
        if (min.quotient == threshold) != (stats.equality_count > 0) {
            problems.push(format!("e={e} equality flags disagree with minimum"));
        }
    }
    let e2 = &s.per_embedding_dimension[&2];
    if e2.equality_count != e2.count {
        problems.push(format!(
            "{} of {} e=2 records are not equalities",
            e2.count - e2.equality_count,
            e2.count
        ));
    }
    let ok = bad == 0 && problems.is_empty();
    report(
        "AC-6",
        "Wilf inequality, genus <= 22",
        ok,
        format!(
            "{} semigroups, {bad} violations, e in {}..={}, min quotient {}",
            s.total,
            s.per_embedding_dimension.keys().next().unwrap(),
            s.per_embedding_dimension.keys().last().unwrap(),
            s.min_quotient.as_ref().unwrap().quotient
        ),
    );
    assert!(ok, "{problems:?}");
}

#[test]
fn ac07_equality_family() {
    let mut bad = Vec::new();
    for k in 2..=10u64 {
        for n in 1..=10u64 {
            let s = equality_family(k, n).unwrap();
            let naive = common::naive(s.minimal_generators());
            let eval = bounds::evaluate(&s).unwrap();
            let matches = s.embedding_dimension() as u64 == k
                && naive.minimal_generators.len() as u64 == k
                && s.c_prime() == n
                && naive.c_prime == n
                && s.conductor() == n * k
                && naive.conductor == n * k
                && eval.wilf_quotient == Rational::new(1, k as i64);
            if !matches {
                bad.push((k, n));
            }
        }
    }
    report(
        "AC-7",
        "equality family k, n in 2..=10 x 1..=10",
        bad.is_empty(),
        format!("{} mismatches", bad.len()),
    );
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn ac08_multiplicity_conductor_implication() {
    let s = sweep(18, &[Check::LemmaMc]);
    let bad = violations(&s, Check::LemmaMc);
    report(
        "AC-8",
        "m/c > eps => c <= 2^e/eps^e for eps in {1/2, 1/3, 1/4}, genus <= 18",
        bad == 0,
        format!("{} semigroups, {bad} violations", s.total),
    );
    assert_eq!(bad, 0);
}

#[test]
fn ac09_enumeration_correctness() {
    let expected = [1u64, 1, 2, 4, 7, 12, 23, 39, 67];
    let oracle: Vec<u64> = (0..=8)
        .map(|g| common::gap_sets_of_genus(g).len() as u64)
        .collect();
    let counts = sweep_verify(Sweep::new(8), &BTreeSet::new()).per_genus;

    let all: BTreeSet<Check> = Check::ALL.into_iter().collect();
    let sequential = sweep_verify(Sweep::new(12), &all);
    let worker_counts = [2usize, 3, 4, 8];
    let agree = worker_counts
        .iter()
        .all(|&w| sweep_verify(Sweep::new(12).with_workers(w), &all) == sequential);

    let ok = oracle == expected && counts == expected && agree;
    report(
        "AC-9",
        "genus counts vs brute-force oracle (g <= 8); sequential = parallel summaries (g <= 12)",
        ok,
        format!("tree {counts:?}, oracle {oracle:?}, workers {worker_counts:?} agree: {agree}"),
    );
    assert!(ok);
}

#[test]
fn ac10_type_bound() {
    let s = sweep(18, &[Check::TypeBound]);
    let bad = violations(&s, Check::TypeBound);
    report(
        "AC-10",
        "c'(t+1) >= c, genus <= 18",
        bad == 0,
        format!("{} semigroups, {bad} violations", s.total),
    );
    assert_eq!(bad, 0);
}
