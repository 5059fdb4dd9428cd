//! Exhaustive enumeration of numerical semigroups by genus.
//!
//! The semigroup tree is rooted at N; the children of a node are obtained by
//! removing one effective generator (a minimal generator above the Frobenius
//! number). Each removal raises the genus by one and every numerical
//! semigroup appears exactly once, at depth equal to its genus.
//!
//! Sweeps split the tree into tasks in pre-order: every node shallower than
//! [`SPLIT_DEPTH`] is its own task and every node at that depth carries its
//! whole subtree. Task results are merged in task order, so a sweep returns
//! the same value for any worker count.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::bounds;
use crate::factorization::apery_factorization_set;
use crate::semigroup::NumericalSemigroup;
use crate::Rational;

pub const SPLIT_DEPTH: usize = 10;

/// `m / c > epsilon => c <= 2^e / epsilon^e` is checked at each of these.
pub const LEMMA_MC_EPSILONS: [(i64, i64); 3] = [(1, 2), (1, 3), (1, 4)];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreeNode {
    semigroup: NumericalSemigroup,
    genus: usize,
}

impl TreeNode {
    pub fn root() -> Self {
        Self {
            semigroup: NumericalSemigroup::natural(),
            genus: 0,
        }
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn effective_generators(&self) -> &[u64] {
        self.semigroup.effective_generators()
    }

    /// Children ordered by removed generator, ascending.
    pub fn children(&self) -> impl Iterator<Item = TreeNode> + '_ {
        self.effective_generators().iter().map(move |&g| TreeNode {
            semigroup: self
                .semigroup
                .remove_effective_generator(g)
                .expect("effective generators are removable"),
            genus: self.genus + 1,
        })
    }

    /// Pre-order walk of the subtree down to `max_genus`.
    pub fn walk(&self, max_genus: usize, mut visit: impl FnMut(&TreeNode)) {
        if self.genus > max_genus {
            return;
        }
        let mut stack = vec![self.clone()];
        while let Some(node) = stack.pop() {
            visit(&node);
            if node.genus < max_genus {
                let mut children: Vec<_> = node.children().collect();
                children.reverse();
                stack.extend(children);
            }
        }
    }
}

enum Task {
    Single(TreeNode),
    Subtree(TreeNode),
}

/// Configuration for a tree sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sweep {
    pub max_genus: usize,
    pub workers: usize,
}

impl Sweep {
    pub fn new(max_genus: usize) -> Self {
        Self {
            max_genus,
            workers: 1,
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    fn tasks(&self) -> Vec<Task> {
        let split = self.max_genus.min(SPLIT_DEPTH);
        let mut tasks = Vec::new();
        let mut stack = vec![TreeNode::root()];
        while let Some(node) = stack.pop() {
            if node.genus == split {
                tasks.push(Task::Subtree(node));
            } else {
                let mut children: Vec<_> = node.children().collect();
                children.reverse();
                stack.extend(children);
                tasks.push(Task::Single(node));
            }
        }
        tasks
    }

    /// Folds every node of genus at most `max_genus` into an accumulator.
    ///
    /// `visit` sees nodes in pre-order within each task and `merge` combines
    /// task accumulators in task order, so an order-preserving `merge`
    /// reproduces the sequential pre-order exactly.
    pub fn run<A, V, M>(&self, make: impl Fn() -> A + Sync, visit: V, merge: M) -> A
    where
        A: Send,
        V: Fn(&mut A, &TreeNode) + Sync,
        M: Fn(&mut A, A),
    {
        if self.workers == 1 {
            let mut acc = make();
            TreeNode::root().walk(self.max_genus, |n| visit(&mut acc, n));
            return acc;
        }
        let tasks = self.tasks();
        let run_task = |task: &Task| {
            let mut acc = make();
            match task {
                Task::Single(node) => visit(&mut acc, node),
                Task::Subtree(node) => node.walk(self.max_genus, |n| visit(&mut acc, n)),
            }
            acc
        };
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .expect("thread pool");
        let partials: Vec<A> = pool.install(|| tasks.par_iter().map(run_task).collect());
        let mut partials = partials.into_iter();
        let mut acc = partials.next().unwrap_or_else(&make);
        for part in partials {
            merge(&mut acc, part);
        }
        acc
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// `c' e >= c`.
    Wilf,
    /// `c' >= c/e - (m-1)(e-2)/(2e)`.
    Theorem1,
    /// `c' (t+1) >= c`.
    TypeBound,
    /// Apery formula for `c'` equals the direct count.
    CPrimeCrosscheck,
    /// Every Apery element is at most `c + m - 1`.
    AperyBound,
    /// Apery factorization set satisfies the subset-bound hypotheses and inequality.
    Lemma31,
    /// The `m/c` conductor implication at each of [`LEMMA_MC_EPSILONS`].
    LemmaMc,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Wilf,
        Check::Theorem1,
        Check::TypeBound,
        Check::CPrimeCrosscheck,
        Check::AperyBound,
        Check::Lemma31,
        Check::LemmaMc,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Check::Wilf => "wilf",
            Check::Theorem1 => "thm1",
            Check::TypeBound => "type",
            Check::CPrimeCrosscheck => "cprime",
            Check::AperyBound => "apery",
            Check::Lemma31 => "lemma31",
            Check::LemmaMc => "lemma42",
        }
    }

    /// Runs the check; `N` passes every check vacuously.
    pub fn passes(self, semigroup: &NumericalSemigroup) -> bool {
        if semigroup.is_natural() {
            return true;
        }
        match self {
            Check::Wilf => bounds::wilf_holds(semigroup).unwrap_or(false),
            Check::Theorem1 => bounds::theorem1_holds(semigroup).unwrap_or(false),
            Check::TypeBound => bounds::type_bound_holds(semigroup).unwrap_or(false),
            Check::CPrimeCrosscheck => semigroup
                .c_prime_apery()
                .is_ok_and(|r| r == Rational::from_integer(semigroup.c_prime() as i64)),
            Check::AperyBound => {
                let cap = semigroup.conductor() + semigroup.multiplicity() - 1;
                semigroup.apery_set().entries().iter().all(|&a| a <= cap)
            }
            Check::Lemma31 => apery_factorization_set(semigroup)
                .and_then(|inst| inst.lemma_inequality())
                .is_ok_and(|r| r.holds),
            Check::LemmaMc => LEMMA_MC_EPSILONS.iter().all(|&(n, d)| {
                bounds::check_lemma_mc(semigroup, Rational::new(n, d)).unwrap_or(false)
            }),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Check::ALL
            .into_iter()
            .find(|c| c.id() == s.trim())
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}

/// A semigroup identified by genus and minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Witness {
    pub genus: usize,
    pub generators: Vec<u64>,
}

impl Witness {
    pub fn of(node: &TreeNode) -> Self {
        Self {
            genus: node.genus,
            generators: node.semigroup.minimal_generators().to_vec(),
        }
    }
}

/// A Wilf quotient `c'/c` together with the semigroup attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientWitness {
    pub quotient: Rational,
    /// `m / c` of the witness.
    pub m_over_c: Rational,
    pub witness: Witness,
}

impl QuotientWitness {
    /// `None` for N.
    pub fn of(node: &TreeNode) -> Option<Self> {
        let s = &node.semigroup;
        if s.is_natural() {
            return None;
        }
        let c = s.conductor() as i64;
        Some(Self {
            quotient: Rational::new(s.c_prime() as i64, c),
            m_over_c: Rational::new(s.multiplicity() as i64, c),
            witness: Witness::of(node),
        })
    }

    /// Smaller quotient wins; ties go to smaller genus, then lexicographically
    /// smaller generators.
    fn better_than(&self, other: &Self) -> bool {
        (self.quotient, &self.witness) < (other.quotient, &other.witness)
    }

    fn keep_min(slot: &mut Option<Self>, candidate: Option<Self>) {
        if let Some(candidate) = candidate {
            match slot {
                Some(current) if !candidate.better_than(current) => {}
                _ => *slot = Some(candidate),
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EmbeddingStats {
    pub count: u64,
    /// Records with `c' e = c`.
    pub equality_count: u64,
    pub min_quotient: Option<QuotientWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSummary {
    pub max_genus: usize,
    pub total: u64,
    /// Index is genus.
    pub per_genus: Vec<u64>,
    pub per_embedding_dimension: BTreeMap<usize, EmbeddingStats>,
    pub min_quotient: Option<QuotientWitness>,
    pub checks: BTreeSet<Check>,
    /// One entry per selected check, sorted by witness.
    pub violations: BTreeMap<Check, Vec<Witness>>,
}

impl SweepSummary {
    pub fn new(max_genus: usize, checks: impl IntoIterator<Item = Check>) -> Self {
        let checks: BTreeSet<Check> = checks.into_iter().collect();
        Self {
            max_genus,
            total: 0,
            per_genus: vec![0; max_genus + 1],
            per_embedding_dimension: BTreeMap::new(),
            min_quotient: None,
            violations: checks.iter().map(|&c| (c, Vec::new())).collect(),
            checks,
        }
    }

    pub fn observe(&mut self, node: &TreeNode) {
        let s = &node.semigroup;
        self.total += 1;
        self.per_genus[node.genus] += 1;
        let quotient = QuotientWitness::of(node);
        let stats = self
            .per_embedding_dimension
            .entry(s.embedding_dimension())
            .or_default();
        stats.count += 1;
        if !s.is_natural() && s.c_prime() * s.embedding_dimension() as u64 == s.conductor() {
            stats.equality_count += 1;
        }
        QuotientWitness::keep_min(&mut stats.min_quotient, quotient.clone());
        QuotientWitness::keep_min(&mut self.min_quotient, quotient);

        for &check in &self.checks {
            if !check.passes(s) {
                self.violations
                    .get_mut(&check)
                    .expect("entry per selected check")
                    .push(Witness::of(node));
            }
        }
    }

    /// Commutative and associative up to the order of violation lists,
    /// which [`SweepSummary::finish`] canonicalises.
    pub fn merge(&mut self, other: SweepSummary) {
        self.total += other.total;
        for (a, b) in self.per_genus.iter_mut().zip(other.per_genus) {
            *a += b;
        }
        for (e, stats) in other.per_embedding_dimension {
            let mine = self.per_embedding_dimension.entry(e).or_default();
            mine.count += stats.count;
            mine.equality_count += stats.equality_count;
            QuotientWitness::keep_min(&mut mine.min_quotient, stats.min_quotient);
        }
        QuotientWitness::keep_min(&mut self.min_quotient, other.min_quotient);
        for (check, list) in other.violations {
            self.violations.entry(check).or_default().extend(list);
        }
    }

    pub fn finish(mut self) -> Self {
        for list in self.violations.values_mut() {
            list.sort();
        }
        self
    }

    pub fn violation_count(&self) -> usize {
        self.violations.values().map(Vec::len).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.violation_count() == 0
    }
}

/// Visits every semigroup of genus at most `max_genus` once, in pre-order
/// with children ordered by removed generator.
pub fn enumerate_by_genus(max_genus: usize, mut visitor: impl FnMut(&TreeNode)) -> SweepSummary {
    let mut summary = SweepSummary::new(max_genus, []);
    TreeNode::root().walk(max_genus, |node| {
        summary.observe(node);
        visitor(node);
    });
    summary
}

/// Runs the selected checks on every semigroup up to `sweep.max_genus`.
pub fn sweep_verify(sweep: Sweep, checks: &BTreeSet<Check>) -> SweepSummary {
    sweep
        .run(
            || SweepSummary::new(sweep.max_genus, checks.iter().copied()),
            |acc, node| acc.observe(node),
            |acc, other| acc.merge(other),
        )
        .finish()
}

/// Minimum Wilf quotient over enumerated semigroups with `e = k` and `m > min_exclusive`.
///
/// `None` when nothing in range matches the filter.
pub fn empirical_f(sweep: Sweep, min_exclusive: u64, k: usize) -> Option<QuotientWitness> {
    sweep.run(
        || None,
        |acc: &mut Option<QuotientWitness>, node| {
            let s = node.semigroup();
            if s.embedding_dimension() == k && s.multiplicity() > min_exclusive {
                QuotientWitness::keep_min(acc, QuotientWitness::of(node));
            }
        },
        QuotientWitness::keep_min,
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrendRow {
    pub genus: usize,
    pub minimum: Option<QuotientWitness>,
}

/// Per-genus minimum Wilf quotient among semigroups with `e = k` and `m > min_exclusive`.
pub fn min_quotient_trend(sweep: Sweep, min_exclusive: u64, k: usize) -> Vec<TrendRow> {
    let rows = sweep.run(
        || vec![None; sweep.max_genus + 1],
        |acc: &mut Vec<Option<QuotientWitness>>, node| {
            let s = node.semigroup();
            if s.embedding_dimension() == k && s.multiplicity() > min_exclusive {
                QuotientWitness::keep_min(&mut acc[node.genus()], QuotientWitness::of(node));
            }
        },
        |acc, other| {
            for (slot, candidate) in acc.iter_mut().zip(other) {
                QuotientWitness::keep_min(slot, candidate);
            }
        },
    );
    rows.into_iter()
        .enumerate()
        .map(|(genus, minimum)| TrendRow { genus, minimum })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let summary = enumerate_by_genus(5, |_| {});
        assert_eq!(summary.per_genus, vec![1, 1, 2, 4, 7, 12]);
        assert_eq!(summary.total, 27);
        assert!(summary.is_clean());
    }

    #[test]
    fn genus_zero_is_just_n() {
        let mut seen = Vec::new();
        enumerate_by_genus(0, |n| seen.push(n.semigroup().clone()));
        assert_eq!(seen, vec![NumericalSemigroup::natural()]);
    }

    #[test]
    fn preorder_children_ascending() {
        let mut seen = Vec::new();
        enumerate_by_genus(2, |n| {
            seen.push(n.semigroup().minimal_generators().to_vec())
        });
        assert_eq!(seen, vec![vec![1], vec![2, 3], vec![3, 4, 5], vec![2, 5]]);
    }

    #[test]
    fn check_ids_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.id().parse::<Check>().unwrap(), c);
        }
        assert!("bogus".parse::<Check>().is_err());
    }

    #[test]
    fn nodes_match_sieve_construction() {
        TreeNode::root().walk(7, |node| {
            let s = node.semigroup();
            let rebuilt = NumericalSemigroup::from_generators(s.minimal_generators()).unwrap();
            assert_eq!(&rebuilt, s);
            assert_eq!(s.genus(), node.genus());
        });
    }

    #[test]
    fn empirical_f_examples() {
        let f = empirical_f(Sweep::new(12), 0, 2).unwrap();
        assert_eq!(f.quotient, Rational::new(1, 2));
        assert_eq!(empirical_f(Sweep::new(10), 1_000_000, 3), None);
    }

    #[test]
    fn trend_for_genus_one() {
        let rows = min_quotient_trend(Sweep::new(1), 0, 3);
        assert!(rows.iter().all(|r| r.minimum.is_none()));
        let rows = min_quotient_trend(Sweep::new(1), 0, 2);
        assert_eq!(rows[0].minimum, None);
        assert_eq!(
            rows[1].minimum.as_ref().unwrap().witness.generators,
            vec![2, 3]
        );
    }
}
