//! Weighted inequality on finite down-sets of the non-negative orthant.
//!
//! For positive weights `y` and a cap `C`, a finite set `S` of non-negative
//! integer vectors with `pi(s) = sum s_i y_i <= C` whose complement is closed
//! under adding non-negative vectors satisfies
//!
//! ```text
//! (d + 1) * sum_{s in S} (C - pi(s)) >= C * |S|
//! ```
//!
//! Complement closure is equivalent to `S` being a down-set, which is checked
//! one coordinate decrement at a time.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Point = Vec<u64>;

/// Largest box (in lattice points) that [`enumerate_downsets`] will walk.
pub const DOWNSET_POINT_LIMIT: u128 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetBoundInstance {
    dimension: usize,
    weights: Vec<u64>,
    cap: u64,
    /// Sorted, deduplicated.
    points: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum HypothesisCheck {
    Ok,
    Violation {
        point: Point,
        reason: ViolationReason,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ViolationReason {
    /// `pi(point)` is above the cap.
    ExceedsCap { value: u64 },
    /// A single-coordinate predecessor of the point is absent.
    MissingPredecessor { missing: Point },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaInequality {
    pub lhs: u128,
    pub rhs: u128,
    pub holds: bool,
}

impl LemmaInequality {
    pub fn is_equality(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl SubsetBoundInstance {
    pub fn new(
        weights: Vec<u64>,
        cap: u64,
        points: impl IntoIterator<Item = Point>,
    ) -> Result<Self> {
        let dimension = weights.len();
        if dimension == 0 {
            return Err(Error::InvalidArgument("dimension must be positive".into()));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidArgument("weights must be positive".into()));
        }
        if cap == 0 {
            return Err(Error::InvalidArgument("cap must be positive".into()));
        }
        let points: BTreeSet<Point> = points.into_iter().collect();
        if let Some(p) = points.iter().find(|p| p.len() != dimension) {
            return Err(Error::InvalidArgument(format!(
                "point {p:?} does not have dimension {dimension}"
            )));
        }
        Ok(Self {
            dimension,
            weights,
            cap,
            points: points.into_iter().collect(),
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, point: &[u64]) -> bool {
        self.points
            .binary_search_by(|p| p.as_slice().cmp(point))
            .is_ok()
    }

    /// Weighted value `sum x_i y_i`.
    pub fn pi(&self, point: &[u64]) -> u64 {
        point.iter().zip(&self.weights).map(|(x, y)| x * y).sum()
    }

    /// Reports the first point (in sorted order) breaking either hypothesis.
    pub fn check_hypotheses(&self) -> HypothesisCheck {
        for point in &self.points {
            let value = self.pi(point);
            if value > self.cap {
                return HypothesisCheck::Violation {
                    point: point.clone(),
                    reason: ViolationReason::ExceedsCap { value },
                };
            }
            for j in (0..self.dimension).rev() {
                if point[j] == 0 {
                    continue;
                }
                let mut below = point.clone();
                below[j] -= 1;
                if !self.contains(&below) {
                    return HypothesisCheck::Violation {
                        point: point.clone(),
                        reason: ViolationReason::MissingPredecessor { missing: below },
                    };
                }
            }
        }
        HypothesisCheck::Ok
    }

    pub fn lemma_inequality(&self) -> Result<LemmaInequality> {
        let check = self.check_hypotheses();
        if check != HypothesisCheck::Ok {
            return Err(Error::HypothesesViolated(check));
        }
        let cap = self.cap as u128;
        let slack: u128 = self.points.iter().map(|p| cap - self.pi(p) as u128).sum();
        let lhs = (self.dimension as u128 + 1) * slack;
        let rhs = cap * self.points.len() as u128;
        Ok(LemmaInequality {
            lhs,
            rhs,
            holds: lhs >= rhs,
        })
    }

    /// Same points with every weight and the cap multiplied by `factor`.
    pub fn scaled(&self, factor: u64) -> Result<Self> {
        Self::new(
            self.weights.iter().map(|w| w * factor).collect(),
            self.cap * factor,
            self.points.iter().cloned(),
        )
    }
}

/// Unit weights with `S = { x : x_1 + ... + x_d <= C }`.
pub fn simplex_equality_case(dimension: usize, cap: u64) -> Result<SubsetBoundInstance> {
    if dimension == 0 || cap == 0 {
        return Err(Error::InvalidArgument(
            "simplex needs positive dimension and cap".into(),
        ));
    }
    let mut points = Vec::new();
    let mut current = vec![0u64; dimension];
    simplex_points(&mut current, 0, cap, &mut points);
    SubsetBoundInstance::new(vec![1; dimension], cap, points)
}

fn simplex_points(current: &mut Point, index: usize, budget: u64, out: &mut Vec<Point>) {
    if index == current.len() {
        out.push(current.clone());
        return;
    }
    for x in 0..=budget {
        current[index] = x;
        simplex_points(current, index + 1, budget - x, out);
    }
    current[index] = 0;
}

/// Every down-set of the box `[0, side]^d`, each exactly once.
///
/// Sets are yielded as sorted point lists starting with the empty set.
pub fn enumerate_downsets(dimension: usize, side: u64) -> Result<Downsets> {
    if dimension == 0 {
        return Err(Error::InvalidArgument("dimension must be positive".into()));
    }
    let points = (side as u128 + 1)
        .checked_pow(dimension as u32)
        .filter(|&n| n <= DOWNSET_POINT_LIMIT);
    let Some(count) = points else {
        return Err(Error::GuardExceeded {
            points: (side as u128 + 1).saturating_pow(dimension as u32),
            limit: DOWNSET_POINT_LIMIT,
        });
    };

    // Lattice points in lexicographic order, so every predecessor of a point
    // precedes it.
    let mut lattice = Vec::with_capacity(count as usize);
    let mut current = vec![0u64; dimension];
    loop {
        lattice.push(current.clone());
        let Some(j) = (0..dimension).rev().find(|&j| current[j] < side) else {
            break;
        };
        current[j] += 1;
        current[j + 1..].iter_mut().for_each(|x| *x = 0);
    }

    let stride: Vec<usize> = (0..dimension)
        .map(|j| (side as usize + 1).pow((dimension - 1 - j) as u32))
        .collect();
    let predecessors = lattice
        .iter()
        .enumerate()
        .map(|(i, p)| {
            (0..dimension)
                .filter(|&j| p[j] > 0)
                .map(|j| i - stride[j])
                .collect()
        })
        .collect();

    Ok(Downsets {
        included: vec![false; lattice.len()],
        lattice,
        predecessors,
        started: false,
        done: false,
    })
}

/// Iterator over down-sets; see [`enumerate_downsets`].
///
/// Walks the binary decision tree "exclude before include" over lattice
/// points in lexicographic order; a point may be included only when all its
/// single-step predecessors are.
pub struct Downsets {
    lattice: Vec<Point>,
    predecessors: Vec<Vec<usize>>,
    included: Vec<bool>,
    started: bool,
    done: bool,
}

impl Downsets {
    fn current(&self) -> Vec<Point> {
        self.lattice
            .iter()
            .zip(&self.included)
            .filter(|(_, &inc)| inc)
            .map(|(p, _)| p.clone())
            .collect()
    }

    fn can_include(&self, i: usize) -> bool {
        self.predecessors[i].iter().all(|&p| self.included[p])
    }
}

impl Iterator for Downsets {
    type Item = Vec<Point>;

    fn next(&mut self) -> Option<Vec<Point>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current());
        }
        // Deepest excluded point that could have been included: switch it on
        // and exclude everything after it.
        let flip = (0..self.lattice.len())
            .rev()
            .find(|&i| !self.included[i] && self.can_include(i));
        match flip {
            Some(i) => {
                self.included[i] = true;
                self.included[i + 1..].iter_mut().for_each(|b| *b = false);
                Some(self.current())
            }
            None => {
                self.done = true;
                None
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(weights: &[u64], cap: u64, points: &[&[u64]]) -> SubsetBoundInstance {
        SubsetBoundInstance::new(weights.to_vec(), cap, points.iter().map(|p| p.to_vec())).unwrap()
    }

    #[test]
    fn hypotheses_ok() {
        assert_eq!(
            inst(&[3], 3, &[&[0], &[1]]).check_hypotheses(),
            HypothesisCheck::Ok
        );
        let s = inst(&[7, 9], 18, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[0, 2]]);
        assert_eq!(s.check_hypotheses(), HypothesisCheck::Ok);
    }

    #[test]
    fn hypotheses_missing_predecessor() {
        let s = inst(&[1, 1], 5, &[&[0, 0], &[1, 1]]);
        assert_eq!(
            s.check_hypotheses(),
            HypothesisCheck::Violation {
                point: vec![1, 1],
                reason: ViolationReason::MissingPredecessor {
                    missing: vec![1, 0]
                },
            }
        );
        assert!(matches!(
            s.lemma_inequality(),
            Err(Error::HypothesesViolated(_))
        ));
    }

    #[test]
    fn hypotheses_cap() {
        let s = inst(&[2], 3, &[&[0], &[1], &[2]]);
        assert_eq!(
            s.check_hypotheses(),
            HypothesisCheck::Violation {
                point: vec![2],
                reason: ViolationReason::ExceedsCap { value: 4 },
            }
        );
    }

    #[test]
    fn inequality_values() {
        let s = inst(&[7, 9], 18, &[&[0, 0], &[1, 1], &[1, 0], &[0, 2], &[0, 1]]);
        let r = s.lemma_inequality().unwrap();
        assert_eq!((r.lhs, r.rhs, r.holds), (120, 90, true));

        let s = inst(&[7, 8], 8, &[&[0, 0], &[1, 0], &[0, 1]]);
        let r = s.lemma_inequality().unwrap();
        assert_eq!((r.lhs, r.rhs, r.holds), (27, 24, true));

        let s = inst(&[1], 2, &[&[0], &[1], &[2]]);
        let r = s.lemma_inequality().unwrap();
        assert_eq!((r.lhs, r.rhs), (6, 6));
        assert!(r.holds && r.is_equality());
    }

    #[test]
    fn empty_set_is_trivial_equality() {
        let r = inst(&[1, 1], 3, &[]).lemma_inequality().unwrap();
        assert_eq!((r.lhs, r.rhs), (0, 0));
    }

    #[test]
    fn simplex_cases() {
        let s = simplex_equality_case(1, 2).unwrap();
        assert_eq!(s.points(), &[vec![0], vec![1], vec![2]]);
        let r = s.lemma_inequality().unwrap();
        assert_eq!((r.lhs, r.rhs), (6, 6));

        let s = simplex_equality_case(2, 1).unwrap();
        assert_eq!(s.points(), &[vec![0, 0], vec![0, 1], vec![1, 0]]);
        let r = s.lemma_inequality().unwrap();
        assert_eq!((r.lhs, r.rhs), (3, 3));

        let s = simplex_equality_case(3, 1).unwrap();
        assert_eq!(s.len(), 4);
        let r = s.lemma_inequality().unwrap();
        assert_eq!((r.lhs, r.rhs), (4, 4));

        assert!(simplex_equality_case(0, 1).is_err());
    }

    #[test]
    fn downsets_of_chain() {
        let all: Vec<_> = enumerate_downsets(1, 2).unwrap().collect();
        assert_eq!(
            all,
            vec![
                vec![],
                vec![vec![0]],
                vec![vec![0], vec![1]],
                vec![vec![0], vec![1], vec![2]],
            ]
        );
        assert_eq!(enumerate_downsets(1, 0).unwrap().count(), 2);
    }

    #[test]
    fn downsets_of_square_match_filtered_subsets() {
        let grid: Vec<Point> = vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]];
        let mut brute = BTreeSet::new();
        for mask in 0u32..16 {
            let set: Vec<Point> = (0..4)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| grid[i].clone())
                .collect();
            let closed = set.iter().all(|p| {
                (0..2).filter(|&j| p[j] > 0).all(|j| {
                    let mut q = p.clone();
                    q[j] -= 1;
                    set.contains(&q)
                })
            });
            if closed {
                brute.insert(set);
            }
        }
        let fast: Vec<_> = enumerate_downsets(2, 1).unwrap().collect();
        assert_eq!(fast.len(), 6);
        assert_eq!(fast.into_iter().collect::<BTreeSet<_>>(), brute);
    }

    #[test]
    fn downset_counts() {
        // Monotone lattice paths in a 4x4 box and plane partitions in a 3x3x3 box.
        assert_eq!(enumerate_downsets(2, 3).unwrap().count(), 70);
        assert_eq!(enumerate_downsets(3, 2).unwrap().count(), 980);
    }

    #[test]
    fn downset_guard() {
        assert!(matches!(
            enumerate_downsets(21, 1),
            Err(Error::GuardExceeded { .. })
        ));
        assert!(enumerate_downsets(4, 3).is_ok());
    }

    #[test]
    fn scaling() {
        let s = inst(&[7, 9], 18, &[&[0, 0], &[1, 0], &[0, 1]]);
        let a = s.lemma_inequality().unwrap();
        let b = s.scaled(3).unwrap().lemma_inequality().unwrap();
        assert_eq!((b.lhs, b.rhs), (3 * a.lhs, 3 * a.rhs));
    }
}
