//! Factorizations over the non-multiplicity generators.
//!
//! Every Apery element `a` has `a - m` outside the semigroup, so any
//! expression of `a` as a sum of minimal generators avoids `m`. Points of
//! `O^{k-1}` are exponent vectors over `g_2 < … < g_k`, compared
//! lexicographically with the exponent of `g_2` most significant.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::subset_bound::SubsetBoundInstance;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Factorization {
    /// Coordinate `i` is the coefficient of the `(i + 2)`-th minimal generator.
    pub exponents: Vec<u64>,
    pub value: u64,
}

fn weights(semigroup: &NumericalSemigroup) -> &[u64] {
    &semigroup.minimal_generators()[1..]
}

/// Every exponent vector over `g_2, …, g_k` with value `n`, in lexicographic order.
pub fn all_factorizations(semigroup: &NumericalSemigroup, n: u64) -> Vec<Factorization> {
    let weights = weights(semigroup);
    let mut out = Vec::new();
    let mut current = vec![0; weights.len()];
    search(weights, 0, n, &mut current, &mut out, n);
    out
}

fn search(
    weights: &[u64],
    index: usize,
    remaining: u64,
    current: &mut Vec<u64>,
    out: &mut Vec<Factorization>,
    value: u64,
) {
    if index == weights.len() {
        if remaining == 0 {
            out.push(Factorization {
                exponents: current.clone(),
                value,
            });
        }
        return;
    }
    for x in 0..=remaining / weights[index] {
        current[index] = x;
        search(
            weights,
            index + 1,
            remaining - x * weights[index],
            current,
            out,
            value,
        );
    }
    current[index] = 0;
}

/// Representability tables for every suffix of a weight list, up to a limit.
///
/// `reachable[j]` marks the values in `[0, limit]` that are non-negative
/// combinations of `weights[j..]`; the last table is just `{0}`.
pub struct Factorizer {
    weights: Vec<u64>,
    limit: u64,
    reachable: Vec<FixedBitSet>,
}

impl Factorizer {
    pub fn new(weights: &[u64], limit: u64) -> Self {
        let size = limit as usize + 1;
        let mut reachable = vec![FixedBitSet::with_capacity(size); weights.len() + 1];
        reachable[weights.len()].insert(0);
        for j in (0..weights.len()).rev() {
            let w = weights[j] as usize;
            let mut table = reachable[j + 1].clone();
            for v in w..size {
                if table.contains(v - w) {
                    table.insert(v);
                }
            }
            reachable[j] = table;
        }
        Self {
            weights: weights.to_vec(),
            limit,
            reachable,
        }
    }

    pub fn for_semigroup(semigroup: &NumericalSemigroup, limit: u64) -> Self {
        Self::new(weights(semigroup), limit)
    }

    pub fn is_representable(&self, n: u64) -> bool {
        n <= self.limit && self.reachable[0].contains(n as usize)
    }

    /// Smallest first exponent whose remainder is representable by the
    /// remaining weights, repeated coordinate by coordinate.
    pub fn lex_min(&self, n: u64) -> Result<Factorization> {
        if !self.is_representable(n) {
            return Err(Error::NotRepresentable { value: n });
        }
        let mut exponents = Vec::with_capacity(self.weights.len());
        let mut remaining = n;
        for (j, &w) in self.weights.iter().enumerate() {
            let x = (0..=remaining / w)
                .find(|x| self.reachable[j + 1].contains((remaining - x * w) as usize))
                .expect("suffix table guarantees a feasible exponent");
            exponents.push(x);
            remaining -= x * w;
        }
        Ok(Factorization {
            exponents,
            value: n,
        })
    }
}

/// Lexicographically first factorization of `n` over `g_2, …, g_k`.
pub fn lex_min_factorization(semigroup: &NumericalSemigroup, n: u64) -> Result<Factorization> {
    Factorizer::for_semigroup(semigroup, n).lex_min(n)
}

/// Lex-minimal factorizations of the Apery set as a subset-bound instance.
///
/// Weights are `g_2, …, g_k` and the cap is `c + m - 1`.
pub fn apery_factorization_set(semigroup: &NumericalSemigroup) -> Result<SubsetBoundInstance> {
    if semigroup.is_natural() {
        return Err(Error::DegenerateSemigroup);
    }
    let cap = semigroup.conductor() + semigroup.multiplicity() - 1;
    let apery = semigroup.apery_set();
    let factorizer = Factorizer::for_semigroup(semigroup, apery.max());
    let points = apery
        .entries()
        .iter()
        .map(|&a| factorizer.lex_min(a).map(|f| f.exponents))
        .collect::<Result<Vec<_>>>()?;
    SubsetBoundInstance::new(weights(semigroup).to_vec(), cap, points)
}
