//! Numerical semigroups and their first-class invariants.
//!
//! A [`NumericalSemigroup`] is built from any generating set by a forward
//! membership sieve. The sieve stops at the first run of `m` consecutive
//! members, where `m` is the multiplicity: from that point on every integer
//! is reachable by adding copies of `m`, so the start of the run is the
//! conductor.

use std::fmt;

use fixedbitset::FixedBitSet;
use num::Integer;

use crate::error::{Error, Result};
use crate::Rational;

/// A cofinite additive submonoid of the non-negative integers.
///
/// Immutable after construction. Membership below the conductor is kept as
/// a bitmap, everything at or above the conductor is a member.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    multiplicity: u64,
    conductor: u64,
    small_elements: Vec<u64>,
    gaps: Vec<u64>,
    members: FixedBitSet,
}

/// The residue-class minima `a_0, …, a_{m-1}` with respect to the multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperySet {
    entries: Vec<u64>,
}

/// Pseudo-Frobenius numbers and the type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeData {
    pub pseudo_frobenius: Vec<u64>,
    pub semigroup_type: usize,
}

impl NumericalSemigroup {
    /// Semigroup generated by `gens`, reduced to its minimal generating set.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let gcd = gens.iter().fold(0u64, |acc, &g| acc.gcd(&g));
        if gcd != 1 {
            return Err(Error::NotCofinite { gcd });
        }

        let mut candidates = gens.to_vec();
        candidates.sort_unstable();
        candidates.dedup();
        let multiplicity = candidates[0];

        let mut sieve = vec![true];
        let mut run = 1u64;
        while run < multiplicity {
            let n = sieve.len() as u64;
            let hit = candidates
                .iter()
                .take_while(|&&g| g <= n)
                .any(|&g| sieve[(n - g) as usize]);
            sieve.push(hit);
            run = if hit { run + 1 } else { 0 };
        }
        let conductor = sieve.len() as u64 - multiplicity;

        let mut members = FixedBitSet::with_capacity(conductor as usize);
        for (n, _) in sieve[..conductor as usize]
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
        {
            members.insert(n);
        }
        let is_member = |x: u64| x >= conductor || members.contains(x as usize);

        // A candidate is minimal iff it is not a sum of two non-zero members.
        // Anything at or above c + m is decomposable as (x - m) + m.
        let generators: Vec<u64> = candidates
            .iter()
            .copied()
            .filter(|&g| {
                g == multiplicity
                    || g < conductor + multiplicity
                        && !(multiplicity..=g / 2).any(|a| is_member(a) && is_member(g - a))
            })
            .collect();

        Ok(Self::assemble(generators, multiplicity, conductor, members))
    }

    /// The semigroup of all non-negative integers.
    pub fn natural() -> Self {
        Self::assemble(vec![1], 1, 0, FixedBitSet::new())
    }

    fn assemble(
        generators: Vec<u64>,
        multiplicity: u64,
        conductor: u64,
        members: FixedBitSet,
    ) -> Self {
        let (small_elements, gaps) = (0..conductor).partition(|&n| members.contains(n as usize));
        Self {
            generators,
            multiplicity,
            conductor,
            small_elements,
            gaps,
            members,
        }
    }

    /// Child in the semigroup tree: the semigroup with `generator` removed.
    ///
    /// Returns `None` unless `generator` is a minimal generator at or above
    /// the conductor. The result has genus one larger and conductor
    /// `generator + 1`.
    pub fn remove_effective_generator(&self, generator: u64) -> Option<Self> {
        if generator < self.conductor || self.generators.binary_search(&generator).is_err() {
            return None;
        }
        let conductor = generator + 1;
        let mut members = FixedBitSet::with_capacity(conductor as usize);
        for n in 0..generator {
            if self.is_member(n as i64) {
                members.insert(n as usize);
            }
        }
        let multiplicity = if generator == self.multiplicity {
            generator + 1
        } else {
            self.multiplicity
        };
        let is_member = |x: u64| x >= conductor || members.contains(x as usize);

        let mut generators: Vec<u64> = self
            .generators
            .iter()
            .copied()
            .filter(|&g| g != generator)
            .collect();
        // Removing an element can only promote elements of (g, g + m'] to
        // minimal generators; old generators stay minimal.
        for x in conductor..=generator + multiplicity {
            if generators.binary_search(&x).is_ok() {
                continue;
            }
            if !(multiplicity..=x / 2).any(|a| is_member(a) && is_member(x - a)) {
                generators.push(x);
            }
        }
        generators.sort_unstable();

        Some(Self::assemble(generators, multiplicity, conductor, members))
    }

    pub fn minimal_generators(&self) -> &[u64] {
        &self.generators
    }

    /// Minimal generators greater than the Frobenius number.
    pub fn effective_generators(&self) -> &[u64] {
        let start = self.generators.partition_point(|&g| g < self.conductor);
        &self.generators[start..]
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Largest gap, `None` for N.
    pub fn frobenius(&self) -> Option<u64> {
        self.conductor.checked_sub(1)
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    /// Members strictly below the conductor, ascending.
    pub fn small_elements(&self) -> &[u64] {
        &self.small_elements
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn is_natural(&self) -> bool {
        self.conductor == 0
    }

    pub fn is_member(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let n = n as u64;
        n >= self.conductor || self.members.contains(n as usize)
    }

    /// Number of members below the conductor, counted directly.
    pub fn c_prime(&self) -> u64 {
        self.small_elements.len() as u64
    }

    pub fn apery_set(&self) -> AperySet {
        let m = self.multiplicity;
        let mut entries = vec![0; m as usize];
        // Every Apery element lies below c + m.
        for n in 0..self.conductor + m {
            if self.is_member(n as i64) && !self.is_member(n as i64 - m as i64) {
                entries[(n % m) as usize] = n;
            }
        }
        AperySet { entries }
    }

    /// `c'` computed from the Apery set as `(m-1)/2 + sum_i (c - a_i)/m`.
    pub fn c_prime_apery(&self) -> Result<Rational> {
        if self.is_natural() {
            return Err(Error::DegenerateSemigroup);
        }
        let m = self.multiplicity as i64;
        let c = self.conductor as i64;
        let apery = self.apery_set();
        let sum = apery
            .entries
            .iter()
            .fold(Rational::from_integer(0), |acc, &a| {
                acc + Rational::new(c - a as i64, m)
            });
        Ok(Rational::new(m - 1, 2) + sum)
    }

    /// Gaps `x` such that `x + g` is a member for every minimal generator `g`.
    pub fn pseudo_frobenius(&self) -> Result<TypeData> {
        if self.is_natural() {
            return Err(Error::DegenerateSemigroup);
        }
        let pseudo_frobenius: Vec<u64> = self
            .gaps
            .iter()
            .copied()
            .filter(|&x| {
                self.generators
                    .iter()
                    .all(|&g| self.is_member((x + g) as i64))
            })
            .collect();
        Ok(TypeData {
            semigroup_type: pseudo_frobenius.len(),
            pseudo_frobenius,
        })
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl AperySet {
    /// Entries indexed by residue modulo the multiplicity.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max(&self) -> u64 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    pub fn contains(&self, value: u64) -> bool {
        let m = self.entries.len() as u64;
        m > 0 && self.entries[(value % m) as usize] == value
    }
}
