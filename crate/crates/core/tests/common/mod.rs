//! Oracles that share no code with the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// All numerical semigroups of genus `g`, as sorted gap lists, by brute force
/// over `g`-subsets of `[1, 2g - 1]` whose complement is additively closed.
pub fn gap_sets_of_genus(g: usize) -> BTreeSet<Vec<u64>> {
    let mut out = BTreeSet::new();
    if g == 0 {
        out.insert(Vec::new());
        return out;
    }
    let width = 2 * g - 1;
    for mask in 0u64..(1 << width) {
        if mask.count_ones() as usize != g {
            continue;
        }
        let is_gap = |x: u64| x >= 1 && x <= width as u64 && mask >> (x - 1) & 1 == 1;
        let max_gap = 64 - mask.leading_zeros() as u64;
        let closed = (1..=max_gap).filter(|&a| !is_gap(a)).all(|a| {
            (a..=max_gap - a)
                .filter(|&b| !is_gap(b))
                .all(|b| !is_gap(a + b))
        });
        if closed {
            out.insert((1..=width as u64).filter(|&x| is_gap(x)).collect());
        }
    }
    out
}

/// Invariants computed straight from the definitions with a generous
/// membership table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Naive {
    pub minimal_generators: Vec<u64>,
    pub multiplicity: u64,
    pub conductor: u64,
    pub c_prime: u64,
    pub gaps: Vec<u64>,
}

pub fn naive(gens: &[u64]) -> Naive {
    let bound = gens.iter().max().unwrap() * gens.iter().max().unwrap() * 2 + 2;
    let mut member = vec![false; bound as usize + 1];
    member[0] = true;
    for n in 1..=bound as usize {
        member[n] = gens
            .iter()
            .any(|&g| g as usize <= n && member[n - g as usize]);
    }
    let gaps: Vec<u64> = (0..=bound).filter(|&n| !member[n as usize]).collect();
    let conductor = gaps.last().map_or(0, |f| f + 1);
    let c_prime = (0..conductor).filter(|&n| member[n as usize]).count() as u64;
    let multiplicity = (1..=bound).find(|&n| member[n as usize]).unwrap();
    let minimal_generators = (1..=bound)
        .filter(|&n| member[n as usize])
        .filter(|&n| !(1..n).any(|a| member[a as usize] && member[(n - a) as usize]))
        .collect();
    Naive {
        minimal_generators,
        multiplicity,
        conductor,
        c_prime,
        gaps,
    }
}
