//! Wilf-type inequalities evaluated exactly on a single semigroup.
//!
//! Every comparison is done on cross-multiplied integers.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::Signed;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundEvaluation {
    /// `c' / c`.
    pub wilf_quotient: Rational,
    /// `c' * e >= c`.
    pub wilf_holds: bool,
    /// `c/e - (m-1)(e-2)/(2e)`.
    pub theorem1_bound: Rational,
    pub theorem1_holds: bool,
    /// `c' * (t + 1) >= c`.
    pub type_bound_holds: bool,
    pub is_wilf_equality: bool,
}

pub fn evaluate(semigroup: &NumericalSemigroup) -> Result<BoundEvaluation> {
    if semigroup.is_natural() {
        return Err(Error::DegenerateSemigroup);
    }
    let c = semigroup.conductor() as i64;
    let cp = semigroup.c_prime() as i64;
    let e = semigroup.embedding_dimension() as i64;
    let m = semigroup.multiplicity() as i64;
    let t = semigroup.pseudo_frobenius()?.semigroup_type as i64;

    let thm1_num = 2 * c - (m - 1) * (e - 2);
    Ok(BoundEvaluation {
        wilf_quotient: Rational::new(cp, c),
        wilf_holds: cp * e >= c,
        theorem1_bound: Rational::new(thm1_num, 2 * e),
        theorem1_holds: 2 * e * cp >= thm1_num,
        type_bound_holds: cp * (t + 1) >= c,
        is_wilf_equality: cp * e == c,
    })
}

/// `c' * e >= c`, the Wilf inequality.
pub fn wilf_holds(semigroup: &NumericalSemigroup) -> Result<bool> {
    if semigroup.is_natural() {
        return Err(Error::DegenerateSemigroup);
    }
    Ok(semigroup.c_prime() * semigroup.embedding_dimension() as u64 >= semigroup.conductor())
}

/// `c' >= c/e - (m-1)(e-2)/(2e)`, i.e. `2e c' >= 2c - (m-1)(e-2)`.
pub fn theorem1_holds(semigroup: &NumericalSemigroup) -> Result<bool> {
    if semigroup.is_natural() {
        return Err(Error::DegenerateSemigroup);
    }
    let c = semigroup.conductor() as i64;
    let e = semigroup.embedding_dimension() as i64;
    let m = semigroup.multiplicity() as i64;
    Ok(2 * e * semigroup.c_prime() as i64 >= 2 * c - (m - 1) * (e - 2))
}

/// `c' * (t + 1) >= c`.
pub fn type_bound_holds(semigroup: &NumericalSemigroup) -> Result<bool> {
    let t = semigroup.pseudo_frobenius()?.semigroup_type as u64;
    Ok(semigroup.c_prime() * (t + 1) >= semigroup.conductor())
}

/// The semigroup minimally generated by `k, nk + 1, …, nk + k - 1`.
///
/// These have `e = k`, `c' = n` and `c = nk`, so they attain Wilf equality.
pub fn equality_family(k: u64, n: u64) -> Result<NumericalSemigroup> {
    if k < 2 || n < 1 {
        return Err(Error::InvalidArgument(format!(
            "equality family needs k >= 2 and n >= 1, got k = {k}, n = {n}"
        )));
    }
    let gens: Vec<u64> = std::iter::once(k)
        .chain((1..k).map(|i| n * k + i))
        .collect();
    NumericalSemigroup::from_generators(&gens)
}

fn to_big(r: &Rational) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

/// `2^k / epsilon^k`: semigroups with embedding dimension `k` and
/// `m / c > epsilon` have conductor at most this.
pub fn exception_conductor_bound(k: u32, epsilon: Rational) -> Result<BigRational> {
    if !epsilon.is_positive() {
        return Err(Error::NonPositiveEpsilon);
    }
    let two = BigRational::from_integer(BigInt::from(2));
    Ok(num::pow(two / to_big(&epsilon), k as usize))
}

/// Checks `m / c > epsilon  =>  c <= 2^e / epsilon^e` on one semigroup.
pub fn check_lemma_mc(semigroup: &NumericalSemigroup, epsilon: Rational) -> Result<bool> {
    if semigroup.is_natural() {
        return Err(Error::DegenerateSemigroup);
    }
    let m = BigRational::from_integer(BigInt::from(semigroup.multiplicity()));
    let c = BigRational::from_integer(BigInt::from(semigroup.conductor()));
    let bound = exception_conductor_bound(semigroup.embedding_dimension() as u32, epsilon)?;
    if m / &c > to_big(&epsilon) {
        Ok(c <= bound)
    } else {
        Ok(true)
    }
}

/// `2k epsilon / (k - 2)`, defined for `k > 2`.
pub fn theorem2_epsilon_prime(k: u64, epsilon: Rational) -> Result<Rational> {
    if k <= 2 {
        return Err(Error::InvalidK { k });
    }
    if !epsilon.is_positive() {
        return Err(Error::NonPositiveEpsilon);
    }
    let k = k as i64;
    Ok(Rational::from_integer(2 * k) * epsilon / Rational::from_integer(k - 2))
}

/// `q - 1/k`, the signed distance of a quotient from the Wilf threshold.
pub fn distance_to_threshold(quotient: Rational, k: u64) -> Rational {
    quotient - Rational::new(1, k as i64)
}
