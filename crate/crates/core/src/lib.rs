//! Numerical semigroups, Apery sets and exact verification of Wilf-type
//! inequalities over every semigroup up to a genus bound.
//!
//! ```
//! use wilf_core::{bounds, NumericalSemigroup, Rational};
//!
//! let s = NumericalSemigroup::from_generators(&[5, 7, 9]).unwrap();
//! assert_eq!((s.conductor(), s.c_prime()), (14, 6));
//! assert_eq!(bounds::evaluate(&s).unwrap().wilf_quotient, Rational::new(3, 7));
//! ```

pub mod bounds;
pub mod enumeration;
pub mod error;
pub mod factorization;
pub mod report;
pub mod semigroup;
pub mod subset_bound;

pub use error::{Error, Result};
pub use semigroup::{AperySet, NumericalSemigroup, TypeData};

/// Exact rational used for every quotient and bound.
pub type Rational = num::rational::Ratio<i64>;
