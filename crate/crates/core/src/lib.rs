//! Exact calculus of multivariate difference operators on ℤ^N.
//!
//! * [`group_ring`]: shift and difference operators as elements of ℤ[ℤ^N].
//! * [`expansion`]: rewriting difference words in the standard basis
//!   Δ_{e_1}, …, Δ_{e_N}, and the cyclic factorization along one direction.
//! * [`polyfract`]: integer-valued polynomials in the binomial basis.
//! * [`fdeg`]: functional degree, by closed form and by search.
//! * [`identities`]: seeded verification suites with JSON reports.
//! * [`expr`] and [`cli`]: the expression language and the `diffalg` binary.
//!
//! All arithmetic is arbitrary precision; nothing here rounds.
//!
//! ```
//! use diffalg::{GroupRingElement, LatticePoint};
//!
//! let a = LatticePoint::from_i64s(&[1, 0]);
//! let b = LatticePoint::from_i64s(&[0, 1]);
//! let lhs = GroupRingElement::shift(&(&a + &b));
//! assert_eq!(lhs, &GroupRingElement::shift(&a) * &GroupRingElement::shift(&b));
//! ```

mod bigint_serde;

pub mod cli;
pub mod error;
pub mod expansion;
pub mod expr;
pub mod fdeg;
pub mod function;
pub mod group_ring;
pub mod identities;
pub mod lattice;
pub mod polyfract;

pub use error::{Error, Result};
pub use expansion::{
    cyclic_factor, expand_single, expand_word_grouped, expand_word_sequence, GroupedExpansion,
    SequenceExpansion,
};
pub use expr::{lower, parse, Expression, ParseError};
pub use fdeg::{
    fdeg_general, fdeg_standard, fdeg_standard_by_search, leading_term_check, DegreeReport,
};
pub use function::IntegerFunction;
pub use group_ring::GroupRingElement;
pub use identities::{verify_identity, VerificationReport};
pub use lattice::{DifferenceWord, LatticePoint};
pub use polyfract::{binom, Degree, ExponentTuple, MonomialPolynomial, Polyfract};
