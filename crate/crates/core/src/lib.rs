//! Exact counting of non-negative integer solutions to linear Diophantine
//! equations `ax + by = n` and `ax + by + cz = n`.
//!
//! Three independent routes are provided and cross-checked against each other:
//!
//! * [`denumerant2::count2`]: Tripathi's two-variable formula.
//! * [`binner3::count3`]: Binner's three-variable formula for pairwise coprime
//!   coefficients, with its floor sums evaluated by a Euclidean-style reduction.
//! * [`closedform::count_fib`] / [`closedform::count_lucas`]: constant-time
//!   formulas for consecutive Fibonacci and Lucas coefficient triplets.
//!
//! [`oracle`] holds the brute-force and dynamic-programming counters that serve
//! as ground truth for all of the above. [`cli`] is the query layer behind the
//! `denumerant` binary.
//!
//! ```
//! use denumerant::{closedform, oracle, Int};
//!
//! let n = Int::from(425_896u32);
//! let fast = closedform::count_fib(12, &n).unwrap();
//! let slow = oracle::dp_count(&[144u32.into(), 233u32.into(), 377u32.into()], &n).unwrap();
//! assert_eq!(fast, slow);
//! assert_eq!(fast, Int::from(7178));
//! ```

pub mod arith;
pub mod binner3;
pub mod cli;
pub mod closedform;
pub mod denumerant2;
mod error;
pub mod oracle;
pub mod sequences;

pub use error::{Error, Result};

/// Arbitrary-precision signed integer used for every count, residue and
/// intermediate quantity.
pub type Int = num_bigint::BigInt;

/// Index into the Fibonacci or Lucas sequence.
pub type SeqIndex = u64;
