//! Two-variable denumerant `N(a, b; n)` via Tripathi's formula
//!
//! ```text
//! N(a, b; n) = (n + a·a'(n) + b·b'(n)) / (ab) - 1
//! ```
//!
//! with `a'(n) ≡ -n·a⁻¹ (mod b)` in `[1, b]` and `b'(n) ≡ -n·b⁻¹ (mod a)` in `[1, a]`.

use num_traits::{One, Signed};

use crate::arith::{exact_div, gcd, mod_inv, rep1m, require_non_negative};
use crate::{Error, Int, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripathiQuantities {
    /// `a'(n)`, in `[1, b]`.
    pub a_prime: Int,
    /// `b'(n)`, in `[1, a]`.
    pub b_prime: Int,
}

impl TripathiQuantities {
    pub fn named(&self) -> Vec<(&'static str, &Int)> {
        vec![("a_prime", &self.a_prime), ("b_prime", &self.b_prime)]
    }
}

fn validate(a: &Int, b: &Int, n: &Int) -> Result<()> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::invalid(format!("coefficients must be positive, got ({a}, {b})")));
    }
    require_non_negative(n, "n")?;
    if !gcd(a, b).is_one() {
        return Err(Error::NotCoprime {
            a: a.clone(),
            b: b.clone(),
        });
    }
    Ok(())
}

pub fn tripathi_quantities(a: &Int, b: &Int, n: &Int) -> Result<TripathiQuantities> {
    validate(a, b, n)?;
    let a_prime = rep1m(&(-n * mod_inv(a, b)?), b)?;
    let b_prime = rep1m(&(-n * mod_inv(b, a)?), a)?;
    Ok(TripathiQuantities { a_prime, b_prime })
}

/// Number of non-negative `(x, y)` with `ax + by = n`.
pub fn count2(a: &Int, b: &Int, n: &Int) -> Result<Int> {
    let q = tripathi_quantities(a, b, n)?;
    count2_from(a, b, n, &q)
}

pub(crate) fn count2_from(a: &Int, b: &Int, n: &Int, q: &TripathiQuantities) -> Result<Int> {
    let numerator = n + a * &q.a_prime + b * &q.b_prime;
    Ok(exact_div(&numerator, &(a * b), "two-variable count")? - 1)
}
