//! Integer helpers shared by every counting formula.
//!
//! All residues produced here follow the `[1, m]` convention: a multiple of
//! `m` is represented by `m` itself, never by `0`. Call [`rep1m`] instead of
//! `%` wherever a formula quantity is reduced.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Int, Result};

/// Extended Euclid. Returns `(g, x, y)` with `g = gcd(a, b) > 0` and
/// `a*x + b*y = g`.
pub fn egcd(a: &Int, b: &Int) -> Result<(Int, Int, Int)> {
    if a.is_negative() || b.is_negative() {
        return Err(Error::invalid(format!("egcd needs non-negative inputs, got ({a}, {b})")));
    }
    if a.is_zero() && b.is_zero() {
        return Err(Error::invalid("egcd(0, 0) is undefined"));
    }

    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (Int::one(), Int::zero());
    let (mut old_t, mut t) = (Int::zero(), Int::one());
    while !r.is_zero() {
        let (q, rem) = old_r.div_rem(&r);
        old_r = std::mem::replace(&mut r, rem);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    Ok((old_r, old_s, old_t))
}

/// The representative of `x` modulo `m` lying in `[1, m]`.
pub fn rep1m(x: &Int, m: &Int) -> Result<Int> {
    if !m.is_positive() {
        return Err(Error::invalid(format!("modulus must be at least 1, got {m}")));
    }
    let r = x.mod_floor(m);
    Ok(if r.is_zero() { m.clone() } else { r })
}

/// Inverse of `a` modulo `m` as a `[1, m]` representative. `mod_inv(a, 1)` is 1.
pub fn mod_inv(a: &Int, m: &Int) -> Result<Int> {
    if !m.is_positive() {
        return Err(Error::invalid(format!("modulus must be at least 1, got {m}")));
    }
    let reduced = a.mod_floor(m);
    let (g, x, _) = egcd(&reduced, m)?;
    if !g.is_one() {
        return Err(Error::NotInvertible {
            a: a.clone(),
            m: m.clone(),
        });
    }
    rep1m(&x, m)
}

/// `⌊p / q⌋` for `q > 0`, rounding toward negative infinity.
pub fn floor_div(p: &Int, q: &Int) -> Result<Int> {
    if !q.is_positive() {
        return Err(Error::invalid(format!("floor_div needs a positive divisor, got {q}")));
    }
    Ok(p.div_floor(q))
}

pub fn gcd(a: &Int, b: &Int) -> Int {
    a.gcd(b)
}

/// Divides `num` by `den`, failing loudly if the quotient is not an integer.
pub(crate) fn exact_div(num: &Int, den: &Int, formula: &'static str) -> Result<Int> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::FormulaIntegrality {
            formula,
            numerator: num.clone(),
            denominator: den.clone(),
        });
    }
    Ok(q)
}

/// `(-1)^k` as an `Int`.
pub(crate) fn sign_pow(k: u64) -> Int {
    if k.is_multiple_of(2) {
        Int::one()
    } else {
        -Int::one()
    }
}

pub(crate) fn require_non_negative(n: &Int, what: &str) -> Result<()> {
    if n.is_negative() {
        return Err(Error::invalid(format!("{what} must be non-negative, got {n}")));
    }
    Ok(())
}
