//! Constant-time counts for consecutive Fibonacci and Lucas coefficient
//! triplets.
//!
//! For `(a, b, c) = (F_i, F_{i+1}, F_{i+2})` the Cassini identity makes every
//! modular inverse in Binner's formula explicit: `c'₁ = a'₂ = 1` and
//! `b'₃ = c - 1`. The first two floor sums then vanish and the third is
//! triangular, leaving
//!
//! ```text
//! N(F_i, F_{i+1}, F_{i+2}; n) = N₂ / (2·F_i·F_{i+1}·F_{i+2}) + (A'₃-1)(A'₃-2)/2 - 2
//! B'₁ ≡ (-1)^i·n·F_{i-2}  (mod F_i)
//! C'₂ ≡ (-1)^i·n·F_i      (mod F_{i+1})
//! A'₃ ≡ (-1)^i·n·F_{i+1}  (mod F_{i+2})
//! ```
//!
//! The Lucas case is identical in shape, with `(-1)^{i+1}·5⁻¹` in place of
//! `(-1)^i` because the Lucas Cassini identity carries a factor 5.

use crate::arith::{exact_div, rep1m, require_non_negative, sign_pow};
use crate::sequences::{fib, inv5_mod_lucas, lucas};
use crate::{Error, Int, Result, SeqIndex};

pub const MIN_FIB_INDEX: SeqIndex = 3;
pub const MIN_LUCAS_INDEX: SeqIndex = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibQuantities {
    pub b1: Int,
    pub c2: Int,
    pub a3: Int,
    pub n2: Int,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LucasQuantities {
    pub b1: Int,
    pub c2: Int,
    pub a3: Int,
    pub n3: Int,
}

impl FibQuantities {
    pub fn named(&self) -> Vec<(&'static str, &Int)> {
        vec![("B1", &self.b1), ("C2", &self.c2), ("A3", &self.a3), ("N2", &self.n2)]
    }
}

impl LucasQuantities {
    pub fn named(&self) -> Vec<(&'static str, &Int)> {
        vec![("B1", &self.b1), ("C2", &self.c2), ("A3", &self.a3), ("N3", &self.n3)]
    }
}

/// The triple `(F_i, F_{i+1}, F_{i+2})`.
pub fn fib_triple(i: SeqIndex) -> Result<[Int; 3]> {
    Ok([fib(i)?, fib(i + 1)?, fib(i + 2)?])
}

/// The triple `(L_i, L_{i+1}, L_{i+2})`.
pub fn lucas_triple(i: SeqIndex) -> [Int; 3] {
    [lucas(i), lucas(i + 1), lucas(i + 2)]
}

/// The shared `N₂`/`N₃` polynomial once `c'₁ = a'₂ = 1` and `b'₃ = c - 1`.
fn reduced_n(coeffs: &[Int; 3], n: &Int, b1: &Int, c2: &Int, a3: &Int) -> Int {
    let [a, b, c] = coeffs;
    n * (n + a + b + c)
        + c * b * b1 * (a + 1 - (b1 - 1))
        + a * c * c2 * (b + 1 - (c2 - 1))
        + b * a * a3 * (c + 1 - (c - 1) * (a3 - 1))
}

fn reduced_count(coeffs: &[Int; 3], a3: &Int, numerator: &Int, formula: &'static str) -> Result<Int> {
    let [a, b, c] = coeffs;
    let main = exact_div(numerator, &(a * b * c * 2), formula)?;
    let triangular = exact_div(&((a3 - 1) * (a3 - 2)), &Int::from(2), formula)?;
    Ok(main + triangular - 2)
}

pub fn fib_quantities(i: SeqIndex, n: &Int) -> Result<FibQuantities> {
    if i < MIN_FIB_INDEX {
        return Err(Error::UnsupportedIndex {
            family: "Fibonacci",
            index: i,
            min: MIN_FIB_INDEX,
        });
    }
    require_non_negative(n, "n")?;
    let coeffs = fib_triple(i)?;
    let signed_n = sign_pow(i) * n;

    let b1 = rep1m(&(&signed_n * fib(i - 2)?), &coeffs[0])?;
    let c2 = rep1m(&(&signed_n * &coeffs[0]), &coeffs[1])?;
    let a3 = rep1m(&(&signed_n * &coeffs[1]), &coeffs[2])?;
    let n2 = reduced_n(&coeffs, n, &b1, &c2, &a3);
    Ok(FibQuantities { b1, c2, a3, n2 })
}

/// Number of non-negative solutions of `F_i·x + F_{i+1}·y + F_{i+2}·z = n`, `i ≥ 3`.
pub fn count_fib(i: SeqIndex, n: &Int) -> Result<Int> {
    let q = fib_quantities(i, n)?;
    reduced_count(&fib_triple(i)?, &q.a3, &q.n2, "Fibonacci closed form")
}

pub fn lucas_quantities(i: SeqIndex, n: &Int) -> Result<LucasQuantities> {
    if i < MIN_LUCAS_INDEX {
        return Err(Error::UnsupportedIndex {
            family: "Lucas",
            index: i,
            min: MIN_LUCAS_INDEX,
        });
    }
    require_non_negative(n, "n")?;
    let coeffs = lucas_triple(i);
    let signed_n = sign_pow(i + 1) * n;

    let b1 = rep1m(&(&signed_n * lucas(i - 2) * inv5_mod_lucas(i)?), &coeffs[0])?;
    let c2 = rep1m(&(&signed_n * &coeffs[0] * inv5_mod_lucas(i + 1)?), &coeffs[1])?;
    let a3 = rep1m(&(&signed_n * &coeffs[1] * inv5_mod_lucas(i + 2)?), &coeffs[2])?;
    let n3 = reduced_n(&coeffs, n, &b1, &c2, &a3);
    Ok(LucasQuantities { b1, c2, a3, n3 })
}

/// Number of non-negative solutions of `L_i·x + L_{i+1}·y + L_{i+2}·z = n`, `i ≥ 2`.
pub fn count_lucas(i: SeqIndex, n: &Int) -> Result<Int> {
    let q = lucas_quantities(i, n)?;
    reduced_count(&lucas_triple(i), &q.a3, &q.n3, "Lucas closed form")
}
