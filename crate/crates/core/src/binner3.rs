//! Three-variable denumerant `N(a, b, c; n)` for pairwise coprime
//! coefficients, following Binner:
//!
//! ```text
//! N(a,b,c;n) = N₁/(2abc) + Σ_{i<b'₁} ⌊i·c'₁/a⌋ + Σ_{i<c'₂} ⌊i·a'₂/b⌋ + Σ_{i<a'₃} ⌊i·b'₃/c⌋ - 2
//! ```
//!
//! The three floor sums are evaluated with [`floor_sum_fast`], a Euclidean
//! reduction that runs in logarithmic time. [`floor_sum_direct`] is the
//! term-by-term reference.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{exact_div, gcd, mod_inv, rep1m, require_non_negative};
use crate::{Error, Int, Result};

/// How the floor sums inside the formula are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SumMethod {
    #[default]
    Fast,
    Direct,
}

impl SumMethod {
    pub fn floor_sum(self, upper: &Int, num: &Int, den: &Int) -> Result<Int> {
        match self {
            SumMethod::Fast => floor_sum_fast(upper, num, den),
            SumMethod::Direct => floor_sum_direct(upper, num, den),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinnerQuantities {
    /// `b'₁ ≡ -n·b⁻¹ (mod a)`
    pub b1p: Int,
    /// `c'₁ ≡ b·c⁻¹ (mod a)`
    pub c1p: Int,
    /// `c'₂ ≡ -n·c⁻¹ (mod b)`
    pub c2p: Int,
    /// `a'₂ ≡ c·a⁻¹ (mod b)`
    pub a2p: Int,
    /// `a'₃ ≡ -n·a⁻¹ (mod c)`
    pub a3p: Int,
    /// `b'₃ ≡ a·b⁻¹ (mod c)`
    pub b3p: Int,
    pub n1: Int,
}

impl BinnerQuantities {
    pub fn named(&self) -> Vec<(&'static str, &Int)> {
        vec![
            ("b1p", &self.b1p),
            ("c1p", &self.c1p),
            ("c2p", &self.c2p),
            ("a2p", &self.a2p),
            ("a3p", &self.a3p),
            ("b3p", &self.b3p),
            ("n1", &self.n1),
        ]
    }
}

/// Checks that every coefficient is positive and every pair is coprime.
pub fn check_pairwise_coprime(a: &Int, b: &Int, c: &Int) -> Result<()> {
    for x in [a, b, c] {
        if !x.is_positive() {
            return Err(Error::invalid(format!("coefficients must be positive, got ({a}, {b}, {c})")));
        }
    }
    for (x, y) in [(a, b), (b, c), (a, c)] {
        let g = gcd(x, y);
        if !g.is_one() {
            return Err(Error::NotPairwiseCoprime {
                a: x.clone(),
                b: y.clone(),
                gcd: g,
            });
        }
    }
    Ok(())
}

pub fn binner_quantities(a: &Int, b: &Int, c: &Int, n: &Int) -> Result<BinnerQuantities> {
    check_pairwise_coprime(a, b, c)?;
    require_non_negative(n, "n")?;

    let b1p = rep1m(&(-n * mod_inv(b, a)?), a)?;
    let c1p = rep1m(&(b * mod_inv(c, a)?), a)?;
    let c2p = rep1m(&(-n * mod_inv(c, b)?), b)?;
    let a2p = rep1m(&(c * mod_inv(a, b)?), b)?;
    let a3p = rep1m(&(-n * mod_inv(a, c)?), c)?;
    let b3p = rep1m(&(a * mod_inv(b, c)?), c)?;

    let n1 = n * (n + a + b + c)
        + c * b * &b1p * (a + 1 - &c1p * (&b1p - 1))
        + a * c * &c2p * (b + 1 - &a2p * (&c2p - 1))
        + b * a * &a3p * (c + 1 - &b3p * (&a3p - 1));

    Ok(BinnerQuantities {
        b1p,
        c1p,
        c2p,
        a2p,
        a3p,
        b3p,
        n1,
    })
}

fn check_sum_args(upper: &Int, num: &Int, den: &Int) -> Result<()> {
    if upper.is_negative() || num.is_negative() || !den.is_positive() {
        return Err(Error::invalid(format!(
            "floor sum needs upper >= 0, num >= 0, den >= 1; got ({upper}, {num}, {den})"
        )));
    }
    Ok(())
}

/// `Σ_{i=1}^{upper} ⌊i·num/den⌋`, one term at a time.
pub fn floor_sum_direct(upper: &Int, num: &Int, den: &Int) -> Result<Int> {
    check_sum_args(upper, num, den)?;
    if let (Some(u), Some(p), Some(q)) = (upper.to_u32(), num.to_u32(), den.to_u32()) {
        return Ok(Int::from(floor_sum_direct_small(u, p, q)));
    }

    let mut total = Int::zero();
    let mut i = Int::one();
    while &i <= upper {
        total += (&i * num).div_floor(den);
        i += 1;
    }
    Ok(total)
}

/// Term-by-term sum for word-sized inputs. Each term `⌊i·p/q⌋` is tracked as
/// `i·⌊p/q⌋` plus a carry counting how often the running remainder wrapped.
fn floor_sum_direct_small(upper: u32, num: u32, den: u32) -> u128 {
    let (whole, frac) = (num / den, num % den);
    let bound = (upper as u128 + 1) * (upper as u128 + 1) * (whole as u128 + 1);
    if bound < u64::MAX as u128 {
        direct_loop::<u64>(upper, whole as u64, frac, den) as u128
    } else {
        direct_loop::<u128>(upper, whole as u128, frac, den)
    }
}

fn direct_loop<T>(upper: u32, whole: T, frac: u32, den: u32) -> T
where
    T: Copy + From<u32> + std::ops::Add<Output = T> + std::ops::Mul<Output = T> + std::ops::AddAssign,
{
    let one = T::from(1);
    let mut total = T::from(0);
    let mut carry = T::from(0);
    let (frac, den) = (u64::from(frac), u64::from(den));
    let mut rem = 0u64;
    for i in 1..=upper {
        rem += frac;
        if rem >= den {
            rem -= den;
            carry += one;
        }
        total += T::from(i) * whole + carry;
    }
    total
}

/// `Σ_{i=1}^{upper} ⌊i·num/den⌋` in `O(log min(num, den))` big-integer steps.
pub fn floor_sum_fast(upper: &Int, num: &Int, den: &Int) -> Result<Int> {
    check_sum_args(upper, num, den)?;
    // Rewrite as Σ_{i=0}^{upper-1} ⌊(num·i + num)/den⌋ and reduce.
    Ok(floor_sum_linear(upper.clone(), den.clone(), num.clone(), num.clone()))
}

/// `Σ_{i=0}^{count-1} ⌊(slope·i + offset)/modulus⌋` for non-negative inputs
/// and positive modulus.
fn floor_sum_linear(mut count: Int, mut modulus: Int, mut slope: Int, mut offset: Int) -> Int {
    let mut total = Int::zero();
    loop {
        if slope >= modulus {
            let (q, r) = slope.div_rem(&modulus);
            total += (&count * (&count - 1) / 2) * q;
            slope = r;
        }
        if offset >= modulus {
            let (q, r) = offset.div_rem(&modulus);
            total += &count * q;
            offset = r;
        }
        let y_max = &slope * &count + &offset;
        if y_max < modulus {
            break;
        }
        let (q, r) = y_max.div_rem(&modulus);
        count = q;
        offset = r;
        std::mem::swap(&mut modulus, &mut slope);
    }
    total
}

/// Both sides of the reciprocity identity
/// `Σ_{i=1}^{b} ⌊ic/a⌋ + Σ_{i=1}^{K} ⌊ia/c⌋ = bK`, `K = ⌊bc/a⌋`.
///
/// Requires `b < a`, `c < a`, `gcd(a, c) = 1`, all positive.
pub fn reciprocity_sides(a: &Int, b: &Int, c: &Int) -> Result<(Int, Int)> {
    reciprocity_sides_with(a, b, c, SumMethod::Fast)
}

pub fn reciprocity_sides_with(a: &Int, b: &Int, c: &Int, method: SumMethod) -> Result<(Int, Int)> {
    if !a.is_positive() || !b.is_positive() || !c.is_positive() {
        return Err(Error::invalid(format!("reciprocity needs a, b, c >= 1; got ({a}, {b}, {c})")));
    }
    if b >= a {
        return Err(Error::invalid(format!("reciprocity needs b < a; got b = {b}, a = {a}")));
    }
    if c >= a {
        return Err(Error::invalid(format!("reciprocity needs c < a; got c = {c}, a = {a}")));
    }
    if !gcd(a, c).is_one() {
        return Err(Error::invalid(format!("reciprocity needs gcd(a, c) = 1; got gcd({a}, {c}) = {}", gcd(a, c))));
    }
    let k = (b * c).div_floor(a);
    let lhs = method.floor_sum(b, c, a)? + method.floor_sum(&k, a, c)?;
    Ok((lhs, b * k))
}

/// Number of non-negative `(x, y, z)` with `ax + by + cz = n`, for pairwise
/// coprime `a, b, c`.
pub fn count3(a: &Int, b: &Int, c: &Int, n: &Int) -> Result<Int> {
    count3_with(a, b, c, n, SumMethod::Fast)
}

pub fn count3_with(a: &Int, b: &Int, c: &Int, n: &Int, method: SumMethod) -> Result<Int> {
    let q = binner_quantities(a, b, c, n)?;
    count3_from(a, b, c, &q, method)
}

pub fn count3_from(a: &Int, b: &Int, c: &Int, q: &BinnerQuantities, method: SumMethod) -> Result<Int> {
    let main = exact_div(&q.n1, &(a * b * c * 2), "three-variable count")?;
    let sums = method.floor_sum(&(&q.b1p - 1), &q.c1p, a)?
        + method.floor_sum(&(&q.c2p - 1), &q.a2p, b)?
        + method.floor_sum(&(&q.a3p - 1), &q.b3p, c)?;
    Ok(main + sums - 2)
}
