//! Fibonacci and Lucas numbers plus the modular inverses that their Cassini
//! identities make available without running extended Euclid.
//!
//! Indexing: `F₁ = F₂ = 1` (so `F₁₂ = 144`) and `L₀ = 2`, `L₁ = 1`.

use std::sync::{OnceLock, RwLock};

use crate::arith::{exact_div, rep1m, sign_pow};
use crate::{Error, Int, Result, SeqIndex};

/// Terms past this index are recomputed by iteration instead of cached.
const MEMO_LIMIT: usize = 1 << 14;

/// Memoized table of a two-term recurrence `s[k] = s[k-1] + s[k-2]` with
/// `s[0]` and `s[1]` fixed.
struct Recurrence {
    table: RwLock<Vec<Int>>,
}

impl Recurrence {
    fn new(s0: i64, s1: i64) -> Self {
        Recurrence {
            table: RwLock::new(vec![Int::from(s0), Int::from(s1)]),
        }
    }

    fn get(&self, k: u64) -> Int {
        if let Ok(k) = usize::try_from(k) {
            if let Some(v) = self.table.read().unwrap().get(k) {
                return v.clone();
            }
            if k < MEMO_LIMIT {
                let mut table = self.table.write().unwrap();
                while table.len() <= k {
                    let next = &table[table.len() - 1] + &table[table.len() - 2];
                    table.push(next);
                }
                return table[k].clone();
            }
        }
        self.iterate_past_memo(k)
    }

    fn iterate_past_memo(&self, k: u64) -> Int {
        let last = MEMO_LIMIT as u64 - 1;
        let (mut prev, mut cur) = (self.get(last - 1), self.get(last));
        for _ in last..k {
            let next = &prev + &cur;
            prev = std::mem::replace(&mut cur, next);
        }
        cur
    }
}

fn fib_table() -> &'static Recurrence {
    static FIB: OnceLock<Recurrence> = OnceLock::new();
    FIB.get_or_init(|| Recurrence::new(0, 1))
}

fn lucas_table() -> &'static Recurrence {
    static LUCAS: OnceLock<Recurrence> = OnceLock::new();
    LUCAS.get_or_init(|| Recurrence::new(2, 1))
}

/// `F_i` for `i ≥ 1`. `F₀` is deliberately unsupported.
pub fn fib(i: SeqIndex) -> Result<Int> {
    if i == 0 {
        return Err(Error::invalid("Fibonacci index must be at least 1"));
    }
    Ok(fib_table().get(i))
}

/// `L_i` for `i ≥ 0`.
pub fn lucas(i: SeqIndex) -> Int {
    lucas_table().get(i)
}

/// `F_{i+1}⁻¹ mod F_i` in `[1, F_i]`, read off Cassini's identity as
/// `(-1)^i F_{i-1}`. Requires `i ≥ 3`.
pub fn fib_inv_next(i: SeqIndex) -> Result<Int> {
    if i < 3 {
        return Err(Error::invalid(format!("fib_inv_next needs i >= 3, got {i}")));
    }
    rep1m(&(sign_pow(i) * fib(i - 1)?), &fib(i)?)
}

/// `5⁻¹ mod L_i` in `[1, L_i]`, for `i ≥ 1`.
///
/// `L_i mod 5` cycles through `2, 1, 3, 4` with period 4, so
/// `5⁻¹ ≡ (1 - t·L_i)/5` where `t` is the inverse of `L_i` modulo 5:
/// 3, 1, 2, 4 for `i ≡ 0, 1, 2, 3 (mod 4)`.
pub fn inv5_mod_lucas(i: SeqIndex) -> Result<Int> {
    if i < 1 {
        return Err(Error::invalid("inv5_mod_lucas needs i >= 1"));
    }
    let l = lucas(i);
    let t = match i % 4 {
        0 => 3,
        1 => 1,
        2 => 2,
        _ => 4,
    };
    let numerator = Int::from(1) - Int::from(t) * &l;
    let quotient = exact_div(&numerator, &Int::from(5), "inverse of 5 modulo a Lucas number")?;
    rep1m(&quotient, &l)
}

/// `F_{i+1}·F_{i-1} - F_i²`; equals `(-1)^i` for `i ≥ 2`.
pub fn cassini_fib(i: SeqIndex) -> Result<Int> {
    if i < 2 {
        return Err(Error::invalid(format!("cassini_fib needs i >= 2, got {i}")));
    }
    let f = fib(i)?;
    Ok(fib(i + 1)? * fib(i - 1)? - &f * &f)
}

/// `L_i² - L_{i-1}·L_{i+1}`; equals `(-1)^i·5` for `i ≥ 1`.
pub fn cassini_lucas(i: SeqIndex) -> Result<Int> {
    if i < 1 {
        return Err(Error::invalid("cassini_lucas needs i >= 1"));
    }
    let l = lucas(i);
    Ok(&l * &l - lucas(i - 1) * lucas(i + 1))
}
