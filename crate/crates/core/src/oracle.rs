//! Ground-truth counters that make no use of any counting formula.
//!
//! [`brute_count`] walks every tuple; [`dp_count`] reads the coefficient of
//! `qⁿ` in `Π 1/(1 - q^{a_k})` off an unbounded-knapsack table. Both accept
//! any positive coefficients, coprime or not.

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::require_non_negative;
use crate::{Error, Int, Result};

pub const DEFAULT_ITERATION_BUDGET: u64 = 100_000_000;
pub const DEFAULT_TABLE_BUDGET: u64 = 20_000_000;
/// Hard cap on the number of tuples [`enumerate_solutions`] will return.
pub const ENUMERATION_CAP: usize = 10_000;

/// Limits that keep oracle calls from running away.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Maximum number of tuples [`brute_count`] may visit.
    pub iterations: u64,
    /// Maximum number of entries in a [`dp_count`] table.
    pub table_entries: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            iterations: DEFAULT_ITERATION_BUDGET,
            table_entries: DEFAULT_TABLE_BUDGET,
        }
    }
}

/// A validated, non-empty list of positive coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffList(Vec<Int>);

impl CoeffList {
    pub fn new(coeffs: Vec<Int>) -> Result<Self> {
        validate(&coeffs)?;
        Ok(CoeffList(coeffs))
    }

    pub fn as_slice(&self) -> &[Int] {
        &self.0
    }
}

impl std::ops::Deref for CoeffList {
    type Target = [Int];

    fn deref(&self) -> &[Int] {
        &self.0
    }
}

fn validate(coeffs: &[Int]) -> Result<()> {
    if coeffs.is_empty() {
        return Err(Error::invalid("coefficient list is empty"));
    }
    if let Some(bad) = coeffs.iter().find(|c| !c.is_positive()) {
        return Err(Error::invalid(format!("coefficients must be positive, got {bad}")));
    }
    Ok(())
}

/// Number of tuples [`brute_count`] visits: `Π (n / a_k + 1)` over every
/// coefficient but the last, whose variable is solved for directly.
pub fn brute_iterations(coeffs: &[Int], n: &Int) -> Int {
    coeffs[..coeffs.len().saturating_sub(1)]
        .iter()
        .map(|a| n / a + 1)
        .product()
}

pub fn brute_count(coeffs: &[Int], n: &Int) -> Result<Int> {
    brute_count_with(coeffs, n, &OracleBudget::default())
}

/// Exact count by enumerating every non-negative tuple.
pub fn brute_count_with(coeffs: &[Int], n: &Int, budget: &OracleBudget) -> Result<Int> {
    validate(coeffs)?;
    require_non_negative(n, "n")?;
    let required = brute_iterations(coeffs, n);
    if required > Int::from(budget.iterations) {
        return Err(Error::OracleTooLarge {
            required,
            budget: budget.iterations,
        });
    }

    let small: Option<Vec<u64>> = coeffs.iter().map(|c| c.to_u64()).collect();
    if let (Some(small), Some(target)) = (small, n.to_u64()) {
        return Ok(Int::from(enumerate_u64(&small, target)));
    }
    Ok(enumerate_big(coeffs, n))
}

fn enumerate_u64(coeffs: &[u64], rem: u64) -> u64 {
    let (&first, rest) = coeffs.split_first().expect("non-empty");
    if rest.is_empty() {
        return u64::from(rem.is_multiple_of(first));
    }
    let mut total = 0;
    let mut r = rem;
    loop {
        total += enumerate_u64(rest, r);
        if r < first {
            return total;
        }
        r -= first;
    }
}

fn enumerate_big(coeffs: &[Int], rem: &Int) -> Int {
    let (first, rest) = coeffs.split_first().expect("non-empty");
    if rest.is_empty() {
        return if (rem % first).is_zero() { Int::one() } else { Int::zero() };
    }
    let mut total = Int::zero();
    let mut r = rem.clone();
    while !r.is_negative() {
        total += enumerate_big(rest, &r);
        r -= first;
    }
    total
}

/// Lists up to `limit` solution tuples (never more than [`ENUMERATION_CAP`]),
/// in lexicographic order of the leading variables. Meant for debugging.
pub fn enumerate_solutions(coeffs: &[Int], n: &Int, limit: usize) -> Result<Vec<Vec<Int>>> {
    validate(coeffs)?;
    require_non_negative(n, "n")?;
    let limit = limit.min(ENUMERATION_CAP);
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(coeffs.len());
    collect(coeffs, n, &mut prefix, &mut out, limit);
    Ok(out)
}

fn collect(coeffs: &[Int], rem: &Int, prefix: &mut Vec<Int>, out: &mut Vec<Vec<Int>>, limit: usize) {
    let (first, rest) = coeffs.split_first().expect("non-empty");
    if rest.is_empty() {
        if (rem % first).is_zero() && out.len() < limit {
            let mut t = prefix.clone();
            t.push(rem / first);
            out.push(t);
        }
        return;
    }
    let mut x = Int::zero();
    let mut r = rem.clone();
    while !r.is_negative() && out.len() < limit {
        prefix.push(x.clone());
        collect(rest, &r, prefix, out, limit);
        prefix.pop();
        r -= first;
        x += 1;
    }
}

pub fn dp_count(coeffs: &[Int], n: &Int) -> Result<Int> {
    dp_count_with(coeffs, n, &OracleBudget::default())
}

/// Exact count from the unbounded-knapsack recurrence, `O(k·n)` additions.
pub fn dp_count_with(coeffs: &[Int], n: &Int, budget: &OracleBudget) -> Result<Int> {
    require_non_negative(n, "n")?;
    let len = n + 1;
    if len > Int::from(budget.table_entries) {
        return Err(Error::Resource(format!(
            "dp table of {len} entries exceeds the budget of {} entries",
            budget.table_entries
        )));
    }
    let n = n.to_usize().ok_or_else(|| Error::Resource(format!("n = {n} does not fit in memory")))?;
    let mut table = dp_table(coeffs, n)?;
    Ok(table.swap_remove(n))
}

/// Counts for every target `0..=n_max` at once: `table[v]` is the number of
/// solutions of `Σ a_k·x_k = v`.
pub fn dp_table(coeffs: &[Int], n_max: usize) -> Result<Vec<Int>> {
    validate(coeffs)?;
    let mut table = vec![Int::zero(); n_max + 1];
    table[0] = Int::one();
    for coeff in coeffs {
        let Some(step) = coeff.to_usize().filter(|&s| s <= n_max) else {
            continue;
        };
        for v in step..=n_max {
            let (lo, hi) = table.split_at_mut(v);
            let prev = &lo[v - step];
            if !prev.is_zero() {
                hi[0] += prev;
            }
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    fn int(v: i64) -> Int {
        Int::from(v)
    }

    #[test]
    fn brute_examples() {
        assert_eq!(brute_count(&ints(&[2, 3, 5]), &int(10)).unwrap(), int(4));
        assert_eq!(brute_count(&ints(&[3, 5]), &int(13)).unwrap(), int(1));
        assert_eq!(brute_count(&ints(&[7]), &int(0)).unwrap(), int(1));
        assert_eq!(brute_count(&ints(&[7]), &int(6)).unwrap(), int(0));
    }

    #[test]
    fn enumeration_lists_expected_tuples() {
        let sols = enumerate_solutions(&ints(&[2, 3, 5]), &int(10), 100).unwrap();
        let expect = vec![ints(&[0, 0, 2]), ints(&[1, 1, 1]), ints(&[2, 2, 0]), ints(&[5, 0, 0])];
        assert_eq!(sols, expect);
        let capped = enumerate_solutions(&ints(&[1, 1]), &int(1_000_000), usize::MAX).unwrap();
        assert_eq!(capped.len(), ENUMERATION_CAP);
    }

    #[test]
    fn budget_is_enforced() {
        let tight = OracleBudget { iterations: 10, table_entries: 10 };
        let err = brute_count_with(&ints(&[1, 1]), &int(100), &tight).unwrap_err();
        assert!(matches!(err, Error::OracleTooLarge { .. }));
        assert!(err.to_string().contains("dp_count"));
        assert!(matches!(dp_count_with(&ints(&[1]), &int(100), &tight), Err(Error::Resource(_))));
        let huge: Int = "1000000000000000000".parse().unwrap();
        assert!(matches!(dp_count(&ints(&[3, 5]), &huge), Err(Error::Resource(_))));
    }

    #[test]
    fn big_path_matches_small_path() {
        let big = Int::from(u64::MAX);
        let coeffs = vec![big.clone(), &big + 2];
        let n = &big * 3 + (&big + 2) * 2;
        assert_eq!(brute_count(&coeffs, &n).unwrap(), enumerate_big(&coeffs, &n));
        assert_eq!(enumerate_big(&ints(&[2, 3, 5]), &int(10)), int(4));
    }

    #[test]
    fn rejects_bad_lists() {
        assert!(brute_count(&[], &int(3)).is_err());
        assert!(dp_count(&ints(&[2, 0]), &int(3)).is_err());
        assert!(CoeffList::new(ints(&[-1])).is_err());
        assert_eq!(CoeffList::new(ints(&[4, 6])).unwrap().len(), 2);
        assert!(dp_count(&ints(&[2]), &int(-3)).is_err());
    }

    #[test]
    fn dp_examples() {
        assert_eq!(dp_count(&ints(&[144, 233, 377]), &int(425_896)).unwrap(), int(7178));
        assert_eq!(dp_count(&ints(&[2, 2, 4]), &int(5)).unwrap(), int(0));
        assert_eq!(dp_count(&ints(&[123, 199, 322]), &int(394_072)).unwrap(), int(9866));
    }

    #[test]
    fn dp_matches_brute_small() {
        for a in 1..=12i64 {
            for b in 1..=12 {
                for c in 1..=12 {
                    let coeffs = ints(&[a, b, c]);
                    let table = dp_table(&coeffs, 200).unwrap();
                    for n in (0..=200).step_by(13) {
                        assert_eq!(table[n], brute_count(&coeffs, &int(n as i64)).unwrap());
                    }
                }
                let table = dp_table(&ints(&[a, b]), 200).unwrap();
                for (n, expect) in table.iter().enumerate() {
                    assert_eq!(expect, &brute_count(&ints(&[a, b]), &int(n as i64)).unwrap());
                }
            }
        }
    }

    #[test]
    fn permutation_and_scaling() {
        let base = dp_table(&ints(&[4, 6, 9]), 300).unwrap();
        for perm in [[6, 4, 9], [9, 6, 4], [4, 9, 6]] {
            assert_eq!(dp_table(&ints(&perm), 300).unwrap(), base);
        }
        for g in 2..=5i64 {
            let scaled = ints(&[4 * g, 6 * g, 9 * g]);
            let table = dp_table(&scaled, 300 * g as usize).unwrap();
            for n in 0..=300usize * g as usize {
                if n % g as usize == 0 {
                    assert_eq!(table[n], base[n / g as usize]);
                } else {
                    assert!(table[n].is_zero());
                }
            }
        }
    }
}
