//! Formula-versus-oracle sweeps.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::binner3::{self, SumMethod};
use crate::closedform;
use crate::oracle::{dp_table, OracleBudget};
use crate::{Error, Int, Result, SeqIndex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Fib,
    Lucas,
    Generic,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fib" => Ok(Family::Fib),
            "lucas" => Ok(Family::Lucas),
            "generic" => Ok(Family::Generic),
            other => Err(Error::invalid(format!("unknown family '{other}' (expected fib, lucas or generic)"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Fib => "fib",
            Family::Lucas => "lucas",
            Family::Generic => "generic",
        })
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub family: Family,
    /// Sequence indices for `fib`/`lucas`; ignored for `generic`.
    pub indices: RangeInclusive<SeqIndex>,
    pub ns: RangeInclusive<u64>,
    /// Largest coefficient for the `generic` family.
    pub max_coeff: u64,
    /// When set, test this many random `n` per coefficient triple instead of
    /// the whole range.
    pub samples: Option<usize>,
    pub seed: u64,
    pub budget: OracleBudget,
}

impl VerifyConfig {
    pub fn new(family: Family) -> Self {
        let (indices, ns) = match family {
            Family::Fib => (3..=8, 0..=300),
            Family::Lucas => (2..=8, 0..=300),
            Family::Generic => (0..=0, 0..=200),
        };
        VerifyConfig {
            family,
            indices,
            ns,
            max_coeff: 12,
            samples: None,
            seed: 0,
            budget: OracleBudget::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub coeffs: Vec<Int>,
    pub n: Int,
    pub closed_form: Option<Int>,
    pub binner: Int,
    pub oracle: Int,
    pub quantities: Vec<(String, Int)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub family: Family,
    pub triples: u64,
    pub points: u64,
    pub comparisons: u64,
    pub mismatch: Option<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "family": self.family.to_string(),
            "triples": self.triples,
            "points": self.points,
            "comparisons": self.comparisons,
            "mismatches": if self.passed() { 0 } else { 1 },
        });
        if let Some(m) = &self.mismatch {
            v["first_mismatch"] = json!({
                "coeffs": m.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "n": m.n.to_string(),
                "closed_form": m.closed_form.as_ref().map(|c| c.to_string()),
                "binner": m.binner.to_string(),
                "oracle": m.oracle.to_string(),
                "quantities": m.quantities.iter().map(|(k, v)| (k.clone(), Value::String(v.to_string()))).collect::<serde_json::Map<_, _>>(),
            });
        }
        v
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(
                f,
                "verify {}: {} triples, {} points, {} comparisons, 0 mismatches",
                self.family, self.triples, self.points, self.comparisons
            ),
            Some(m) => {
                let coeffs: Vec<String> = m.coeffs.iter().map(|c| c.to_string()).collect();
                write!(f, "verify {}: MISMATCH at ({}; n={})", self.family, coeffs.join(","), m.n)?;
                if let Some(c) = &m.closed_form {
                    write!(f, " closed_form={c}")?;
                }
                write!(f, " binner={} oracle={}", m.binner, m.oracle)?;
                for (k, v) in &m.quantities {
                    write!(f, " {k}={v}")?;
                }
                Ok(())
            }
        }
    }
}

fn triples(cfg: &VerifyConfig) -> Result<Vec<(Option<SeqIndex>, [Int; 3])>> {
    match cfg.family {
        Family::Fib => cfg
            .indices
            .clone()
            .map(|i| {
                if i < closedform::MIN_FIB_INDEX {
                    return Err(Error::invalid(format!("fib verify needs i >= {}", closedform::MIN_FIB_INDEX)));
                }
                Ok((Some(i), closedform::fib_triple(i)?))
            })
            .collect(),
        Family::Lucas => cfg
            .indices
            .clone()
            .map(|i| {
                if i < closedform::MIN_LUCAS_INDEX {
                    return Err(Error::invalid(format!("lucas verify needs i >= {}", closedform::MIN_LUCAS_INDEX)));
                }
                Ok((Some(i), closedform::lucas_triple(i)))
            })
            .collect(),
        Family::Generic => {
            let mut out = Vec::new();
            for a in 1..=cfg.max_coeff {
                for b in a..=cfg.max_coeff {
                    for c in b..=cfg.max_coeff {
                        let t = [Int::from(a), Int::from(b), Int::from(c)];
                        if binner3::check_pairwise_coprime(&t[0], &t[1], &t[2]).is_ok() {
                            out.push((None, t));
                        }
                    }
                }
            }
            Ok(out)
        }
    }
}

/// Compares closed form (where one exists), the general formula and the DP
/// oracle on every grid point. Stops at the first disagreement.
pub fn run_verify(cfg: &VerifyConfig) -> Result<VerifyReport> {
    if cfg.ns.is_empty() || (cfg.family != Family::Generic && cfg.indices.is_empty()) {
        return Err(Error::invalid("verify ranges must be non-empty"));
    }
    if cfg.family == Family::Generic && cfg.max_coeff == 0 {
        return Err(Error::invalid("max coefficient must be at least 1"));
    }
    let n_max = *cfg.ns.end();
    if n_max >= cfg.budget.table_entries {
        return Err(Error::Resource(format!(
            "n up to {n_max} needs a dp table beyond the budget of {} entries",
            cfg.budget.table_entries
        )));
    }
    let grid = triples(cfg)?;

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let all_ns: Vec<u64> = cfg.ns.clone().collect();
    let mut report = VerifyReport {
        family: cfg.family,
        triples: grid.len() as u64,
        points: 0,
        comparisons: 0,
        mismatch: None,
    };

    for (index, coeffs) in &grid {
        let table = dp_table(coeffs, n_max as usize)?;
        let ns: Vec<u64> = match cfg.samples {
            Some(k) => all_ns.choose_multiple(&mut rng, k.min(all_ns.len())).copied().collect(),
            None => all_ns.clone(),
        };
        let [a, b, c] = coeffs;
        for n in ns {
            let n_int = Int::from(n);
            let oracle = &table[n as usize];
            let bq = binner3::binner_quantities(a, b, c, &n_int)?;
            let binner = binner3::count3_from(a, b, c, &bq, SumMethod::Fast)?;
            let (closed_form, quantities) = match (cfg.family, index) {
                (Family::Fib, Some(i)) => {
                    let q = closedform::fib_quantities(*i, &n_int)?;
                    let named = named(&q.named());
                    (Some(closedform::count_fib(*i, &n_int)?), named)
                }
                (Family::Lucas, Some(i)) => {
                    let q = closedform::lucas_quantities(*i, &n_int)?;
                    let named = named(&q.named());
                    (Some(closedform::count_lucas(*i, &n_int)?), named)
                }
                _ => (None, named(&bq.named())),
            };
            report.points += 1;
            report.comparisons += if closed_form.is_some() { 2 } else { 1 };

            let agree = &binner == oracle && closed_form.as_ref().is_none_or(|cf| cf == oracle);
            if !agree {
                let mut quantities = quantities;
                if closed_form.is_some() {
                    quantities.extend(named(&bq.named()));
                }
                report.mismatch = Some(Mismatch {
                    coeffs: coeffs.to_vec(),
                    n: n_int,
                    closed_form,
                    binner,
                    oracle: oracle.clone(),
                    quantities,
                });
                return Ok(report);
            }
        }
    }
    Ok(report)
}

fn named(q: &[(&'static str, &Int)]) -> Vec<(String, Int)> {
    q.iter().map(|(k, v)| (k.to_string(), (*v).clone())).collect()
}
