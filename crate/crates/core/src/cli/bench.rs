//! Wall-clock comparison of counting routes on identical queries.

use std::str::FromStr;
use std::time::Instant;

use serde_json::{json, Value};

use crate::binner3::{self, SumMethod};
use crate::closedform;
use crate::denumerant2;
use crate::oracle::{self, OracleBudget};
use crate::{Error, Int, Result, SeqIndex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BenchFamily {
    Fib(SeqIndex),
    Lucas(SeqIndex),
    Count2(Int, Int),
    Count3(Int, Int, Int),
}

impl BenchFamily {
    pub fn label(&self) -> String {
        match self {
            BenchFamily::Fib(i) => format!("fib i={i}"),
            BenchFamily::Lucas(i) => format!("lucas i={i}"),
            BenchFamily::Count2(a, b) => format!("count2 {a} {b}"),
            BenchFamily::Count3(a, b, c) => format!("count3 {a} {b} {c}"),
        }
    }

    fn coefficients(&self) -> Result<Vec<Int>> {
        Ok(match self {
            BenchFamily::Fib(i) => closedform::fib_triple(*i)?.to_vec(),
            BenchFamily::Lucas(i) => closedform::lucas_triple(*i).to_vec(),
            BenchFamily::Count2(a, b) => vec![a.clone(), b.clone()],
            BenchFamily::Count3(a, b, c) => vec![a.clone(), b.clone(), c.clone()],
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchMethod {
    /// Closed form for fib/lucas, Tripathi for count2, Binner for count3.
    Formula,
    /// Binner's general formula with fast floor sums.
    Binner,
    /// Binner's general formula with term-by-term floor sums.
    DirectSums,
    /// DP oracle.
    Oracle,
    /// Brute-force enumeration.
    Enumeration,
}

impl BenchMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            BenchMethod::Formula => "formula",
            BenchMethod::Binner => "binner",
            BenchMethod::DirectSums => "direct-sums",
            BenchMethod::Oracle => "oracle",
            BenchMethod::Enumeration => "enumeration",
        }
    }
}

impl FromStr for BenchMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "formula" | "closed-form" => Ok(BenchMethod::Formula),
            "binner" => Ok(BenchMethod::Binner),
            "direct-sums" => Ok(BenchMethod::DirectSums),
            "oracle" | "dp" => Ok(BenchMethod::Oracle),
            "enumeration" | "brute" => Ok(BenchMethod::Enumeration),
            other => Err(Error::invalid(format!("unknown bench method '{other}'"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub family: BenchFamily,
    pub ns: Vec<Int>,
    pub methods: Vec<BenchMethod>,
    pub reps: usize,
    pub budget: OracleBudget,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub family: String,
    pub n: Int,
    pub method: BenchMethod,
    pub reps: usize,
    pub median_ns: Option<u128>,
    pub count: Option<Int>,
    /// `ok`, or the error class and reason when the method refused.
    pub status: String,
}

fn evaluate(family: &BenchFamily, coeffs: &[Int], method: BenchMethod, n: &Int, budget: &OracleBudget) -> Result<Int> {
    let three = || -> Result<(&Int, &Int, &Int)> {
        match coeffs {
            [a, b, c] => Ok((a, b, c)),
            _ => Err(Error::invalid("method needs three coefficients")),
        }
    };
    match method {
        BenchMethod::Formula => match family {
            BenchFamily::Fib(i) => closedform::count_fib(*i, n),
            BenchFamily::Lucas(i) => closedform::count_lucas(*i, n),
            BenchFamily::Count2(a, b) => denumerant2::count2(a, b, n),
            BenchFamily::Count3(a, b, c) => binner3::count3(a, b, c, n),
        },
        BenchMethod::Binner | BenchMethod::DirectSums => {
            let (a, b, c) = three()?;
            let sums = if method == BenchMethod::Binner { SumMethod::Fast } else { SumMethod::Direct };
            binner3::count3_with(a, b, c, n, sums)
        }
        BenchMethod::Oracle => oracle::dp_count_with(coeffs, n, budget),
        BenchMethod::Enumeration => oracle::brute_count_with(coeffs, n, budget),
    }
}

/// Median wall-clock time per method over `reps` repetitions of each query.
/// A method that refuses (budget, unsupported input) is reported, not fatal.
pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    if cfg.reps == 0 || cfg.ns.is_empty() || cfg.methods.is_empty() {
        return Err(Error::invalid("bench needs at least one n, one method and one repetition"));
    }
    let coeffs = cfg.family.coefficients()?;
    let mut rows = Vec::new();
    for n in &cfg.ns {
        for &method in &cfg.methods {
            let mut times = Vec::with_capacity(cfg.reps);
            let mut outcome = Ok(Int::default());
            for _ in 0..cfg.reps {
                let start = Instant::now();
                outcome = evaluate(&cfg.family, &coeffs, method, n, &cfg.budget);
                times.push(start.elapsed().as_nanos());
                if outcome.is_err() {
                    break;
                }
            }
            times.sort_unstable();
            let row = match outcome {
                Ok(count) => BenchRow {
                    family: cfg.family.label(),
                    n: n.clone(),
                    method,
                    reps: cfg.reps,
                    median_ns: Some(times[times.len() / 2]),
                    count: Some(count),
                    status: "ok".into(),
                },
                Err(e) => BenchRow {
                    family: cfg.family.label(),
                    n: n.clone(),
                    method,
                    reps: cfg.reps,
                    median_ns: None,
                    count: None,
                    status: format!("refused {}: {e}", e.class()),
                },
            };
            rows.push(row);
        }
    }
    Ok(rows)
}

pub fn rows_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("family,n,method,reps,median_ns,count,status\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},\"{}\"\n",
            r.family,
            r.n,
            r.method.as_str(),
            r.reps,
            r.median_ns.map(|v| v.to_string()).unwrap_or_default(),
            r.count.as_ref().map(|v| v.to_string()).unwrap_or_default(),
            r.status.replace('"', "'"),
        ));
    }
    out
}

pub fn rows_json(rows: &[BenchRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| {
                json!({
                    "family": r.family,
                    "n": r.n.to_string(),
                    "method": r.method.as_str(),
                    "reps": r.reps,
                    "median_ns": r.median_ns.map(|v| v.to_string()),
                    "count": r.count.as_ref().map(|v| v.to_string()),
                    "status": r.status,
                })
            })
            .collect(),
    )
}
