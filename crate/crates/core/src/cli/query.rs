use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_traits::{One, Signed};
use serde_json::{json, Map, Value};

use crate::arith::{gcd, require_non_negative};
use crate::binner3::{self, BinnerQuantities, SumMethod};
use crate::closedform::{self, FibQuantities, LucasQuantities, MIN_FIB_INDEX, MIN_LUCAS_INDEX};
use crate::denumerant2::{self, TripathiQuantities};
use crate::oracle::{self, OracleBudget};
use crate::{Error, Int, Result, SeqIndex};

/// Which evaluation route a query should take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    Formula,
    DirectSums,
    Oracle,
    #[default]
    Auto,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "formula" => Ok(Method::Formula),
            "direct-sums" => Ok(Method::DirectSums),
            "oracle" => Ok(Method::Oracle),
            "auto" => Ok(Method::Auto),
            other => Err(Error::invalid(format!(
                "unknown method '{other}' (expected formula, direct-sums, oracle or auto)"
            ))),
        }
    }
}

/// The route that actually produced a count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodUsed {
    TripathiFormula,
    BinnerFormula,
    BinnerDirectSums,
    FibClosedForm,
    LucasClosedForm,
    OracleDp,
}

impl MethodUsed {
    pub fn as_str(self) -> &'static str {
        match self {
            MethodUsed::TripathiFormula => "tripathi-formula",
            MethodUsed::BinnerFormula => "binner-formula",
            MethodUsed::BinnerDirectSums => "binner-direct-sums",
            MethodUsed::FibClosedForm => "fib-closed-form",
            MethodUsed::LucasClosedForm => "lucas-closed-form",
            MethodUsed::OracleDp => "oracle-dp",
        }
    }
}

impl fmt::Display for MethodUsed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Query {
    Count2 { a: Int, b: Int },
    Count3 { a: Int, b: Int, c: Int },
    Fib { i: SeqIndex },
    Lucas { i: SeqIndex },
    Oracle { coeffs: Vec<Int> },
}

impl Query {
    pub fn kind(&self) -> &'static str {
        match self {
            Query::Count2 { .. } => "count2",
            Query::Count3 { .. } => "count3",
            Query::Fib { .. } => "fib",
            Query::Lucas { .. } => "lucas",
            Query::Oracle { .. } => "oracle",
        }
    }

    /// Coefficients of the equation this query counts solutions of.
    pub fn coefficients(&self) -> Result<Vec<Int>> {
        Ok(match self {
            Query::Count2 { a, b } => vec![a.clone(), b.clone()],
            Query::Count3 { a, b, c } => vec![a.clone(), b.clone(), c.clone()],
            Query::Fib { i } => {
                if *i == 0 {
                    return Err(Error::invalid("Fibonacci index must be at least 1"));
                }
                closedform::fib_triple(*i)?.to_vec()
            }
            Query::Lucas { i } => closedform::lucas_triple(*i).to_vec(),
            Query::Oracle { coeffs } => coeffs.clone(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuerySpec {
    pub query: Query,
    pub n: Int,
    pub method: Method,
}

pub(crate) fn parse_int(s: &str, what: &str) -> Result<Int> {
    s.parse::<Int>()
        .map_err(|_| Error::invalid(format!("{what} must be an integer, got '{s}'")))
}

fn parse_index(s: &str) -> Result<SeqIndex> {
    s.parse::<SeqIndex>()
        .map_err(|_| Error::invalid(format!("index must be a non-negative integer, got '{s}'")))
}

impl QuerySpec {
    /// Builds a query from a subcommand name and its positional arguments,
    /// e.g. `("count3", ["2", "3", "5", "10"])`.
    pub fn from_args<S: AsRef<str>>(kind: &str, args: &[S], method: Method) -> Result<Self> {
        let args: Vec<&str> = args.iter().map(|s| s.as_ref()).collect();
        let arity = |want: usize| -> Result<()> {
            if args.len() != want {
                return Err(Error::invalid(format!(
                    "{kind} takes {want} arguments, got {}",
                    args.len()
                )));
            }
            Ok(())
        };
        let query = match kind {
            "count2" => {
                arity(3)?;
                Query::Count2 {
                    a: parse_int(args[0], "a")?,
                    b: parse_int(args[1], "b")?,
                }
            }
            "count3" => {
                arity(4)?;
                Query::Count3 {
                    a: parse_int(args[0], "a")?,
                    b: parse_int(args[1], "b")?,
                    c: parse_int(args[2], "c")?,
                }
            }
            "fib" | "lucas" => {
                arity(2)?;
                let i = parse_index(args[0])?;
                if kind == "fib" {
                    Query::Fib { i }
                } else {
                    Query::Lucas { i }
                }
            }
            "oracle" => {
                if args.len() < 2 {
                    return Err(Error::invalid("oracle takes at least one coefficient and n"));
                }
                let coeffs = args[..args.len() - 1]
                    .iter()
                    .map(|s| parse_int(s, "coefficient"))
                    .collect::<Result<Vec<_>>>()?;
                Query::Oracle { coeffs }
            }
            other => return Err(Error::invalid(format!("unknown query kind '{other}'"))),
        };
        let n = parse_int(args[args.len() - 1], "n")?;
        require_non_negative(&n, "n")?;
        Ok(QuerySpec { query, n, method })
    }

    /// Parses one batch line. Blank lines and `#` comments yield `None`.
    pub fn parse_line(line: &str, method: Method) -> Result<Option<Self>> {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            return Ok(None);
        }
        let mut words = line.split_whitespace();
        let kind = words.next().expect("non-empty line");
        let args: Vec<&str> = words.collect();
        Self::from_args(kind, &args, method).map(Some)
    }

    pub fn inputs_json(&self) -> Value {
        let mut m = Map::new();
        let s = |v: &Int| Value::String(v.to_string());
        match &self.query {
            Query::Count2 { a, b } => {
                m.insert("a".into(), s(a));
                m.insert("b".into(), s(b));
            }
            Query::Count3 { a, b, c } => {
                m.insert("a".into(), s(a));
                m.insert("b".into(), s(b));
                m.insert("c".into(), s(c));
            }
            Query::Fib { i } | Query::Lucas { i } => {
                m.insert("i".into(), Value::String(i.to_string()));
            }
            Query::Oracle { coeffs } => {
                m.insert("coeffs".into(), Value::Array(coeffs.iter().map(s).collect()));
            }
        }
        m.insert("n".into(), s(&self.n));
        Value::Object(m)
    }

    /// The query written back as a batch line.
    pub fn to_line(&self) -> String {
        let mut parts = vec![self.query.kind().to_string()];
        match &self.query {
            Query::Count2 { a, b } => parts.extend([a.to_string(), b.to_string()]),
            Query::Count3 { a, b, c } => parts.extend([a.to_string(), b.to_string(), c.to_string()]),
            Query::Fib { i } | Query::Lucas { i } => parts.push(i.to_string()),
            Query::Oracle { coeffs } => parts.extend(coeffs.iter().map(|c| c.to_string())),
        }
        parts.push(self.n.to_string());
        parts.join(" ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Quantities {
    Tripathi(TripathiQuantities),
    Binner(BinnerQuantities),
    Fib(FibQuantities),
    Lucas(LucasQuantities),
}

impl Quantities {
    pub fn named(&self) -> Vec<(&'static str, &Int)> {
        match self {
            Quantities::Tripathi(q) => q.named(),
            Quantities::Binner(q) => q.named(),
            Quantities::Fib(q) => q.named(),
            Quantities::Lucas(q) => q.named(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub count: Int,
    pub method_used: MethodUsed,
    pub quantities: Option<Quantities>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct QueryOptions {
    pub show_quantities: bool,
    pub budget: OracleBudget,
}

enum Route {
    Tripathi,
    Binner(SumMethod),
    FibClosed,
    LucasClosed,
    Dp,
}

fn pairwise_coprime(coeffs: &[Int]) -> bool {
    coeffs.iter().all(|c| c.is_positive())
        && coeffs
            .iter()
            .enumerate()
            .all(|(k, x)| coeffs[k + 1..].iter().all(|y| gcd(x, y).is_one()))
}

fn choose_route(spec: &QuerySpec, coeffs: &[Int]) -> Result<Route> {
    use Method::*;
    Ok(match (&spec.query, spec.method) {
        (Query::Oracle { .. }, Oracle | Auto) => Route::Dp,
        (Query::Oracle { .. }, _) => {
            return Err(Error::invalid("the oracle query only supports --method oracle or auto"));
        }
        (_, Oracle) => Route::Dp,
        (Query::Count2 { .. }, Formula | DirectSums) => Route::Tripathi,
        (Query::Count2 { .. }, Auto) if pairwise_coprime(coeffs) => Route::Tripathi,
        (Query::Count3 { .. }, Formula) => Route::Binner(SumMethod::Fast),
        (Query::Count3 { .. }, Auto) if pairwise_coprime(coeffs) => Route::Binner(SumMethod::Fast),
        (Query::Fib { .. } | Query::Lucas { .. } | Query::Count3 { .. }, DirectSums) => {
            Route::Binner(SumMethod::Direct)
        }
        (Query::Fib { .. }, Formula) => Route::FibClosed,
        (Query::Fib { i }, Auto) if *i >= MIN_FIB_INDEX => Route::FibClosed,
        (Query::Lucas { .. }, Formula) => Route::LucasClosed,
        (Query::Lucas { i }, Auto) if *i >= MIN_LUCAS_INDEX => Route::LucasClosed,
        (_, Auto) => Route::Dp,
    })
}

/// Evaluates one query, dispatching to the formula module its method selects.
///
/// `Auto` prefers a closed form, then the general coprime formula, and falls
/// back to the DP oracle.
pub fn run_query(spec: &QuerySpec, opts: &QueryOptions) -> Result<CountResult> {
    require_non_negative(&spec.n, "n")?;
    let coeffs = spec.query.coefficients()?;
    let route = choose_route(spec, &coeffs)?;
    let n = &spec.n;

    let start = Instant::now();
    let (count, method_used, quantities) = match route {
        Route::Tripathi => {
            let q = denumerant2::tripathi_quantities(&coeffs[0], &coeffs[1], n)?;
            let count = denumerant2::count2_from(&coeffs[0], &coeffs[1], n, &q)?;
            (count, MethodUsed::TripathiFormula, Quantities::Tripathi(q).into())
        }
        Route::Binner(sums) => {
            let [a, b, c] = <&[Int; 3]>::try_from(&coeffs[..]).expect("three coefficients");
            let q = binner3::binner_quantities(a, b, c, n)?;
            let count = binner3::count3_from(a, b, c, &q, sums)?;
            let used = match sums {
                SumMethod::Fast => MethodUsed::BinnerFormula,
                SumMethod::Direct => MethodUsed::BinnerDirectSums,
            };
            (count, used, Quantities::Binner(q).into())
        }
        Route::FibClosed => {
            let Query::Fib { i } = spec.query else { unreachable!() };
            let q = closedform::fib_quantities(i, n)?;
            let count = closedform::count_fib(i, n)?;
            (count, MethodUsed::FibClosedForm, Quantities::Fib(q).into())
        }
        Route::LucasClosed => {
            let Query::Lucas { i } = spec.query else { unreachable!() };
            let q = closedform::lucas_quantities(i, n)?;
            let count = closedform::count_lucas(i, n)?;
            (count, MethodUsed::LucasClosedForm, Quantities::Lucas(q).into())
        }
        Route::Dp => (oracle::dp_count_with(&coeffs, n, &opts.budget)?, MethodUsed::OracleDp, None),
    };
    let elapsed = start.elapsed();

    if count.is_negative() {
        return Err(Error::FormulaIntegrality {
            formula: method_used.as_str(),
            numerator: count,
            denominator: Int::one(),
        });
    }
    Ok(CountResult {
        count,
        method_used,
        quantities: if opts.show_quantities { quantities } else { None },
        elapsed,
    })
}

/// JSON object for a successful query, in a fixed field order. Every big
/// integer is a decimal string.
pub fn result_json(spec: &QuerySpec, result: &CountResult) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), json!(spec.query.kind()));
    m.insert("inputs".into(), spec.inputs_json());
    m.insert("count".into(), json!(result.count.to_string()));
    m.insert("method_used".into(), json!(result.method_used.as_str()));
    if let Some(q) = &result.quantities {
        let obj: Map<String, Value> = q
            .named()
            .into_iter()
            .map(|(k, v)| (k.to_string(), Value::String(v.to_string())))
            .collect();
        m.insert("quantities".into(), Value::Object(obj));
    }
    m.insert("elapsed_ns".into(), json!(result.elapsed.as_nanos() as u64));
    Value::Object(m)
}

pub fn error_json(err: &Error) -> Value {
    json!({ "error": err.class(), "exit_code": err.exit_code(), "reason": err.to_string() })
}

/// Plain-text rendering: the count, then `name: value` lines when
/// quantities were requested.
pub fn result_text(result: &CountResult) -> String {
    let mut s = result.count.to_string();
    if let Some(q) = &result.quantities {
        s.push_str(&format!("\nmethod_used: {}", result.method_used));
        for (k, v) in q.named() {
            s.push_str(&format!("\n{k}: {v}"));
        }
    }
    s
}
