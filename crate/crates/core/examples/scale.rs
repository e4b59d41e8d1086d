//! Closed form versus the O(n) oracle as n grows.
//!
//!     cargo run --release --example scale

use denumerant::cli::{rows_csv, run_bench, BenchConfig, BenchFamily, BenchMethod};
use denumerant::oracle::OracleBudget;
use denumerant::Int;

fn main() -> denumerant::Result<()> {
    let ladder = |exps: &[u32]| exps.iter().map(|&e| Int::from(10u32).pow(e)).collect::<Vec<_>>();

    let fib = BenchConfig {
        family: BenchFamily::Fib(12),
        ns: ladder(&[3, 4, 5, 6, 18]),
        methods: vec![BenchMethod::Formula, BenchMethod::Binner, BenchMethod::Oracle],
        reps: 5,
        budget: OracleBudget::default(),
    };
    print!("{}", rows_csv(&run_bench(&fib)?));

    let pair = BenchConfig {
        family: BenchFamily::Count2(Int::from(3), Int::from(5)),
        ns: ladder(&[3, 4, 5, 6]),
        methods: vec![BenchMethod::Formula, BenchMethod::Enumeration],
        reps: 5,
        budget: OracleBudget::default(),
    };
    print!("{}", rows_csv(&run_bench(&pair)?).lines().skip(1).map(|l| format!("{l}\n")).collect::<String>());
    Ok(())
}
