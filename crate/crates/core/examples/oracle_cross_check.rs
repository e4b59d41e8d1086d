//! Sweeps closed forms, the general formula and the DP oracle over a grid,
//! the same comparison `denumerant verify` runs.
//!
//!     cargo run --example oracle_cross_check

use denumerant::cli::{run_verify, Family, VerifyConfig};

fn main() -> denumerant::Result<()> {
    for family in [Family::Fib, Family::Lucas, Family::Generic] {
        let mut cfg = VerifyConfig::new(family);
        cfg.ns = 0..=1_000;
        let report = run_verify(&cfg)?;
        println!("{report}");
    }

    let mut sampled = VerifyConfig::new(Family::Fib);
    sampled.indices = 3..=14;
    sampled.ns = 0..=200_000;
    sampled.samples = Some(500);
    sampled.seed = 42;
    println!("{}", run_verify(&sampled)?);
    Ok(())
}
