//! The general three-variable formula: residues, N₁, and its floor sums.
//!
//!     cargo run --example three_variable

use denumerant::binner3::{binner_quantities, count3, count3_with, floor_sum_direct, floor_sum_fast, reciprocity_sides, SumMethod};
use denumerant::oracle::dp_count;
use denumerant::Int;

fn main() -> denumerant::Result<()> {
    let (a, b, c) = (Int::from(7), Int::from(11), Int::from(13));
    let n = Int::from(1_000);

    let q = binner_quantities(&a, &b, &c, &n)?;
    println!("7x + 11y + 13z = 1000");
    for (name, value) in q.named() {
        println!("  {name:>4} = {value}");
    }
    println!("  fast sums   -> {}", count3(&a, &b, &c, &n)?);
    println!("  direct sums -> {}", count3_with(&a, &b, &c, &n, SumMethod::Direct)?);
    println!("  dp oracle   -> {}", dp_count(&[a.clone(), b.clone(), c.clone()], &n)?);

    // Non-coprime coefficients are rejected rather than silently transformed.
    match count3(&Int::from(6), &Int::from(10), &Int::from(15), &n) {
        Ok(v) => println!("unexpected: {v}"),
        Err(e) => println!("\n6x + 10y + 15z: {e}"),
    }

    let (u, p, d) = (Int::from(999_999), Int::from(999_983), Int::from(1_000_003));
    println!("\nsum_(i<=999999) floor(999983 i / 1000003)");
    println!("  fast   = {}", floor_sum_fast(&u, &p, &d)?);
    println!("  direct = {}", floor_sum_direct(&u, &p, &d)?);

    let (lhs, rhs) = reciprocity_sides(&Int::from(1_000_003), &Int::from(777_777), &Int::from(424_242))?;
    println!("\nreciprocity (1000003, 777777, 424242): lhs={lhs} rhs={rhs}");
    Ok(())
}
