//! Tripathi's formula for N(a, b; n), checked against enumeration.
//!
//!     cargo run --example two_variable

use denumerant::denumerant2::{count2, tripathi_quantities};
use denumerant::oracle::{brute_count, enumerate_solutions};
use denumerant::Int;

fn main() -> denumerant::Result<()> {
    let (a, b) = (Int::from(3), Int::from(5));
    for n in [0, 1, 7, 13, 30, 1_000] {
        let n = Int::from(n);
        let q = tripathi_quantities(&a, &b, &n)?;
        let count = count2(&a, &b, &n)?;
        let truth = brute_count(&[a.clone(), b.clone()], &n)?;
        println!("N(3,5;{n:>5}) = {count:>3}   a'={:<2} b'={}   enumeration={truth}", q.a_prime, q.b_prime);
    }

    let n = Int::from(30);
    println!("\nsolutions of 3x + 5y = 30:");
    for t in enumerate_solutions(&[a.clone(), b.clone()], &n, 100)? {
        println!("  x={} y={}", t[0], t[1]);
    }

    // Adding ab to n adds exactly one solution.
    let ab = &a * &b;
    let base = count2(&a, &b, &Int::from(22))?;
    println!("\nN(3,5;22) = {base}, N(3,5;37) = {}", count2(&a, &b, &(Int::from(22) + ab))?);
    Ok(())
}
