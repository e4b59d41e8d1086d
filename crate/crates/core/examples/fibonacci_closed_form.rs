//! Constant-time count for F_i x + F_{i+1} y + F_{i+2} z = n.
//!
//!     cargo run --example fibonacci_closed_form

use denumerant::binner3::{binner_quantities, count3};
use denumerant::closedform::{count_fib, fib_quantities, fib_triple};
use denumerant::oracle::dp_count;
use denumerant::sequences::{fib, fib_inv_next, cassini_fib};
use denumerant::Int;

fn main() -> denumerant::Result<()> {
    let (i, n) = (12, Int::from(425_896));
    let [a, b, c] = fib_triple(i)?;
    println!("{a}x + {b}y + {c}z = {n}");

    let q = fib_quantities(i, &n)?;
    for (name, value) in q.named() {
        println!("  {name} = {value}");
    }
    println!("  closed form : {}", count_fib(i, &n)?);
    println!("  general     : {}", count3(&a, &b, &c, &n)?);
    println!("  dp oracle   : {}", dp_count(&[a.clone(), b.clone(), c.clone()], &n)?);

    // The inverses the closed form relies on.
    println!("\nCassini F13*F11 - F12^2 = {}", cassini_fib(12)?);
    println!("F13^-1 mod F12 = {} (= F11 = {})", fib_inv_next(12)?, fib(11)?);
    let general = binner_quantities(&a, &b, &c, &n)?;
    println!("c1' = {}, a2' = {}, b3' = {} = F14 - 1", general.c1p, general.a2p, general.b3p);

    println!("\nlarge indices:");
    for (i, exp) in [(40u64, 18u32), (80, 36)] {
        let n = Int::from(10u32).pow(exp);
        println!("  i={i:<3} n=10^{exp}: {}", count_fib(i, &n)?);
    }
    Ok(())
}
