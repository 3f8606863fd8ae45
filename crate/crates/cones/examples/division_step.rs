//! Adjoining a p-th divisor of an element: the extension lives on pairs
//! (base element, counter), with two pairs equal when their counters
//! agree mod p and their rounded-up contributions match.
//!
//! ```bash
//! cargo run -p cones --example division_step
//! ```

use cones::backend::{MonoidBackend, Nat};
use cones::corpus;
use cones::extension::division_extend;

fn main() {
    // halving 1 over the naturals gives the half-integers
    let ext = division_extend(Nat, 1, 2).unwrap();
    let u = ext.unit();
    println!("over the naturals, u with 2u = 1:");
    println!("  u + u = {} ~ {}", ext.display(&ext.add(&u, &u)), ext.display(&ext.embed(&1)));
    println!(
        "  ball at 4: {}",
        ext.enumerate(4)
            .iter()
            .map(|e| ext.display(e))
            .collect::<Vec<_>>()
            .join(" ")
    );
    let checks = ext.verify(6);
    println!("  p*u = a:            {}", checks.divides);
    println!("  embedding injective: {}", checks.embedding_injective);
    println!("  (x,1) ~ (y,1) iff x+a = y+a: {}", checks.unit_translation);
    println!("  unitary on ball:    {}", checks.unitary.decision);
    println!("  conical on ball:    {}", checks.conical_on_ball);

    // dividing the absorbing top of the chain {0, 1, inf} by three
    let chain = corpus::trunc(2);
    let ext = division_extend(chain, 2, 3).unwrap();
    println!("\nover {{0, 1, inf}}, u with 3u = inf:");
    println!(
        "  (0,3) ~ (inf,0): {}",
        ext.eq(&(0, 3), &(2, 0))
    );
    println!(
        "  (1,1) ~ (0,1) since 1 + inf = 0 + inf: {}",
        ext.eq(&(1, 1), &(0, 1))
    );
    println!("  all checks hold: {}", ext.verify(4).all_hold());
}
