//! Adjoining a witness pair for a weak-sum-decomposition instance
//! a0 + a1 + c = b + c. Elements carry a two-component counter that
//! rewrites into the base once it dominates c; the rewriting is
//! terminating and confluent, so normal forms decide equality.
//!
//! ```bash
//! cargo run -p cones --example wsd_step
//! ```

use cones::backend::{MonoidBackend, Nat};
use cones::corpus;
use cones::extension::wsd_extend;

fn main() {
    // over the naturals with c = 0 the counters consume immediately
    let ext = wsd_extend(Nat, 1, 1, 2, 0).unwrap();
    let (x0, x1) = ext.witnesses();
    println!("naturals, instance 1 + 1 + 0 = 2 + 0:");
    println!("  x0 = {}, x1 = {}", ext.display(&x0), ext.display(&x1));
    println!("  x0 + x1 = {}", ext.display(&ext.add(&x0, &x1)));

    // on the chain {0, 1, inf} with c = inf the counters are stuck at
    // the bottom and the witnesses are genuinely new elements
    let chain = corpus::trunc(2);
    let ext = wsd_extend(chain, 1, 1, 1, 2).unwrap();
    let (x0, x1) = ext.witnesses();
    println!("\nchain {{0,1,inf}}, instance 1 + 1 + inf = 1 + inf:");
    println!("  x0 = {}, x1 = {}", ext.display(&x0), ext.display(&x1));
    let jc = ext.embed(&2);
    println!(
        "  x0 + j(inf) = {} = j(1) + j(inf): {}",
        ext.display(&ext.add(&x0, &jc)),
        ext.eq(&ext.add(&x0, &jc), &ext.add(&ext.embed(&1), &jc))
    );
    println!(
        "  x0 + x1 = j(1): {}",
        ext.eq(&ext.add(&x0, &x1), &ext.embed(&1))
    );
    let checks = ext.verify(4);
    println!("  all bounded checks hold: {}", checks.all_hold());

    // every peak of the rewriting rejoins: sample the critical overlap
    // where both a single counter and the full pair can fire
    let ext = wsd_extend(Nat, 2, 3, 5, 4).unwrap();
    println!("\nconfluence peak at (4, (1,1)) for 2 + 3 + 4 = 5 + 4:");
    for (y, s) in ext.one_step_reducts(&4, (1, 1)) {
        let nf = ext.nf(&y, s);
        println!("  reduct ({y}, {s:?}) -> normal form ({}, {:?})", nf.0, nf.1);
    }
}
