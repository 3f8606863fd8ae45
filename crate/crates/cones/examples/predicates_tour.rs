//! A tour of the predicate layer across three backends: the naturals,
//! a finite table monoid, and a numerical semigroup.
//!
//! ```bash
//! cargo run -p cones --example predicates_tour
//! ```

use cones::backend::{MonoidBackend, Nat, NatSub};
use cones::corpus;
use cones::equations::is_refinement;
use cones::predicates::*;
use cones::pset::PSet;

fn battery<B: MonoidBackend>(name: &str, m: &B, bound: u32) {
    println!("{name}:");
    println!("  conical        = {}", is_conical(m, bound).decision);
    println!("  cancellative   = {}", is_cancellative(m, bound).decision);
    println!("  separative     = {}", is_separative(m, bound).decision);
    println!("  stably finite  = {}", is_stably_finite(m, bound).decision);
    println!("  antisymmetric  = {}", is_antisymmetric(m, bound).decision);
    println!("  simple         = {}", is_simple(m, bound).decision);
    println!("  refinement     = {}", is_refinement(m, bound).decision);
    println!(
        "  quasi-divisible = {}",
        is_quasi_divisible(m, bound).decision
    );
}

fn main() {
    battery("non-negative integers (ball 6)", &Nat, 6);

    // the three-element chain with absorbing top: 1 + 1 = inf
    let chain = corpus::trunc(2);
    battery("\nthree-element chain {0, 1, inf}", &chain, 4);
    let cancel = is_cancellative(&chain, 0);
    println!("  counterexample: {}", cancel.witness.unwrap());

    // the numerical semigroup <2,3> is perforated: doubling can be
    // undone numerically but not inside the monoid
    let m = NatSub::new(vec![2, 3]);
    let p = PSet::new(vec![2]).unwrap();
    let verdict = is_p_unperforated(&m, &p, 10);
    println!("\n<2,3> is 2-unperforated: {}", verdict.decision);
    println!("  counterexample: {}", verdict.witness.unwrap());

    // domination by multiples and the induced equivalence
    println!("\nin {{0, 1, inf}}: 1 and inf dominate each other:");
    println!("  asymp(1, inf) = {}", asymp(&chain, &1, &2, 4));
}
