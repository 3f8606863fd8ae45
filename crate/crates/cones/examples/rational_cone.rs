//! Exact membership in finitely generated rational cones, and the
//! halving-interval example: a submonoid of the non-negative rationals
//! whose distinguished increasing sequence d_n = (9/2)^n generates a
//! proper interval even though its doubles cover everything.
//!
//! ```bash
//! cargo run -p cones --example rational_cone
//! ```

use cones::qcone::*;
use num::BigRational;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn main() {
    // the numerical semigroup <2,7> as a one-dimensional cone
    let cone = RationalCone::new(1, vec![vec![q(2)], vec![q(7)]]).unwrap();
    for target in [11, 5, 0] {
        match cone_membership(&cone, &[q(target)], 16).unwrap() {
            Membership::Member(coeffs) => {
                println!("{target} is a member with coefficients {coeffs:?}")
            }
            Membership::NotMember => println!("{target} is not a member (exhaustive)"),
            Membership::Unknown { coeff_bound } => {
                println!("{target} undecided at coefficient bound {coeff_bound}")
            }
        }
    }

    // the halving example: all three membership families, the doubling
    // climb, and the exhaustive non-membership of d_m - 2
    println!("\nmembership families (levels 0..=2):");
    for line in verify_claim1(2).unwrap() {
        println!("  {line}");
    }
    println!("\ndoubling climb (k <= 3, n <= 2):");
    for line in verify_claim2(3, 2).unwrap() {
        println!("  {line}");
    }
    println!("\nproper interval (m <= 5):");
    for line in verify_nonmembership(5).unwrap() {
        println!("  {line}");
    }
}
