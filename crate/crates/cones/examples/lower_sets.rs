//! The monoid of bounded lower subsets of the non-negative rationals:
//! conical, antisymmetric, with refinement on sampled instances, yet a
//! single irrational cut defeats weak sum decomposition.
//!
//! ```bash
//! cargo run -p cones --example lower_sets
//! ```

use cones::backend::MonoidBackend;
use cones::equations::find_refinement_matrix;
use cones::lambda::{wsd_counterexample, wsd_counterexample_search, Lambda, LowerSet};
use cones::sqrt2::QSqrt2;

fn main() {
    let lambda = Lambda;

    // flag algebra: a sum attains its supremum iff both summands do
    let one_closed = LowerSet::closed(QSqrt2::from_integer(1)).unwrap();
    let one_open = LowerSet::open(QSqrt2::from_integer(1)).unwrap();
    println!(
        "1 + 1- = {}    1 + 1 = {}",
        lambda.display(&lambda.add(&one_closed, &one_open)),
        lambda.display(&lambda.add(&one_closed, &one_closed)),
    );

    // refinement instances with rational cuts are always solvable
    let m = find_refinement_matrix(&lambda, &one_closed, &one_open, &one_open, &one_closed, 2)
        .unwrap()
        .unwrap();
    println!(
        "refinement of (1, 1- | 1-, 1): rows [{} {}] [{} {}]",
        lambda.display(&m.c00),
        lambda.display(&m.c01),
        lambda.display(&m.c10),
        lambda.display(&m.c11)
    );

    // but the instance with cut sqrt(2) - 1 cannot be decomposed
    let cx = wsd_counterexample();
    println!("\ninstance holds exactly: {}", cx.instance_holds);
    for line in &cx.trace {
        println!("  {line}");
    }
    println!("impossible: {}", cx.impossible);
    println!(
        "generic bounded search agrees: {:?}",
        wsd_counterexample_search(3).unwrap()
    );
}
