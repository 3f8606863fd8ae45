//! Adjoining a refinement matrix to a monoid that lacks one: glue the
//! free rank-4 monoid onto the base along the pattern monoid of balanced
//! quadruples, then verify the matrix, the embedding, conicality and
//! unitarity on a bounded ball via normal forms.
//!
//! ```bash
//! cargo run -p cones --example refinement_step
//! ```

use cones::amalgam::{pattern_member, refinement_step, RefinementStep};
use cones::backend::MonoidBackend;
use cones::presentation::{ExpVec, Presentation, PresentedMonoid};

fn main() {
    // the membership oracle of the pattern monoid: outer entries balance
    // inner entries
    println!("pattern membership in (Z+)^4:");
    for v in [[1u64, 1, 0, 0], [2, 1, 1, 0], [1, 0, 0, 0]] {
        println!("  {v:?} -> {}", pattern_member(&v));
    }

    // the free monoid on one generator t, with the instance t + t = t + t
    let base = PresentedMonoid::new(Presentation::free(vec!["t".into()])).unwrap();
    let t = ExpVec(vec![1]);
    let step = refinement_step(&base, &t, &t, &t, &t).unwrap();
    let ext = match step {
        RefinementStep::Extended(ext) => ext,
        RefinementStep::Direct(_) => unreachable!("all entries nonzero"),
    };

    println!("\nglued extension for (t, t | t, t):");
    for (l, r) in &ext.monoid.system().rules {
        println!(
            "  rule {} -> {}",
            l.render(&ext.monoid.presentation().generator_names),
            r.render(&ext.monoid.presentation().generator_names)
        );
    }
    let names = &ext.monoid.presentation().generator_names;
    println!(
        "adjoined matrix rows: [{} {}] [{} {}]",
        ext.adjoined[0].render(names),
        ext.adjoined[1].render(names),
        ext.adjoined[2].render(names),
        ext.adjoined[3].render(names),
    );
    println!("matrix refines the instance: {}", ext.matrix_valid());
    println!(
        "embedding injective on ball 5: {}",
        ext.embedding_injective_on_ball(&base, 5)
    );
    println!("conical on ball 4: {}", ext.conical_on_ball(4));
    println!(
        "embedded base unitary on ball 5: {}",
        ext.unitary_on_ball(&base, 5).unwrap().decision
    );

    // a zero entry short-circuits to a direct matrix
    let zero = ExpVec(vec![0]);
    match refinement_step(&base, &zero, &t, &t, &zero).unwrap() {
        RefinementStep::Direct(m) => println!(
            "\nzero case is direct: rows [{} {}] [{} {}]",
            base.display(&m.c00),
            base.display(&m.c01),
            base.display(&m.c10),
            base.display(&m.c11)
        ),
        RefinementStep::Extended(_) => unreachable!(),
    }
}
