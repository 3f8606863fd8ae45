//! The four canonical quotients of a finite monoid: cancellative,
//! separative, torsion-free, and antisymmetric, each the least
//! congruence whose quotient has the property.
//!
//! ```bash
//! cargo run -p cones --example quotients
//! ```

use cones::corpus;
use cones::finite::*;
use cones::format::print_finite;
use cones::pset::PSet;

fn show(name: &str, m: &FiniteMonoid, q: &FiniteMonoid, cong: &Congruence) {
    let classes: Vec<String> = cong
        .classes()
        .iter()
        .map(|members| {
            let names: Vec<&str> = members.iter().map(|&x| m.label(x)).collect();
            format!("{{{}}}", names.join(","))
        })
        .collect();
    println!("{name}: {} -> {} elements", m.size(), q.size());
    println!("  classes: {}", classes.join(" "));
}

fn main() {
    // the chain {0, 1, inf} collapses completely under cancellation:
    // 1 + inf = 0 + inf forces 1 = 0, and then inf = 1 + 1 = 0
    let chain = corpus::trunc(2);
    let (q, cong) = cancellative_quotient(&chain);
    show("cancellative quotient of {0,1,inf}", &chain, &q, &cong);

    // one generator with 2g = 3g: separativity merges g with 2g
    let tt = corpus::two_three();
    let (q, cong) = separative_quotient(&tt);
    show("\nseparative quotient of <g | 2g = 3g>", &tt, &q, &cong);
    println!("{}", print_finite("two_three_separative", &q));

    // the same monoid from the torsion side: 2*g = 2*(2g)
    let p = PSet::new(vec![2]).unwrap();
    let (q, cong) = p_torsion_quotient(&tt, &p);
    show("torsion-free quotient of <g | 2g = 3g>", &tt, &q, &cong);

    // groups have no order: the antisymmetric quotient of Z/2 is a point
    let z2 = corpus::z_mod(2);
    let (q, cong) = antisymmetric_quotient(&z2);
    show("\nantisymmetric quotient of Z/2", &z2, &q, &cong);

    // congruence enumeration confirms minimality on small monoids
    let congs = all_congruences(&tt).unwrap();
    println!(
        "\n<g | 2g = 3g> has {} congruences; the separative one is least \
         among those with separative quotient",
        congs.len()
    );
}
