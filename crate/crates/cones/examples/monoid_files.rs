//! Driving the workbench from monoid description files, the same format
//! the `cones` binary reads.
//!
//! ```bash
//! cargo run -p cones --example monoid_files
//! ```

use cones::backend::MonoidBackend;
use cones::equations::is_refinement;
use cones::format::{self, MonoidDecl};
use cones::predicates::{is_conical, is_separative};
use cones::presentation::PresentedMonoid;

const FILE: &str = "\
# three declarations, one per backend kind
monoid threechain finite
  elements 0 1 inf
  add 0 0 0
  add 0 1 1
  add 0 inf inf
  add 1 1 inf
  add 1 inf inf
  add inf inf inf
end

monoid tt presented
  generators g
  relation 2*g = 3*g
end

monoid twosevens qcone 1
  generator 2
  generator 7
end
";

fn main() {
    let parsed = format::parse(FILE).unwrap();
    for (name, decl) in &parsed.decls {
        match decl {
            MonoidDecl::Finite(m) => {
                println!(
                    "{name}: finite, {} elements, conical={} separative={} refinement={}",
                    m.size(),
                    is_conical(m, 0).decision,
                    is_separative(m, 0).decision,
                    is_refinement(m, 0).decision,
                );
            }
            MonoidDecl::Presented(p) => {
                let m = PresentedMonoid::new(p.clone()).unwrap();
                println!(
                    "{name}: presented on {} generators, {} rewrite rules, \
                     {} normal forms in the degree-6 ball",
                    p.rank(),
                    m.system().rules.len(),
                    m.enumerate(6).len(),
                );
            }
            MonoidDecl::QCone(c) => {
                println!(
                    "{name}: rational cone in Q^{} on {} generators",
                    c.dim(),
                    c.generators().len()
                );
            }
        }
    }
    // canonical printing round-trips
    let canonical = format::print(&parsed);
    assert_eq!(format::print(&format::parse(&canonical).unwrap()), canonical);
    println!("\ncanonical form round-trips; {} bytes", canonical.len());
}
