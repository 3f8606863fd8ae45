//! A curated family of small table monoids used by the built-in sweeps
//! and the test suite.

use crate::finite::FiniteMonoid;

/// The one-element monoid.
pub fn trivial() -> FiniteMonoid {
    FiniteMonoid::new(vec!["0".into()], vec![0]).unwrap()
}

/// Chain semilattice with `k` nonzero elements: 0 < a < b < ...,
/// addition is the maximum.
pub fn chain(k: usize) -> FiniteMonoid {
    assert!(k <= 8, "chain labels run out");
    let letters = ["a", "b", "c", "d", "e", "f", "g", "h"];
    let mut labels = vec!["0".to_string()];
    labels.extend(letters[..k].iter().map(|s| s.to_string()));
    let n = k + 1;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            table.push(x.max(y));
        }
    }
    FiniteMonoid::new(labels, table).unwrap()
}

/// The four-element diamond semilattice {0, x, y, x+y}.
pub fn diamond() -> FiniteMonoid {
    let labels = vec!["0".into(), "x".into(), "y".into(), "t".into()];
    let join = |a: usize, b: usize| -> usize {
        if a == b {
            a
        } else if a == 0 {
            b
        } else if b == 0 {
            a
        } else {
            3
        }
    };
    let mut table = Vec::new();
    for x in 0..4 {
        for y in 0..4 {
            table.push(join(x, y));
        }
    }
    FiniteMonoid::new(labels, table).unwrap()
}

/// Non-negative integers truncated at `t`: elements 0, 1, ..., t-1 and an
/// absorbing top standing for everything at least t.
pub fn trunc(t: usize) -> FiniteMonoid {
    assert!(t >= 1);
    let mut labels: Vec<String> = (0..t).map(|i| i.to_string()).collect();
    labels.push("inf".into());
    let n = t + 1;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            if x == t || y == t || x + y >= t {
                table.push(t);
            } else {
                table.push(x + y);
            }
        }
    }
    FiniteMonoid::new(labels, table).unwrap()
}

/// The monoid on one generator with 2g = 3g: elements 0, g, 2g.
pub fn two_three() -> FiniteMonoid {
    let labels = vec!["0".into(), "g".into(), "2g".into()];
    // g + g = 2g, everything beyond collapses onto 2g
    let table = vec![0, 1, 2, 1, 2, 2, 2, 2, 2];
    FiniteMonoid::new(labels, table).unwrap()
}

/// The cyclic group of order `k`.
pub fn z_mod(k: usize) -> FiniteMonoid {
    assert!(k >= 1);
    let labels: Vec<String> = (0..k)
        .map(|i| match i {
            0 => "0".to_string(),
            1 => "g".to_string(),
            i => format!("{i}g"),
        })
        .collect();
    let mut table = Vec::with_capacity(k * k);
    for x in 0..k {
        for y in 0..k {
            table.push((x + y) % k);
        }
    }
    FiniteMonoid::new(labels, table).unwrap()
}

/// The named corpus driving the built-in sweeps.
pub fn corpus() -> Vec<(String, FiniteMonoid)> {
    vec![
        ("trivial".into(), trivial()),
        ("chain1".into(), chain(1)),
        ("chain2".into(), chain(2)),
        ("chain3".into(), chain(3)),
        ("chain4".into(), chain(4)),
        ("diamond".into(), diamond()),
        ("trunc2".into(), trunc(2)),
        ("trunc3".into(), trunc(3)),
        ("two-three".into(), two_three()),
        ("zmod2".into(), z_mod(2)),
        ("zmod3".into(), z_mod(3)),
        ("chain1-x-two-three".into(), chain(1).product(&two_three())),
        ("chain1-x-trunc2".into(), chain(1).product(&trunc(2))),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backend::check_backend_laws;

    #[test]
    fn corpus_members_are_valid_monoids() {
        for (name, m) in corpus() {
            assert!(check_backend_laws(&m, 0).is_ok(), "laws fail for {name}");
        }
    }

    #[test]
    fn truncation_addition_saturates() {
        let m = trunc(3); // {0, 1, 2, inf}
        assert_eq!(m.add_idx(1, 1), 2);
        assert_eq!(m.add_idx(1, 2), 3);
        assert_eq!(m.add_idx(3, 3), 3);
    }
}
