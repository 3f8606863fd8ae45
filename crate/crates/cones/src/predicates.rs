//! The algebraic preordering and the standard predicates on commutative
//! monoids, decided over bounded enumerations.
//!
//! Verdict policy: a `False` always carries a definite counterexample. A
//! `True` means the ball-restricted statement verified with every inner
//! query definite; on backends with complete enumeration this is the exact
//! truth value. `Unknown` is returned whenever an inner search was
//! inconclusive.

use crate::backend::MonoidBackend;
use crate::decision::{Checked, Decision};
use crate::error::{Error, Result};
use crate::pset::PSet;

/// The algebraic preordering: x <= y iff some z satisfies x + z = y.
///
/// Searches z over the enumerated ball. Exhaustion is a definite `False`
/// only when the backend certifies that every candidate summand of y lies
/// in the ball.
pub fn leq_alg<B: MonoidBackend>(m: &B, x: &B::Elem, y: &B::Elem, bound: u32) -> Decision {
    for z in m.enumerate(bound) {
        if m.eq(&m.add(x, &z), y) {
            return Decision::True;
        }
    }
    if m.summand_complete(bound, y) {
        Decision::False
    } else {
        Decision::Unknown { bound }
    }
}

/// x is dominated by some multiple of y: x <= n*y for some n with
/// 1 <= n <= bound.
pub fn propto<B: MonoidBackend>(m: &B, x: &B::Elem, y: &B::Elem, bound: u32) -> Decision {
    let mut unknown = false;
    let mut multiple = m.zero();
    for _ in 1..=bound {
        multiple = m.add(&multiple, y);
        match leq_alg(m, x, &multiple, bound) {
            Decision::True => return Decision::True,
            Decision::False => {}
            Decision::Unknown { .. } => unknown = true,
        }
    }
    if unknown {
        Decision::Unknown { bound }
    } else {
        Decision::False
    }
}

/// Mutual domination by multiples.
pub fn asymp<B: MonoidBackend>(m: &B, x: &B::Elem, y: &B::Elem, bound: u32) -> Decision {
    propto(m, x, y, bound).and(propto(m, y, x, bound))
}

/// No two elements, not both zero, sum to zero.
pub fn is_conical<B: MonoidBackend>(m: &B, bound: u32) -> Checked {
    let ball = m.enumerate(bound);
    let zero = m.zero();
    for x in &ball {
        for y in &ball {
            if m.eq(&m.add(x, y), &zero) && !(m.is_zero(x) && m.is_zero(y)) {
                return Checked::with_witness(
                    Decision::False,
                    format!("{} + {} = 0", m.display(x), m.display(y)),
                );
            }
        }
    }
    Checked::new(Decision::True)
}

/// x + z = y + z forces x = y.
pub fn is_cancellative<B: MonoidBackend>(m: &B, bound: u32) -> Checked {
    let ball = m.enumerate(bound);
    for x in &ball {
        for y in &ball {
            if m.eq(x, y) {
                continue;
            }
            for z in &ball {
                if m.eq(&m.add(x, z), &m.add(y, z)) {
                    return Checked::with_witness(
                        Decision::False,
                        format!(
                            "{} + {} = {} + {} yet {} != {}",
                            m.display(x),
                            m.display(z),
                            m.display(y),
                            m.display(z),
                            m.display(x),
                            m.display(y)
                        ),
                    );
                }
            }
        }
    }
    Checked::new(Decision::True)
}

/// 2x = x + y = 2y forces x = y.
pub fn is_separative<B: MonoidBackend>(m: &B, bound: u32) -> Checked {
    let ball = m.enumerate(bound);
    for x in &ball {
        let xx = m.add(x, x);
        for y in &ball {
            if m.eq(x, y) {
                continue;
            }
            let xy = m.add(x, y);
            let yy = m.add(y, y);
            if m.eq(&xx, &xy) && m.eq(&xy, &yy) {
                return Checked::with_witness(
                    Decision::False,
                    format!(
                        "2*{x} = {x} + {y} = 2*{y} yet {x} != {y}",
                        x = m.display(x),
                        y = m.display(y)
                    ),
                );
            }
        }
    }
    Checked::new(Decision::True)
}

/// x + y = y forces x = 0.
pub fn is_stably_finite<B: MonoidBackend>(m: &B, bound: u32) -> Checked {
    let ball = m.enumerate(bound);
    for x in &ball {
        if m.is_zero(x) {
            continue;
        }
        for y in &ball {
            if m.eq(&m.add(x, y), y) {
                return Checked::with_witness(
                    Decision::False,
                    format!("{} + {y} = {y}", m.display(x), y = m.display(y)),
                );
            }
        }
    }
    Checked::new(Decision::True)
}

/// The algebraic preordering is antisymmetric.
pub fn is_antisymmetric<B: MonoidBackend>(m: &B, bound: u32) -> Checked {
    let ball = m.enumerate(bound);
    let mut unknown = false;
    for x in &ball {
        for y in &ball {
            if m.eq(x, y) {
                continue;
            }
            let xy = leq_alg(m, x, y, bound);
            let yx = leq_alg(m, y, x, bound);
            if xy.is_true() && yx.is_true() {
                return Checked::with_witness(
                    Decision::False,
                    format!(
                        "{x} <= {y} and {y} <= {x} yet {x} != {y}",
                        x = m.display(x),
                        y = m.display(y)
                    ),
                );
            }
            if xy.is_unknown() || yx.is_unknown() {
                unknown = true;
            }
        }
    }
    if unknown {
        Checked::new(Decision::Unknown { bound })
    } else {
        Checked::new(Decision::True)
    }
}

/// Every element strictly above zero is an order-unit.
pub fn is_simple<B: MonoidBackend>(m: &B, bound: u32) -> Checked {
    let ball = m.enumerate(bound);
    let zero = m.zero();
    let mut unknown = false;
    for u in &ball {
        // u > 0 means u is not below zero
        match leq_alg(m, u, &zero, bound) {
            Decision::True => continue,
            Decision::Unknown { .. } => {
                unknown = true;
                continue;
            }
            Decision::False => {}
        }
        for x in &ball {
            match propto(m, x, u, bound) {
                Decision::True => {}
                Decision::False => {
                    return Checked::with_witness(
                        Decision::False,
                        format!(
                            "{} is not below any multiple (up to {bound}) of {}",
                            m.display(x),
                            m.display(u)
                        ),
                    );
                }
                Decision::Unknown { .. } => unknown = true,
            }
        }
    }
    if unknown {
        Checked::new(Decision::Unknown { bound })
    } else {
        Checked::new(Decision::True)
    }
}

/// p*x = p*y forces x = y for every p in the multiplicative set.
///
/// Only the generators are tested: the condition for p and q composes to
/// the condition for p*q, so generator soundness gives the full set.
pub fn is_p_torsion_free<B: MonoidBackend>(m: &B, pset: &PSet, bound: u32) -> Checked {
    let ball = m.enumerate(bound);
    for &p in pset.generators() {
        for x in &ball {
            let px = m.mul(p, x);
            for y in &ball {
                if m.eq(x, y) {
                    continue;
                }
                let py = m.mul(p, y);
                if m.eq(&px, &py) {
                    return Checked::with_witness(
                        Decision::False,
                        format!(
                            "{p}*{x} = {p}*{y} yet {x} != {y}",
                            x = m.display(x),
                            y = m.display(y)
                        ),
                    );
                }
            }
        }
    }
    Checked::new(Decision::True)
}

/// p*x <= p*y forces x <= y for every p in the multiplicative set.
///
/// The premise compares p-fold sums, so it is decided over the ball at
/// `p * bound`; the conclusion at `bound`.
pub fn is_p_unperforated<B: MonoidBackend>(m: &B, pset: &PSet, bound: u32) -> Checked {
    let ball = m.enumerate(bound);
    let mut unknown = false;
    for &p in pset.generators() {
        let premise_bound = bound.saturating_mul(p);
        for x in &ball {
            let px = m.mul(p, x);
            for y in &ball {
                let conclusion = leq_alg(m, x, y, bound);
                if conclusion.is_true() {
                    continue; // implication holds whatever the premise is
                }
                let py = m.mul(p, y);
                let premise = leq_alg(m, &px, &py, premise_bound);
                match (premise, conclusion) {
                    (Decision::False, _) => {}
                    (Decision::True, Decision::False) => {
                        return Checked::with_witness(
                            Decision::False,
                            format!(
                                "{p}*{x} <= {p}*{y} but not {x} <= {y}",
                                x = m.display(x),
                                y = m.display(y)
                            ),
                        );
                    }
                    _ => unknown = true,
                }
            }
        }
    }
    if unknown {
        Checked::new(Decision::Unknown { bound })
    } else {
        Checked::new(Decision::True)
    }
}

/// First (u, v) in enumeration order with 2u + 3v = x, if any.
pub fn quasi_divisible_witness<B: MonoidBackend>(
    m: &B,
    x: &B::Elem,
    bound: u32,
) -> Option<(B::Elem, B::Elem)> {
    let ball = m.enumerate(bound);
    for u in &ball {
        let uu = m.add(u, u);
        for v in &ball {
            let vvv = m.mul(3, v);
            if m.eq(&m.add(&uu, &vvv), x) {
                return Some((u.clone(), v.clone()));
            }
        }
    }
    None
}

/// Every element is of the form 2u + 3v.
///
/// Any u, v solving 2u + 3v = x are summands of x, so the ball search is
/// exhaustive exactly when the backend certifies summand completeness.
pub fn is_quasi_divisible<B: MonoidBackend>(m: &B, bound: u32) -> Checked {
    let ball = m.enumerate(bound);
    let mut unknown = false;
    for x in &ball {
        if quasi_divisible_witness(m, x, bound).is_some() {
            continue;
        }
        if m.summand_complete(bound, x) {
            return Checked::with_witness(
                Decision::False,
                format!("no u, v solve 2u + 3v = {}", m.display(x)),
            );
        }
        unknown = true;
    }
    if unknown {
        Checked::new(Decision::Unknown { bound })
    } else {
        Checked::new(Decision::True)
    }
}

/// Witness search for a weak-sum-decomposition instance: given
/// a0 + a1 + c = b + c, find x0, x1 with a_i + c = x_i + c and
/// b = x0 + x1. Returns the first pair in enumeration order, or None at
/// exhaustion of the ball.
pub fn check_wsd_instance<B: MonoidBackend>(
    m: &B,
    a0: &B::Elem,
    a1: &B::Elem,
    b: &B::Elem,
    c: &B::Elem,
    bound: u32,
) -> Result<Option<(B::Elem, B::Elem)>> {
    let lhs = m.add(&m.add(a0, a1), c);
    let rhs = m.add(b, c);
    if !m.eq(&lhs, &rhs) {
        return Err(Error::Precondition(format!(
            "{} + {} + {} != {} + {}",
            m.display(a0),
            m.display(a1),
            m.display(c),
            m.display(b),
            m.display(c)
        )));
    }
    let a0c = m.add(a0, c);
    let a1c = m.add(a1, c);
    let ball = m.enumerate(bound);
    for x0 in &ball {
        if !m.eq(&m.add(x0, c), &a0c) {
            continue;
        }
        for x1 in &ball {
            if m.eq(&m.add(x1, c), &a1c) && m.eq(&m.add(x0, x1), b) {
                return Ok(Some((x0.clone(), x1.clone())));
            }
        }
    }
    Ok(None)
}

/// Bounded check that the submonoid selected by `is_sub` sits unitarily
/// inside `n`: it is cofinal, and a0 + b = a1 with both a's in the
/// submonoid forces b into the submonoid.
///
/// The predicate must respect the backend's equality: equal elements are
/// either both inside or both outside.
pub fn is_unitary_extension<B, F>(n: &B, is_sub: F, bound: u32) -> Result<Checked>
where
    B: MonoidBackend,
    F: Fn(&B::Elem) -> bool,
{
    let ball = n.enumerate(bound);
    if !is_sub(&n.zero()) {
        return Err(Error::Precondition(
            "submonoid predicate rejects zero".to_string(),
        ));
    }
    let sub_ball: Vec<&B::Elem> = ball.iter().filter(|x| is_sub(x)).collect();
    for a in &sub_ball {
        for b in &sub_ball {
            if !is_sub(&n.add(a, b)) {
                return Err(Error::Precondition(format!(
                    "submonoid not closed under addition: {} + {}",
                    n.display(a),
                    n.display(b)
                )));
            }
        }
    }
    let mut unknown = false;
    // cofinality of the submonoid; dominators and the witness search get
    // a larger ball so boundary elements are not spuriously undominated
    let outer = bound.saturating_mul(2).saturating_add(2);
    let outer_ball = n.enumerate(outer);
    let dominators: Vec<&B::Elem> = outer_ball.iter().filter(|x| is_sub(x)).collect();
    for x in &ball {
        let mut dominated = false;
        'search: for z in &outer_ball {
            let s = n.add(x, z);
            for a in &dominators {
                if n.eq(&s, a) {
                    dominated = true;
                    break 'search;
                }
            }
        }
        if !dominated {
            if n.is_complete(bound) {
                return Ok(Checked::with_witness(
                    Decision::False,
                    format!("{} is not below any submonoid element", n.display(x)),
                ));
            }
            unknown = true;
        }
    }
    // difference condition
    for a0 in &sub_ball {
        for b in &ball {
            if is_sub(b) {
                continue;
            }
            let s = n.add(a0, b);
            if is_sub(&s) {
                return Ok(Checked::with_witness(
                    Decision::False,
                    format!(
                        "{} + {} lands in the submonoid but {} is outside",
                        n.display(a0),
                        n.display(b),
                        n.display(b)
                    ),
                ));
            }
        }
    }
    if unknown {
        Ok(Checked::new(Decision::Unknown { bound }))
    } else {
        Ok(Checked::new(Decision::True))
    }
}

/// The unitary check plus: m*b in the submonoid forces b in the
/// submonoid, for all 2 <= m <= bound.
pub fn is_strongly_unitary_extension<B, F>(n: &B, is_sub: F, bound: u32) -> Result<Checked>
where
    B: MonoidBackend,
    F: Fn(&B::Elem) -> bool,
{
    let base = is_unitary_extension(n, &is_sub, bound)?;
    if base.decision.is_false() {
        return Ok(base);
    }
    let ball = n.enumerate(bound);
    for b in &ball {
        if is_sub(b) {
            continue;
        }
        for mult in 2..=bound {
            if is_sub(&n.mul(mult, b)) {
                return Ok(Checked::with_witness(
                    Decision::False,
                    format!(
                        "{mult}*{b} lands in the submonoid but {b} is outside",
                        b = n.display(b)
                    ),
                ));
            }
        }
    }
    Ok(base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backend::{Nat, NatSub, NatVec, NonNegRationals};
    use num::BigRational;

    #[test]
    fn leq_on_naturals() {
        assert!(leq_alg(&Nat, &2, &5, 8).is_true()); // z = 3
        assert!(leq_alg(&Nat, &4, &4, 8).is_true()); // z = 0
        assert!(leq_alg(&Nat, &5, &2, 8).is_false());
    }

    #[test]
    fn propto_on_naturals() {
        assert!(propto(&Nat, &7, &2, 8).is_true()); // 7 <= 4*2
        assert!(propto(&Nat, &1, &0, 8).is_false()); // multiples of 0 stay 0
        assert!(asymp(&Nat, &3, &5, 8).is_true());
    }

    #[test]
    fn naturals_pass_the_classical_predicates() {
        assert!(is_conical(&Nat, 6).decision.is_true());
        assert!(is_cancellative(&Nat, 6).decision.is_true());
        assert!(is_separative(&Nat, 6).decision.is_true());
        assert!(is_stably_finite(&Nat, 6).decision.is_true());
        assert!(is_antisymmetric(&Nat, 6).decision.is_true());
        assert!(is_simple(&Nat, 6).decision.is_true());
    }

    #[test]
    fn plane_is_not_simple() {
        // (1,0) and (0,1) are incomparable under domination by multiples
        let m = NatVec::new(2);
        let verdict = is_simple(&m, 5);
        assert!(verdict.decision.is_false());
    }

    #[test]
    fn naturals_are_torsion_free_and_unperforated() {
        let p = PSet::new(vec![2]).unwrap();
        assert!(is_p_torsion_free(&Nat, &p, 6).decision.is_true());
        assert!(is_p_unperforated(&Nat, &p, 6).decision.is_true());
    }

    #[test]
    fn two_three_semigroup_is_perforated() {
        // 2*3 <= 2*4 in <2,3> but 3 <= 4 fails: the difference 1 is missing
        let m = NatSub::new(vec![2, 3]);
        let p = PSet::new(vec![2]).unwrap();
        let verdict = is_p_unperforated(&m, &p, 10);
        assert!(verdict.decision.is_false());
    }

    #[test]
    fn quasi_divisibility_fails_at_one_on_naturals() {
        let verdict = is_quasi_divisible(&Nat, 4);
        assert!(verdict.decision.is_false());
        assert!(verdict.witness.unwrap().contains("= 1"));
        assert!(quasi_divisible_witness(&Nat, &1, 4).is_none());
        assert_eq!(quasi_divisible_witness(&Nat, &12, 12), Some((0, 4)));
    }

    #[test]
    fn rationals_stay_unknown_on_quasi_divisibility() {
        // the ball cannot certify either way
        let verdict = is_quasi_divisible(&NonNegRationals, 3);
        assert!(verdict.decision.is_unknown());
        // but witnesses exist for sampled elements with small denominators
        let x = BigRational::new(1.into(), 1.into());
        assert!(quasi_divisible_witness(&NonNegRationals, &x, 4).is_some());
    }

    #[test]
    fn wsd_witness_on_cancellative_base_is_forced() {
        let w = check_wsd_instance(&Nat, &2, &3, &5, &4, 8).unwrap();
        assert_eq!(w, Some((2, 3)));
        // degenerate first component
        let w = check_wsd_instance(&Nat, &0, &3, &3, &4, 8).unwrap();
        assert_eq!(w, Some((0, 3)));
        // precondition violation is an error
        assert!(check_wsd_instance(&Nat, &1, &1, &3, &0, 8).is_err());
    }

    #[test]
    fn even_numbers_sit_unitarily_in_naturals() {
        let unitary = is_unitary_extension(&Nat, |x| x % 2 == 0, 8).unwrap();
        assert!(unitary.decision.is_true());
        // but not strongly: 2*1 is even while 1 is not
        let strong = is_strongly_unitary_extension(&Nat, |x| x % 2 == 0, 8).unwrap();
        assert!(strong.decision.is_false());
    }

    #[test]
    fn identity_embedding_is_strongly_unitary() {
        let strong = is_strongly_unitary_extension(&Nat, |_| true, 6).unwrap();
        assert!(strong.decision.is_true());
    }

    #[test]
    fn integers_inside_half_integers() {
        // half-integers modeled as naturals scaled by one half: the
        // submonoid of even values plays the integers
        let half = Nat; // value k stands for k/2
        let is_int = |x: &u64| x.is_multiple_of(2);
        assert!(is_unitary_extension(&half, is_int, 8)
            .unwrap()
            .decision
            .is_true());
        // 2*(1/2) = 1 is an integer while 1/2 is not, so not strongly
        assert!(is_strongly_unitary_extension(&half, is_int, 8)
            .unwrap()
            .decision
            .is_false());
    }

    #[test]
    fn generator_check_agrees_with_full_products() {
        // soundness of testing only the generators of the multiplicative
        // set: compare against explicit members up to a bound
        let p = PSet::new(vec![2, 3]).unwrap();
        let m = NatSub::new(vec![2, 3]);
        let gen_verdict = is_p_torsion_free(&m, &p, 8).decision;
        let ball = m.enumerate(8);
        let mut full = Decision::True;
        for q in p.members_up_to(24) {
            for x in &ball {
                for y in &ball {
                    if x != y && m.mul(q as u32, x) == m.mul(q as u32, y) {
                        full = Decision::False;
                    }
                }
            }
        }
        assert_eq!(gen_verdict, full);
    }
}
