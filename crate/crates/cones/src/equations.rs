//! Finite equation systems over a monoid and the refinement predicate.
//!
//! An equation has the shape
//! `p_0*x_0 + ... + p_{k-1}*x_{k-1} + a = q_0*x_0 + ... + q_{k-1}*x_{k-1} + b`
//! with non-negative integer coefficients and monoid constants. Systems
//! are solved by exhaustive search over the enumeration ball, in odometer
//! order with the last unknown varying fastest, so the first solution
//! found is reproducible.

use crate::backend::MonoidBackend;
use crate::decision::{Checked, Decision};
use crate::error::{Error, Result};

/// Default cap on the number of assignments a single solve may visit.
pub const DEFAULT_SOLVE_CEILING: u64 = 10_000_000;

#[derive(Clone, Debug)]
pub struct Equation<E> {
    pub coeffs_left: Vec<u32>,
    pub const_left: E,
    pub coeffs_right: Vec<u32>,
    pub const_right: E,
}

#[derive(Clone, Debug)]
pub struct EquationSystem<E> {
    pub unknown_count: usize,
    pub equations: Vec<Equation<E>>,
}

impl<E> EquationSystem<E> {
    pub fn new(unknown_count: usize, equations: Vec<Equation<E>>) -> Result<Self> {
        for (i, eq) in equations.iter().enumerate() {
            if eq.coeffs_left.len() != unknown_count || eq.coeffs_right.len() != unknown_count {
                return Err(Error::Precondition(format!(
                    "equation {i} has coefficient vectors of the wrong length"
                )));
            }
        }
        Ok(EquationSystem {
            unknown_count,
            equations,
        })
    }
}

fn eval_side<B: MonoidBackend>(
    m: &B,
    coeffs: &[u32],
    constant: &B::Elem,
    assignment: &[B::Elem],
) -> B::Elem {
    let mut acc = constant.clone();
    for (c, x) in coeffs.iter().zip(assignment) {
        if *c > 0 {
            acc = m.add(&acc, &m.mul(*c, x));
        }
    }
    acc
}

/// Whether the assignment satisfies every equation, by direct evaluation.
pub fn verify_assignment<B: MonoidBackend>(
    m: &B,
    system: &EquationSystem<B::Elem>,
    assignment: &[B::Elem],
) -> bool {
    system.equations.iter().all(|eq| {
        let lhs = eval_side(m, &eq.coeffs_left, &eq.const_left, assignment);
        let rhs = eval_side(m, &eq.coeffs_right, &eq.const_right, assignment);
        m.eq(&lhs, &rhs)
    })
}

/// Search for a solution over the enumeration ball, with a configurable
/// ceiling on the assignment space. Exceeding the ceiling is an error,
/// distinct from exhausting the space without a solution.
pub fn solve_system_with_ceiling<B: MonoidBackend>(
    m: &B,
    system: &EquationSystem<B::Elem>,
    bound: u32,
    ceiling: u64,
) -> Result<Option<Vec<B::Elem>>> {
    let ball = m.enumerate(bound);
    let k = system.unknown_count;
    if k == 0 {
        return Ok(if verify_assignment(m, system, &[]) {
            Some(Vec::new())
        } else {
            None
        });
    }
    let space = (ball.len() as u64)
        .checked_pow(k as u32)
        .unwrap_or(u64::MAX);
    if space > ceiling {
        return Err(Error::SearchCeiling {
            ceiling,
            required: space,
        });
    }
    let mut indices = vec![0usize; k];
    loop {
        let assignment: Vec<B::Elem> = indices.iter().map(|&i| ball[i].clone()).collect();
        if verify_assignment(m, system, &assignment) {
            return Ok(Some(assignment));
        }
        // odometer step, last unknown fastest
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(None);
            }
            pos -= 1;
            indices[pos] += 1;
            if indices[pos] < ball.len() {
                break;
            }
            indices[pos] = 0;
        }
    }
}

pub fn solve_system<B: MonoidBackend>(
    m: &B,
    system: &EquationSystem<B::Elem>,
    bound: u32,
) -> Result<Option<Vec<B::Elem>>> {
    solve_system_with_ceiling(m, system, bound, DEFAULT_SOLVE_CEILING)
}

/// Entries of a 2x2 refinement of a0 + a1 = b0 + b1: row sums are the
/// a's, column sums the b's.
#[derive(Clone, Debug)]
pub struct RefinementMatrix<E> {
    pub c00: E,
    pub c01: E,
    pub c10: E,
    pub c11: E,
}

impl<E: Clone> RefinementMatrix<E> {
    pub fn entries(&self) -> [E; 4] {
        [
            self.c00.clone(),
            self.c01.clone(),
            self.c10.clone(),
            self.c11.clone(),
        ]
    }

    pub fn verify<B: MonoidBackend<Elem = E>>(
        &self,
        m: &B,
        a0: &E,
        a1: &E,
        b0: &E,
        b1: &E,
    ) -> bool {
        m.eq(&m.add(&self.c00, &self.c01), a0)
            && m.eq(&m.add(&self.c10, &self.c11), a1)
            && m.eq(&m.add(&self.c00, &self.c10), b0)
            && m.eq(&m.add(&self.c01, &self.c11), b1)
    }
}

/// The four-unknown system whose solutions are exactly the refinement
/// matrices of (a0, a1, b0, b1). Unknowns ordered x00, x01, x10, x11.
pub fn refinement_system<B: MonoidBackend>(
    m: &B,
    a0: &B::Elem,
    a1: &B::Elem,
    b0: &B::Elem,
    b1: &B::Elem,
) -> EquationSystem<B::Elem> {
    let zero = m.zero();
    let eq = |coeffs: [u32; 4], rhs: &B::Elem| Equation {
        coeffs_left: coeffs.to_vec(),
        const_left: zero.clone(),
        coeffs_right: vec![0; 4],
        const_right: rhs.clone(),
    };
    EquationSystem {
        unknown_count: 4,
        equations: vec![
            eq([1, 1, 0, 0], a0),
            eq([0, 0, 1, 1], a1),
            eq([1, 0, 1, 0], b0),
            eq([0, 1, 0, 1], b1),
        ],
    }
}

/// First refinement matrix of (a0, a1, b0, b1) in enumeration order, if
/// the ball holds one. Errors when a0 + a1 != b0 + b1.
pub fn find_refinement_matrix<B: MonoidBackend>(
    m: &B,
    a0: &B::Elem,
    a1: &B::Elem,
    b0: &B::Elem,
    b1: &B::Elem,
    bound: u32,
) -> Result<Option<RefinementMatrix<B::Elem>>> {
    if !m.eq(&m.add(a0, a1), &m.add(b0, b1)) {
        return Err(Error::Precondition(format!(
            "{} + {} != {} + {}",
            m.display(a0),
            m.display(a1),
            m.display(b0),
            m.display(b1)
        )));
    }
    let system = refinement_system(m, a0, a1, b0, b1);
    let solution = solve_system(m, &system, bound)?;
    Ok(solution.map(|s| {
        let matrix = RefinementMatrix {
            c00: s[0].clone(),
            c01: s[1].clone(),
            c10: s[2].clone(),
            c11: s[3].clone(),
        };
        debug_assert!(matrix.verify(m, a0, a1, b0, b1));
        matrix
    }))
}

/// Every enumerated quadruple with a0 + a1 = b0 + b1 admits a refinement
/// matrix within the ball.
pub fn is_refinement<B: MonoidBackend>(m: &B, bound: u32) -> Checked {
    let ball = m.enumerate(bound);
    let mut unknown = false;
    for a0 in &ball {
        for a1 in &ball {
            let lhs = m.add(a0, a1);
            for b0 in &ball {
                for b1 in &ball {
                    if !m.eq(&lhs, &m.add(b0, b1)) {
                        continue;
                    }
                    match find_refinement_matrix(m, a0, a1, b0, b1, bound) {
                        Ok(Some(_)) => {}
                        Ok(None) => {
                            // matrix entries are summands of a0 and a1, so
                            // the ball search is exhaustive when those are
                            // summand-complete
                            if m.summand_complete(bound, a0) && m.summand_complete(bound, a1) {
                                return Checked::with_witness(
                                    Decision::False,
                                    format!(
                                        "({}, {}, {}, {}) admits no refinement matrix",
                                        m.display(a0),
                                        m.display(a1),
                                        m.display(b0),
                                        m.display(b1)
                                    ),
                                );
                            }
                            unknown = true;
                        }
                        Err(_) => unreachable!("precondition checked above"),
                    }
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
