//! The monoid of bounded nonempty lower subsets of the non-negative
//! rationals, restricted to cut points in the field Q(sqrt 2).
//!
//! A lower set is determined by its supremum (the cut) and whether the
//! supremum is attained. Only rational cuts can be attained: for an
//! irrational cut the closed and the open interval trace the same set of
//! rationals, so values normalize to open. Addition of lower sets adds
//! the cuts; the sum attains its supremum exactly when both summands do.

use crate::backend::MonoidBackend;
use crate::error::{Error, Result};
use crate::predicates;
use crate::sqrt2::QSqrt2;
use num::BigRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerSet {
    cut: QSqrt2,
    closed: bool,
}

impl LowerSet {
    /// Builds a lower set, normalizing the flag: irrational cuts are
    /// open, and the zero cut is the set {0}, which is closed.
    pub fn new(cut: QSqrt2, closed: bool) -> Result<Self> {
        if cut.is_negative() {
            return Err(Error::Precondition(format!(
                "a lower set needs a non-negative cut, got {cut}"
            )));
        }
        let closed = if cut.is_zero() {
            true
        } else if !cut.is_rational() {
            false
        } else {
            closed
        };
        Ok(LowerSet { cut, closed })
    }

    pub fn closed(cut: QSqrt2) -> Result<Self> {
        Self::new(cut, true)
    }

    pub fn open(cut: QSqrt2) -> Result<Self> {
        Self::new(cut, false)
    }

    pub fn cut(&self) -> &QSqrt2 {
        &self.cut
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn point_zero() -> Self {
        LowerSet {
            cut: QSqrt2::from_integer(0),
            closed: true,
        }
    }
}

impl std::fmt::Display for LowerSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.closed {
            write!(f, "{}", self.cut)
        } else {
            write!(f, "{}-", self.cut)
        }
    }
}

/// The lower-set monoid as a backend. The enumeration ball holds the
/// rational cuts with denominator and value at most the bound, in both
/// flavors, ordered denominator first, then numerator, closed first.
#[derive(Clone, Copy, Debug, Default)]
pub struct Lambda;

impl MonoidBackend for Lambda {
    type Elem = LowerSet;

    fn zero(&self) -> LowerSet {
        LowerSet::point_zero()
    }

    fn add(&self, x: &LowerSet, y: &LowerSet) -> LowerSet {
        LowerSet::new(&x.cut + &y.cut, x.closed && y.closed)
            .expect("sum of non-negative cuts is non-negative")
    }

    fn eq(&self, x: &LowerSet, y: &LowerSet) -> bool {
        x == y
    }

    fn enumerate(&self, bound: u32) -> Vec<LowerSet> {
        let mut out = Vec::new();
        for den in 1..=bound as i64 {
            for num in 0..=(bound as i64) * den {
                if num != 0 && num::integer::gcd(num, den) != 1 {
                    continue;
                }
                if num == 0 && den != 1 {
                    continue;
                }
                let cut = QSqrt2::from_rational(BigRational::new(num.into(), den.into()));
                if num == 0 {
                    out.push(LowerSet::new(cut, true).unwrap());
                } else {
                    out.push(LowerSet::new(cut.clone(), true).unwrap());
                    out.push(LowerSet::new(cut, false).unwrap());
                }
            }
        }
        out
    }

    fn is_complete(&self, _bound: u32) -> bool {
        false
    }

    fn display(&self, x: &LowerSet) -> String {
        x.to_string()
    }
}

/// The fixed weak-sum-decomposition instance witnessing that refinement
/// plus antisymmetry do not imply decomposability: with an irrational
/// alpha in (0,1) take a0 = alpha (open), a1 = 1 - alpha (open),
/// b = 1 (closed), c = 1 (open). Here alpha = sqrt(2) - 1.
pub struct WsdCounterexample {
    pub a0: LowerSet,
    pub a1: LowerSet,
    pub b: LowerSet,
    pub c: LowerSet,
    /// a0 + a1 + c = b + c, verified exactly.
    pub instance_holds: bool,
    /// The cut any witness x0 would be forced to carry.
    pub forced_cut: QSqrt2,
    /// Step-by-step contradiction.
    pub trace: Vec<String>,
    /// No witness pair exists.
    pub impossible: bool,
}

pub fn wsd_counterexample() -> WsdCounterexample {
    let lambda = Lambda;
    let alpha = QSqrt2::new(BigRational::from_integer((-1).into()), BigRational::from_integer(1.into()));
    let one = QSqrt2::from_integer(1);
    let a0 = LowerSet::open(alpha.clone()).unwrap();
    let a1 = LowerSet::open(&one - &alpha).unwrap();
    let b = LowerSet::closed(one.clone()).unwrap();
    let c = LowerSet::open(one.clone()).unwrap();

    let lhs = lambda.add(&lambda.add(&a0, &a1), &c);
    let rhs = lambda.add(&b, &c);
    let instance_holds = lambda.eq(&lhs, &rhs);

    let mut trace = Vec::new();
    trace.push(format!(
        "instance: {a0} + {a1} + {c} = {lhs} and {b} + {c} = {rhs}"
    ));
    // cut arithmetic cancels: x0 + c = a0 + c forces cut(x0) = cut(a0)
    let forced_cut = (&(&a0.cut + &c.cut) - &c.cut).clone();
    trace.push(format!(
        "any witness x0 satisfies cut(x0) + {} = {} + {}, so cut(x0) = {}",
        c.cut, a0.cut, c.cut, forced_cut
    ));
    trace.push(format!(
        "x0 + x1 = {b} is closed, so x0 and x1 are both closed"
    ));
    trace.push(format!(
        "a closed lower set attains its supremum, hence has a rational cut; \
         but {forced_cut} has sqrt2-coefficient {} != 0",
        forced_cut.coeff
    ));
    let impossible = instance_holds && !forced_cut.is_rational() && b.is_closed();
    trace.push(if impossible {
        "no witness pair exists: the instance is undecomposable".to_string()
    } else {
        "derivation incomplete".to_string()
    });
    WsdCounterexample {
        a0,
        a1,
        b,
        c,
        instance_holds,
        forced_cut,
        trace,
        impossible,
    }
}

/// The generic bounded witness search on the lower-set backend; it must
/// come back empty on the counterexample instance.
pub fn wsd_counterexample_search(bound: u32) -> Result<Option<(LowerSet, LowerSet)>> {
    let cx = wsd_counterexample();
    predicates::check_wsd_instance(&Lambda, &cx.a0, &cx.a1, &cx.b, &cx.c, bound)
}
