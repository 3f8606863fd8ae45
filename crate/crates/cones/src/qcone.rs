//! Finitely generated cones inside Q^d with exact membership search, and
//! the verifier for the halving-interval example: the submonoid of Q+
//! generated by (k/2)*(9/2)^n for k in <2,7>, whose doubled interval is
//! everything while the interval itself is proper.
//!
//! All arithmetic is exact big-rational; no floating point anywhere.

use crate::decision::Decision;
use crate::error::{Error, Result};
use num::{BigInt, BigRational, Integer, One, Signed, Zero};

/// Cap on search nodes before a membership query gives up.
pub const DEFAULT_MEMBERSHIP_NODE_CEILING: u64 = 2_000_000;

#[derive(Clone, Debug)]
pub struct RationalCone {
    dim: usize,
    generators: Vec<Vec<BigRational>>,
}

impl RationalCone {
    pub fn new(dim: usize, generators: Vec<Vec<BigRational>>) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if g.len() != dim {
                return Err(Error::Precondition(format!(
                    "generator {i} has {} coordinates, expected {dim}",
                    g.len()
                )));
            }
            if g.iter().any(|c| c.is_negative()) {
                return Err(Error::Precondition(format!(
                    "generator {i} has a negative coordinate"
                )));
            }
            if g.iter().all(|c| c.is_zero()) {
                return Err(Error::Precondition(format!("generator {i} is zero")));
            }
        }
        Ok(RationalCone { dim, generators })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<BigRational>] {
        &self.generators
    }

    /// The value of a coefficient vector, coordinates exact.
    pub fn evaluate(&self, coeffs: &[u64]) -> Vec<BigRational> {
        let mut acc = vec![BigRational::zero(); self.dim];
        for (c, g) in coeffs.iter().zip(&self.generators) {
            if *c == 0 {
                continue;
            }
            let factor = BigRational::from_integer(BigInt::from(*c));
            for (a, gi) in acc.iter_mut().zip(g) {
                *a += &factor * gi;
            }
        }
        acc
    }
}

impl crate::backend::MonoidBackend for RationalCone {
    type Elem = Vec<BigRational>;

    fn zero(&self) -> Vec<BigRational> {
        vec![BigRational::zero(); self.dim]
    }

    fn add(&self, x: &Vec<BigRational>, y: &Vec<BigRational>) -> Vec<BigRational> {
        x.iter().zip(y).map(|(a, b)| a + b).collect()
    }

    fn eq(&self, x: &Vec<BigRational>, y: &Vec<BigRational>) -> bool {
        x == y
    }

    /// All generator combinations with coefficient sum at most the
    /// bound, deduplicated, ordered by total coefficient then by the
    /// coefficient vector.
    fn enumerate(&self, bound: u32) -> Vec<Vec<BigRational>> {
        fn combos(k: usize, budget: u32, out: &mut Vec<Vec<u64>>) {
            if k == 0 {
                out.push(vec![]);
                return;
            }
            for first in 0..=budget {
                let mut tails = Vec::new();
                combos(k - 1, budget - first, &mut tails);
                for mut t in tails {
                    let mut v = vec![first as u64];
                    v.append(&mut t);
                    out.push(v);
                }
            }
        }
        let mut ordered: Vec<Vec<u64>> = Vec::new();
        for total in 0..=bound {
            let mut level = Vec::new();
            combos(self.generators.len(), total, &mut level);
            level.retain(|c| c.iter().sum::<u64>() == total as u64);
            level.sort();
            ordered.extend(level);
        }
        let mut out: Vec<Vec<BigRational>> = Vec::new();
        for coeffs in ordered {
            let v = self.evaluate(&coeffs);
            if !out.contains(&v) {
                out.push(v);
            }
        }
        out
    }

    fn is_complete(&self, _bound: u32) -> bool {
        false
    }

    /// For a one-dimensional cone every summand of a target is itself a
    /// combination whose coefficient total is at most target / min
    /// generator, so small targets are searched exhaustively.
    fn summand_complete(&self, bound: u32, target: &Vec<BigRational>) -> bool {
        if self.dim != 1 {
            return false;
        }
        match self.generators.iter().map(|g| &g[0]).min() {
            None => true, // the trivial cone
            Some(min_gen) => {
                target[0] <= BigRational::from_integer(BigInt::from(bound as u64)) * min_gen
            }
        }
    }

    fn display(&self, x: &Vec<BigRational>) -> String {
        let render = |c: &BigRational| {
            if c.denom().is_one() {
                c.numer().to_string()
            } else {
                format!("{}/{}", c.numer(), c.denom())
            }
        };
        if self.dim == 1 {
            render(&x[0])
        } else {
            let parts: Vec<String> = x.iter().map(render).collect();
            format!("({})", parts.join(","))
        }
    }
}

/// Outcome of a membership query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// Coefficients per generator, in the cone's generator order.
    Member(Vec<u64>),
    /// The pruned search is exhaustive: no combination exists.
    NotMember,
    /// The coefficient cap or the node ceiling truncated the search.
    Unknown { coeff_bound: u32 },
}

impl Membership {
    pub fn decision(&self, coeff_bound: u32) -> Decision {
        match self {
            Membership::Member(_) => Decision::True,
            Membership::NotMember => Decision::False,
            Membership::Unknown { .. } => Decision::Unknown { bound: coeff_bound },
        }
    }
}

enum SearchOutcome {
    Found(Vec<u64>),
    Exhausted,
    Aborted,
}

struct MembershipSearch<'a> {
    // (original index, generator), largest first
    order: Vec<(usize, &'a Vec<BigRational>)>,
    // per prefix position: lcm of coordinate denominators of the
    // remaining generators, one per coordinate
    suffix_den_lcm: Vec<Vec<BigInt>>,
    // per prefix position: coeff_bound * sum of remaining generators
    suffix_reach: Vec<Vec<BigRational>>,
    // per prefix position: whether any remaining generator touches the
    // coordinate at all
    suffix_support: Vec<Vec<bool>>,
    coeff_bound: u64,
    nodes: u64,
    ceiling: u64,
    clipped: bool,
}

impl<'a> MembershipSearch<'a> {
    fn new(cone: &'a RationalCone, coeff_bound: u32, ceiling: u64) -> Self {
        let mut order: Vec<(usize, &Vec<BigRational>)> =
            cone.generators.iter().enumerate().collect();
        // biggest generators first so greedy descent finds certificates fast
        order.sort_by(|(_, a), (_, b)| {
            let sa: BigRational = a.iter().sum();
            let sb: BigRational = b.iter().sum();
            sb.cmp(&sa)
        });
        let n = order.len();
        let mut suffix_den_lcm = vec![vec![BigInt::one(); cone.dim]; n + 1];
        let mut suffix_reach = vec![vec![BigRational::zero(); cone.dim]; n + 1];
        let mut suffix_support = vec![vec![false; cone.dim]; n + 1];
        let bound_factor = BigRational::from_integer(BigInt::from(coeff_bound as u64));
        for i in (0..n).rev() {
            for c in 0..cone.dim {
                let g = &order[i].1[c];
                suffix_den_lcm[i][c] = suffix_den_lcm[i + 1][c].lcm(g.denom());
                suffix_reach[i][c] = &suffix_reach[i + 1][c] + &bound_factor * g;
                suffix_support[i][c] = suffix_support[i + 1][c] || !g.is_zero();
            }
        }
        MembershipSearch {
            order,
            suffix_den_lcm,
            suffix_reach,
            suffix_support,
            coeff_bound: coeff_bound as u64,
            nodes: 0,
            ceiling,
            clipped: false,
        }
    }

    fn dfs(&mut self, i: usize, rem: &[BigRational], coeffs: &mut Vec<u64>) -> SearchOutcome {
        self.nodes += 1;
        if self.nodes > self.ceiling {
            return SearchOutcome::Aborted;
        }
        if i == self.order.len() {
            return if rem.iter().all(|c| c.is_zero()) {
                SearchOutcome::Found(coeffs.clone())
            } else {
                SearchOutcome::Exhausted
            };
        }
        for (c, r) in rem.iter().enumerate() {
            // remaining generators cannot produce finer denominators
            if !self.suffix_den_lcm[i][c].is_multiple_of(r.denom()) {
                return SearchOutcome::Exhausted;
            }
            // nor can they reach past their capped total; with support on
            // the coordinate a larger coefficient might have, so that
            // case clips the search
            if *r > self.suffix_reach[i][c] {
                if self.suffix_support[i][c] {
                    self.clipped = true;
                }
                return SearchOutcome::Exhausted;
            }
        }
        let g = self.order[i].1;
        // largest multiple of g fitting under rem, coordinatewise
        let mut cap: Option<u64> = None;
        for (r, gi) in rem.iter().zip(g) {
            if gi.is_zero() {
                continue;
            }
            let q = (r / gi).floor().to_integer();
            let q: u64 = q.try_into().unwrap_or(u64::MAX);
            cap = Some(cap.map_or(q, |c| c.min(q)));
        }
        let mut cap = cap.unwrap_or(0);
        if cap > self.coeff_bound {
            cap = self.coeff_bound;
            self.clipped = true;
        }
        for mult in (0..=cap).rev() {
            let factor = BigRational::from_integer(BigInt::from(mult));
            let next: Vec<BigRational> = rem
                .iter()
                .zip(g)
                .map(|(r, gi)| r - &factor * gi)
                .collect();
            coeffs.push(mult);
            match self.dfs(i + 1, &next, coeffs) {
                SearchOutcome::Found(c) => return SearchOutcome::Found(c),
                SearchOutcome::Aborted => return SearchOutcome::Aborted,
                SearchOutcome::Exhausted => {}
            }
            coeffs.pop();
        }
        SearchOutcome::Exhausted
    }
}

/// Depth-first membership with exact pruning: partial sums never exceed
/// the target coordinatewise, remainders must stay representable in the
/// denominators the remaining generators can produce, and the capped
/// total reach of a suffix bounds what it can still absorb. A negative
/// answer is exhaustive unless some magnitude cap was clipped by
/// `coeff_bound` or the node ceiling fired.
pub fn cone_membership(
    cone: &RationalCone,
    target: &[BigRational],
    coeff_bound: u32,
) -> Result<Membership> {
    cone_membership_with_ceiling(cone, target, coeff_bound, DEFAULT_MEMBERSHIP_NODE_CEILING)
}

pub fn cone_membership_with_ceiling(
    cone: &RationalCone,
    target: &[BigRational],
    coeff_bound: u32,
    ceiling: u64,
) -> Result<Membership> {
    if target.len() != cone.dim {
        return Err(Error::Precondition(format!(
            "target has {} coordinates, expected {}",
            target.len(),
            cone.dim
        )));
    }
    if target.iter().any(|c| c.is_negative()) {
        return Err(Error::Precondition(
            "membership target must be componentwise non-negative".into(),
        ));
    }
    let mut search = MembershipSearch::new(cone, coeff_bound, ceiling);
    let mut scratch = Vec::with_capacity(cone.generators.len());
    match search.dfs(0, target, &mut scratch) {
        SearchOutcome::Found(by_order) => {
            let mut coeffs = vec![0u64; cone.generators.len()];
            for (slot, (orig, _)) in by_order.iter().zip(&search.order) {
                coeffs[*orig] = *slot;
            }
            debug_assert_eq!(&cone.evaluate(&coeffs)[..], target);
            Ok(Membership::Member(coeffs))
        }
        SearchOutcome::Exhausted => {
            if search.clipped {
                Ok(Membership::Unknown { coeff_bound })
            } else {
                Ok(Membership::NotMember)
            }
        }
        SearchOutcome::Aborted => Ok(Membership::Unknown { coeff_bound }),
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// (9/2)^n, the n-th element of the distinguished increasing sequence.
pub fn level_value(n: u32) -> BigRational {
    let nine_halves = rat(9, 2);
    let mut acc = BigRational::one();
    for _ in 0..n {
        acc *= &nine_halves;
    }
    acc
}

/// The level-truncated generating set: (k/2)*(9/2)^n for k in {2, 7} and
/// n up to `level_bound`. The full monoid is the union over all levels;
/// each bounded check names the levels it needs.
pub fn halving_example_monoid(level_bound: u32) -> RationalCone {
    let mut generators = Vec::new();
    for n in 0..=level_bound {
        let level = level_value(n);
        generators.push(vec![&level * rat(1, 1)]); // (2/2)*(9/2)^n
        generators.push(vec![&level * rat(7, 2)]); // (7/2)*(9/2)^n
    }
    RationalCone::new(1, generators).unwrap()
}

fn format_certificate(cone: &RationalCone, coeffs: &[u64]) -> String {
    let render = |v: &BigRational| {
        if v.denom().is_one() {
            v.numer().to_string()
        } else {
            format!("{}/{}", v.numer(), v.denom())
        }
    };
    let parts: Vec<String> = coeffs
        .iter()
        .zip(cone.generators())
        .filter(|(c, _)| **c > 0)
        .map(|(c, g)| {
            if *c == 1 {
                render(&g[0])
            } else {
                format!("{c}*{}", render(&g[0]))
            }
        })
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn must_be_member(
    cone: &RationalCone,
    target: &BigRational,
    coeff_bound: u32,
    what: &str,
) -> Result<String> {
    match cone_membership(cone, std::slice::from_ref(target), coeff_bound)? {
        Membership::Member(coeffs) => {
            let value = cone.evaluate(&coeffs);
            if &value[0] != target {
                return Err(Error::Verification(format!(
                    "certificate for {what} evaluates to {} instead of {}",
                    value[0], target
                )));
            }
            Ok(format!(
                "{what} = {} is in the cone: {}",
                target,
                format_certificate(cone, &coeffs)
            ))
        }
        other => Err(Error::Verification(format!(
            "{what} = {target} should be in the cone, search said {other:?}"
        ))),
    }
}

/// The three membership families that make the distinguished sequence
/// increase fast: for every n, the level value, the gap to the next
/// level, and twice-next minus four-times-current all lie in the cone.
pub fn verify_claim1(n_max: u32) -> Result<Vec<String>> {
    let mut lines = Vec::new();
    for n in 0..=n_max {
        let cone = halving_example_monoid(n + 1);
        let dn = level_value(n);
        let dn1 = level_value(n + 1);
        lines.push(must_be_member(&cone, &dn, 64, &format!("d_{n}"))?);
        lines.push(must_be_member(
            &cone,
            &(&dn1 - &dn),
            64,
            &format!("d_{} - d_{n}", n + 1),
        )?);
        lines.push(must_be_member(
            &cone,
            &(&dn1 * rat(2, 1) - &dn * rat(4, 1)),
            64,
            &format!("2*d_{} - 4*d_{n}", n + 1),
        )?);
    }
    Ok(lines)
}

/// Doubling climbs the sequence: 2^k * d_n is below 2 * d_{n+k-1}, with
/// a membership certificate for the difference.
pub fn verify_claim2(k_max: u32, n_max: u32) -> Result<Vec<String>> {
    let mut lines = Vec::new();
    for k in 1..=k_max {
        for n in 0..=n_max {
            let top = level_value(n + k - 1);
            let mut pow2 = BigRational::one();
            for _ in 0..k {
                pow2 *= rat(2, 1);
            }
            let target = &top * rat(2, 1) - &pow2 * level_value(n);
            let cone = halving_example_monoid(n + k - 1);
            lines.push(must_be_member(
                &cone,
                &target,
                4096,
                &format!("2*d_{} - 2^{k}*d_{n}", n + k - 1),
            )?);
        }
    }
    Ok(lines)
}

/// d_m - 2 is outside the cone for every m up to the bound, decided by
/// exhaustion: clearing denominators bounds the levels a combination
/// could use, and within those levels the pruned search is complete.
/// Hence 2*d_0 is below no d_m, so the interval the d's generate omits 2
/// while its double reaches everything.
pub fn verify_nonmembership(m_max: u32) -> Result<Vec<String>> {
    let mut lines = Vec::new();
    let two = rat(2, 1);
    for m in 0..=m_max {
        let target = &level_value(m) - &two;
        if target.is_negative() {
            lines.push(format!(
                "d_{m} - 2 = {target} is negative, hence outside the cone"
            ));
            continue;
        }
        // a generator of level l has value at least (9/2)^l, so levels
        // with (9/2)^l > target cannot carry a nonzero coefficient
        let mut max_level = 0;
        while level_value(max_level + 1) <= target {
            max_level += 1;
        }
        debug_assert!(max_level < m);
        let cone = halving_example_monoid(max_level);
        match cone_membership(&cone, std::slice::from_ref(&target), u32::MAX)? {
            Membership::NotMember => lines.push(format!(
                "d_{m} - 2 = {target} is outside the cone (exhaustive over levels 0..={max_level})"
            )),
            Membership::Member(coeffs) => {
                return Err(Error::Verification(format!(
                    "d_{m} - 2 = {target} unexpectedly has certificate {}",
                    format_certificate(&cone, &coeffs)
                )))
            }
            Membership::Unknown { .. } => {
                return Err(Error::Verification(format!(
                    "membership of d_{m} - 2 was not decided exhaustively"
                )))
            }
        }
    }
    lines.push(format!(
        "2*d_0 = 2 is below no d_m for m <= {m_max}: the interval generated by the d_n is proper"
    ));
    Ok(lines)
}
