//! The backend contract shared by every monoid representation.
//!
//! A backend owns an element domain, a commutative addition with neutral
//! element, a decidable equality, and a deterministic bounded enumeration.
//! Enumerations always start with zero. Finite backends enumerate their
//! whole domain; infinite backends enumerate a ball and say so, which is
//! what keeps every predicate in this crate terminating.

use num::rational::Ratio;
use num::{BigInt, BigRational, One, Signed, Zero};

/// Contract every monoid representation implements.
pub trait MonoidBackend {
    type Elem: Clone + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn eq(&self, x: &Self::Elem, y: &Self::Elem) -> bool;

    /// Elements of the search ball at `bound`, zero first, in a fixed
    /// deterministic order with no semantic duplicates.
    fn enumerate(&self, bound: u32) -> Vec<Self::Elem>;

    /// Whether `enumerate(bound)` lists the whole monoid.
    fn is_complete(&self, bound: u32) -> bool;

    /// Whether every z that can occur in a decomposition z + w = `target`
    /// is contained in `enumerate(bound)`. Lets conical, value-monotone
    /// backends certify negative answers below the bound.
    fn summand_complete(&self, bound: u32, target: &Self::Elem) -> bool {
        let _ = target;
        self.is_complete(bound)
    }

    fn display(&self, x: &Self::Elem) -> String;

    fn is_zero(&self, x: &Self::Elem) -> bool {
        self.eq(x, &self.zero())
    }

    /// n-fold sum of x.
    fn mul(&self, n: u32, x: &Self::Elem) -> Self::Elem {
        let mut acc = self.zero();
        for _ in 0..n {
            acc = self.add(&acc, x);
        }
        acc
    }
}

/// Backends whose algebraic preordering is decidable outright.
pub trait DecidableOrder: MonoidBackend {
    /// Whether some z satisfies x + z = y.
    fn leq(&self, x: &Self::Elem, y: &Self::Elem) -> bool;
}

/// The monoid of non-negative integers under addition.
#[derive(Clone, Copy, Debug, Default)]
pub struct Nat;

impl MonoidBackend for Nat {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn add(&self, x: &u64, y: &u64) -> u64 {
        x + y
    }

    fn eq(&self, x: &u64, y: &u64) -> bool {
        x == y
    }

    fn enumerate(&self, bound: u32) -> Vec<u64> {
        (0..=bound as u64).collect()
    }

    fn is_complete(&self, _bound: u32) -> bool {
        false
    }

    fn summand_complete(&self, bound: u32, target: &u64) -> bool {
        *target <= bound as u64
    }

    fn display(&self, x: &u64) -> String {
        x.to_string()
    }
}

impl DecidableOrder for Nat {
    fn leq(&self, x: &u64, y: &u64) -> bool {
        x <= y
    }
}

/// A numerical semigroup: the submonoid of the non-negative integers
/// generated by a finite set.
#[derive(Clone, Debug)]
pub struct NatSub {
    generators: Vec<u64>,
}

impl NatSub {
    pub fn new(mut generators: Vec<u64>) -> Self {
        generators.retain(|&g| g > 0);
        generators.sort_unstable();
        generators.dedup();
        NatSub { generators }
    }

    pub fn contains(&self, v: u64) -> bool {
        // coin-problem DP up to v
        let n = v as usize;
        let mut reach = vec![false; n + 1];
        reach[0] = true;
        for i in 1..=n {
            for &g in &self.generators {
                let g = g as usize;
                if g <= i && reach[i - g] {
                    reach[i] = true;
                    break;
                }
            }
        }
        reach[n]
    }
}

impl MonoidBackend for NatSub {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn add(&self, x: &u64, y: &u64) -> u64 {
        x + y
    }

    fn eq(&self, x: &u64, y: &u64) -> bool {
        x == y
    }

    fn enumerate(&self, bound: u32) -> Vec<u64> {
        (0..=bound as u64).filter(|&v| self.contains(v)).collect()
    }

    fn is_complete(&self, _bound: u32) -> bool {
        false
    }

    fn summand_complete(&self, bound: u32, target: &u64) -> bool {
        *target <= bound as u64
    }

    fn display(&self, x: &u64) -> String {
        x.to_string()
    }
}

impl DecidableOrder for NatSub {
    fn leq(&self, x: &u64, y: &u64) -> bool {
        x <= y && self.contains(y - x)
    }
}

/// Free commutative monoid of a fixed rank: vectors of non-negative
/// integers under componentwise addition.
#[derive(Clone, Copy, Debug)]
pub struct NatVec {
    pub dim: usize,
}

impl NatVec {
    pub fn new(dim: usize) -> Self {
        NatVec { dim }
    }
}

fn vectors_of_degree(dim: usize, deg: u32) -> Vec<Vec<u64>> {
    if dim == 0 {
        return if deg == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=deg).rev() {
        for mut rest in vectors_of_degree(dim - 1, deg - first) {
            let mut v = vec![first as u64];
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

impl MonoidBackend for NatVec {
    type Elem = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.dim]
    }

    fn add(&self, x: &Vec<u64>, y: &Vec<u64>) -> Vec<u64> {
        x.iter().zip(y).map(|(a, b)| a + b).collect()
    }

    fn eq(&self, x: &Vec<u64>, y: &Vec<u64>) -> bool {
        x == y
    }

    fn enumerate(&self, bound: u32) -> Vec<Vec<u64>> {
        // graded order: total degree ascending, then a fixed order per degree
        let mut out = Vec::new();
        for deg in 0..=bound {
            out.extend(vectors_of_degree(self.dim, deg));
        }
        out
    }

    fn is_complete(&self, _bound: u32) -> bool {
        false
    }

    fn summand_complete(&self, bound: u32, target: &Vec<u64>) -> bool {
        target.iter().sum::<u64>() <= bound as u64
    }

    fn display(&self, x: &Vec<u64>) -> String {
        let parts: Vec<String> = x.iter().map(|v| v.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

impl DecidableOrder for NatVec {
    fn leq(&self, x: &Vec<u64>, y: &Vec<u64>) -> bool {
        x.iter().zip(y).all(|(a, b)| a <= b)
    }
}

/// Non-negative rationals under addition, enumerated as the ball of
/// reduced fractions with denominator and value at most the bound,
/// ordered denominator first, then numerator.
#[derive(Clone, Copy, Debug, Default)]
pub struct NonNegRationals;

impl MonoidBackend for NonNegRationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn add(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x + y
    }

    fn eq(&self, x: &BigRational, y: &BigRational) -> bool {
        x == y
    }

    fn enumerate(&self, bound: u32) -> Vec<BigRational> {
        let mut out = Vec::new();
        for den in 1..=bound as i64 {
            let d = BigInt::from(den);
            for num in 0..=(bound as i64) * den {
                let n = BigInt::from(num);
                if num::integer::gcd(num, den) != 1 && num != 0 {
                    continue;
                }
                if num == 0 && den != 1 {
                    continue;
                }
                out.push(Ratio::new(n, d.clone()));
            }
        }
        out
    }

    fn is_complete(&self, _bound: u32) -> bool {
        false
    }

    fn display(&self, x: &BigRational) -> String {
        if x.denom().is_one() {
            x.numer().to_string()
        } else {
            format!("{}/{}", x.numer(), x.denom())
        }
    }
}

impl DecidableOrder for NonNegRationals {
    fn leq(&self, x: &BigRational, y: &BigRational) -> bool {
        !(y - x).is_negative()
    }
}

/// Exhaustive law check on the enumerated ball: commutativity,
/// associativity, neutrality of zero, and eq being consistent with add.
pub fn check_backend_laws<B: MonoidBackend>(m: &B, bound: u32) -> Result<(), String> {
    let ball = m.enumerate(bound);
    if ball.is_empty() || !m.is_zero(&ball[0]) {
        return Err("enumeration must start with zero".to_string());
    }
    for x in &ball {
        if !m.eq(&m.add(x, &m.zero()), x) {
            return Err(format!("{} + 0 != {}", m.display(x), m.display(x)));
        }
        for y in &ball {
            if !m.eq(&m.add(x, y), &m.add(y, x)) {
                return Err(format!(
                    "commutativity fails at {} + {}",
                    m.display(x),
                    m.display(y)
                ));
            }
            for z in &ball {
                let l = m.add(&m.add(x, y), z);
                let r = m.add(x, &m.add(y, z));
                if !m.eq(&l, &r) {
                    return Err(format!(
                        "associativity fails at {}, {}, {}",
                        m.display(x),
                        m.display(y),
                        m.display(z)
                    ));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nat_ball_is_prefix() {
        assert_eq!(Nat.enumerate(4), vec![0, 1, 2, 3, 4]);
        assert!(Nat.summand_complete(4, &3));
        assert!(!Nat.summand_complete(4, &9));
    }

    #[test]
    fn nat_sub_two_three() {
        let m = NatSub::new(vec![2, 3]);
        assert_eq!(m.enumerate(6), vec![0, 2, 3, 4, 5, 6]);
        assert!(!m.contains(1));
        assert!(m.leq(&3, &5));
        assert!(!m.leq(&3, &4)); // the difference 1 is not in the semigroup
    }

    #[test]
    fn nat_vec_enumeration_graded() {
        let m = NatVec::new(2);
        let ball = m.enumerate(2);
        assert_eq!(ball[0], vec![0, 0]);
        assert_eq!(ball.len(), 6);
    }

    #[test]
    fn rational_ball_reduced_and_ordered() {
        let m = NonNegRationals;
        let ball = m.enumerate(2);
        assert!(m.is_zero(&ball[0]));
        // no duplicates under semantic equality
        for (i, x) in ball.iter().enumerate() {
            for y in &ball[i + 1..] {
                assert!(!m.eq(x, y));
            }
        }
    }

    #[test]
    fn laws_hold_on_builtins() {
        assert!(check_backend_laws(&Nat, 5).is_ok());
        assert!(check_backend_laws(&NatVec::new(2), 3).is_ok());
        assert!(check_backend_laws(&NonNegRationals, 3).is_ok());
        assert!(check_backend_laws(&NatSub::new(vec![2, 3]), 6).is_ok());
    }
}
