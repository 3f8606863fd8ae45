//! Exact arithmetic in the field extending the rationals by sqrt(2).
//!
//! A number is stored as `rational + coeff * sqrt(2)` with exact big
//! rationals. Representation is unique because sqrt(2) is irrational, so
//! equality is componentwise; ordering goes through an exact sign
//! computation with careful squaring.

use num::{BigRational, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSqrt2 {
    pub rational: BigRational,
    pub coeff: BigRational,
}

impl QSqrt2 {
    pub fn new(rational: BigRational, coeff: BigRational) -> Self {
        QSqrt2 { rational, coeff }
    }

    pub fn from_rational(rational: BigRational) -> Self {
        QSqrt2 {
            rational,
            coeff: BigRational::zero(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    /// sqrt(2) itself.
    pub fn sqrt2() -> Self {
        QSqrt2 {
            rational: BigRational::zero(),
            coeff: BigRational::from_integer(1.into()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.coeff.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.coeff.is_zero()
    }

    /// Exact sign: -1, 0 or 1.
    pub fn sign(&self) -> i32 {
        let (a, b) = (&self.rational, &self.coeff);
        if b.is_zero() {
            return if a.is_zero() {
                0
            } else if a.is_positive() {
                1
            } else {
                -1
            };
        }
        if a.is_zero() {
            return if b.is_positive() { 1 } else { -1 };
        }
        if a.is_positive() && b.is_positive() {
            return 1;
        }
        if a.is_negative() && b.is_negative() {
            return -1;
        }
        // mixed signs: compare |a| with |b|*sqrt(2) by squaring
        let a2 = a * a;
        let b2_twice = b * b * BigRational::from_integer(2.into());
        let cmp = a2.cmp(&b2_twice);
        // a^2 = 2 b^2 with both nonzero would make sqrt(2) rational
        assert_ne!(cmp, Ordering::Equal, "sqrt(2) cannot be rational");
        match (a.is_positive(), cmp) {
            (true, Ordering::Greater) => 1,
            (true, Ordering::Less) => -1,
            (false, Ordering::Greater) => -1,
            (false, Ordering::Less) => 1,
            _ => unreachable!(),
        }
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    /// Numeric value for diagnostics only; never used to decide anything.
    pub fn to_f64(&self) -> f64 {
        let r = |x: &BigRational| -> f64 {
            let n = x.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
            let d = x.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
            n / d
        };
        r(&self.rational) + r(&self.coeff) * std::f64::consts::SQRT_2
    }
}

impl Add for &QSqrt2 {
    type Output = QSqrt2;

    fn add(self, other: &QSqrt2) -> QSqrt2 {
        QSqrt2 {
            rational: &self.rational + &other.rational,
            coeff: &self.coeff + &other.coeff,
        }
    }
}

impl Sub for &QSqrt2 {
    type Output = QSqrt2;

    fn sub(self, other: &QSqrt2) -> QSqrt2 {
        QSqrt2 {
            rational: &self.rational - &other.rational,
            coeff: &self.coeff - &other.coeff,
        }
    }
}

impl Neg for &QSqrt2 {
    type Output = QSqrt2;

    fn neg(self) -> QSqrt2 {
        QSqrt2 {
            rational: -&self.rational,
            coeff: -&self.coeff,
        }
    }
}

impl PartialOrd for QSqrt2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QSqrt2 {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).sign() {
            0 => Ordering::Equal,
            s if s < 0 => Ordering::Less,
            _ => Ordering::Greater,
        }
    }
}

fn fmt_rational(x: &BigRational) -> String {
    use num::One;
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_zero() {
            return write!(f, "{}", fmt_rational(&self.rational));
        }
        let root = if self.coeff == BigRational::from_integer(1.into()) {
            "sqrt2".to_string()
        } else if self.coeff == -BigRational::from_integer(1.into()) {
            "-sqrt2".to_string()
        } else {
            format!("{}*sqrt2", fmt_rational(&self.coeff))
        };
        if self.rational.is_zero() {
            write!(f, "{root}")
        } else if root.starts_with('-') {
            write!(f, "{}{root}", fmt_rational(&self.rational))
        } else {
            write!(f, "{}+{root}", fmt_rational(&self.rational))
        }
    }
}
