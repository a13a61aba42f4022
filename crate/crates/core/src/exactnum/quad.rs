use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, Rational};
use super::NumError;

/// `a + b·√D` with rational `a`, `b` and a square-free radicand `D > 1`.
///
/// The arithmetic operators panic on mixed radicands; use the `try_*`
/// methods when the radicands are not known to agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
    pub d: BigInt,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, d: BigInt) -> Result<Self, NumError> {
        if !is_squarefree(&d) || d <= BigInt::one() {
            return Err(NumError::BadRadicand(d.to_string()));
        }
        Ok(QuadExt { a, b, d })
    }

    pub fn from_rational(a: Rational, d: BigInt) -> Self {
        QuadExt { a, b: Rational::zero(), d }
    }

    /// The golden ratio (1 + √5)/2.
    pub fn golden() -> Self {
        let half = Rational::new(1.into(), 2.into());
        QuadExt { a: half.clone(), b: half, d: 5.into() }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadExt { a: self.a.clone(), b: -self.b.clone(), d: self.d.clone() }
    }

    /// `a² − b²D`, the field norm.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(self.d.clone())
    }

    /// Exact sign, decided by integer arithmetic only.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (x, y) if x == y => x,
            // opposite signs: compare |a| with |b|√D through squares
            (sa, _) => {
                let a2 = &self.a * &self.a;
                let b2d = &self.b * &self.b * Rational::from_integer(self.d.clone());
                match a2.cmp(&b2d) {
                    Ordering::Greater => sa,
                    Ordering::Less => sa.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    fn joint_radicand(&self, other: &Self) -> Result<BigInt, NumError> {
        if self.d == other.d || other.b.is_zero() {
            Ok(self.d.clone())
        } else if self.b.is_zero() {
            Ok(other.d.clone())
        } else {
            Err(NumError::MixedRadicand(self.d.to_string(), other.d.to_string()))
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, NumError> {
        let d = self.joint_radicand(o)?;
        Ok(QuadExt { a: &self.a + &o.a, b: &self.b + &o.b, d })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, NumError> {
        let d = self.joint_radicand(o)?;
        Ok(QuadExt { a: &self.a - &o.a, b: &self.b - &o.b, d })
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, NumError> {
        let d = self.joint_radicand(o)?;
        let dr = Rational::from_integer(d.clone());
        Ok(QuadExt {
            a: &self.a * &o.a + &self.b * &o.b * dr,
            b: &self.a * &o.b + &self.b * &o.a,
            d,
        })
    }

    pub fn try_div(&self, o: &Self) -> Result<Self, NumError> {
        let d = self.joint_radicand(o)?;
        if o.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        let o = QuadExt { a: o.a.clone(), b: o.b.clone(), d: d.clone() };
        let n = o.norm();
        let num = QuadExt { a: self.a.clone(), b: self.b.clone(), d }.try_mul(&o.conj())?;
        Ok(QuadExt { a: num.a / &n, b: num.b / &n, d: num.d })
    }

    /// Exact comparison `self` versus `other`.
    pub fn try_cmp(&self, other: &Self) -> Result<Ordering, NumError> {
        Ok(self.try_sub(other)?.signum())
    }
}

/// Exact ordering of two quadratic numbers with the same radicand.
pub fn quad_cmp(x: &QuadExt, y: &QuadExt) -> Result<Ordering, NumError> {
    x.try_cmp(y)
}

fn is_squarefree(d: &BigInt) -> bool {
    if !d.is_positive() {
        return false;
    }
    let mut n = d.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        if n.is_multiple_of(&p) {
            n /= &p;
            if n.is_multiple_of(&p) {
                return false;
            }
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    true
}

macro_rules! forward_op {
    ($tr:ident, $m:ident, $try:ident) => {
        impl<'a> $tr<&'a QuadExt> for &'a QuadExt {
            type Output = QuadExt;
            fn $m(self, o: &QuadExt) -> QuadExt {
                self.$try(o).expect("quadratic arithmetic")
            }
        }
        impl $tr for QuadExt {
            type Output = QuadExt;
            fn $m(self, o: QuadExt) -> QuadExt {
                (&self).$try(&o).expect("quadratic arithmetic")
            }
        }
    };
}
forward_op!(Add, add, try_add);
forward_op!(Sub, sub, try_sub);
forward_op!(Mul, mul, try_mul);
forward_op!(Div, div, try_div);

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt { a: -self.a, b: -self.b, d: self.d }
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", format_rational(&self.a));
        }
        write!(f, "{} + {}*sqrt({})", format_rational(&self.a), format_rational(&self.b), self.d)
    }
}
