use std::cmp::Ordering;
use std::fmt;

use rug::float::{Constant, Round};
use rug::Float;

use super::quad::QuadExt;
use super::rational::{bigint_to_rug, to_rug, Rational};
use super::NumError;

/// Closed interval `[lo, hi]` of MPFR floats; every operation rounds outward.
#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    lo: Float,
    hi: Float,
}

fn down<T>(prec: u32, v: T) -> Float
where
    Float: rug::ops::AssignRound<T, Round = Round, Ordering = Ordering>,
{
    Float::with_val_round(prec, v, Round::Down).0
}

fn up<T>(prec: u32, v: T) -> Float
where
    Float: rug::ops::AssignRound<T, Round = Round, Ordering = Ordering>,
{
    Float::with_val_round(prec, v, Round::Up).0
}

impl Interval {
    pub fn from_bounds(lo: Float, hi: Float) -> Self {
        assert!(lo <= hi, "inverted interval");
        Interval { lo, hi }
    }

    pub fn point(x: Float) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn from_rational(x: &Rational, prec: u32) -> Self {
        let r = to_rug(x);
        Interval { lo: down(prec, &r), hi: up(prec, &r) }
    }

    pub fn from_i64(x: i64, prec: u32) -> Self {
        Interval { lo: down(prec, x), hi: up(prec, x) }
    }

    pub fn from_quad(x: &QuadExt, prec: u32) -> Self {
        let d = Interval { lo: down(prec, &bigint_to_rug(&x.d)), hi: up(prec, &bigint_to_rug(&x.d)) };
        let s = d.sqrt().expect("positive radicand");
        Interval::from_rational(&x.a, prec).add(&Interval::from_rational(&x.b, prec).mul(&s))
    }

    pub fn pi(prec: u32) -> Self {
        Interval { lo: down(prec, Constant::Pi), hi: up(prec, Constant::Pi) }
    }

    pub fn prec(&self) -> u32 {
        self.lo.prec().min(self.hi.prec())
    }

    pub fn lo(&self) -> &Float {
        &self.lo
    }

    pub fn hi(&self) -> &Float {
        &self.hi
    }

    pub fn mid(&self) -> Float {
        let p = self.prec() + 2;
        Float::with_val(p, &self.lo + &self.hi) / 2u32
    }

    pub fn to_f64(&self) -> f64 {
        self.mid().to_f64()
    }

    pub fn width(&self) -> Float {
        up(self.prec(), &self.hi - &self.lo)
    }

    /// True when `width ≤ 2^-bits · max|x|` (or the interval is exactly a point).
    pub fn rel_width_below(&self, bits: u32) -> bool {
        let w = self.width();
        if w.is_zero() {
            return true;
        }
        let mag = if self.lo.clone().abs() > self.hi.clone().abs() { self.lo.clone().abs() } else { self.hi.clone().abs() };
        let bound = Float::with_val(self.prec(), &mag >> bits);
        w < bound
    }

    pub fn contains_rational(&self, x: &Rational) -> bool {
        let r = to_rug(x);
        self.lo <= r && self.hi >= r
    }

    pub fn contains_zero(&self) -> bool {
        self.lo <= 0 && self.hi >= 0
    }

    pub fn overlaps(&self, o: &Interval) -> bool {
        self.lo <= o.hi && o.lo <= self.hi
    }

    /// Certified sign: `Some(Greater)` if `lo > 0`, `Some(Less)` if `hi < 0`,
    /// `Some(Equal)` for the exact point zero, otherwise `None`.
    pub fn certified_sign(&self) -> Option<Ordering> {
        if self.lo > 0 {
            Some(Ordering::Greater)
        } else if self.hi < 0 {
            Some(Ordering::Less)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Certified strict comparison; `None` when the intervals overlap.
    pub fn certified_cmp(&self, o: &Interval) -> Option<Ordering> {
        if self.hi < o.lo {
            Some(Ordering::Less)
        } else if o.hi < self.lo {
            Some(Ordering::Greater)
        } else if self.lo == self.hi && o.lo == o.hi && self.lo == o.lo {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn neg(&self) -> Interval {
        Interval { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        let p = self.prec().min(o.prec());
        Interval { lo: down(p, &self.lo + &o.lo), hi: up(p, &self.hi + &o.hi) }
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        let p = self.prec().min(o.prec());
        Interval { lo: down(p, &self.lo - &o.hi), hi: up(p, &self.hi - &o.lo) }
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let p = self.prec().min(o.prec());
        let pairs = [(&self.lo, &o.lo), (&self.lo, &o.hi), (&self.hi, &o.lo), (&self.hi, &o.hi)];
        let lo = pairs.iter().map(|(a, b)| down(p, *a * *b)).reduce(|x, y| if y < x { y } else { x }).unwrap();
        let hi = pairs.iter().map(|(a, b)| up(p, *a * *b)).reduce(|x, y| if y > x { y } else { x }).unwrap();
        Interval { lo, hi }
    }

    pub fn recip(&self) -> Result<Interval, NumError> {
        if self.contains_zero() {
            return Err(NumError::DivisionByZero);
        }
        let p = self.prec();
        Ok(Interval { lo: down(p, 1 / &self.hi), hi: up(p, 1 / &self.lo) })
    }

    pub fn div(&self, o: &Interval) -> Result<Interval, NumError> {
        Ok(self.mul(&o.recip()?))
    }

    pub fn sqrt(&self) -> Result<Interval, NumError> {
        if self.hi < 0 {
            return Err(NumError::Domain("sqrt"));
        }
        let p = self.prec();
        let lo = if self.lo < 0 { Float::new(p) } else { down(p, self.lo.sqrt_ref()) };
        Ok(Interval { lo, hi: up(p, self.hi.sqrt_ref()) })
    }

    pub fn exp(&self) -> Interval {
        let p = self.prec();
        Interval { lo: down(p, self.lo.exp_ref()), hi: up(p, self.hi.exp_ref()) }
    }

    pub fn ln(&self) -> Result<Interval, NumError> {
        if self.lo <= 0 {
            return Err(NumError::Domain("ln"));
        }
        let p = self.prec();
        Ok(Interval { lo: down(p, self.lo.ln_ref()), hi: up(p, self.hi.ln_ref()) })
    }

    fn lipschitz(&self, f: impl Fn(&mut Float, Round) -> Ordering) -> Interval {
        // |f'| ≤ 1 and |f| ≤ 1: enclose f(mid) and widen by the radius
        let p = self.prec();
        let m = self.mid();
        let r1 = up(p, &m - &self.lo);
        let r2 = up(p, &self.hi - &m);
        let r = if r1 > r2 { r1 } else { r2 };
        let mut lo = Float::with_val(p + 2, &m);
        f(&mut lo, Round::Down);
        let mut hi = Float::with_val(p + 2, &m);
        f(&mut hi, Round::Up);
        let mut lo = down(p, &lo - &r);
        let mut hi = up(p, &hi + &r);
        if lo < -1 {
            lo = Float::with_val(p, -1);
        }
        if hi > 1 {
            hi = Float::with_val(p, 1);
        }
        Interval { lo, hi }
    }

    pub fn sin(&self) -> Interval {
        self.lipschitz(|x, r| x.sin_round(r))
    }

    pub fn cos(&self) -> Interval {
        self.lipschitz(|x, r| x.cos_round(r))
    }

    /// Convex hull of two intervals.
    pub fn hull(&self, o: &Interval) -> Interval {
        let lo = if self.lo < o.lo { self.lo.clone() } else { o.lo.clone() };
        let hi = if self.hi > o.hi { self.hi.clone() } else { o.hi.clone() };
        Interval { lo, hi }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.30e}, {:.30e}]", self.lo, self.hi)
    }
}
