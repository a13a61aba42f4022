//! Expression trees re-evaluated at doubling precision until a goal is certified.

use std::cmp::Ordering;
use std::sync::Arc;

use super::interval::Interval;
use super::quad::QuadExt;
use super::rational::Rational;
use super::NumError;

#[derive(Clone, Debug)]
pub enum Expr {
    Rat(Rational),
    Quad(QuadExt),
    Pi,
    Neg(Arc<Expr>),
    Add(Arc<Expr>, Arc<Expr>),
    Sub(Arc<Expr>, Arc<Expr>),
    Mul(Arc<Expr>, Arc<Expr>),
    Div(Arc<Expr>, Arc<Expr>),
    Sqrt(Arc<Expr>),
    Exp(Arc<Expr>),
    Log(Arc<Expr>),
    Sin(Arc<Expr>),
    Cos(Arc<Expr>),
}

impl Expr {
    pub fn rat(x: Rational) -> Expr {
        Expr::Rat(x)
    }
    pub fn add(self, o: Expr) -> Expr {
        Expr::Add(Arc::new(self), Arc::new(o))
    }
    pub fn sub(self, o: Expr) -> Expr {
        Expr::Sub(Arc::new(self), Arc::new(o))
    }
    pub fn mul(self, o: Expr) -> Expr {
        Expr::Mul(Arc::new(self), Arc::new(o))
    }
    pub fn div(self, o: Expr) -> Expr {
        Expr::Div(Arc::new(self), Arc::new(o))
    }
    pub fn neg(self) -> Expr {
        Expr::Neg(Arc::new(self))
    }
    pub fn sqrt(self) -> Expr {
        Expr::Sqrt(Arc::new(self))
    }
    pub fn exp(self) -> Expr {
        Expr::Exp(Arc::new(self))
    }
    pub fn log(self) -> Expr {
        Expr::Log(Arc::new(self))
    }
    pub fn sin(self) -> Expr {
        Expr::Sin(Arc::new(self))
    }
    pub fn cos(self) -> Expr {
        Expr::Cos(Arc::new(self))
    }

    /// Enclosure at working precision `prec`.
    pub fn eval(&self, prec: u32) -> Result<Interval, NumError> {
        // a few guard bits absorb the rounding of deep trees
        let p = prec + 16;
        Ok(match self {
            Expr::Rat(x) => Interval::from_rational(x, p),
            Expr::Quad(x) => Interval::from_quad(x, p),
            Expr::Pi => Interval::pi(p),
            Expr::Neg(a) => a.eval(prec)?.neg(),
            Expr::Add(a, b) => a.eval(prec)?.add(&b.eval(prec)?),
            Expr::Sub(a, b) => a.eval(prec)?.sub(&b.eval(prec)?),
            Expr::Mul(a, b) => a.eval(prec)?.mul(&b.eval(prec)?),
            Expr::Div(a, b) => a.eval(prec)?.div(&b.eval(prec)?)?,
            Expr::Sqrt(a) => a.eval(prec)?.sqrt()?,
            Expr::Exp(a) => a.eval(prec)?.exp(),
            Expr::Log(a) => a.eval(prec)?.ln()?,
            Expr::Sin(a) => a.eval(prec)?.sin(),
            Expr::Cos(a) => a.eval(prec)?.cos(),
        })
    }
}

/// Precision schedule: start, doubling up to the cap (inclusive).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Precision {
    pub start: u32,
    pub cap: u32,
}

impl Default for Precision {
    fn default() -> Self {
        Precision { start: 256, cap: 4096 }
    }
}

impl Precision {
    pub fn steps(self) -> impl Iterator<Item = u32> {
        std::iter::successors(Some(self.start.max(2)), move |&p| if p < self.cap { Some((p * 2).min(self.cap)) } else { None })
    }
}

#[derive(Clone, Debug)]
pub enum Goal {
    /// Strict sign of the expression (zero is never certified).
    Sign,
    /// Strict comparison with a second expression.
    Cmp(Expr),
    /// Relative width at most 2^-bits.
    WidthBelow(u32),
}

#[derive(Clone, Debug)]
pub enum Certificate {
    Ordering(Ordering, Interval),
    Width(Interval),
}

/// Runs `attempt` at each precision of the schedule until it yields a value.
pub fn refine<T>(schedule: Precision, mut attempt: impl FnMut(u32) -> Result<Option<T>, NumError>) -> Result<T, NumError> {
    let mut last = schedule.start;
    for p in schedule.steps() {
        last = p;
        match attempt(p) {
            Ok(Some(v)) => return Ok(v),
            Ok(None) | Err(NumError::DivisionByZero) | Err(NumError::Domain(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Err(NumError::PrecisionExhausted(last))
}

pub fn refine_sign(x: &Expr, schedule: Precision) -> Result<Ordering, NumError> {
    refine(schedule, |p| {
        let v = x.eval(p)?;
        Ok(v.certified_sign().filter(|s| *s != Ordering::Equal))
    })
}

pub fn refine_cmp(x: &Expr, y: &Expr, schedule: Precision) -> Result<Ordering, NumError> {
    refine_sign(&x.clone().sub(y.clone()), schedule)
}

pub fn refine_width(x: &Expr, bits: u32, schedule: Precision) -> Result<Interval, NumError> {
    refine(schedule, |p| {
        let v = x.eval(p)?;
        Ok(v.rel_width_below(bits).then_some(v))
    })
}

/// Certifies a goal for `x`.
pub fn certify(x: &Expr, goal: &Goal, schedule: Precision) -> Result<Certificate, NumError> {
    match goal {
        Goal::Sign => {
            let s = refine_sign(x, schedule)?;
            Ok(Certificate::Ordering(s, x.eval(schedule.cap)?))
        }
        Goal::Cmp(y) => {
            let s = refine_cmp(x, y, schedule)?;
            Ok(Certificate::Ordering(s, x.eval(schedule.cap)?))
        }
        Goal::WidthBelow(bits) => Ok(Certificate::Width(refine_width(x, *bits, schedule)?)),
    }
}
