use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::interval::Interval;
use super::quad::QuadExt;
use super::rational::{format_rational, parse_rational, Rational};
use super::NumError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ScalarKind {
    Rational,
    Quad,
    Interval,
}

/// A minor value: exact rational, exact quadratic, or certified interval.
///
/// `==` is structural; use [`ExactScalar::certified_cmp`] for numeric comparison.
#[derive(Clone, Debug, PartialEq)]
pub enum ExactScalar {
    Rational(Rational),
    Quad(QuadExt),
    Interval(Interval),
}

/// Outcome of comparing two scalars.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertifiedOrd {
    Less,
    Equal,
    Greater,
    /// Intervals overlap but are not yet narrow enough to assert equality.
    Undecided,
}

impl CertifiedOrd {
    pub fn from_ordering(o: Ordering) -> Self {
        match o {
            Ordering::Less => CertifiedOrd::Less,
            Ordering::Equal => CertifiedOrd::Equal,
            Ordering::Greater => CertifiedOrd::Greater,
        }
    }
}

/// Relative width below which overlapping intervals count as equal.
pub const EQUALITY_BITS: u32 = 128;

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar::Rational(Rational::zero())
    }

    pub fn one() -> Self {
        ExactScalar::Rational(Rational::one())
    }

    pub fn int(x: i64) -> Self {
        ExactScalar::Rational(Rational::from_integer(BigInt::from(x)))
    }

    pub fn kind(&self) -> ScalarKind {
        match self {
            ExactScalar::Rational(_) => ScalarKind::Rational,
            ExactScalar::Quad(_) => ScalarKind::Quad,
            ExactScalar::Interval(_) => ScalarKind::Interval,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            ExactScalar::Rational(r) => Some(r),
            ExactScalar::Quad(q) if q.is_rational() => Some(&q.a),
            _ => None,
        }
    }

    pub fn radicand(&self) -> Option<&BigInt> {
        match self {
            ExactScalar::Quad(q) if !q.is_rational() => Some(&q.d),
            _ => None,
        }
    }

    pub fn to_quad(&self, d: &BigInt) -> Result<QuadExt, NumError> {
        match self {
            ExactScalar::Rational(r) => Ok(QuadExt::from_rational(r.clone(), d.clone())),
            ExactScalar::Quad(q) if q.is_rational() || &q.d == d => Ok(QuadExt { a: q.a.clone(), b: q.b.clone(), d: d.clone() }),
            ExactScalar::Quad(q) => Err(NumError::MixedRadicand(q.d.to_string(), d.to_string())),
            ExactScalar::Interval(_) => Err(NumError::Parse("interval is not exact".into())),
        }
    }

    pub fn to_interval(&self, prec: u32) -> Interval {
        match self {
            ExactScalar::Rational(r) => Interval::from_rational(r, prec),
            ExactScalar::Quad(q) => Interval::from_quad(q, prec),
            ExactScalar::Interval(i) => i.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.to_interval(64).to_f64()
    }

    fn binop(
        &self,
        o: &Self,
        fr: impl Fn(&Rational, &Rational) -> Result<Rational, NumError>,
        fq: impl Fn(&QuadExt, &QuadExt) -> Result<QuadExt, NumError>,
        fi: impl Fn(&Interval, &Interval) -> Result<Interval, NumError>,
    ) -> Result<Self, NumError> {
        use ExactScalar::*;
        match (self, o) {
            (Rational(a), Rational(b)) => Ok(Rational(fr(a, b)?)),
            (Interval(a), b) => Ok(Interval(fi(a, &b.to_interval(a.prec()))?)),
            (a, Interval(b)) => Ok(Interval(fi(&a.to_interval(b.prec()), b)?)),
            (Quad(a), b) => Ok(Quad(fq(a, &b.to_quad(&a.d)?)?)),
            (a, Quad(b)) => Ok(Quad(fq(&a.to_quad(&b.d)?, b)?)),
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self, NumError> {
        self.binop(o, |a, b| Ok(a + b), |a, b| a.try_add(b), |a, b| Ok(a.add(b)))
    }

    pub fn sub(&self, o: &Self) -> Result<Self, NumError> {
        self.binop(o, |a, b| Ok(a - b), |a, b| a.try_sub(b), |a, b| Ok(a.sub(b)))
    }

    pub fn mul(&self, o: &Self) -> Result<Self, NumError> {
        self.binop(o, |a, b| Ok(a * b), |a, b| a.try_mul(b), |a, b| Ok(a.mul(b)))
    }

    pub fn div(&self, o: &Self) -> Result<Self, NumError> {
        self.binop(
            o,
            |a, b| if b.is_zero() { Err(NumError::DivisionByZero) } else { Ok(a / b) },
            |a, b| a.try_div(b),
            |a, b| a.div(b),
        )
    }

    pub fn neg(&self) -> Self {
        match self {
            ExactScalar::Rational(r) => ExactScalar::Rational(-r.clone()),
            ExactScalar::Quad(q) => ExactScalar::Quad(-q.clone()),
            ExactScalar::Interval(i) => ExactScalar::Interval(i.neg()),
        }
    }

    /// Sign; `None` when an interval still straddles zero.
    pub fn signum(&self) -> Option<Ordering> {
        match self {
            ExactScalar::Rational(r) => Some(r.cmp(&Rational::zero())),
            ExactScalar::Quad(q) => Some(q.signum()),
            ExactScalar::Interval(i) => i.certified_sign(),
        }
    }

    pub fn is_certainly_nonzero(&self) -> bool {
        matches!(self.signum(), Some(Ordering::Less | Ordering::Greater))
    }

    pub fn is_exact_zero(&self) -> bool {
        match self {
            ExactScalar::Rational(r) => r.is_zero(),
            ExactScalar::Quad(q) => q.is_zero(),
            ExactScalar::Interval(_) => false,
        }
    }

    /// Exact comparison for exact values; for intervals, strictness needs disjoint
    /// enclosures and equality needs overlap with relative width below 2^-128.
    pub fn certified_cmp(&self, o: &Self) -> Result<CertifiedOrd, NumError> {
        use ExactScalar::*;
        match (self, o) {
            (Rational(a), Rational(b)) => Ok(CertifiedOrd::from_ordering(a.cmp(b))),
            (Interval(_), _) | (_, Interval(_)) => {
                let p = match (self, o) {
                    (Interval(a), Interval(b)) => a.prec().min(b.prec()),
                    (Interval(a), _) | (_, Interval(a)) => a.prec(),
                    _ => unreachable!(),
                };
                let (a, b) = (self.to_interval(p), o.to_interval(p));
                if let Some(ord) = a.certified_cmp(&b) {
                    return Ok(CertifiedOrd::from_ordering(ord));
                }
                if a.rel_width_below(EQUALITY_BITS) && b.rel_width_below(EQUALITY_BITS) {
                    Ok(CertifiedOrd::Equal)
                } else {
                    Ok(CertifiedOrd::Undecided)
                }
            }
            _ => {
                let d = self.radicand().or(o.radicand()).cloned().unwrap_or_else(|| BigInt::from(2));
                Ok(CertifiedOrd::from_ordering(self.to_quad(&d)?.try_cmp(&o.to_quad(&d)?)?))
            }
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            ExactScalar::Rational(r) => Value::String(format_rational(r)),
            ExactScalar::Quad(q) => json!({"a": format_rational(&q.a), "b": format_rational(&q.b), "D": q.d.to_string()}),
            ExactScalar::Interval(i) => json!({"lo": format!("{:e}", i.lo()), "hi": format!("{:e}", i.hi()), "prec": i.prec()}),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self, NumError> {
        match v {
            Value::String(s) => Ok(ExactScalar::Rational(parse_rational(s)?)),
            Value::Number(n) => Ok(ExactScalar::Rational(parse_rational(&n.to_string())?)),
            Value::Object(m) if m.contains_key("D") => {
                let get = |k: &str| -> Result<String, NumError> {
                    match m.get(k) {
                        Some(Value::String(s)) => Ok(s.clone()),
                        Some(Value::Number(n)) => Ok(n.to_string()),
                        _ => Err(NumError::Parse(format!("quadratic scalar lacks {k:?}"))),
                    }
                };
                let d: BigInt = get("D")?.parse().map_err(|_| NumError::Parse("bad radicand".into()))?;
                Ok(ExactScalar::Quad(QuadExt::new(parse_rational(&get("a")?)?, parse_rational(&get("b")?)?, d)?))
            }
            _ => Err(NumError::Parse(format!("unsupported scalar {v}"))),
        }
    }
}

impl From<Rational> for ExactScalar {
    fn from(r: Rational) -> Self {
        ExactScalar::Rational(r)
    }
}

impl From<QuadExt> for ExactScalar {
    fn from(q: QuadExt) -> Self {
        ExactScalar::Quad(q)
    }
}

impl From<Interval> for ExactScalar {
    fn from(i: Interval) -> Self {
        ExactScalar::Interval(i)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactScalar::Rational(r) => write!(f, "{}", format_rational(r)),
            ExactScalar::Quad(q) => write!(f, "{q}"),
            ExactScalar::Interval(i) => write!(f, "{i}"),
        }
    }
}
