use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::NumError;

/// Arbitrary precision rational in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, NumError> {
    let s = s.trim();
    let bad = || NumError::Parse(format!("bad rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(NumError::DivisionByZero);
    }
    Ok(Rational::new(n, d))
}

pub(crate) fn to_rug(x: &Rational) -> rug::Rational {
    rug::Rational::from((bigint_to_rug(x.numer()), bigint_to_rug(x.denom())))
}

pub(crate) fn bigint_to_rug(x: &BigInt) -> rug::Integer {
    let (sign, digits) = x.to_u32_digits();
    let v = rug::Integer::from_digits(&digits, rug::integer::Order::Lsf);
    if sign == num_bigint::Sign::Minus {
        -v
    } else {
        v
    }
}

#[cfg(test)]
pub(crate) fn rug_to_bigint(x: &rug::Integer) -> BigInt {
    let digits = x.to_digits::<u32>(rug::integer::Order::Lsf);
    let v = BigInt::from_slice(num_bigint::Sign::Plus, &digits);
    if *x < 0 {
        -v
    } else {
        v
    }
}

#[cfg(test)]
pub(crate) fn rug_to_rational(x: &rug::Rational) -> Rational {
    Rational::new(rug_to_bigint(x.numer()), rug_to_bigint(x.denom()))
}
