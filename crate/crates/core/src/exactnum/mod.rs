//! Exact and certified number types.

mod interval;
mod laurent;
mod lazy;
mod quad;
mod rational;
mod scalar;

pub use interval::Interval;
pub use laurent::LaurentPoly;
pub use lazy::{certify, refine, refine_cmp, refine_sign, refine_width, Certificate, Expr, Goal, Precision};
pub use quad::{quad_cmp, QuadExt};
pub use rational::{format_rational, parse_rational, rat, rat_int, Rational};
pub use scalar::{CertifiedOrd, ExactScalar, ScalarKind};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("inexact division")]
    InexactDivision,
    #[error("precision exhausted at {0} bits")]
    PrecisionExhausted(u32),
    #[error("mixed radicands {0} and {1}")]
    MixedRadicand(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("radicand {0} is not a square-free positive integer")]
    BadRadicand(String),
    #[error("interval does not lie in the domain of {0}")]
    Domain(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}
