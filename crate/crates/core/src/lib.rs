//! Equal and extreme minors of points in the totally positive Grassmannian.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactnum`] exact rationals, quadratic extensions, certified MPFR intervals
//!   and Laurent polynomials;
//! * [`minors`] matrices, Plücker coordinates, the embedding of rectangular
//!   matrices into the Grassmannian and arrangement extraction;
//! * [`combin`] sortedness, weak separation, enumerations and alcove geometry;
//! * [`construct`] explicit matrices realizing arrangements;
//! * [`plabic`] plabic graphs, strands, moves and honeycomb chain reactions;
//! * [`cluster`] mutation dynamics on maximal weakly separated collections.

pub mod cluster;
pub mod combin;
pub mod construct;
pub mod exactnum;
pub mod minors;
pub mod plabic;

pub use exactnum::{ExactScalar, Interval, LaurentPoly, NumError, QuadExt, Rational};
pub use minors::{PosMatrix, Subset};
