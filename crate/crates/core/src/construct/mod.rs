//! Explicit matrices realizing arrangements of equal smallest or largest minors.

mod hadamard;
mod honeycomb;
mod paper;
mod thrackle;
mod torus;
mod triangulation;

pub use hadamard::{find_tp_hadamard_exponent, hadamard_power, invert_rotate};
pub use honeycomb::honeycomb_matrix_2x2;
pub use paper::{paper_matrix, verify_paper_matrix, PaperMatrix, VerifyReport, PAPER_MATRIX_NAMES};
pub use thrackle::{thrackle_matrix, thrackle_matrix_with, ThrackleMatrix};
pub use torus::{epsilon_perturb_largest, epsilon_perturb_largest_with, polygon_point, torus_rescale, torus_rescale_with, TorusScaling};
pub use triangulation::{smallest_arrangement_2xn, triangulation_matrix, triangulation_matrix_with, EarOrder};

use thiserror::Error;

use crate::exactnum::NumError;
use crate::minors::MinorsError;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("graph is not a triangulation of the polygon")]
    NotATriangulation,
    #[error("graph has crossing edges")]
    NotNonCrossing,
    #[error("graph is not a thrackle")]
    NotAThrackle,
    #[error("matrix is not a positive point")]
    NotPositive,
    #[error("collection is not a maximal sorted collection")]
    NotMaximalSorted,
    #[error("precision exhausted before certification")]
    PrecisionExhausted,
    #[error("unknown matrix name {0}")]
    UnknownName(String),
    #[error("no totally positive Hadamard power up to exponent {0}")]
    CapExceeded(u32),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error(transparent)]
    Minors(#[from] MinorsError),
    #[error(transparent)]
    Num(#[from] NumError),
}
