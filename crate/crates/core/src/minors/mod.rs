//! Matrices, Plücker coordinates, the φ embedding, arrangements and Skandera dominance.

mod det;
mod matrix;
mod skandera;
mod subset;
mod table;

use thiserror::Error;

use crate::exactnum::NumError;

pub use det::{bareiss, cofactor, det_rational, det_scalar, det_sign_rational, DetRing};
pub use matrix::{cyclic_shift, minor_index_map, phi_embed, random_positive_point, random_tp_matrix, MatrixKind, PosMatrix};
pub use skandera::{r_function, skandera_dominates, sort_pair};
pub use subset::{binom, colex_rank, k_subsets, Subset, MAX_N};
pub use table::{extract_arrangement, Arrangement, ArrangementMode, MinorTable};

#[derive(Debug, Error)]
pub enum MinorsError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("undecided comparisons: {}", fmt_pairs(.0))]
    Undecided(Vec<(Subset, Subset)>),
    #[error(transparent)]
    Num(#[from] NumError),
    #[error("malformed input: {0}")]
    Malformed(String),
}

fn fmt_pairs(p: &[(Subset, Subset)]) -> String {
    p.iter().map(|(a, b)| format!("{a}~{b}")).collect::<Vec<_>>().join(", ")
}
