//! Exchange relations on maximal weakly separated collections.

mod conjecture;
mod distance;
mod evaluate;
mod exchange;
mod seed;

pub use conjecture::{check_honeycomb_conjecture, honeycomb_seed, honeycomb_seed_at, ConjectureReport, ExponentRange};
pub use distance::{mutation_distance, shortest_chains, Distance, DistanceReport};
pub use evaluate::{evaluate_all, evaluate_plucker, evaluate_plucker_random, point_from_seed, ws_point, Evaluation, DEFAULT_BUDGET};
pub use exchange::{Cluster, ExchangeGraph, MutationEdge};
pub use seed::{AnySeed, ClusterValue, Seed};

use thiserror::Error;

use crate::exactnum::NumError;
use crate::minors::MinorsError;
use crate::plabic::PlabicError;

#[derive(Debug, Error)]
pub enum ClusterError {
    #[error("exchange relation is not an exact division")]
    InexactDivision,
    #[error("exchange not applicable: {0}")]
    NotApplicable(String),
    #[error("search gave up after {0} collections")]
    SearchBudgetExceeded(usize),
    #[error("more than {0} collections in memory")]
    MemoryBudgetExceeded(usize),
    #[error("invalid seed: {0}")]
    InvalidSeed(String),
    #[error(transparent)]
    Num(NumError),
    #[error(transparent)]
    Minors(#[from] MinorsError),
    #[error(transparent)]
    Plabic(#[from] PlabicError),
}

impl From<NumError> for ClusterError {
    fn from(e: NumError) -> Self {
        match e {
            NumError::InexactDivision => ClusterError::InexactDivision,
            e => ClusterError::Num(e),
        }
    }
}

#[cfg(test)]
mod tests;
