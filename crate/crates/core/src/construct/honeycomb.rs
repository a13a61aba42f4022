use num_traits::One;

use super::ConstructError;
use crate::cluster::{honeycomb_seed_at, point_from_seed, DEFAULT_BUDGET};
use crate::exactnum::Rational;
use crate::minors::PosMatrix;

/// The point of `Gr⁺(4,8)` whose coordinates on the completed 2×2 honeycomb
/// collection are `T` on the three hexagons and 1 elsewhere, as `[Id_4 | X]`.
///
/// At `T = 6` both `Δ_{1236}` and `Δ_{4578}` equal 1.
pub fn honeycomb_matrix_2x2(t: &Rational) -> Result<PosMatrix, ConstructError> {
    if *t < Rational::one() {
        return Err(ConstructError::InvalidArgument(format!("T = {t} is below 1")));
    }
    let seed = honeycomb_seed_at(2, 2, t).map_err(|e| ConstructError::InvalidArgument(e.to_string()))?;
    point_from_seed(&seed, DEFAULT_BUDGET).map_err(|e| ConstructError::VerificationFailed(e.to_string()))
}
