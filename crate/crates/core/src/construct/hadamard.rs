use num_traits::{One, Zero};

use super::ConstructError;
use crate::exactnum::Rational;
use crate::minors::{det_rational, MatrixKind, PosMatrix};

fn rational_rows(b: &PosMatrix) -> Result<Vec<Vec<Rational>>, ConstructError> {
    b.rational_rows().ok_or_else(|| ConstructError::InvalidArgument("Hadamard powers need rational entries".into()))
}

/// Entrywise `m`-th power.
pub fn hadamard_power(b: &PosMatrix, m: u32) -> Result<PosMatrix, ConstructError> {
    let rows = rational_rows(b)?
        .into_iter()
        .map(|r| r.into_iter().map(|x| num_traits::pow(x, m as usize)).collect())
        .collect();
    Ok(PosMatrix::from_rationals(rows, MatrixKind::RectangularTp)?)
}

/// `b_ij = 1 / a_{j, k−i+1}` for an `(n−k) × k` matrix `A`.
pub fn invert_rotate(a: &PosMatrix) -> Result<PosMatrix, ConstructError> {
    let rows = rational_rows(a)?;
    let (r, k) = (rows.len(), rows[0].len());
    if rows.iter().flatten().any(|x| *x <= Rational::zero()) {
        return Err(ConstructError::NotPositive);
    }
    let out = (1..=k).map(|i| (1..=r).map(|j| Rational::one() / &rows[j - 1][k - i]).collect()).collect();
    Ok(PosMatrix::from_rationals(out, MatrixKind::RectangularTp)?)
}

/// Smallest `m ≤ cap` with the `m`-th Hadamard power of `b` totally positive.
pub fn find_tp_hadamard_exponent(b: &PosMatrix, cap: u32) -> Result<u32, ConstructError> {
    let rows = rational_rows(b)?;
    if rows.iter().flatten().any(|x| *x <= Rational::zero()) {
        return Err(ConstructError::NotPositive);
    }
    for i in 0..rows.len() {
        for x in i + 1..rows.len() {
            for j in 0..rows[0].len() {
                for y in j + 1..rows[0].len() {
                    let d = det_rational(&[vec![rows[i][j].clone(), rows[i][y].clone()], vec![rows[x][j].clone(), rows[x][y].clone()]]);
                    if d <= Rational::zero() {
                        return Err(ConstructError::NotPositive);
                    }
                }
            }
        }
    }
    for m in 1..=cap {
        if hadamard_power(b, m)?.is_totally_positive()? {
            return Ok(m);
        }
    }
    Err(ConstructError::CapExceeded(cap))
}
