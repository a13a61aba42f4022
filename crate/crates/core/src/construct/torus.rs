use num_traits::{One, Zero};
use rug::Float;

use super::ConstructError;
use crate::combin::is_sorted_collection;
use crate::exactnum::{ExactScalar, Interval, NumError, Precision, Rational};
use crate::minors::{extract_arrangement, ArrangementMode, MatrixKind, MinorTable, MinorsError, PosMatrix, Subset};

/// Column scalars `t` and a bound on `max_I |log Δ_I(A·diag t) − log target_I|` over the collection.
#[derive(Clone, Debug)]
pub struct TorusScaling {
    pub t: Vec<Interval>,
    pub residual: Interval,
    pub precision: u32,
}

impl TorusScaling {
    /// `t` divided by its smallest entry.
    pub fn normalized(&self) -> Vec<Interval> {
        let min = self.t.iter().min_by(|a, b| a.to_f64().total_cmp(&b.to_f64())).unwrap();
        self.t.iter().map(|x| x.div(min).expect("scalars are positive")).collect()
    }
}

/// Inverse of the 0/1 matrix with rows `e_I`, `I ∈ s`.
fn incidence_inverse(s: &[Subset], n: usize) -> Option<Vec<Vec<Rational>>> {
    let mut m: Vec<Vec<Rational>> = s
        .iter()
        .map(|x| {
            let mut row: Vec<Rational> = (1..=n).map(|i| if x.contains(i) { Rational::one() } else { Rational::zero() }).collect();
            row.resize(2 * n, Rational::zero());
            row
        })
        .collect();
    for (i, row) in m.iter_mut().enumerate() {
        for j in 0..n {
            row[n + j] = if i == j { Rational::one() } else { Rational::zero() };
        }
    }
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        let inv = Rational::one() / &m[c][c];
        for x in m[c].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for j in 0..2 * n {
                    let v = &f * &m[c][j];
                    m[r][j] -= v;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn rescale(a: &PosMatrix, s: &[Subset], targets: &[Rational], inv: &[Vec<Rational>], prec: u32) -> Result<(Vec<Interval>, PosMatrix), ConstructError> {
    let n = a.n();
    let mut b = Vec::with_capacity(s.len());
    for (x, target) in s.iter().zip(targets) {
        let d = a.plucker(x)?.to_interval(prec);
        b.push(Interval::from_rational(target, prec).ln()?.sub(&d.ln()?));
    }
    let t: Vec<Interval> = (0..n)
        .map(|i| {
            let mut y = Interval::from_i64(0, prec);
            for (c, bi) in inv[i].iter().zip(&b) {
                if !c.is_zero() {
                    y = y.add(&Interval::from_rational(c, prec).mul(bi));
                }
            }
            y.exp()
        })
        .collect();
    let rows = (0..a.k())
        .map(|r| (0..n).map(|j| ExactScalar::Interval(a.get(r, j).to_interval(prec).mul(&t[j]))).collect())
        .collect();
    Ok((t, PosMatrix::new(rows, MatrixKind::GrassmannPoint)?))
}

enum Outcome {
    Certified,
    Undecided,
    Wrong,
}

fn check_largest(m: &PosMatrix, want: &[Subset]) -> Result<Outcome, ConstructError> {
    let table = MinorTable::compute(m)?;
    let arr = match extract_arrangement(&table, ArrangementMode::Largest) {
        Ok(a) => a,
        Err(MinorsError::Undecided(_)) => return Ok(Outcome::Undecided),
        Err(e) => return Err(e.into()),
    };
    let mut got = arr.largest().to_vec();
    got.sort();
    let mut want = want.to_vec();
    want.sort();
    Ok(if got == want && arr.zeros.is_empty() { Outcome::Certified } else { Outcome::Wrong })
}

fn residual(m: &PosMatrix, s: &[Subset], targets: &[Rational], prec: u32) -> Result<Interval, ConstructError> {
    let mut worst = Float::with_val(prec, 0);
    for (x, target) in s.iter().zip(targets) {
        let r = m.plucker(x)?.to_interval(prec).ln()?.sub(&Interval::from_rational(target, prec).ln()?);
        for bound in [r.lo(), r.hi()] {
            let a = Float::with_val(prec, bound.abs_ref());
            if a > worst {
                worst = a;
            }
        }
    }
    Ok(Interval::from_bounds(Float::with_val(prec, 0), worst))
}

fn check_positive(a: &PosMatrix) -> Result<(), ConstructError> {
    match MinorTable::compute(a)?.all_positive() {
        Some(true) => Ok(()),
        _ => Err(ConstructError::NotPositive),
    }
}

fn solve_certified(a: &PosMatrix, s: &[Subset], targets: &[Rational], class: &[Subset], precision: Precision) -> Result<Option<(TorusScaling, PosMatrix)>, ConstructError> {
    let inv = incidence_inverse(s, a.n()).ok_or(ConstructError::NotMaximalSorted)?;
    for prec in precision.steps() {
        let (t, m) = match rescale(a, s, targets, &inv, prec) {
            Ok(x) => x,
            Err(ConstructError::Num(NumError::Domain(_))) => continue,
            Err(e) => return Err(e),
        };
        match check_largest(&m, class)? {
            Outcome::Certified => {
                let residual = residual(&m, s, targets, prec)?;
                return Ok(Some((TorusScaling { t, residual, precision: prec }, m)));
            }
            Outcome::Undecided => continue,
            Outcome::Wrong => return Ok(None),
        }
    }
    Err(ConstructError::PrecisionExhausted)
}

fn check_sorted(a: &PosMatrix, s: &[Subset]) -> Result<(), ConstructError> {
    if s.len() != a.n() || !is_sorted_collection(s) || s.iter().any(|x| x.n() != a.n() || x.len() != a.k()) {
        return Err(ConstructError::NotMaximalSorted);
    }
    Ok(())
}

/// Rescales the columns of a positive point so that the minors on the maximal sorted collection
/// `s` all equal 1 and every other minor is strictly smaller.
pub fn torus_rescale(a: &PosMatrix, s: &[Subset]) -> Result<(TorusScaling, PosMatrix), ConstructError> {
    torus_rescale_with(a, s, Precision::default())
}

/// [`torus_rescale`] with an explicit precision schedule.
pub fn torus_rescale_with(a: &PosMatrix, s: &[Subset], precision: Precision) -> Result<(TorusScaling, PosMatrix), ConstructError> {
    check_sorted(a, s)?;
    check_positive(a)?;
    let targets = vec![Rational::one(); s.len()];
    solve_certified(a, s, &targets, s, precision)?.ok_or_else(|| ConstructError::VerificationFailed("largest class differs from the collection".into()))
}

/// Targets 1 on `s_prime` and `1 − ε` on the rest of `s`, halving `ε` (at most 20 times)
/// until the largest class is certified to be exactly `s_prime`.
pub fn epsilon_perturb_largest(a: &PosMatrix, s: &[Subset], s_prime: &[Subset], eps: &Rational) -> Result<PosMatrix, ConstructError> {
    epsilon_perturb_largest_with(a, s, s_prime, eps, Precision::default())
}

/// [`epsilon_perturb_largest`] with an explicit precision schedule.
pub fn epsilon_perturb_largest_with(a: &PosMatrix, s: &[Subset], s_prime: &[Subset], eps: &Rational, precision: Precision) -> Result<PosMatrix, ConstructError> {
    check_sorted(a, s)?;
    check_positive(a)?;
    if s_prime.is_empty() || s_prime.iter().any(|x| !s.contains(x)) {
        return Err(ConstructError::InvalidArgument("the sub-collection must be a nonempty subset of the collection".into()));
    }
    if *eps <= Rational::zero() || *eps >= Rational::one() {
        return Err(ConstructError::InvalidArgument("ε must lie in (0, 1)".into()));
    }
    let mut eps = eps.clone();
    for _ in 0..=20 {
        let targets: Vec<Rational> = s.iter().map(|x| if s_prime.contains(x) { Rational::one() } else { Rational::one() - &eps }).collect();
        if let Some((_, m)) = solve_certified(a, s, &targets, s_prime, precision)? {
            return Ok(m);
        }
        eps /= Rational::from_integer(2.into());
    }
    Err(ConstructError::PrecisionExhausted)
}

/// The `3 × n` point with columns `(cos 2πi/n, sin 2πi/n, 1)`, vertices of a regular polygon.
pub fn polygon_point(n: usize, prec: u32) -> PosMatrix {
    let rows = (0..3)
        .map(|r| {
            (1..=n)
                .map(|i| {
                    let angle = Interval::pi(prec).mul(&Interval::from_rational(&Rational::new((2 * i).into(), n.into()), prec));
                    ExactScalar::Interval(match r {
                        0 => angle.cos(),
                        1 => angle.sin(),
                        _ => Interval::from_i64(1, prec),
                    })
                })
                .collect()
        })
        .collect();
    PosMatrix::new(rows, MatrixKind::GrassmannPoint).expect("three rows of equal length")
}
