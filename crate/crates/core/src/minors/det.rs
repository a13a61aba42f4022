//! Determinants: fraction-free Bareiss elimination and a cofactor oracle.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactnum::{ExactScalar, Interval, NumError, QuadExt, Rational, ScalarKind};

/// Ring operations needed by elimination. `div` is only called on exact quotients
/// (integers) or in fields.
pub trait DetRing: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div_exact(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Certainly nonzero (intervals must exclude zero).
    fn is_nonzero(&self) -> bool;
    /// Certainly zero; always false for intervals that are not points.
    fn is_zero_exact(&self) -> bool;
}

impl DetRing for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div_exact(&self, o: &Self) -> Self {
        let (q, r) = self.div_rem(o);
        debug_assert!(r.is_zero(), "Bareiss division must be exact");
        q
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_nonzero(&self) -> bool {
        !self.is_zero()
    }
    fn is_zero_exact(&self) -> bool {
        self.is_zero()
    }
}

impl DetRing for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_nonzero(&self) -> bool {
        !self.is_zero()
    }
    fn is_zero_exact(&self) -> bool {
        self.is_zero()
    }
}

impl DetRing for QuadExt {
    fn zero_like(&self) -> Self {
        QuadExt::from_rational(Rational::zero(), self.d.clone())
    }
    fn one_like(&self) -> Self {
        QuadExt::from_rational(Rational::one(), self.d.clone())
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn is_nonzero(&self) -> bool {
        !self.is_zero()
    }
    fn is_zero_exact(&self) -> bool {
        self.is_zero()
    }
}

impl DetRing for Interval {
    fn zero_like(&self) -> Self {
        Interval::from_i64(0, self.prec())
    }
    fn one_like(&self) -> Self {
        Interval::from_i64(1, self.prec())
    }
    fn add(&self, o: &Self) -> Self {
        Interval::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Interval::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Interval::mul(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        Interval::div(self, o).expect("pivot certified nonzero")
    }
    fn neg(&self) -> Self {
        Interval::neg(self)
    }
    fn is_nonzero(&self) -> bool {
        !self.contains_zero()
    }
    fn is_zero_exact(&self) -> bool {
        self.lo().is_zero() && self.hi().is_zero()
    }
}

/// Determinant by fraction-free Bareiss elimination with row pivoting.
///
/// Returns `None` when no certified-nonzero pivot exists although the column is
/// not exactly zero (only possible for intervals).
pub fn bareiss<T: DetRing>(mut m: Vec<Vec<T>>) -> Option<T> {
    let r = m.len();
    if r == 0 {
        return None;
    }
    let mut prev = m[0][0].one_like();
    let mut negate = false;
    for k in 0..r {
        let piv = (k..r).find(|&i| m[i][k].is_nonzero());
        let Some(p) = piv else {
            return if (k..r).all(|i| m[i][k].is_zero_exact()) { Some(m[0][0].zero_like()) } else { None };
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..r {
            for j in k + 1..r {
                let v = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.div_exact(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[r - 1][r - 1].clone();
    Some(if negate { d.neg() } else { d })
}

/// Cofactor (Laplace) expansion along the first row; the oracle for small sizes.
pub fn cofactor<T: DetRing>(m: &[Vec<T>]) -> T {
    let r = m.len();
    if r == 1 {
        return m[0][0].clone();
    }
    let mut acc = m[0][0].zero_like();
    for j in 0..r {
        let minor: Vec<Vec<T>> = m[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect()).collect();
        let t = m[0][j].mul(&cofactor(&minor));
        acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
    }
    acc
}

/// Exact determinant of a rational matrix via denominator clearing and integer Bareiss.
pub fn det_rational(m: &[Vec<Rational>]) -> Rational {
    let mut scale = BigInt::one();
    let rows: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            row.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    let d = bareiss(rows).expect("integer pivots are exact");
    Rational::new(d, scale)
}

/// Determinant of a square ExactScalar matrix, promoting to a common kind.
pub fn det_scalar(m: &[Vec<ExactScalar>]) -> Result<ExactScalar, NumError> {
    let kind = m.iter().flatten().map(|x| x.kind()).max().unwrap_or(ScalarKind::Rational);
    match kind {
        ScalarKind::Rational => {
            let r: Vec<Vec<Rational>> = m.iter().map(|row| row.iter().map(|x| x.as_rational().unwrap().clone()).collect()).collect();
            Ok(ExactScalar::Rational(det_rational(&r)))
        }
        ScalarKind::Quad => {
            let mut d: Option<BigInt> = None;
            for x in m.iter().flatten() {
                if let Some(r) = x.radicand() {
                    match &d {
                        Some(d0) if d0 != r => return Err(NumError::MixedRadicand(d0.to_string(), r.to_string())),
                        _ => d = Some(r.clone()),
                    }
                }
            }
            let d = d.unwrap_or_else(|| BigInt::from(2));
            let q: Vec<Vec<QuadExt>> = m.iter().map(|row| row.iter().map(|x| x.to_quad(&d)).collect::<Result<_, _>>()).collect::<Result<_, _>>()?;
            let v = bareiss(q).expect("exact pivots");
            Ok(if v.is_rational() { ExactScalar::Rational(v.a) } else { ExactScalar::Quad(v) })
        }
        ScalarKind::Interval => {
            let p = m
                .iter()
                .flatten()
                .filter_map(|x| if let ExactScalar::Interval(i) = x { Some(i.prec()) } else { None })
                .min()
                .unwrap();
            let iv: Vec<Vec<Interval>> = m.iter().map(|row| row.iter().map(|x| x.to_interval(p)).collect()).collect();
            match bareiss(iv) {
                Some(v) => Ok(ExactScalar::Interval(v)),
                None => Err(NumError::PrecisionExhausted(p)),
            }
        }
    }
}

/// Sign of an integer determinant, used by total-positivity checks.
pub fn det_sign_rational(m: &[Vec<Rational>]) -> std::cmp::Ordering {
    let d = det_rational(m);
    if d.is_positive() {
        std::cmp::Ordering::Greater
    } else if d.is_negative() {
        std::cmp::Ordering::Less
    } else {
        std::cmp::Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_rational_matrix(rng: &mut ChaCha8Rng, r: usize) -> Vec<Vec<Rational>> {
        (0..r).map(|_| (0..r).map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=5))).collect()).collect()
    }

    #[test]
    fn bareiss_matches_cofactor_on_random_rationals() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for r in 1..=5 {
            for _ in 0..40 {
                let m = random_rational_matrix(&mut rng, r);
                assert_eq!(det_rational(&m), cofactor(&m), "size {r}");
                assert_eq!(bareiss(m.clone()).unwrap(), cofactor(&m));
            }
        }
    }

    #[test]
    fn singular_and_pivoting() {
        let m = vec![vec![rat(0, 1), rat(1, 1)], vec![rat(1, 1), rat(0, 1)]];
        assert_eq!(det_rational(&m), rat(-1, 1));
        let s = vec![vec![rat(1, 1), rat(2, 1)], vec![rat(2, 1), rat(4, 1)]];
        assert_eq!(det_rational(&s), rat(0, 1));
    }

    #[test]
    fn interval_determinant_encloses_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let m = random_rational_matrix(&mut rng, 4);
            let exact = det_rational(&m);
            let iv: Vec<Vec<Interval>> = m.iter().map(|row| row.iter().map(|x| Interval::from_rational(x, 128)).collect()).collect();
            if let Some(d) = bareiss(iv) {
                assert!(d.contains_rational(&exact));
            }
        }
    }

    #[test]
    fn quadratic_determinant() {
        let phi = ExactScalar::from(QuadExt::golden());
        let one = ExactScalar::one();
        // det [[φ, 1], [1, φ-1]] = φ² - φ - 1 = 0
        let m = vec![vec![phi.clone(), one.clone()], vec![one.clone(), phi.sub(&one).unwrap()]];
        let d = det_scalar(&m).unwrap();
        assert!(d.is_exact_zero());
    }
}
