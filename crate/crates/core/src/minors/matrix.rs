use num_traits::{One, Zero};
use rand::Rng;
use serde_json::{json, Value};

use super::det::{det_rational, det_scalar};
use super::subset::{k_subsets, Subset};
use super::MinorsError;
use crate::exactnum::{ExactScalar, Rational, ScalarKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    GrassmannPoint,
    RectangularTp,
}

impl MatrixKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            MatrixKind::GrassmannPoint => "grassmann_point",
            MatrixKind::RectangularTp => "rectangular_tp",
        }
    }
}

/// A `k × n` matrix of [`ExactScalar`] entries.
#[derive(Clone, Debug)]
pub struct PosMatrix {
    k: usize,
    n: usize,
    entries: Vec<ExactScalar>,
    kind: MatrixKind,
}

impl PosMatrix {
    pub fn new(rows: Vec<Vec<ExactScalar>>, kind: MatrixKind) -> Result<Self, MinorsError> {
        let k = rows.len();
        let n = rows.first().map_or(0, |r| r.len());
        if k == 0 || n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(MinorsError::DimensionMismatch("ragged or empty matrix".into()));
        }
        if kind == MatrixKind::GrassmannPoint && k > n {
            return Err(MinorsError::DimensionMismatch(format!("{k}x{n} cannot have rank {k}")));
        }
        Ok(PosMatrix { k, n, entries: rows.into_iter().flatten().collect(), kind })
    }

    pub fn from_rationals(rows: Vec<Vec<Rational>>, kind: MatrixKind) -> Result<Self, MinorsError> {
        Self::new(rows.into_iter().map(|r| r.into_iter().map(ExactScalar::Rational).collect()).collect(), kind)
    }

    /// Builds from small integer rows (handy for literals).
    pub fn from_ints(rows: &[&[i64]], kind: MatrixKind) -> Result<Self, MinorsError> {
        Self::new(rows.iter().map(|r| r.iter().map(|&x| ExactScalar::int(x)).collect()).collect(), kind)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactScalar {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<ExactScalar>> {
        self.entries.chunks(self.n).map(|c| c.to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<ExactScalar> {
        (0..self.k).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn scalar_kind(&self) -> ScalarKind {
        self.entries.iter().map(|x| x.kind()).max().unwrap_or(ScalarKind::Rational)
    }

    /// Rational entries, when every entry is rational.
    pub fn rational_rows(&self) -> Option<Vec<Vec<Rational>>> {
        self.entries.chunks(self.n).map(|c| c.iter().map(|x| x.as_rational().cloned()).collect()).collect()
    }

    /// Determinant of the submatrix on the given 0-based rows and columns.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<ExactScalar, MinorsError> {
        if rows.len() != cols.len() || rows.iter().any(|&r| r >= self.k) || cols.iter().any(|&c| c >= self.n) {
            return Err(MinorsError::DimensionMismatch("minor indices".into()));
        }
        let sub: Vec<Vec<ExactScalar>> = rows.iter().map(|&r| cols.iter().map(|&c| self.get(r, c).clone()).collect()).collect();
        Ok(det_scalar(&sub)?)
    }

    /// Plücker coordinate Δ_I: the maximal minor on columns `I`.
    pub fn plucker(&self, i: &Subset) -> Result<ExactScalar, MinorsError> {
        if i.len() != self.k || i.n() != self.n {
            return Err(MinorsError::DimensionMismatch(format!("{i} is not a {}-subset of [{}]", self.k, self.n)));
        }
        let rows: Vec<usize> = (0..self.k).collect();
        let cols: Vec<usize> = i.elems().iter().map(|e| e - 1).collect();
        self.minor(&rows, &cols)
    }

    /// Multiplies column `j` (0-based) by `s`.
    pub fn scale_column(&self, j: usize, s: &ExactScalar) -> Result<Self, MinorsError> {
        let mut m = self.clone();
        for i in 0..self.k {
            m.entries[i * self.n + j] = self.get(i, j).mul(s)?;
        }
        Ok(m)
    }

    pub fn with_kind(mut self, kind: MatrixKind) -> Self {
        self.kind = kind;
        self
    }

    /// Checks that some maximal minor is nonzero.
    pub fn check_rank(&self) -> Result<(), MinorsError> {
        for s in k_subsets(self.n, self.k) {
            if self.plucker(&s)?.is_certainly_nonzero() {
                return Ok(());
            }
        }
        Err(MinorsError::DimensionMismatch("matrix does not have full rank".into()))
    }

    /// True iff every minor of every size is positive (exact entries only).
    pub fn is_totally_positive(&self) -> Result<bool, MinorsError> {
        let rows = self.rational_rows().ok_or_else(|| MinorsError::Malformed("total positivity check needs rational entries".into()))?;
        for r in 1..=self.k.min(self.n) {
            for rs in k_subsets(self.k, r) {
                let ri: Vec<usize> = rs.elems().iter().map(|e| e - 1).collect();
                for cs in k_subsets(self.n, r) {
                    let sub: Vec<Vec<Rational>> = ri.iter().map(|&i| cs.elems().iter().map(|&c| rows[i][c - 1].clone()).collect()).collect();
                    if det_rational(&sub) <= Rational::zero() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self.rows().iter().map(|r| Value::Array(r.iter().map(|x| x.to_json()).collect())).collect();
        json!({"k": self.k, "n": self.n, "kind": self.kind.as_str(), "entries": rows})
    }

    pub fn from_json(v: &Value) -> Result<Self, MinorsError> {
        let bad = |m: &str| MinorsError::Malformed(m.to_string());
        let kind = match v.get("kind").and_then(Value::as_str).unwrap_or("grassmann_point") {
            "grassmann_point" => MatrixKind::GrassmannPoint,
            "rectangular_tp" => MatrixKind::RectangularTp,
            other => return Err(bad(&format!("unknown kind {other:?}"))),
        };
        let entries = v.get("entries").and_then(Value::as_array).ok_or_else(|| bad("missing entries"))?;
        let rows: Vec<Vec<ExactScalar>> = entries
            .iter()
            .map(|r| r.as_array().ok_or_else(|| bad("row is not an array"))?.iter().map(|x| ExactScalar::from_json(x).map_err(MinorsError::from)).collect())
            .collect::<Result<_, _>>()?;
        let m = PosMatrix::new(rows, kind)?;
        let (k, n) = (v.get("k").and_then(Value::as_u64), v.get("n").and_then(Value::as_u64));
        if k.is_some_and(|k| k as usize != m.k) || n.is_some_and(|n| n as usize != m.n) {
            return Err(MinorsError::DimensionMismatch("declared k/n disagree with entries".into()));
        }
        Ok(m)
    }
}

/// Embeds a `k × m` matrix `A` as the `k × (k+m)` matrix `[I_k | A']` where row `r`
/// (1-based) of `A'` is `(-1)^{k-r}` times row `k+1-r` of `A`.
pub fn phi_embed(a: &PosMatrix) -> PosMatrix {
    let (k, m) = (a.k, a.n);
    let mut rows = Vec::with_capacity(k);
    for r in 1..=k {
        let mut row: Vec<ExactScalar> = (1..=k).map(|c| if c == r { ExactScalar::one() } else { ExactScalar::zero() }).collect();
        let src = k + 1 - r;
        for j in 0..m {
            let x = a.get(src - 1, j).clone();
            row.push(if (k - r) % 2 == 1 { x.neg() } else { x });
        }
        rows.push(row);
    }
    PosMatrix::new(rows, MatrixKind::GrassmannPoint).expect("well-formed embedding")
}

/// The Plücker index of `φ(A)` whose coordinate equals the minor of `A` on rows `I`,
/// columns `J` (both 1-based): `([k] ∖ {k+1-i}) ∪ {j+k}`.
pub fn minor_index_map(rows: &[usize], cols: &[usize], k: usize, m: usize) -> Result<Subset, MinorsError> {
    if rows.len() != cols.len() || rows.iter().any(|&i| i == 0 || i > k) || cols.iter().any(|&j| j == 0 || j > m) {
        return Err(MinorsError::DimensionMismatch("row/column sets".into()));
    }
    let mut s = Subset::interval(k + m, 1, k);
    if k == 0 {
        s = Subset::from_mask(k + m, 0);
    }
    for &i in rows {
        s = s.without(k + 1 - i);
    }
    for &j in cols {
        s = s.with(j + k);
    }
    Ok(s)
}

/// `[v1 … vn] ↦ [(-1)^{k-1} vn, v1, …, v_{n-1}]`; Δ_{I+1}(image) = Δ_I(source).
pub fn cyclic_shift(mtx: &PosMatrix) -> PosMatrix {
    let (k, n) = (mtx.k, mtx.n);
    let mut rows = mtx.rows();
    for row in rows.iter_mut() {
        let last = row.pop().unwrap();
        row.insert(0, if (k - 1) % 2 == 1 { last.neg() } else { last });
    }
    PosMatrix { k, n, entries: rows.into_iter().flatten().collect(), kind: mtx.kind }
}

/// Random totally positive `rows × cols` rational matrix, as a submatrix of a product
/// of elementary bidiagonal factors with parameters in (0, 10].
pub fn random_tp_matrix<R: Rng>(rows: usize, cols: usize, rng: &mut R) -> PosMatrix {
    let n = rows.max(cols);
    let mut param = || Rational::new(rng.gen_range(1..=100).into(), 10.into());
    let ident = |n: usize| -> Vec<Vec<Rational>> { (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect() };
    let mut acc = ident(n);
    // reduced word (1)(2 1)(3 2 1)… of the longest permutation
    let word: Vec<usize> = (1..n).flat_map(|j| (1..=j).rev()).collect();
    let mul = |a: &Vec<Vec<Rational>>, b: &Vec<Vec<Rational>>| -> Vec<Vec<Rational>> {
        (0..n).map(|i| (0..n).map(|j| (0..n).fold(Rational::zero(), |s, t| s + &a[i][t] * &b[t][j])).collect()).collect()
    };
    for &i in &word {
        let mut l = ident(n);
        l[i][i - 1] = param();
        acc = mul(&acc, &l);
    }
    let mut d = ident(n);
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = param();
    }
    acc = mul(&acc, &d);
    for &i in word.iter().rev() {
        let mut u = ident(n);
        u[i - 1][i] = param();
        acc = mul(&acc, &u);
    }
    let sub: Vec<Vec<Rational>> = acc[..rows].iter().map(|r| r[..cols].to_vec()).collect();
    PosMatrix::from_rationals(sub, MatrixKind::RectangularTp).unwrap()
}

/// A random point of Gr⁺(k, n) as `φ(A)` for a random totally positive `A`.
pub fn random_positive_point<R: Rng>(k: usize, n: usize, rng: &mut R) -> PosMatrix {
    phi_embed(&random_tp_matrix(k, n - k, rng))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat_int;
    use crate::minors::det::cofactor;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn plucker_of_first_triangulation_matrix() {
        let m = PosMatrix::from_ints(&[&[1, 1, 0], &[0, 1, 1]], MatrixKind::GrassmannPoint).unwrap();
        let v = m.plucker(&Subset::of(3, &[1, 3])).unwrap();
        assert_eq!(v.as_rational().unwrap(), &rat_int(1));
        assert!(m.plucker(&Subset::of(3, &[1])).is_err());
    }

    #[test]
    fn phi_embedding_examples() {
        let a = PosMatrix::from_ints(&[&[5], &[7]], MatrixKind::RectangularTp).unwrap();
        let p = phi_embed(&a);
        let want = [[1, 0, -7], [0, 1, 5]];
        for i in 0..2 {
            for j in 0..3 {
                assert_eq!(p.get(i, j).as_rational().unwrap(), &rat_int(want[i][j]));
            }
        }
        assert_eq!(p.plucker(&Subset::of(3, &[1, 3])).unwrap().as_rational().unwrap(), &rat_int(5));
        let ones = PosMatrix::from_ints(&[&[1, 1], &[1, 1]], MatrixKind::RectangularTp).unwrap();
        assert!(phi_embed(&ones).plucker(&Subset::of(4, &[3, 4])).unwrap().is_exact_zero());
        let row = PosMatrix::from_ints(&[&[2, 3, 4]], MatrixKind::RectangularTp).unwrap();
        assert_eq!(phi_embed(&row).rows()[0].iter().map(|x| x.to_string()).collect::<Vec<_>>(), vec!["1", "2", "3", "4"]);
    }

    #[test]
    fn minor_index_map_examples() {
        assert_eq!(minor_index_map(&[1], &[1], 2, 3).unwrap(), Subset::of(5, &[1, 3]));
        assert_eq!(minor_index_map(&[1, 2, 3], &[1, 2, 3], 3, 3).unwrap(), Subset::of(6, &[4, 5, 6]));
    }

    #[test]
    fn all_minors_appear_in_embedding() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (k, m) in [(2, 3), (3, 3), (3, 4)] {
            let a = random_tp_matrix(k, m, &mut rng);
            let p = phi_embed(&a);
            for r in 1..=k.min(m) {
                for rs in k_subsets(k, r) {
                    for cs in k_subsets(m, r) {
                        let rows: Vec<usize> = rs.elems().iter().map(|e| e - 1).collect();
                        let cols: Vec<usize> = cs.elems().iter().map(|e| e - 1).collect();
                        let direct = a.minor(&rows, &cols).unwrap();
                        let idx = minor_index_map(&rs.elems(), &cs.elems(), k, m).unwrap();
                        let via = p.plucker(&idx).unwrap();
                        assert_eq!(direct.as_rational(), via.as_rational(), "k={k} rows={rs} cols={cs}");
                    }
                }
            }
        }
    }

    #[test]
    fn random_tp_is_totally_positive() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for (r, c) in [(2, 4), (3, 3), (4, 4), (3, 5)] {
            let a = random_tp_matrix(r, c, &mut rng);
            assert!(a.is_totally_positive().unwrap());
            // cofactor oracle on the 3×3 minors
            if r >= 3 && c >= 3 {
                let rows = a.rational_rows().unwrap();
                let sub: Vec<Vec<Rational>> = rows[..3].iter().map(|x| x[..3].to_vec()).collect();
                assert_eq!(a.minor(&[0, 1, 2], &[0, 1, 2]).unwrap().as_rational().unwrap(), &cofactor(&sub));
            }
        }
    }

    #[test]
    fn cyclic_shift_rotates_minors() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for (k, n) in [(2, 3), (2, 5), (3, 6), (4, 8)] {
            let p = random_positive_point(k, n, &mut rng);
            let q = cyclic_shift(&p);
            for s in k_subsets(n, k) {
                assert_eq!(q.plucker(&s.rotate(1)).unwrap().as_rational(), p.plucker(&s).unwrap().as_rational());
            }
            let mut r = p.clone();
            for _ in 0..n {
                r = cyclic_shift(&r);
            }
            let sign = if (k - 1) % 2 == 1 { -1 } else { 1 };
            for i in 0..k {
                for j in 0..n {
                    assert_eq!(r.get(i, j).as_rational().unwrap(), &(p.get(i, j).as_rational().unwrap() * rat_int(sign)));
                }
            }
        }
        // the k = 2 instance: Δ_{23}(image) = Δ_{12}(source) and Δ_{12}(image) = Δ_{13}(source)
        let m = PosMatrix::from_ints(&[&[1, 2, 3], &[0, 1, 4]], MatrixKind::GrassmannPoint).unwrap();
        let s = cyclic_shift(&m);
        assert_eq!(s.plucker(&Subset::of(3, &[2, 3])).unwrap().as_rational(), m.plucker(&Subset::of(3, &[1, 2])).unwrap().as_rational());
        assert_eq!(s.plucker(&Subset::of(3, &[1, 2])).unwrap().as_rational(), m.plucker(&Subset::of(3, &[1, 3])).unwrap().as_rational());
    }

    #[test]
    fn json_round_trip() {
        let m = PosMatrix::from_ints(&[&[1, 1, 0], &[0, 1, 1]], MatrixKind::GrassmannPoint).unwrap();
        let back = PosMatrix::from_json(&m.to_json()).unwrap();
        assert_eq!(back.to_json(), m.to_json());
        assert!(PosMatrix::from_json(&json!({"entries": [[1, 2], [3]]})).is_err());
    }
}
