use num_traits::{One, Zero};

use super::ConstructError;
use crate::combin::{complete_to_triangulation, Graph2};
use crate::exactnum::Rational;
use crate::minors::{extract_arrangement, ArrangementMode, MatrixKind, MinorTable, PosMatrix, Subset};

/// Which ear to peel first when several are available.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EarOrder {
    Lowest,
    Highest,
}

/// The `2 × n` matrix with `Δ_ij = x_ij` on the edges of the triangulation `t`,
/// normalised by `a_11 = 1`, `a_21 = a_1n = 0`.
pub fn triangulation_matrix(t: &Graph2, x: impl Fn(usize, usize) -> Rational) -> Result<PosMatrix, ConstructError> {
    triangulation_matrix_with(t, x, EarOrder::Lowest)
}

pub fn triangulation_matrix_with(t: &Graph2, x: impl Fn(usize, usize) -> Rational, order: EarOrder) -> Result<PosMatrix, ConstructError> {
    if !t.is_triangulation() {
        return Err(ConstructError::NotATriangulation);
    }
    let n = t.n;
    let w = |a: usize, b: usize| -> Result<Rational, ConstructError> {
        let v = x(a.min(b), a.max(b));
        if v <= Rational::zero() {
            return Err(ConstructError::InvalidArgument(format!("edge weight on {{{a},{b}}} must be positive")));
        }
        Ok(v)
    };
    let mut poly: Vec<usize> = (1..=n).collect();
    let mut peeled = Vec::new();
    while poly.len() > 2 {
        let ears = (1..poly.len() - 1).filter(|&p| t.contains(poly[p - 1], poly[p + 1]));
        let p = match order {
            EarOrder::Lowest => ears.min(),
            EarOrder::Highest => ears.max(),
        }
        .ok_or(ConstructError::NotATriangulation)?;
        peeled.push((poly[p - 1], poly[p], poly[p + 1]));
        poly.remove(p);
    }
    let mut cols = vec![(Rational::zero(), Rational::zero()); n + 1];
    cols[1] = (Rational::one(), Rational::zero());
    cols[n] = (Rational::zero(), w(1, n)?);
    for &(u, v, z) in peeled.iter().rev() {
        let base = w(u, z)?;
        let alpha = w(v, z)? / &base;
        let beta = w(u, v)? / &base;
        cols[v] = (&alpha * &cols[u].0 + &beta * &cols[z].0, &alpha * &cols[u].1 + &beta * &cols[z].1);
    }
    let rows = vec![cols[1..].iter().map(|c| c.0.clone()).collect(), cols[1..].iter().map(|c| c.1.clone()).collect()];
    Ok(PosMatrix::from_rationals(rows, MatrixKind::GrassmannPoint)?)
}

/// A `2 × n` point whose smallest minors are exactly the edges of the non-crossing graph `g`:
/// weight 1 on `g`, `1 + ε` on the remaining edges of a triangulation containing it.
pub fn smallest_arrangement_2xn(g: &Graph2, eps: &Rational) -> Result<PosMatrix, ConstructError> {
    if g.is_empty() {
        return Err(ConstructError::InvalidArgument("graph has no edges".into()));
    }
    if *eps <= Rational::zero() || *eps > Rational::new(1.into(), 100.into()) {
        return Err(ConstructError::InvalidArgument("ε must lie in (0, 1/100]".into()));
    }
    let t = complete_to_triangulation(g).ok_or(ConstructError::NotNonCrossing)?;
    let bumped = Rational::one() + eps;
    let m = triangulation_matrix(&t, |a, b| if g.contains(a, b) { Rational::one() } else { bumped.clone() })?;
    let arr = extract_arrangement(&MinorTable::compute(&m)?, ArrangementMode::Smallest)?;
    let mut want = g.subsets();
    want.sort();
    let mut got: Vec<Subset> = arr.smallest().to_vec();
    got.sort();
    if got != want {
        return Err(ConstructError::VerificationFailed("smallest class differs from the graph".into()));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::enumerate_triangulations;
    use crate::exactnum::rat;

    fn ones(_: usize, _: usize) -> Rational {
        Rational::one()
    }

    fn tri(n: usize, diagonals: &[(usize, usize)]) -> Graph2 {
        let mut g = Graph2::boundary(n);
        g.edges.extend(diagonals.iter().copied());
        g
    }

    #[test]
    fn printed_examples() {
        let cases: [(Graph2, &[&[i64]]); 6] = [
            (tri(3, &[]), &[&[1, 1, 0], &[0, 1, 1]]),
            (tri(4, &[(2, 4)]), &[&[1, 1, 1, 0], &[0, 1, 2, 1]]),
            (tri(5, &[(1, 3), (1, 4)]), &[&[1, 3, 2, 1, 0], &[0, 1, 1, 1, 1]]),
            (tri(6, &[(1, 3), (1, 4), (1, 5)]), &[&[1, 4, 3, 2, 1, 0], &[0, 1, 1, 1, 1, 1]]),
            (tri(6, &[(1, 3), (1, 5), (3, 5)]), &[&[1, 3, 2, 3, 1, 0], &[0, 1, 1, 2, 1, 1]]),
            (tri(6, &[(2, 6), (3, 5), (3, 6)]), &[&[1, 1, 1, 2, 1, 0], &[0, 1, 2, 5, 3, 1]]),
        ];
        for (g, rows) in cases {
            let m = triangulation_matrix(&g, ones).unwrap();
            let want = PosMatrix::from_ints(rows, MatrixKind::GrassmannPoint).unwrap();
            assert_eq!(m.rational_rows(), want.rational_rows(), "{:?}", g.edges);
        }
    }

    #[test]
    fn ear_order_and_positivity() {
        for n in 3..=8 {
            for t in enumerate_triangulations(n) {
                let a = triangulation_matrix_with(&t, ones, EarOrder::Lowest).unwrap();
                let b = triangulation_matrix_with(&t, ones, EarOrder::Highest).unwrap();
                assert_eq!(a.rational_rows(), b.rational_rows());
                let table = MinorTable::compute(&a).unwrap();
                for (s, v) in &table.values {
                    let e = s.elems();
                    let v = v.as_rational().unwrap();
                    if t.contains(e[0], e[1]) {
                        assert!(v.is_one());
                    } else {
                        assert!(*v >= rat(2, 1), "n={n} {s} = {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn edge_weights_are_realized() {
        let t = tri(6, &[(2, 6), (3, 5), (3, 6)]);
        let x = |a: usize, b: usize| rat((a * 7 + b) as i64, (b + 2) as i64);
        let m = triangulation_matrix(&t, x).unwrap();
        for &(a, b) in &t.edges {
            assert_eq!(m.plucker(&Subset::of(6, &[a, b])).unwrap().as_rational().unwrap(), &x(a, b));
        }
        let a = m.rational_rows().unwrap();
        assert!(a[0][0].is_one() && a[1][0].is_zero() && a[0][5].is_zero());
    }

    #[test]
    fn smallest_arrangements() {
        let eps = rat(1, 100);
        let m = smallest_arrangement_2xn(&Graph2::new(4, [(1, 2)]), &eps).unwrap();
        assert_eq!(m.n(), 4);
        assert!(smallest_arrangement_2xn(&Graph2::boundary(5), &eps).is_ok());
        let fig = tri(6, &[(1, 3), (1, 4), (1, 5)]);
        let m = smallest_arrangement_2xn(&fig, &eps).unwrap();
        let arr = extract_arrangement(&MinorTable::compute(&m).unwrap(), ArrangementMode::Smallest).unwrap();
        assert_eq!(arr.smallest().len(), 9);
        assert!(matches!(smallest_arrangement_2xn(&Graph2::new(4, [(1, 3), (2, 4)]), &eps), Err(ConstructError::NotNonCrossing)));
        assert!(triangulation_matrix(&Graph2::boundary(4), ones).is_err());
    }
}
