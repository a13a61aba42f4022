use num_bigint::BigInt;
use num_traits::One;

use super::ConstructError;
use crate::exactnum::{rat, rat_int, CertifiedOrd, ExactScalar, QuadExt, Rational};
use crate::minors::{extract_arrangement, ArrangementMode, MatrixKind, MinorTable, PosMatrix, Subset};

pub const PAPER_MATRIX_NAMES: [&str; 4] = ["k4_n8", "k5a_n10", "k5b_n10", "triangulation_examples"];

/// Radicand of the quadratic entries in `k5a_n10`.
pub const K5A_RADICAND: u64 = 8_665_656_785_065;

#[derive(Clone, Debug)]
pub struct PaperMatrix {
    pub name: String,
    pub matrix: PosMatrix,
    /// Minors claimed to share the minimal value 1.
    pub claimed_equal_class: Vec<Subset>,
    /// Whether the claimed set is the whole smallest class or only part of it.
    pub claim_is_exact: bool,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub name: String,
    pub minors: usize,
    pub min_value: ExactScalar,
    pub smallest_class: Vec<Subset>,
    pub claimed_equal_class: Vec<Subset>,
    pub claim_holds: bool,
    pub all_at_least_one: bool,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.claim_holds && self.all_at_least_one
    }

    pub fn to_json(&self) -> serde_json::Value {
        let names = |c: &[Subset]| c.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        serde_json::json!({
            "name": self.name,
            "minors": self.minors,
            "min_value": self.min_value.to_json(),
            "smallest_class": names(&self.smallest_class),
            "claimed_equal_class": names(&self.claimed_equal_class),
            "claim_holds": self.claim_holds,
            "all_at_least_one": self.all_at_least_one,
            "passed": self.passed(),
        })
    }
}

fn r(rows: &[&[Rational]]) -> PosMatrix {
    PosMatrix::from_rationals(rows.iter().map(|r| r.to_vec()).collect(), MatrixKind::GrassmannPoint).expect("registry matrix")
}

fn ints(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| rat_int(x)).collect()
}

fn pair(n: usize, a: &[usize], b: &[usize]) -> Vec<Subset> {
    vec![Subset::of(n, a), Subset::of(n, b)]
}

fn k4_n8() -> PaperMatrix {
    let m = r(&[
        &[rat_int(1), rat_int(0), rat_int(0), rat_int(0), rat_int(-1), rat_int(-7), rat(-37, 2), rat_int(-13)],
        &[rat_int(0), rat_int(1), rat_int(0), rat_int(0), rat(3, 2), rat(19, 2), rat(95, 4), rat(33, 2)],
        &[rat_int(0), rat_int(0), rat_int(1), rat_int(0), rat(-5, 2), rat(-27, 2), rat(-125, 4), rat(-43, 2)],
        &[rat_int(0), rat_int(0), rat_int(0), rat_int(1), rat_int(1), rat_int(1), rat(3, 2), rat_int(1)],
    ]);
    PaperMatrix { name: "k4_n8".into(), matrix: m, claimed_equal_class: pair(8, &[1, 2, 3, 6], &[4, 5, 7, 8]), claim_is_exact: false }
}

fn k5a_n10() -> PaperMatrix {
    let d = BigInt::from(K5A_RADICAND);
    // c + s·Q with Q = −2955617 + √D
    let q = |c: Rational, s: Rational| {
        let a = c + &s * rat_int(-2_955_617);
        ExactScalar::Quad(QuadExt::new(a, s, d.clone()).expect("square-free radicand"))
    };
    let z = |xs: &[i64]| xs.iter().map(|&x| ExactScalar::Rational(rat_int(x))).collect::<Vec<_>>();
    let mut rows = vec![z(&[1, 0, 0, 0, 0, 1, 6, 53]), z(&[0, 1, 0, 0, 0, -1, -5, -36, -32768, -79343])];
    rows[0].push(q(rat_int(98311), rat(1, 124)));
    rows[0].push(ExactScalar::Rational(rat_int(237_904)));
    let mut r3 = z(&[0, 0, 1, 0, 0, 1, 4, 20]);
    r3.push(q(rat_int(0), rat(-1, 372)));
    r3.push(q(rat_int(-19), rat(-1, 186)));
    rows.push(r3);
    rows.push(z(&[0, 0, 0, 1, 0, -1, -3, -5, -6, -7]));
    rows.push(z(&[0, 0, 0, 0, 1, 1, 1, 1, 1, 1]));
    let m = PosMatrix::new(rows, MatrixKind::GrassmannPoint).expect("registry matrix");
    PaperMatrix { name: "k5a_n10".into(), matrix: m, claimed_equal_class: pair(10, &[1, 2, 3, 4, 7], &[5, 6, 8, 9, 10]), claim_is_exact: false }
}

fn k5b_n10() -> PaperMatrix {
    let mut r1 = ints(&[0, 1, 0, 0, 0, -1, -4, -17, -128]);
    r1.push(rat(-4869, 32));
    let mut r2 = ints(&[0, 0, 1, 0, 0, 1, 3, 10, 43]);
    r2.push(rat(123_761, 2480));
    let m = r(&[
        &ints(&[1, 0, 0, 0, 0, 1, 5, 25, 265, 318]),
        &r1,
        &r2,
        &ints(&[0, 0, 0, 1, 0, -1, -2, -4, -9, -10]),
        &ints(&[0, 0, 0, 0, 1, 1, 1, 1, 1, 1]),
    ]);
    PaperMatrix { name: "k5b_n10".into(), matrix: m, claimed_equal_class: pair(10, &[1, 2, 3, 4, 8], &[5, 6, 7, 9, 10]), claim_is_exact: false }
}

/// The `2 × n` matrices built from triangulations with unit edge weights; the claimed class is
/// the full edge set of the triangulation.
fn triangulation_examples() -> Vec<PaperMatrix> {
    let data: [(usize, &[(usize, usize)], [&[i64]; 2]); 6] = [
        (3, &[], [&[1, 1, 0], &[0, 1, 1]]),
        (4, &[(2, 4)], [&[1, 1, 1, 0], &[0, 1, 2, 1]]),
        (5, &[(1, 3), (1, 4)], [&[1, 3, 2, 1, 0], &[0, 1, 1, 1, 1]]),
        (6, &[(1, 3), (1, 4), (1, 5)], [&[1, 4, 3, 2, 1, 0], &[0, 1, 1, 1, 1, 1]]),
        (6, &[(1, 3), (1, 5), (3, 5)], [&[1, 3, 2, 3, 1, 0], &[0, 1, 1, 2, 1, 1]]),
        (6, &[(2, 6), (3, 5), (3, 6)], [&[1, 1, 1, 2, 1, 0], &[0, 1, 2, 5, 3, 1]]),
    ];
    data.iter()
        .enumerate()
        .map(|(i, (n, diag, rows))| {
            let mut class: Vec<Subset> = (1..=*n).map(|a| Subset::of(*n, &[a, a % n + 1])).collect();
            class.extend(diag.iter().map(|&(a, b)| Subset::of(*n, &[a, b])));
            class.sort();
            PaperMatrix {
                name: format!("triangulation_examples[{i}]"),
                matrix: PosMatrix::from_ints(&rows[..], MatrixKind::GrassmannPoint).expect("registry matrix"),
                claimed_equal_class: class,
                claim_is_exact: true,
            }
        })
        .collect()
}

/// The registry entry `name`; `triangulation_examples` holds six matrices, the rest one each.
pub fn paper_matrix(name: &str) -> Result<Vec<PaperMatrix>, ConstructError> {
    Ok(match name {
        "k4_n8" => vec![k4_n8()],
        "k5a_n10" => vec![k5a_n10()],
        "k5b_n10" => vec![k5b_n10()],
        "triangulation_examples" => triangulation_examples(),
        _ => return Err(ConstructError::UnknownName(name.to_string())),
    })
}

fn verify_one(p: &PaperMatrix) -> Result<VerifyReport, ConstructError> {
    let table = MinorTable::compute(&p.matrix)?;
    let one = ExactScalar::Rational(Rational::one());
    let mut all_at_least_one = true;
    for v in table.values.values() {
        match v.certified_cmp(&one)? {
            CertifiedOrd::Less | CertifiedOrd::Undecided => all_at_least_one = false,
            _ => {}
        }
    }
    let arr = extract_arrangement(&table, ArrangementMode::Smallest)?;
    let mut smallest = arr.smallest().to_vec();
    smallest.sort();
    let min_value = arr.values.first().cloned().unwrap_or_else(ExactScalar::zero);
    let min_is_one = min_value.certified_cmp(&one)? == CertifiedOrd::Equal;
    let contained = p.claimed_equal_class.iter().all(|s| smallest.contains(s));
    let claim_holds = min_is_one && arr.zeros.is_empty() && contained && (!p.claim_is_exact || smallest == p.claimed_equal_class);
    Ok(VerifyReport {
        name: p.name.clone(),
        minors: table.len(),
        min_value,
        smallest_class: smallest,
        claimed_equal_class: p.claimed_equal_class.clone(),
        claim_holds,
        all_at_least_one,
    })
}

/// Computes every maximal minor exactly and checks the claimed class sits at the minimum 1.
pub fn verify_paper_matrix(name: &str) -> Result<Vec<VerifyReport>, ConstructError> {
    paper_matrix(name)?.iter().map(verify_one).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ScalarKind;

    #[test]
    fn registry_verifies() {
        for name in PAPER_MATRIX_NAMES {
            for rep in verify_paper_matrix(name).unwrap() {
                assert!(rep.passed(), "{}: {:?}", rep.name, rep.smallest_class);
            }
        }
        assert_eq!(verify_paper_matrix("triangulation_examples").unwrap().len(), 6);
        assert!(matches!(paper_matrix("k6"), Err(ConstructError::UnknownName(_))));
    }

    #[test]
    fn k4_class() {
        let rep = &verify_paper_matrix("k4_n8").unwrap()[0];
        assert_eq!(rep.minors, 70);
        let mut want: Vec<Subset> = ["1234", "1235", "1236", "1238", "1278", "1378", "1678", "2345", "2378", "3456", "3678", "4567", "4568", "5678", "4578"]
            .iter()
            .map(|s| Subset::of(8, &s.bytes().map(|b| (b - b'0') as usize).collect::<Vec<_>>()))
            .collect();
        want.sort();
        assert_eq!(rep.smallest_class, want);
    }

    #[test]
    fn k5a_is_quadratic() {
        let p = &paper_matrix("k5a_n10").unwrap()[0];
        assert_eq!(p.matrix.scalar_kind(), ScalarKind::Quad);
        let i = Subset::of(10, &[1, 2, 3, 4, 7]);
        let j = Subset::of(10, &[5, 6, 8, 9, 10]);
        for s in [i, j] {
            let v = p.matrix.plucker(&s).unwrap();
            assert_eq!(v.certified_cmp(&ExactScalar::one()).unwrap(), CertifiedOrd::Equal);
        }
    }

    #[test]
    fn triangulation_examples_match_construction() {
        use crate::combin::Graph2;
        use crate::construct::triangulation_matrix;
        for p in paper_matrix("triangulation_examples").unwrap() {
            let n = p.matrix.n();
            let edges: Vec<(usize, usize)> = p.claimed_equal_class.iter().map(|s| (s.elems()[0], s.elems()[1])).collect();
            let g = Graph2::new(n, edges);
            let built = triangulation_matrix(&g, |_, _| rat_int(1)).unwrap();
            assert_eq!(built.rational_rows(), p.matrix.rational_rows(), "{}", p.name);
        }
    }
}
