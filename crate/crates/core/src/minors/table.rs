use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::{json, Map, Value};

use super::matrix::PosMatrix;
use super::subset::{k_subsets, Subset};
use super::MinorsError;
use crate::exactnum::{CertifiedOrd, ExactScalar};

/// All maximal minors of a matrix, keyed by column subset.
#[derive(Clone, Debug)]
pub struct MinorTable {
    pub n: usize,
    pub k: usize,
    pub values: BTreeMap<Subset, ExactScalar>,
}

impl MinorTable {
    pub fn compute(m: &PosMatrix) -> Result<Self, MinorsError> {
        let subs: Vec<Subset> = k_subsets(m.n(), m.k()).collect();
        let vals: Vec<ExactScalar> = subs.par_iter().map(|s| m.plucker(s)).collect::<Result<_, _>>()?;
        Ok(MinorTable { n: m.n(), k: m.k(), values: subs.into_iter().zip(vals).collect() })
    }

    pub fn get(&self, s: &Subset) -> Option<&ExactScalar> {
        self.values.get(s)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Positivity of every entry; `None` if some interval still straddles zero.
    pub fn all_positive(&self) -> Option<bool> {
        let mut ok = true;
        for v in self.values.values() {
            match v.signum() {
                Some(std::cmp::Ordering::Greater) => {}
                Some(_) => ok = false,
                None => return None,
            }
        }
        Some(ok)
    }

    /// Same table with subsets relabelled by `i ↦ i + s mod n`.
    pub fn rotated(&self, s: usize) -> Self {
        MinorTable { n: self.n, k: self.k, values: self.values.iter().map(|(k, v)| (k.rotate(s), v.clone())).collect() }
    }

    pub fn to_json(&self) -> Value {
        let mut vals = Map::new();
        for (s, v) in &self.values {
            vals.insert(s.to_string(), v.to_json());
        }
        json!({"n": self.n, "k": self.k, "values": Value::Object(vals)})
    }

    pub fn from_json(v: &Value) -> Result<Self, MinorsError> {
        let bad = |m: &str| MinorsError::Malformed(m.to_string());
        let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| bad("missing n"))? as usize;
        let k = v.get("k").and_then(Value::as_u64).ok_or_else(|| bad("missing k"))? as usize;
        let obj = v.get("values").and_then(Value::as_object).ok_or_else(|| bad("missing values"))?;
        let mut values = BTreeMap::new();
        for (key, val) in obj {
            let s = Subset::parse(key, n)?;
            if s.len() != k {
                return Err(MinorsError::DimensionMismatch(format!("{s} is not a {k}-subset")));
            }
            values.insert(s, ExactScalar::from_json(val)?);
        }
        Ok(MinorTable { n, k, values })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArrangementMode {
    Smallest,
    Largest,
    Full,
}

impl std::str::FromStr for ArrangementMode {
    type Err = MinorsError;
    fn from_str(s: &str) -> Result<Self, MinorsError> {
        match s {
            "smallest" => Ok(ArrangementMode::Smallest),
            "largest" => Ok(ArrangementMode::Largest),
            "full" => Ok(ArrangementMode::Full),
            _ => Err(MinorsError::Malformed(format!("unknown mode {s:?}"))),
        }
    }
}

/// Ordered set partition: `zeros`, then value classes in increasing order.
///
/// In `Smallest` / `Largest` mode `classes` holds just the one extreme class.
#[derive(Clone, Debug)]
pub struct Arrangement {
    pub mode: ArrangementMode,
    pub zeros: Vec<Subset>,
    pub classes: Vec<Vec<Subset>>,
    pub values: Vec<ExactScalar>,
}

impl Arrangement {
    pub fn smallest(&self) -> &[Subset] {
        self.classes.first().map_or(&[], |c| c.as_slice())
    }

    pub fn largest(&self) -> &[Subset] {
        self.classes.last().map_or(&[], |c| c.as_slice())
    }

    pub fn to_json(&self) -> Value {
        let cls = |c: &[Subset]| Value::Array(c.iter().map(|s| Value::String(s.to_string())).collect());
        json!({
            "zeros": cls(&self.zeros),
            "classes": self.classes.iter().map(|c| cls(c)).collect::<Vec<_>>(),
            "values": self.values.iter().map(|v| v.to_json()).collect::<Vec<_>>(),
        })
    }
}

fn cmp(a: &ExactScalar, b: &ExactScalar) -> CertifiedOrd {
    a.certified_cmp(b).unwrap_or(CertifiedOrd::Undecided)
}

/// Groups minors into equal-value classes. Interval values count as equal only
/// when they overlap and are narrow; strict order needs disjoint enclosures.
pub fn extract_arrangement(t: &MinorTable, mode: ArrangementMode) -> Result<Arrangement, MinorsError> {
    let zero = ExactScalar::zero();
    let mut zeros = Vec::new();
    let mut rest: Vec<(Subset, ExactScalar)> = Vec::new();
    let mut undecided = Vec::new();
    for (s, v) in &t.values {
        match cmp(v, &zero) {
            CertifiedOrd::Equal => zeros.push(*s),
            CertifiedOrd::Undecided => undecided.push((*s, *s)),
            _ => rest.push((*s, v.clone())),
        }
    }
    if !undecided.is_empty() {
        return Err(MinorsError::Undecided(undecided));
    }
    rest.sort_by(|a, b| a.1.to_f64().partial_cmp(&b.1.to_f64()).unwrap_or(std::cmp::Ordering::Equal).then(a.0.cmp(&b.0)));
    if mode == ArrangementMode::Largest {
        rest.reverse();
    }

    let mut classes: Vec<Vec<(Subset, ExactScalar)>> = Vec::new();
    let extreme_only = mode != ArrangementMode::Full;
    if extreme_only {
        if let Some((s0, v0)) = rest.first().cloned() {
            let mut class = vec![(s0, v0.clone())];
            for (s, v) in &rest[1..] {
                match cmp(v, &v0) {
                    CertifiedOrd::Equal => class.push((*s, v.clone())),
                    CertifiedOrd::Undecided => undecided.push((s0, *s)),
                    CertifiedOrd::Greater if mode == ArrangementMode::Smallest => {}
                    CertifiedOrd::Less if mode == ArrangementMode::Largest => {}
                    _ => undecided.push((s0, *s)),
                }
            }
            // strictness of every outsider against every member
            for (s, v) in &rest[1..] {
                if class.iter().any(|(c, _)| c == s) {
                    continue;
                }
                for (c, cv) in &class[1..] {
                    let ok = match mode {
                        ArrangementMode::Smallest => cmp(v, cv) == CertifiedOrd::Greater,
                        _ => cmp(v, cv) == CertifiedOrd::Less,
                    };
                    if !ok {
                        undecided.push((*c, *s));
                    }
                }
            }
            classes.push(class);
        }
    } else {
        for (s, v) in rest {
            match classes.last_mut() {
                Some(cl) if cmp(&v, &cl[0].1) == CertifiedOrd::Equal => cl.push((s, v)),
                _ => classes.push(vec![(s, v)]),
            }
        }
        for w in classes.windows(2) {
            for (a, av) in &w[0] {
                for (b, bv) in &w[1] {
                    if cmp(av, bv) != CertifiedOrd::Less {
                        undecided.push((*a, *b));
                    }
                }
            }
        }
    }
    if !undecided.is_empty() {
        return Err(MinorsError::Undecided(undecided));
    }
    let values = classes.iter().map(|c| c[0].1.clone()).collect();
    let mut classes: Vec<Vec<Subset>> = classes.into_iter().map(|c| {
        let mut v: Vec<Subset> = c.into_iter().map(|x| x.0).collect();
        v.sort();
        v
    }).collect();
    if mode == ArrangementMode::Largest {
        classes.reverse();
    }
    Ok(Arrangement { mode, zeros, classes, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{Interval, QuadExt};
    use crate::minors::matrix::{random_positive_point, MatrixKind};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_point_has_no_zero_class() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let p = random_positive_point(3, 6, &mut rng);
        let t = MinorTable::compute(&p).unwrap();
        assert_eq!(t.len(), 20);
        assert_eq!(t.all_positive(), Some(true));
        let a = extract_arrangement(&t, ArrangementMode::Full).unwrap();
        assert!(a.zeros.is_empty());
        assert_eq!(a.classes.iter().map(Vec::len).sum::<usize>(), 20);
    }

    #[test]
    fn smallest_and_largest_classes() {
        let m = PosMatrix::from_ints(&[&[1, 1, 0], &[0, 1, 1]], MatrixKind::GrassmannPoint).unwrap();
        let t = MinorTable::compute(&m).unwrap();
        let a = extract_arrangement(&t, ArrangementMode::Smallest).unwrap();
        assert_eq!(a.smallest().len(), 3);
        let m = PosMatrix::from_ints(&[&[1, 1, 0, -1], &[0, 1, 1, 1]], MatrixKind::GrassmannPoint).unwrap();
        let t = MinorTable::compute(&m).unwrap();
        let a = extract_arrangement(&t, ArrangementMode::Largest).unwrap();
        assert_eq!(a.largest(), &[Subset::of(4, &[2, 4])]);
        let full = extract_arrangement(&t, ArrangementMode::Full).unwrap();
        assert_eq!(full.largest(), a.largest());
        assert_eq!(full.smallest().len(), 5);
    }

    #[test]
    fn interval_ties_and_undecided() {
        let n = 3;
        let phi = QuadExt::golden();
        let mk = |v: Vec<ExactScalar>| MinorTable { n, k: 1, values: (1..=n).map(|i| Subset::of(n, &[i])).zip(v).collect() };
        let t = mk(vec![ExactScalar::from(phi.clone()), ExactScalar::from(Interval::from_quad(&phi, 512)), ExactScalar::int(5)]);
        let a = extract_arrangement(&t, ArrangementMode::Smallest).unwrap();
        assert_eq!(a.smallest().len(), 2);
        let t = mk(vec![ExactScalar::from(phi.clone()), ExactScalar::from(Interval::from_quad(&phi, 64)), ExactScalar::int(5)]);
        assert!(matches!(extract_arrangement(&t, ArrangementMode::Smallest), Err(MinorsError::Undecided(_))));
    }

    #[test]
    fn json_round_trip() {
        let m = PosMatrix::from_ints(&[&[1, 1, 0], &[0, 1, 1]], MatrixKind::GrassmannPoint).unwrap();
        let t = MinorTable::compute(&m).unwrap();
        let j = t.to_json();
        assert_eq!(j["values"]["{1,3}"], Value::String("1".into()));
        assert_eq!(MinorTable::from_json(&j).unwrap().to_json(), j);
    }
}
