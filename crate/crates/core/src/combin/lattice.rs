use std::fmt;

use serde_json::{json, Value};

use crate::minors::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
}

/// The path `P(I,J)`: one step per element of the symmetric difference, up for
/// elements of `I ∖ J` and down for `J ∖ I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePath {
    pub steps: Vec<Step>,
    pub dyck: bool,
    pub picks: usize,
    /// Lengths of the maximal straight runs, in order.
    pub length_params: Vec<usize>,
}

impl LatticePath {
    pub fn from_steps(steps: Vec<Step>) -> Self {
        let mut h = 0i64;
        let mut dyck = true;
        for s in &steps {
            h += if *s == Step::Up { 1 } else { -1 };
            dyck &= h >= 0;
        }
        let picks = steps.windows(2).filter(|w| w[0] == Step::Up && w[1] == Step::Down).count();
        let mut length_params = Vec::new();
        for (t, s) in steps.iter().enumerate() {
            if t > 0 && steps[t - 1] == *s {
                *length_params.last_mut().unwrap() += 1;
            } else {
                length_params.push(1);
            }
        }
        LatticePath { steps, dyck, picks, length_params }
    }

    pub fn to_json(&self) -> Value {
        json!({"steps": self.to_string(), "dyck": self.dyck, "picks": self.picks, "length_params": self.length_params})
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(if *s == Step::Up { "U" } else { "D" })?;
        }
        Ok(())
    }
}

pub fn lattice_path(i: &Subset, j: &Subset) -> LatticePath {
    let d = i.mask() ^ j.mask();
    let steps = (0..i.n()).filter(|&t| d >> t & 1 == 1).map(|t| if i.mask() >> t & 1 == 1 { Step::Up } else { Step::Down }).collect();
    LatticePath::from_steps(steps)
}

/// Smallest `s ∈ [0,n)` such that rotating both sets by `i ↦ i+s` gives a Dyck path.
pub fn dyck_rotation(i: &Subset, j: &Subset) -> (usize, Subset, Subset) {
    for s in 0..i.n().max(1) {
        let (a, b) = (i.rotate(s), j.rotate(s));
        if lattice_path(&a, &b).dyck {
            return (s, a, b);
        }
    }
    unreachable!("some rotation of a balanced path is a Dyck path")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairClass {
    WeaklySeparated,
    TwoInterlacedAdmissible,
    Excluded,
}

impl PairClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            PairClass::WeaklySeparated => "weakly_separated",
            PairClass::TwoInterlacedAdmissible => "two_interlaced_admissible",
            PairClass::Excluded => "excluded",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub class: PairClass,
    pub rotation: usize,
    pub path: LatticePath,
}

impl Classification {
    pub fn to_json(&self) -> Value {
        json!({"class": self.class.as_str(), "rotation": self.rotation, "path": self.path.to_json()})
    }
}

/// Classifies a pair after rotating it to a Dyck path: 1-interlaced pairs are
/// weakly separated; 2-interlaced pairs with `α_i ≠ β_j` for all `i, j` are admissible.
pub fn classify_pair(i: &Subset, j: &Subset) -> Classification {
    let (rotation, a, b) = dyck_rotation(i, j);
    let path = lattice_path(&a, &b);
    let class = match path.picks {
        0 | 1 => PairClass::WeaklySeparated,
        2 => {
            let p = &path.length_params;
            let (alphas, betas) = ([p[0], p[2]], [p[1], p[3]]);
            if alphas.iter().all(|a| !betas.contains(a)) {
                PairClass::TwoInterlacedAdmissible
            } else {
                PairClass::Excluded
            }
        }
        _ => PairClass::Excluded,
    };
    Classification { class, rotation, path }
}

/// The disjoint pair on `[Σ params]` whose Dyck path has the given run lengths
/// `(α_1, β_1, α_2, β_2, …)`.
pub fn pair_from_params(params: &[usize]) -> (Subset, Subset) {
    let n: usize = params.iter().sum();
    let (mut i, mut j) = (Vec::new(), Vec::new());
    let mut pos = 1;
    for (t, &len) in params.iter().enumerate() {
        let target = if t % 2 == 0 { &mut i } else { &mut j };
        target.extend(pos..pos + len);
        pos += len;
    }
    (Subset::of(n, &i), Subset::of(n, &j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::separation::is_weakly_separated;
    use crate::minors::k_subsets;

    fn s(n: usize, e: &[usize]) -> Subset {
        Subset::of(n, e)
    }

    #[test]
    fn path_examples() {
        let p = lattice_path(&s(8, &[1, 2, 3, 6]), &s(8, &[4, 5, 7, 8]));
        assert_eq!(p.to_string(), "UUUDDUDD");
        assert_eq!((p.picks, p.dyck), (2, true));
        assert_eq!(p.length_params, vec![3, 2, 1, 2]);
        let q = lattice_path(&s(8, &[1, 4, 7, 8]), &s(8, &[2, 3, 5, 6]));
        assert_eq!(q.to_string(), "UDDUDDUU");
        assert!(!q.dyck);
        let r = lattice_path(&s(4, &[1, 2]), &s(4, &[3, 4]));
        assert_eq!((r.to_string().as_str(), r.picks), ("UUDD", 1));
        // the rotation of the second path is the first one
        let (_, a, b) = dyck_rotation(&s(8, &[1, 4, 7, 8]), &s(8, &[2, 3, 5, 6]));
        assert_eq!(lattice_path(&a, &b).to_string(), "UUUDDUDD");
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_pair(&s(8, &[1, 2, 3, 6]), &s(8, &[4, 5, 7, 8])).class, PairClass::TwoInterlacedAdmissible);
        let c = classify_pair(&s(10, &[1, 2, 3, 6, 8]), &s(10, &[4, 5, 7, 9, 10]));
        assert_eq!((c.class, c.path.picks), (PairClass::Excluded, 3));
        assert_eq!(c.path.to_string(), "UUUDDUDUDD");
        assert_eq!(classify_pair(&s(10, &[1, 2, 3, 4, 7]), &s(10, &[5, 6, 8, 9, 10])).class, PairClass::TwoInterlacedAdmissible);
        // α = β somewhere: (2,2,1,1)
        assert_eq!(classify_pair(&s(6, &[1, 2, 5]), &s(6, &[3, 4, 6])).class, PairClass::Excluded);
    }

    #[test]
    fn one_interlaced_is_weakly_separated() {
        for a in k_subsets(8, 4) {
            for b in k_subsets(8, 4) {
                let ws = is_weakly_separated(&a, &b);
                assert_eq!(classify_pair(&a, &b).class == PairClass::WeaklySeparated, ws);
            }
        }
    }

    #[test]
    fn invariant_under_rotation_and_swap() {
        let n = 8;
        for a in k_subsets(n, 4) {
            for b in k_subsets(n, 4).filter(|b| b.mask() & 0b1 == 0) {
                let c = classify_pair(&a, &b).class;
                assert_eq!(classify_pair(&b, &a).class, c);
                for t in 1..n {
                    assert_eq!(classify_pair(&a.rotate(t), &b.rotate(t)).class, c);
                }
            }
        }
    }

    #[test]
    fn params_round_trip() {
        let (i, j) = pair_from_params(&[3, 2, 1, 2]);
        assert_eq!((i, j), (s(8, &[1, 2, 3, 6]), s(8, &[4, 5, 7, 8])));
        let (i, j) = pair_from_params(&[6, 4, 1, 3]);
        assert_eq!(i, s(14, &[1, 2, 3, 4, 5, 6, 11]));
        assert_eq!(lattice_path(&i, &j).length_params, vec![6, 4, 1, 3]);
    }
}
