use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::evaluate::evaluate_all;
use super::seed::Seed;
use super::ClusterError;
use crate::exactnum::{ExactScalar, LaurentPoly, Rational};
use crate::minors::Subset;
use crate::plabic::{honeycomb, Honeycomb};

/// Exponents of `T` occurring in one coordinate.
#[derive(Clone, Debug, PartialEq)]
pub struct ExponentRange {
    pub label: Subset,
    pub min: i32,
    pub max: i32,
    pub value: LaurentPoly,
}

#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub blocks: (usize, usize),
    pub square: Subset,
    pub target: Subset,
    pub coordinates: Vec<ExponentRange>,
    /// Labels breaking the exponent bounds.
    pub violations: Vec<Subset>,
    /// Labels whose polynomial has a non-positive coefficient.
    pub non_positive: Vec<Subset>,
}

impl ConjectureReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.non_positive.is_empty()
    }

    pub fn get(&self, s: &Subset) -> Option<&ExponentRange> {
        self.coordinates.iter().find(|c| c.label == *s)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "blocks": [self.blocks.0, self.blocks.1],
            "square": self.square.to_string(),
            "target": self.target.to_string(),
            "coordinates": self.coordinates.len(),
            "target_value": self.get(&self.target).map(|c| c.value.to_string()),
            "violations": self.violations.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            "non_positive": self.non_positive.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            "passed": self.passed(),
        })
    }
}

fn seed_values<V: Clone>(h: &Honeycomb, hexagon: V, other: V) -> BTreeMap<Subset, V> {
    let hex = h.hexagons();
    h.collection.iter().map(|s| (*s, if hex.contains(s) { hexagon.clone() } else { other.clone() })).collect()
}

/// The completed honeycomb collection with `T` on the hexagons and 1 elsewhere.
pub fn honeycomb_seed(b1: usize, b2: usize) -> Result<(Honeycomb, Seed<LaurentPoly>), ClusterError> {
    let h = honeycomb(b1, b2)?;
    let vars = ["T"];
    let values = seed_values(&h, LaurentPoly::var(&vars, 0), LaurentPoly::one(&vars));
    let seed = Seed::new(h.n(), h.k(), values)?;
    Ok((h, seed))
}

/// [`honeycomb_seed`] with `T` specialised to a number.
pub fn honeycomb_seed_at(b1: usize, b2: usize, t: &Rational) -> Result<Seed<ExactScalar>, ClusterError> {
    let h = honeycomb(b1, b2)?;
    let values = seed_values(&h, ExactScalar::Rational(t.clone()), ExactScalar::one());
    Seed::new(h.n(), h.k(), values)
}

/// Expands every Plücker coordinate over the honeycomb seed and checks that each
/// `Δ_K`, `K ≠ J`, has a term `T^a` with `a ≥ 0` while `Δ_J` has only negative powers.
pub fn check_honeycomb_conjecture(b1: usize, b2: usize, budget: usize) -> Result<ConjectureReport, ClusterError> {
    let (h, seed) = honeycomb_seed(b1, b2)?;
    let j = h.target();
    let all = evaluate_all(&seed, budget)?;
    let mut coordinates = Vec::new();
    let mut violations = Vec::new();
    let mut non_positive = Vec::new();
    for (label, value) in all {
        let (min, max) = value.exponent_range(0).unwrap_or((0, 0));
        if !value.all_coefficients_positive() || value.is_zero() {
            non_positive.push(label);
        }
        let ok = if label == j { max <= -1 } else { max >= 0 };
        if !ok {
            violations.push(label);
        }
        coordinates.push(ExponentRange { label, min, max, value });
    }
    Ok(ConjectureReport { blocks: (b1, b2), square: h.square_face(), target: j, coordinates, violations, non_positive })
}
