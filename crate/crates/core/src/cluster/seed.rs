use std::collections::BTreeMap;
use std::fmt::Debug;

use serde_json::{json, Map, Value};

use super::exchange::{ExchangeGraph, MutationEdge};
use super::ClusterError;
use crate::combin::is_maximal_ws;
use crate::exactnum::{CertifiedOrd, ExactScalar, LaurentPoly, NumError};
use crate::minors::Subset;

/// Values that can sit on a cluster: exact scalars or Laurent polynomials.
pub trait ClusterValue: Clone + Debug + PartialEq + Send + Sync {
    /// `(ab·cd + ad·bc) / old`.
    fn exchange(ab: &Self, cd: &Self, ad: &Self, bc: &Self, old: &Self) -> Result<Self, ClusterError>;
    fn is_positive(&self) -> bool;
    fn to_json(&self) -> Value;
}

impl ClusterValue for ExactScalar {
    fn exchange(ab: &Self, cd: &Self, ad: &Self, bc: &Self, old: &Self) -> Result<Self, ClusterError> {
        Ok(ab.mul(cd)?.add(&ad.mul(bc)?)?.div(old)?)
    }

    fn is_positive(&self) -> bool {
        matches!(self.certified_cmp(&ExactScalar::zero()), Ok(CertifiedOrd::Greater))
    }

    fn to_json(&self) -> Value {
        ExactScalar::to_json(self)
    }
}

impl ClusterValue for LaurentPoly {
    fn exchange(ab: &Self, cd: &Self, ad: &Self, bc: &Self, old: &Self) -> Result<Self, ClusterError> {
        Ok(ab.mul(cd).add(&ad.mul(bc)).exact_div(old)?)
    }

    fn is_positive(&self) -> bool {
        !self.is_zero() && self.all_coefficients_positive()
    }

    fn to_json(&self) -> Value {
        json!({"laurent": self.to_string(), "vars": self.vars()})
    }
}

/// A maximal weakly separated collection with a value on each member.
#[derive(Clone, Debug, PartialEq)]
pub struct Seed<V> {
    n: usize,
    k: usize,
    values: BTreeMap<Subset, V>,
}

impl<V: ClusterValue> Seed<V> {
    pub fn new(n: usize, k: usize, values: BTreeMap<Subset, V>) -> Result<Self, ClusterError> {
        let c: Vec<Subset> = values.keys().copied().collect();
        if c.iter().any(|s| s.n() != n || s.len() != k) || !is_maximal_ws(&c, n, k) {
            return Err(ClusterError::InvalidSeed("collection is not maximal weakly separated".into()));
        }
        if let Some((s, _)) = values.iter().find(|(_, v)| !v.is_positive()) {
            return Err(ClusterError::InvalidSeed(format!("value at {s} is not positive")));
        }
        Ok(Seed { n, k, values })
    }

    /// Every member gets `value`.
    pub fn constant(n: usize, k: usize, collection: &[Subset], value: V) -> Result<Self, ClusterError> {
        Self::new(n, k, collection.iter().map(|s| (*s, value.clone())).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn collection(&self) -> Vec<Subset> {
        self.values.keys().copied().collect()
    }

    pub fn values(&self) -> &BTreeMap<Subset, V> {
        &self.values
    }

    pub fn value(&self, s: &Subset) -> Option<&V> {
        self.values.get(s)
    }

    pub fn applicable(&self) -> Vec<MutationEdge> {
        let g = ExchangeGraph::new(self.n, self.k);
        g.applicable(&g.cluster_of(&self.collection()))
    }

    pub fn mutate(&self, e: &MutationEdge) -> Result<Self, ClusterError> {
        let missing = |s: &Subset| ClusterError::NotApplicable(format!("{e}: {s} is not in the collection"));
        let old = self.values.get(&e.out()).ok_or_else(|| missing(&e.out()))?;
        if e.out().n() != self.n || self.values.contains_key(&e.inn()) {
            return Err(ClusterError::NotApplicable(e.to_string()));
        }
        let nb = e.neighbors();
        let v = |s: &Subset| self.values.get(s).ok_or_else(|| missing(s));
        let new = V::exchange(v(&nb[0])?, v(&nb[1])?, v(&nb[2])?, v(&nb[3])?, old)?;
        let mut values = self.values.clone();
        values.remove(&e.out());
        values.insert(e.inn(), new);
        Ok(Seed { n: self.n, k: self.k, values })
    }

    pub fn to_json(&self) -> Value {
        let values: Map<String, Value> = self.values.iter().map(|(s, v)| (s.to_string(), v.to_json())).collect();
        json!({
            "n": self.n,
            "k": self.k,
            "collection": self.values.keys().map(|s| s.to_string()).collect::<Vec<_>>(),
            "values": values,
        })
    }
}

/// A seed read from JSON, with whichever value type it carries.
#[derive(Clone, Debug, PartialEq)]
pub enum AnySeed {
    Scalar(Seed<ExactScalar>),
    Laurent(Seed<LaurentPoly>),
}

impl AnySeed {
    pub fn to_json(&self) -> Value {
        match self {
            AnySeed::Scalar(s) => s.to_json(),
            AnySeed::Laurent(s) => s.to_json(),
        }
    }

    /// Members without an entry in `"values"` default to 1.
    pub fn from_json(v: &Value) -> Result<Self, ClusterError> {
        let bad = |m: &str| ClusterError::InvalidSeed(m.to_string());
        let n = v["n"].as_u64().ok_or_else(|| bad("missing n"))? as usize;
        let k = v["k"].as_u64().ok_or_else(|| bad("missing k"))? as usize;
        let collection: Vec<Subset> = v["collection"]
            .as_array()
            .ok_or_else(|| bad("missing collection"))?
            .iter()
            .map(|s| s.as_str().ok_or_else(|| bad("labels must be strings")).and_then(|s| Subset::parse(s, n).map_err(|e| bad(&e.to_string()))))
            .collect::<Result<_, _>>()?;
        let empty = Map::new();
        let values = match &v["values"] {
            Value::Object(m) => m,
            Value::Null => &empty,
            _ => return Err(bad("values must be an object")),
        };
        let mut given: BTreeMap<Subset, &Value> = BTreeMap::new();
        for (key, val) in values {
            let s = Subset::parse(key, n).map_err(|e| bad(&e.to_string()))?;
            if !collection.contains(&s) {
                return Err(bad(&format!("value for {s}, which is not in the collection")));
            }
            given.insert(s, val);
        }
        let vars: Option<Vec<String>> = given.values().find_map(|x| x.get("vars")).map(|vs| {
            vs.as_array().map(|a| a.iter().filter_map(|s| s.as_str().map(String::from)).collect()).unwrap_or_default()
        });
        match vars {
            None => {
                let mut out = BTreeMap::new();
                for s in &collection {
                    let x = match given.get(s) {
                        Some(x) => ExactScalar::from_json(x)?,
                        None => ExactScalar::one(),
                    };
                    out.insert(*s, x);
                }
                Ok(AnySeed::Scalar(Seed::new(n, k, out)?))
            }
            Some(vars) => {
                let vars: Vec<&str> = vars.iter().map(String::as_str).collect();
                let mut out = BTreeMap::new();
                for s in &collection {
                    let p = match given.get(s) {
                        Some(Value::Object(o)) => {
                            let text = o.get("laurent").and_then(Value::as_str).ok_or_else(|| bad("polynomial value lacks \"laurent\""))?;
                            LaurentPoly::parse(text, &vars)?
                        }
                        Some(x) => match ExactScalar::from_json(x)? {
                            ExactScalar::Rational(r) => LaurentPoly::constant(&vars, r),
                            _ => return Err(NumError::Parse("only rational constants mix with polynomials".into()).into()),
                        },
                        None => LaurentPoly::one(&vars),
                    };
                    out.insert(*s, p);
                }
                Ok(AnySeed::Laurent(Seed::new(n, k, out)?))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::{greedy_ws_completion, lex_k_subsets};
    use crate::exactnum::rat_int;

    fn ones(n: usize, k: usize) -> Seed<ExactScalar> {
        let c = greedy_ws_completion(&[], &lex_k_subsets(n, k));
        Seed::constant(n, k, &c, ExactScalar::one()).unwrap()
    }

    #[test]
    fn all_ones_mutates_to_two() {
        let s = ones(6, 3);
        for e in s.applicable() {
            let t = s.mutate(&e).unwrap();
            assert_eq!(t.value(&e.inn()), Some(&ExactScalar::int(2)));
            assert_eq!(t.mutate(&e.inverse()).unwrap(), s);
        }
    }

    #[test]
    fn rejects_bad_seeds() {
        let c = greedy_ws_completion(&[], &lex_k_subsets(5, 2));
        assert!(Seed::constant(5, 2, &c[1..], ExactScalar::one()).is_err());
        assert!(Seed::constant(5, 2, &c, ExactScalar::zero()).is_err());
        let s = ones(5, 2);
        let e = s.applicable()[0];
        assert!(matches!(s.mutate(&e.inverse()), Err(ClusterError::NotApplicable(_))));
    }

    #[test]
    fn json_round_trip() {
        let s = ones(6, 2);
        let e = s.applicable()[0];
        let s = s.mutate(&e).unwrap();
        let back = AnySeed::from_json(&s.to_json()).unwrap();
        assert_eq!(back, AnySeed::Scalar(s));
        let vars = ["T"];
        let c = greedy_ws_completion(&[], &lex_k_subsets(6, 3));
        let mut values: BTreeMap<Subset, LaurentPoly> = c.iter().map(|x| (*x, LaurentPoly::one(&vars))).collect();
        values.insert(c[3], LaurentPoly::var(&vars, 0).add(&LaurentPoly::constant(&vars, rat_int(2))));
        let p = Seed::new(6, 3, values).unwrap();
        assert_eq!(AnySeed::from_json(&p.to_json()).unwrap(), AnySeed::Laurent(p));
        let sparse = json!({"n": 4, "k": 2, "collection": ["{1,2}", "{2,3}", "{3,4}", "{1,4}", "{1,3}"], "values": {"{1,3}": "5/2"}});
        let AnySeed::Scalar(s) = AnySeed::from_json(&sparse).unwrap() else { panic!() };
        assert_eq!(s.value(&Subset::of(4, &[1, 2])), Some(&ExactScalar::one()));
    }
}
