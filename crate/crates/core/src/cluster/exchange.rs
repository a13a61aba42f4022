use std::collections::HashMap;
use std::fmt;

use serde_json::{json, Value};

use crate::minors::{k_subsets, Subset};

/// A set of `k`-subsets of `[n]`, stored as a bitset over their ranks in an [`ExchangeGraph`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Cluster(Box<[u64]>);

impl Cluster {
    fn empty(words: usize) -> Self {
        Cluster(vec![0; words].into_boxed_slice())
    }

    pub fn contains(&self, r: usize) -> bool {
        self.0[r / 64] >> (r % 64) & 1 == 1
    }

    fn flip(&mut self, r: usize) {
        self.0[r / 64] ^= 1 << (r % 64);
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn ranks(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }
}

/// One exchange `{a,c} ∪ R ↔ {b,d} ∪ R` with `a < b < c < d`.
///
/// `reverse` is false when `{a,c} ∪ R` is the label being removed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MutationEdge {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub r: Subset,
    pub reverse: bool,
}

impl MutationEdge {
    /// The forward exchange removing `{a,c} ∪ R`.
    pub fn new(a: usize, b: usize, c: usize, d: usize, r: Subset) -> Option<Self> {
        let ok = a < b && b < c && c < d && d <= r.n() && [a, b, c, d].iter().all(|&x| x >= 1 && !r.contains(x));
        ok.then_some(MutationEdge { a, b, c, d, r, reverse: false })
    }

    fn pair(&self, x: usize, y: usize) -> Subset {
        self.r.with(x).with(y)
    }

    pub fn out(&self) -> Subset {
        if self.reverse {
            self.pair(self.b, self.d)
        } else {
            self.pair(self.a, self.c)
        }
    }

    pub fn inn(&self) -> Subset {
        if self.reverse {
            self.pair(self.a, self.c)
        } else {
            self.pair(self.b, self.d)
        }
    }

    /// `[{a,b}, {c,d}, {a,d}, {b,c}]`, each with `R`.
    pub fn neighbors(&self) -> [Subset; 4] {
        [self.pair(self.a, self.b), self.pair(self.c, self.d), self.pair(self.a, self.d), self.pair(self.b, self.c)]
    }

    /// The same quadruple in the opposite direction.
    pub fn inverse(&self) -> Self {
        MutationEdge { reverse: !self.reverse, ..*self }
    }

    pub fn to_json(&self) -> Value {
        json!({"out": self.out().to_string(), "in": self.inn().to_string()})
    }
}

impl fmt::Display for MutationEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.out(), self.inn())
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Quad {
    pub out: u32,
    pub inn: u32,
    /// Ranks of `{a,b}, {c,d}, {a,d}, {b,c}` (each with `R`).
    pub nb: [u32; 4],
    abcd: [u8; 4],
    reverse: bool,
}

/// All `k`-subsets of `[n]` with their possible exchanges.
#[derive(Clone, Debug)]
pub struct ExchangeGraph {
    n: usize,
    k: usize,
    sets: Vec<Subset>,
    rank: HashMap<u64, u32>,
    quads: Vec<Vec<Quad>>,
}

impl ExchangeGraph {
    pub fn new(n: usize, k: usize) -> Self {
        let sets: Vec<Subset> = k_subsets(n, k).collect();
        let rank: HashMap<u64, u32> = sets.iter().enumerate().map(|(i, s)| (s.mask(), i as u32)).collect();
        let r = |s: Subset| rank[&s.mask()];
        let mut quads = Vec::with_capacity(sets.len());
        for x in &sets {
            let inside = x.elems();
            let outside = x.complement().elems();
            let mut qs = Vec::new();
            for (pi, &p) in inside.iter().enumerate() {
                for &q in &inside[pi + 1..] {
                    let rest = x.without(p).without(q);
                    for (ui, &u) in outside.iter().enumerate() {
                        for &v in &outside[ui + 1..] {
                            let (abcd, reverse) = if p < u && u < q && q < v {
                                ([p, u, q, v], false)
                            } else if u < p && p < v && v < q {
                                ([u, p, v, q], true)
                            } else {
                                continue;
                            };
                            let [a, b, c, d] = abcd;
                            let pair = |s: usize, t: usize| r(rest.with(s).with(t));
                            qs.push(Quad {
                                out: r(*x),
                                inn: r(rest.with(u).with(v)),
                                nb: [pair(a, b), pair(c, d), pair(a, d), pair(b, c)],
                                abcd: [a as u8, b as u8, c as u8, d as u8],
                                reverse,
                            });
                        }
                    }
                }
            }
            quads.push(qs);
        }
        ExchangeGraph { n, k, sets, rank, quads }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn rank(&self, s: &Subset) -> Option<usize> {
        (s.n() == self.n).then(|| self.rank.get(&s.mask()).map(|&r| r as usize)).flatten()
    }

    pub fn set(&self, r: usize) -> Subset {
        self.sets[r]
    }

    /// Panics on labels of the wrong shape.
    pub fn cluster_of(&self, c: &[Subset]) -> Cluster {
        let mut out = Cluster::empty(self.sets.len().div_ceil(64));
        for s in c {
            let r = self.rank(s).expect("label in C([n], k)");
            if !out.contains(r) {
                out.flip(r);
            }
        }
        out
    }

    pub fn members(&self, c: &Cluster) -> Vec<Subset> {
        c.ranks().map(|r| self.sets[r]).collect()
    }

    pub(crate) fn moves(&self, c: &Cluster) -> Vec<Quad> {
        let mut out = Vec::new();
        for r in c.ranks() {
            for q in &self.quads[r] {
                if q.nb.iter().all(|&t| c.contains(t as usize)) && !c.contains(q.inn as usize) {
                    out.push(*q);
                }
            }
        }
        out
    }

    pub(crate) fn apply(&self, c: &Cluster, q: &Quad) -> Cluster {
        let mut next = c.clone();
        next.flip(q.out as usize);
        next.flip(q.inn as usize);
        next
    }

    pub(crate) fn edge(&self, q: &Quad) -> MutationEdge {
        let [a, b, c, d] = q.abcd.map(|x| x as usize);
        let r = self.sets[q.out as usize].without(if q.reverse { b } else { a }).without(if q.reverse { d } else { c });
        MutationEdge { a, b, c, d, r, reverse: q.reverse }
    }

    pub(crate) fn quad(&self, e: &MutationEdge) -> Option<Quad> {
        let out = self.rank(&e.out())?;
        let inn = self.rank(&e.inn())? as u32;
        self.quads[out].iter().find(|q| q.inn == inn).copied()
    }

    /// Exchanges applicable to a collection.
    pub fn applicable(&self, c: &Cluster) -> Vec<MutationEdge> {
        self.moves(c).iter().map(|q| self.edge(q)).collect()
    }

    pub fn mutate(&self, c: &Cluster, e: &MutationEdge) -> Option<Cluster> {
        let q = self.quad(e)?;
        (c.contains(q.out as usize) && q.nb.iter().all(|&t| c.contains(t as usize)) && !c.contains(q.inn as usize))
            .then(|| self.apply(c, &q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::{greedy_ws_completion, is_maximal_ws, lex_k_subsets};

    #[test]
    fn mutations_stay_weakly_separated() {
        for (n, k) in [(5, 2), (6, 3), (7, 3), (8, 4)] {
            let g = ExchangeGraph::new(n, k);
            let start = greedy_ws_completion(&[], &lex_k_subsets(n, k));
            let mut c = g.cluster_of(&start);
            for step in 0..40 {
                let moves = g.applicable(&c);
                assert!(!moves.is_empty());
                let e = moves[step % moves.len()];
                assert_eq!(e.out().len(), k);
                let next = g.mutate(&c, &e).unwrap();
                assert_eq!(g.mutate(&next, &e.inverse()).unwrap(), c);
                c = next;
                assert!(is_maximal_ws(&g.members(&c), n, k));
            }
        }
    }

    #[test]
    fn edge_round_trip() {
        let g = ExchangeGraph::new(8, 4);
        let e = MutationEdge::new(1, 5, 6, 8, Subset::of(8, &[2, 3])).unwrap();
        assert_eq!(e.out(), Subset::of(8, &[1, 2, 3, 6]));
        assert_eq!(e.inn(), Subset::of(8, &[2, 3, 5, 8]));
        let q = g.quad(&e).unwrap();
        assert_eq!(g.edge(&q), e);
        let q = g.quad(&e.inverse()).unwrap();
        assert_eq!(g.edge(&q), e.inverse());
        assert!(MutationEdge::new(1, 2, 3, 4, Subset::of(8, &[2])).is_none());
    }
}
