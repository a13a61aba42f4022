use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde_json::{json, Value};

use super::cliques::{adjacency, maximal_cliques};
use crate::minors::Subset;

/// A graph on vertices `1..=n` placed clockwise on a circle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph2 {
    pub n: usize,
    pub edges: BTreeSet<(usize, usize)>,
}

fn norm(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Chords with four distinct endpoints that cross inside the circle.
pub fn edges_cross(e: (usize, usize), f: (usize, usize)) -> bool {
    let ((a, b), (c, d)) = (norm(e.0, e.1), norm(f.0, f.1));
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

fn share(e: (usize, usize), f: (usize, usize)) -> bool {
    e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1
}

impl Graph2 {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Graph2 { n, edges: edges.into_iter().map(|(a, b)| norm(a, b)).collect() }
    }

    pub fn boundary(n: usize) -> Self {
        Graph2::new(n, (1..=n).map(|i| (i, i % n + 1)))
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&norm(a, b))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == v || e.1 == v).count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges.iter().filter_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None }).collect()
    }

    pub fn is_subgraph_of(&self, o: &Graph2) -> bool {
        self.edges.is_subset(&o.edges)
    }

    /// Every two edges are non-crossing or share a vertex.
    pub fn is_non_crossing(&self) -> bool {
        let e: Vec<_> = self.edges.iter().copied().collect();
        e.iter().enumerate().all(|(t, &x)| e[t + 1..].iter().all(|&y| share(x, y) || !edges_cross(x, y)))
    }

    /// Every two edges cross or share a vertex.
    pub fn is_thrackle(&self) -> bool {
        let e: Vec<_> = self.edges.iter().copied().collect();
        e.iter().enumerate().all(|(t, &x)| e[t + 1..].iter().all(|&y| share(x, y) || edges_cross(x, y)))
    }

    pub fn is_triangulation(&self) -> bool {
        self.n >= 3 && self.len() == 2 * self.n - 3 && self.is_non_crossing() && Graph2::boundary(self.n).is_subgraph_of(self)
    }

    /// No edge of `K_n` can be added while keeping the thrackle property.
    pub fn is_maximal_thrackle(&self) -> bool {
        self.is_thrackle()
            && all_pairs(self.n).all(|e| {
                self.edges.contains(&e) || self.edges.iter().any(|&f| !share(e, f) && !edges_cross(e, f))
            })
    }

    pub fn subsets(&self) -> Vec<Subset> {
        self.edges.iter().map(|&(a, b)| Subset::of(self.n, &[a, b])).collect()
    }

    pub fn from_subsets(n: usize, s: &[Subset]) -> Option<Self> {
        let mut edges = BTreeSet::new();
        for x in s {
            let e = x.elems();
            if e.len() != 2 {
                return None;
            }
            edges.insert((e[0], e[1]));
        }
        Some(Graph2 { n, edges })
    }

    pub fn rotate(&self, s: usize) -> Self {
        Graph2::new(self.n, self.edges.iter().map(|&(a, b)| ((a - 1 + s) % self.n + 1, (b - 1 + s) % self.n + 1)))
    }

    pub fn to_json(&self) -> Value {
        json!({"n": self.n, "edges": self.edges.iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>()})
    }

    pub fn from_json(v: &Value) -> Option<Self> {
        let n = v.get("n")?.as_u64()? as usize;
        let mut edges = BTreeSet::new();
        for e in v.get("edges")?.as_array()? {
            let p = e.as_array()?;
            let (a, b) = (p.first()?.as_u64()? as usize, p.get(1)?.as_u64()? as usize);
            if a == b || a == 0 || b == 0 || a > n || b > n {
                return None;
            }
            edges.insert(norm(a, b));
        }
        Some(Graph2 { n, edges })
    }

    /// Odd-star-with-leaves structure of a maximal thrackle.
    pub fn thrackle_shape(&self) -> Option<ThrackleShape> {
        if !self.is_maximal_thrackle() {
            return None;
        }
        let star: Vec<usize> = (1..=self.n).filter(|&v| self.degree(v) >= 2).collect();
        let m = star.len();
        if m < 3 || m.is_multiple_of(2) {
            return None;
        }
        let r = (m - 1) / 2;
        for (t, &v) in star.iter().enumerate() {
            for d in [r, r + 1] {
                if !self.contains(v, star[(t + d) % m]) {
                    return None;
                }
            }
        }
        let leaves = (1..=self.n).filter(|&v| self.degree(v) == 1).map(|v| (v, self.neighbors(v)[0])).collect();
        Some(ThrackleShape { r, star, leaves })
    }
}

fn all_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |a| (a + 1..=n).map(move |b| (a, b)))
}

/// Star vertices in increasing label order (the `2r+1`-star) plus `(leaf, neighbour)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThrackleShape {
    pub r: usize,
    pub star: Vec<usize>,
    pub leaves: Vec<(usize, usize)>,
}

pub fn catalan(n: usize) -> BigUint {
    let mut c = BigUint::from(1u32);
    for i in 0..n {
        c = c * BigUint::from(2 * (2 * i + 1)) / BigUint::from(i + 2);
    }
    c
}

/// All triangulations of the `n`-gon (boundary edges included).
pub fn enumerate_triangulations(n: usize) -> Vec<Graph2> {
    fn rec(poly: &[usize]) -> Vec<Vec<(usize, usize)>> {
        if poly.len() < 3 {
            return vec![vec![]];
        }
        let (a, b) = (poly[0], poly[poly.len() - 1]);
        let mut out = Vec::new();
        for t in 1..poly.len() - 1 {
            let apex = poly[t];
            let left = rec(&poly[..=t]);
            let right = rec(&poly[t..]);
            for l in &left {
                for r in &right {
                    let mut d = l.clone();
                    d.extend(r.iter().copied());
                    d.push(norm(a, apex));
                    d.push(norm(apex, b));
                    out.push(d);
                }
            }
        }
        out
    }
    if n < 3 {
        return vec![];
    }
    let poly: Vec<usize> = (1..=n).collect();
    let mut all: Vec<Graph2> = rec(&poly).into_iter().map(|mut d| {
        d.push((1, n));
        Graph2::new(n, d)
    }).collect();
    all.sort();
    all
}

/// All maximal thrackles on `n ≥ 3` vertices, built from odd stars with leaves
/// and relabelled from every starting point.
pub fn enumerate_maximal_thrackles(n: usize) -> Vec<Graph2> {
    #[derive(Clone, Copy)]
    enum Slot {
        Star(usize),
        Leaf(usize),
    }
    let mut found = BTreeSet::new();
    let mut r = 1;
    while 2 * r < n {
        let m = 2 * r + 1;
        let leaves = n - m;
        for comp in compositions(leaves, m) {
            // gap after star vertex j holds comp[j] leaves joined to the opposite vertex j + r + 1
            let mut circle = Vec::with_capacity(n);
            for (j, &c) in comp.iter().enumerate() {
                circle.push(Slot::Star(j));
                for _ in 0..c {
                    circle.push(Slot::Leaf((j + r + 1) % m));
                }
            }
            for start in 0..n {
                let label = |pos: usize| (pos + n - start) % n + 1;
                let mut star_label = vec![0; m];
                for (pos, s) in circle.iter().enumerate() {
                    if let Slot::Star(j) = s {
                        star_label[*j] = label(pos);
                    }
                }
                let mut edges = Vec::with_capacity(n);
                for j in 0..m {
                    edges.push((star_label[j], star_label[(j + r) % m]));
                }
                for (pos, s) in circle.iter().enumerate() {
                    if let Slot::Leaf(t) = s {
                        edges.push((label(pos), star_label[*t]));
                    }
                }
                found.insert(Graph2::new(n, edges));
            }
        }
        r += 1;
    }
    found.into_iter().collect()
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Maximal thrackles as maximal cliques of the "cross or share a vertex" relation on edges of `K_n`.
pub fn maximal_thrackles_by_cliques(n: usize) -> Vec<Graph2> {
    let pairs: Vec<(usize, usize)> = all_pairs(n).collect();
    let adj = adjacency(&pairs, |&e, &f| share(e, f) || edges_cross(e, f));
    let mut out: Vec<Graph2> = maximal_cliques(&adj).into_iter().map(|c| Graph2::new(n, c.into_iter().map(|t| pairs[t]))).collect();
    out.sort();
    out
}

/// Extends a non-crossing graph to a triangulation by adding chords in lexicographic order.
pub fn complete_to_triangulation(g: &Graph2) -> Option<Graph2> {
    if !g.is_non_crossing() {
        return None;
    }
    let mut t = g.clone();
    for e in all_pairs(g.n) {
        if !t.edges.contains(&e) && t.edges.iter().all(|&f| share(e, f) || !edges_cross(e, f)) {
            t.edges.insert(e);
        }
    }
    Some(t)
}

/// The first maximal thrackle (in sorted order) containing `g`.
pub fn complete_to_maximal_thrackle(g: &Graph2) -> Option<Graph2> {
    if !g.is_thrackle() {
        return None;
    }
    enumerate_maximal_thrackles(g.n).into_iter().find(|h| g.is_subgraph_of(h))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangulation_counts() {
        assert_eq!(enumerate_triangulations(3).len(), 1);
        assert_eq!(enumerate_triangulations(4).len(), 2);
        for n in 3..=10 {
            let all = enumerate_triangulations(n);
            assert_eq!(BigUint::from(all.len()), catalan(n - 2));
            assert!(all.iter().all(|t| t.is_triangulation()));
        }
        assert_eq!(catalan(4), BigUint::from(14u32));
    }

    #[test]
    fn thrackle_counts_and_oracle() {
        assert_eq!(enumerate_maximal_thrackles(3), vec![Graph2::new(3, [(1, 2), (2, 3), (1, 3)])]);
        for n in 3..=9 {
            let gen = enumerate_maximal_thrackles(n);
            assert_eq!(gen.len() as u64, (1u64 << (n - 1)) - n as u64, "n={n}");
            assert!(gen.iter().all(|h| h.len() == n && h.is_maximal_thrackle() && h.thrackle_shape().is_some()));
            assert_eq!(gen, maximal_thrackles_by_cliques(n));
        }
    }

    #[test]
    fn figure_thrackle_is_generated() {
        let h = Graph2::new(7, [(1, 3), (1, 4), (1, 5), (2, 5), (2, 6), (3, 6), (3, 7)]);
        assert!(enumerate_maximal_thrackles(7).contains(&h));
        let shape = h.thrackle_shape().unwrap();
        assert_eq!(shape.star, vec![1, 2, 3, 5, 6]);
        assert_eq!(shape.leaves, vec![(4, 1), (7, 3)]);
    }

    #[test]
    fn completions() {
        let g = Graph2::new(6, [(1, 3)]);
        let t = complete_to_triangulation(&g).unwrap();
        assert!(t.is_triangulation() && g.is_subgraph_of(&t));
        assert!(complete_to_triangulation(&Graph2::new(4, [(1, 3), (2, 4)])).is_none());
        let h = complete_to_maximal_thrackle(&Graph2::new(5, [(1, 3), (2, 4)])).unwrap();
        assert!(h.is_maximal_thrackle() && h.contains(1, 3) && h.contains(2, 4));
    }
}
