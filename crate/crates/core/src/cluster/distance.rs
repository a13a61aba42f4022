use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde_json::{json, Value};

use super::exchange::{Cluster, ExchangeGraph, MutationEdge};
use super::ClusterError;
use crate::combin::{greedy_ws_completion, lex_k_subsets};
use crate::minors::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distance {
    Exact(usize),
    /// Not reached within the radius cap.
    AtLeast(usize),
}

#[derive(Clone, Debug)]
pub struct DistanceReport {
    pub distance: Distance,
    /// Collections containing `I`, resp. `J`.
    pub sources: usize,
    pub targets: usize,
    /// Collections stored by the search.
    pub visited: usize,
}

impl DistanceReport {
    pub fn to_json(&self) -> Value {
        let d = match self.distance {
            Distance::Exact(d) => json!({"exact": d}),
            Distance::AtLeast(d) => json!({"at_least": d}),
        };
        json!({"distance": d, "sources": self.sources, "targets": self.targets, "visited": self.visited})
    }
}

/// All collections containing `i`, reached from one of them by exchanges that keep `i`.
fn containing(g: &ExchangeGraph, i: &Subset, budget: usize) -> Result<HashSet<Cluster>, ClusterError> {
    let r = g.rank(i).expect("shape checked");
    let start = g.cluster_of(&greedy_ws_completion(&[*i], &lex_k_subsets(g.n(), g.k())));
    let mut seen = HashSet::from([start.clone()]);
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let next: Vec<Cluster> = frontier
            .par_iter()
            .flat_map_iter(|c| g.moves(c).into_iter().filter(|q| q.out as usize != r).map(|q| g.apply(c, &q)).collect::<Vec<_>>())
            .collect();
        frontier.clear();
        for c in next {
            if !seen.contains(&c) {
                if seen.len() >= budget {
                    return Err(ClusterError::MemoryBudgetExceeded(budget));
                }
                seen.insert(c.clone());
                frontier.push(c);
            }
        }
    }
    Ok(seen)
}

struct Side {
    dist: HashMap<Cluster, usize>,
    frontier: Vec<Cluster>,
    radius: usize,
}

impl Side {
    fn new(set: HashSet<Cluster>) -> Self {
        let frontier: Vec<Cluster> = set.iter().cloned().collect();
        Side { dist: set.into_iter().map(|c| (c, 0)).collect(), frontier, radius: 0 }
    }

    /// Expands one layer; returns the best meeting distance found.
    fn grow(&mut self, g: &ExchangeGraph, other: &Side, budget: usize, used: usize) -> Result<Option<usize>, ClusterError> {
        let next: Vec<Cluster> = self
            .frontier
            .par_iter()
            .flat_map_iter(|c| g.moves(c).into_iter().map(|q| g.apply(c, &q)).collect::<Vec<_>>())
            .collect();
        self.radius += 1;
        let mut best: Option<usize> = None;
        self.frontier.clear();
        for c in next {
            if self.dist.contains_key(&c) {
                continue;
            }
            if let Some(d) = other.dist.get(&c) {
                best = Some(best.map_or(self.radius + d, |b| b.min(self.radius + d)));
            }
            if self.dist.len() + used >= budget {
                return Err(ClusterError::MemoryBudgetExceeded(budget));
            }
            self.dist.insert(c.clone(), self.radius);
            self.frontier.push(c);
        }
        Ok(best)
    }
}

/// `D(I, J)`: the fewest exchanges turning a maximal weakly separated collection
/// containing `I` into one containing `J`.
///
/// Collections containing `I` are generated by exchanges that never remove `I`;
/// `budget` bounds the number of stored collections.
pub fn mutation_distance(i: &Subset, j: &Subset, cap: usize, budget: usize) -> Result<DistanceReport, ClusterError> {
    if i.n() != j.n() || i.len() != j.len() || i.is_empty() || i.len() == i.n() {
        return Err(ClusterError::InvalidSeed(format!("{i} and {j} must be proper subsets of equal size")));
    }
    let g = ExchangeGraph::new(i.n(), i.len());
    let a = containing(&g, i, budget)?;
    let b = containing(&g, j, budget)?;
    let (sources, targets) = (a.len(), b.len());
    if a.iter().any(|c| b.contains(c)) {
        return Ok(DistanceReport { distance: Distance::Exact(0), sources, targets, visited: sources + targets });
    }
    let mut fwd = Side::new(a);
    let mut bwd = Side::new(b);
    loop {
        let visited = fwd.dist.len() + bwd.dist.len();
        if fwd.radius + bwd.radius >= cap {
            return Ok(DistanceReport { distance: Distance::AtLeast(cap + 1), sources, targets, visited });
        }
        let met = if fwd.frontier.len() <= bwd.frontier.len() {
            let used = bwd.dist.len();
            fwd.grow(&g, &bwd, budget, used)?
        } else {
            let used = fwd.dist.len();
            bwd.grow(&g, &fwd, budget, used)?
        };
        if let Some(d) = met {
            let visited = fwd.dist.len() + bwd.dist.len();
            return Ok(DistanceReport { distance: Distance::Exact(d), sources, targets, visited });
        }
        if fwd.frontier.is_empty() && bwd.frontier.is_empty() {
            let visited = fwd.dist.len() + bwd.dist.len();
            return Ok(DistanceReport { distance: Distance::AtLeast(usize::MAX), sources, targets, visited });
        }
    }
}

/// Distinct label sequences `(removed, added)` along exchange paths of length `d`
/// from a collection containing `I` to one containing `J`.
pub fn shortest_chains(i: &Subset, j: &Subset, d: usize, budget: usize) -> Result<Vec<Vec<MutationEdge>>, ClusterError> {
    let g = ExchangeGraph::new(i.n(), i.len());
    let a = containing(&g, i, budget)?;
    let b = containing(&g, j, budget)?;
    // layers[t]: collections at distance t from A that lie on a path of length d into B
    let mut layers: Vec<HashMap<Cluster, Vec<(Cluster, MutationEdge)>>> = vec![a.iter().map(|c| (c.clone(), Vec::new())).collect()];
    let mut seen: HashSet<Cluster> = a.clone();
    for _ in 0..d {
        let mut next: HashMap<Cluster, Vec<(Cluster, MutationEdge)>> = HashMap::new();
        for c in layers.last().unwrap().keys() {
            for q in g.moves(c) {
                let y = g.apply(c, &q);
                if !seen.contains(&y) {
                    next.entry(y).or_default().push((c.clone(), g.edge(&q)));
                }
            }
        }
        seen.extend(next.keys().cloned());
        if seen.len() > budget {
            return Err(ClusterError::MemoryBudgetExceeded(budget));
        }
        layers.push(next);
    }
    let mut chains: HashSet<Vec<MutationEdge>> = HashSet::new();
    let mut memo: HashMap<(usize, Cluster), HashSet<Vec<MutationEdge>>> = HashMap::new();
    fn back(
        t: usize,
        c: &Cluster,
        layers: &[HashMap<Cluster, Vec<(Cluster, MutationEdge)>>],
        memo: &mut HashMap<(usize, Cluster), HashSet<Vec<MutationEdge>>>,
    ) -> HashSet<Vec<MutationEdge>> {
        if t == 0 {
            return HashSet::from([Vec::new()]);
        }
        if let Some(s) = memo.get(&(t, c.clone())) {
            return s.clone();
        }
        let mut out = HashSet::new();
        for (p, e) in &layers[t][c] {
            for mut chain in back(t - 1, p, layers, memo) {
                chain.push(*e);
                out.insert(chain);
            }
        }
        memo.insert((t, c.clone()), out.clone());
        out
    }
    for c in layers[d].keys().filter(|c| b.contains(*c)) {
        chains.extend(back(d, c, &layers, &mut memo));
    }
    let mut out: Vec<Vec<MutationEdge>> = chains.into_iter().collect();
    out.sort();
    Ok(out)
}
