use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashSet};

use rand::seq::SliceRandom;
use rand::Rng;

use super::exchange::{Cluster, ExchangeGraph, MutationEdge, Quad};
use super::seed::{ClusterValue, Seed};
use super::ClusterError;
use crate::combin::{greedy_ws_completion, is_weakly_separated, lex_k_subsets};
use crate::exactnum::ExactScalar;
use crate::minors::{k_subsets, MatrixKind, PosMatrix, Subset};

/// Node budget for a single best-first search.
pub const DEFAULT_BUDGET: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq)]
pub struct Evaluation<V> {
    pub value: V,
    pub path: Vec<MutationEdge>,
}

/// Best-first search for a collection containing `target`.
///
/// The guide is a maximal weakly separated collection containing `target` and every
/// start member weakly separated from it; nodes are ranked by how many members they
/// still lack from the guide, then by the closest member to `target`.
pub(crate) fn search<R: Rng>(
    g: &ExchangeGraph,
    start: &Cluster,
    target: usize,
    budget: usize,
    mut rng: Option<&mut R>,
) -> Result<Vec<Quad>, ClusterError> {
    let j = g.set(target);
    let keep: Vec<Subset> = std::iter::once(j).chain(g.members(start).into_iter().filter(|x| is_weakly_separated(x, &j))).collect();
    let guide = g.cluster_of(&greedy_ws_completion(&keep, &lex_k_subsets(g.n(), g.k())));
    let score = |c: &Cluster| {
        let missing = c.ranks().filter(|&r| !guide.contains(r)).count();
        let close = c.ranks().map(|r| (g.set(r).mask() ^ j.mask()).count_ones()).min().unwrap_or(u32::MAX);
        (missing, close)
    };
    let mut nodes: Vec<(Cluster, usize, Option<Quad>)> = vec![(start.clone(), usize::MAX, None)];
    let mut seen: HashSet<Cluster> = HashSet::from([start.clone()]);
    let mut heap = BinaryHeap::from([Reverse((score(start), 0u64, 0usize))]);
    let mut counter = 0u64;
    while let Some(Reverse((_, _, idx))) = heap.pop() {
        if nodes[idx].0.contains(target) {
            let mut path = Vec::new();
            let mut at = idx;
            while let Some(q) = nodes[at].2 {
                path.push(q);
                at = nodes[at].1;
            }
            path.reverse();
            return Ok(path);
        }
        let mut moves = g.moves(&nodes[idx].0);
        if let Some(r) = rng.as_deref_mut() {
            moves.shuffle(r);
        }
        for q in moves {
            let next = g.apply(&nodes[idx].0, &q);
            if seen.contains(&next) {
                continue;
            }
            if seen.len() >= budget {
                return Err(ClusterError::SearchBudgetExceeded(budget));
            }
            seen.insert(next.clone());
            counter += 1;
            let tie = match rng.as_deref_mut() {
                Some(r) => r.gen(),
                None => counter,
            };
            heap.push(Reverse((score(&next), tie, nodes.len())));
            nodes.push((next, idx, Some(q)));
        }
    }
    Err(ClusterError::SearchBudgetExceeded(seen.len()))
}

fn replay<V: ClusterValue>(seed: &Seed<V>, path: &[MutationEdge]) -> Result<Seed<V>, ClusterError> {
    let mut s = seed.clone();
    for e in path {
        s = s.mutate(e)?;
    }
    Ok(s)
}

fn evaluate_from<V: ClusterValue, R: Rng>(
    seed: &Seed<V>,
    j: &Subset,
    prefix: Vec<MutationEdge>,
    budget: usize,
    rng: Option<&mut R>,
) -> Result<Evaluation<V>, ClusterError> {
    if j.n() != seed.n() || j.len() != seed.k() {
        return Err(ClusterError::InvalidSeed(format!("{j} is not a {}-subset of [{}]", seed.k(), seed.n())));
    }
    let g = ExchangeGraph::new(seed.n(), seed.k());
    let start = replay(seed, &prefix)?;
    let target = g.rank(j).expect("shape checked");
    let quads = search(&g, &g.cluster_of(&start.collection()), target, budget, rng)?;
    let tail: Vec<MutationEdge> = quads.iter().map(|q| g.edge(q)).collect();
    let end = replay(&start, &tail)?;
    let value = end.value(j).expect("search ends at a collection containing the target").clone();
    let mut path = prefix;
    path.extend(tail);
    Ok(Evaluation { value, path })
}

/// `Δ_J` expressed through the seed by a sequence of exchanges.
pub fn evaluate_plucker<V: ClusterValue>(seed: &Seed<V>, j: &Subset, budget: usize) -> Result<Evaluation<V>, ClusterError> {
    evaluate_from::<V, rand::rngs::ThreadRng>(seed, j, Vec::new(), budget, None)
}

/// Like [`evaluate_plucker`] but along a random path: `walk` random exchanges first,
/// then a search with random tie-breaking.
pub fn evaluate_plucker_random<V: ClusterValue, R: Rng>(
    seed: &Seed<V>,
    j: &Subset,
    walk: usize,
    rng: &mut R,
    budget: usize,
) -> Result<Evaluation<V>, ClusterError> {
    let g = ExchangeGraph::new(seed.n(), seed.k());
    let mut c = g.cluster_of(&seed.collection());
    let mut prefix = Vec::new();
    for _ in 0..walk {
        let moves = g.moves(&c);
        let Some(q) = moves.choose(rng) else { break };
        prefix.push(g.edge(q));
        c = g.apply(&c, q);
    }
    evaluate_from(seed, j, prefix, budget, Some(rng))
}

/// Every Plücker coordinate, keyed by label.
pub fn evaluate_all<V: ClusterValue>(seed: &Seed<V>, budget: usize) -> Result<BTreeMap<Subset, V>, ClusterError> {
    let mut out = BTreeMap::new();
    for j in k_subsets(seed.n(), seed.k()) {
        let v = match seed.value(&j) {
            Some(v) => v.clone(),
            None => evaluate_plucker(seed, &j, budget)?.value,
        };
        out.insert(j, v);
    }
    Ok(out)
}

/// The point `[Id_k | X]` with the seed's Plücker coordinates,
/// `x_ij = (−1)^{k−i} Δ_{([k]∖i)∪j} / Δ_[k]`.
pub fn point_from_seed(seed: &Seed<ExactScalar>, budget: usize) -> Result<PosMatrix, ClusterError> {
    let (n, k) = (seed.n(), seed.k());
    let base = Subset::interval(n, 1, k);
    let get = |s: &Subset| -> Result<ExactScalar, ClusterError> {
        match seed.value(s) {
            Some(v) => Ok(v.clone()),
            None => Ok(evaluate_plucker(seed, s, budget)?.value),
        }
    };
    let d0 = get(&base)?;
    let mut rows = vec![vec![ExactScalar::zero(); n]; k];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = ExactScalar::one();
        for (j, slot) in row.iter_mut().enumerate().skip(k) {
            let v = get(&base.without(i + 1).with(j + 1))?.div(&d0)?;
            *slot = if (k - i - 1) % 2 == 1 { v.neg() } else { v };
        }
    }
    Ok(PosMatrix::new(rows, MatrixKind::GrassmannPoint)?)
}

/// The point with `Δ_I = 1` for every `I` in the maximal weakly separated collection `s`.
pub fn ws_point(n: usize, k: usize, s: &[Subset]) -> Result<PosMatrix, ClusterError> {
    point_from_seed(&Seed::constant(n, k, s, ExactScalar::one())?, DEFAULT_BUDGET)
}
