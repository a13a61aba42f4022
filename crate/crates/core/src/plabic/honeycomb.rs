use std::collections::{BTreeMap, HashMap, HashSet};

use super::graph::{Color, PlabicGraph};
use super::moves::{is_square_face, normalize, square_move_at, MoveScript};
use super::PlabicError;
use crate::combin::{greedy_ws_completion, is_ws_collection, lex_k_subsets};
use crate::minors::Subset;

/// The plabic graph whose faces are labelled by the maximal weakly separated collection `c`,
/// dual to its plabic tiling: one white vertex per clique `{K ∪ a}` (`|K| = k−1`), one black
/// vertex per clique `{L ∖ a}` (`|L| = k+1`), cliques with at least three members only.
pub fn plabic_from_collection(n: usize, k: usize, c: &[Subset]) -> Result<PlabicGraph, PlabicError> {
    if k == 0 || k >= n || c.iter().any(|s| s.n() != n || s.len() != k) {
        return Err(PlabicError::InvalidArgument("collection must consist of k-subsets with 0 < k < n".into()));
    }
    let set: HashSet<Subset> = c.iter().copied().collect();
    let mut cliques: BTreeMap<(u8, u64), Vec<usize>> = BTreeMap::new();
    for s in c {
        for a in s.elems() {
            let key = s.without(a);
            cliques.entry((0, key.mask())).or_insert_with(|| (1..=n).filter(|&b| !key.contains(b) && set.contains(&key.with(b))).collect());
        }
        for b in (1..=n).filter(|&b| !s.contains(b)) {
            let key = s.with(b);
            cliques.entry((1, key.mask())).or_insert_with(|| key.elems().into_iter().filter(|&a| set.contains(&key.without(a))).collect());
        }
    }
    let mut g = PlabicGraph::boundary_only(n);
    // side {I, J} of the tiling -> (vertex, its half-edge slot)
    let mut sides: HashMap<(u64, u64), Vec<usize>> = HashMap::new();
    let mut rotations: Vec<(usize, Vec<(u64, u64)>)> = Vec::new();
    for (&(kind, mask), elems) in &cliques {
        if elems.len() < 3 {
            continue;
        }
        let key = Subset::from_mask(n, mask);
        let member = |a: usize| if kind == 0 { key.with(a) } else { key.without(a) };
        let v = g.new_vertex(if kind == 0 { Color::White } else { Color::Black });
        let s = elems.len();
        let mut rot = Vec::with_capacity(s);
        // counterclockwise = sides in decreasing order
        for t in (0..s).rev() {
            let (x, y) = (member(elems[t]).mask(), member(elems[(t + 1) % s]).mask());
            let side = (x.min(y), x.max(y));
            sides.entry(side).or_default().push(v);
            rot.push(side);
        }
        rotations.push((v, rot));
    }
    let interval = |j: usize| Subset::of(n, &(0..k).map(|t| (j - 1 + t) % n + 1).collect::<Vec<_>>());
    let mut boundary_side: HashMap<(u64, u64), usize> = HashMap::new();
    for j in 1..=n {
        let (x, y) = (interval(j).mask(), interval(j % n + 1).mask());
        // faces [j, j+k−1] and [j+1, j+k] meet at boundary vertex j
        boundary_side.insert((x.min(y), x.max(y)), j);
    }
    let mut edge_of: HashMap<(u64, u64), usize> = HashMap::new();
    let mut sorted_sides: Vec<_> = sides.keys().copied().collect();
    sorted_sides.sort_unstable();
    for side in sorted_sides {
        let owners = &sides[&side];
        match (owners.len(), boundary_side.get(&side)) {
            (2, None) => {
                let e = g.new_edge(owners[0], owners[1], false);
                edge_of.insert(side, e);
            }
            (1, Some(&b)) => {
                let e = g.new_edge(owners[0], b - 1, false);
                edge_of.insert(side, e);
                g.set_boundary_dart(b - 1, 2 * e + 1);
            }
            _ => return Err(PlabicError::InvalidArgument("collection is not a maximal weakly separated collection".into())),
        }
    }
    for b in 1..=n {
        if g.boundary_dart(b).is_none() {
            return Err(PlabicError::InvalidArgument("collection is not a maximal weakly separated collection".into()));
        }
    }
    for (v, rot) in rotations {
        g.rot[v] = rot
            .iter()
            .map(|side| {
                let e = edge_of[side];
                if g.org(2 * e) == v {
                    2 * e
                } else {
                    2 * e + 1
                }
            })
            .collect();
    }
    g.validate()?;
    Ok(g)
}

/// Four consecutive intervals `T_1 … T_4` of lengths `(α_1, β_1, α_2, β_2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Blocks {
    pub lengths: [usize; 4],
}

impl Blocks {
    pub fn n(&self) -> usize {
        self.lengths.iter().sum()
    }

    pub fn k(&self) -> usize {
        self.lengths[0] + self.lengths[2]
    }

    /// Start (1-based) of block `t`.
    fn start(&self, t: usize) -> usize {
        1 + self.lengths[..t].iter().sum::<usize>()
    }

    pub fn block(&self, t: usize) -> Vec<usize> {
        (self.start(t)..self.start(t) + self.lengths[t]).collect()
    }

    /// `(|W ∩ T_1|, …, |W ∩ T_4|)`.
    pub fn project(&self, w: &Subset) -> [usize; 4] {
        let mut x = [0; 4];
        for (t, slot) in x.iter_mut().enumerate() {
            *slot = self.block(t).iter().filter(|&&i| w.contains(i)).count();
        }
        x
    }

    /// `W ∩ T_t` is a final segment of `T_t` for every `t`.
    pub fn is_suffix_form(&self, w: &Subset) -> bool {
        let x = self.project(w);
        (0..4).all(|t| {
            let b = self.block(t);
            b[b.len() - x[t]..].iter().all(|&i| w.contains(i))
        })
    }

    pub fn suffix_set(&self, x: [usize; 4]) -> Subset {
        let mut elems = Vec::new();
        for (t, &xt) in x.iter().enumerate() {
            let b = self.block(t);
            elems.extend_from_slice(&b[b.len() - xt..]);
        }
        Subset::of(self.n(), &elems)
    }

    /// `I = T_1 ∪ T_3`.
    pub fn i_set(&self) -> Subset {
        self.suffix_set([self.lengths[0], 0, self.lengths[2], 0])
    }

    /// `J = T_2 ∪ T_4`.
    pub fn j_set(&self) -> Subset {
        self.suffix_set([0, self.lengths[1], 0, self.lengths[3]])
    }

    /// Suffix-form sets on the upper boundary of the pyramid with apex `π(I)`:
    /// `min(α_1 − x_1, x_2, α_2 − x_3, x_4) = 0`.
    pub fn surface(&self) -> Vec<Subset> {
        let [a1, b1, a2, b2] = self.lengths;
        let k = self.k();
        let mut out = Vec::new();
        for x2 in 0..=b1 {
            for x3 in 0..=a2 {
                for x4 in 0..=b2 {
                    let Some(x1) = k.checked_sub(x2 + x3 + x4) else { continue };
                    if x1 > a1 {
                        continue;
                    }
                    if (a1 - x1).min(x2).min(a2 - x3).min(x4) == 0 {
                        out.push(self.suffix_set([x1, x2, x3, x4]));
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Faces still to move in a chain reaction: `x_1, x_3 ≥ 1`, `x_2 < β_1`, `x_4 < β_2`.
    fn active(&self, w: &Subset) -> Option<[usize; 4]> {
        if !self.is_suffix_form(w) {
            return None;
        }
        let x = self.project(w);
        (x[0] >= 1 && x[2] >= 1 && x[1] < self.lengths[1] && x[3] < self.lengths[3]).then_some(x)
    }
}

#[derive(Clone, Debug)]
pub struct Honeycomb {
    pub blocks: Blocks,
    pub graph: PlabicGraph,
    /// The honeycomb faces.
    pub surface: Vec<Subset>,
    /// The surface completed to a maximal weakly separated collection.
    pub collection: Vec<Subset>,
}

impl Honeycomb {
    pub fn n(&self) -> usize {
        self.blocks.n()
    }

    pub fn k(&self) -> usize {
        self.blocks.k()
    }

    /// The square face `I`.
    pub fn square_face(&self) -> Subset {
        self.blocks.i_set()
    }

    /// The label reached by the chain reaction.
    /// The bounded honeycomb faces: the square face and the `b_1·b_2 − 1` hexagons.
    pub fn cells(&self) -> Vec<Subset> {
        self.surface.iter().filter(|w| self.blocks.active(w).is_some()).copied().collect()
    }

    /// The hexagonal honeycomb faces.
    pub fn hexagons(&self) -> Vec<Subset> {
        let i = self.square_face();
        self.cells().into_iter().filter(|w| *w != i).collect()
    }

    pub fn target(&self) -> Subset {
        self.blocks.j_set()
    }
}

/// Honeycomb for block lengths `(α_1, β_1, α_2, β_2)` with `α_1 + α_2 = β_1 + β_2`.
pub fn honeycomb_with_blocks(lengths: [usize; 4]) -> Result<Honeycomb, PlabicError> {
    if lengths.contains(&0) || lengths[0] + lengths[2] != lengths[1] + lengths[3] {
        return Err(PlabicError::InvalidArgument("block lengths must be positive with α₁ + α₂ = β₁ + β₂".into()));
    }
    let blocks = Blocks { lengths };
    let (n, k) = (blocks.n(), blocks.k());
    if n > crate::minors::MAX_N {
        return Err(PlabicError::InvalidArgument(format!("n = {n} is too large")));
    }
    let surface = blocks.surface();
    if !is_ws_collection(&surface) {
        return Err(PlabicError::InvalidArgument("honeycomb faces are not weakly separated".into()));
    }
    let mut collection = greedy_ws_completion(&surface, &lex_k_subsets(n, k));
    collection.sort();
    let graph = plabic_from_collection(n, k, &collection)?;
    Ok(Honeycomb { blocks, graph, surface, collection })
}

/// The `b1 × b2` honeycomb: blocks `(b1 + b2 − 1, b1, 1, b2)`.
pub fn honeycomb(b1: usize, b2: usize) -> Result<Honeycomb, PlabicError> {
    if b1 == 0 || b2 == 0 {
        return Err(PlabicError::InvalidArgument("honeycomb dimensions must be positive".into()));
    }
    honeycomb_with_blocks([b1 + b2 - 1, b1, 1, b2])
}

/// A `2 × 2` honeycomb wrapped in one layer: blocks `(4, 3, 2, 3)`.
pub fn layered_honeycomb() -> Honeycomb {
    honeycomb_with_blocks([4, 3, 2, 3]).expect("fixed instance")
}

#[derive(Clone, Debug)]
pub struct ChainReaction {
    pub script: MoveScript,
    pub final_label: Subset,
    pub square_moves: usize,
    /// Square moves per pass; pass `p` moves faces with `x_3 = α_2 − p + 1`.
    pub passes: Vec<usize>,
    /// Face labels at the end of each pass.
    pub pass_labels: Vec<Vec<Subset>>,
    /// Labels flipped, in order, as `(old, new)`.
    pub flips: Vec<(Subset, Subset)>,
    pub graph: PlabicGraph,
}

/// Square moves propagating from the square face until no honeycomb face can move.
pub fn chain_reaction(h: &Honeycomb) -> Result<ChainReaction, PlabicError> {
    let mut g = h.graph.clone();
    let mut script = normalize(&mut g);
    let a2 = h.blocks.lengths[2];
    let (mut passes, mut pass_labels, mut flips) = (Vec::new(), Vec::new(), Vec::new());
    for level in (1..=a2).rev() {
        let mut count = 0;
        loop {
            let labels = g.face_labels()?;
            let mut next: Option<([usize; 4], Subset)> = None;
            for (f, w) in labels.labels.iter().enumerate() {
                let Some(x) = h.blocks.active(w) else { continue };
                if x[2] != level || !is_square_face(&g, &labels.darts[f]) {
                    continue;
                }
                let key = (x[1] + x[3], *w);
                if next.as_ref().is_none_or(|(y, v)| key < (y[1] + y[3], *v)) {
                    next = Some((x, *w));
                }
            }
            let Some((_, w)) = next else { break };
            let before: HashSet<Subset> = labels.labels.iter().copied().collect();
            script.extend(square_move_at(&mut g, &w)?);
            let after = g.face_labels()?;
            let new: Vec<Subset> = after.labels.iter().copied().filter(|s| !before.contains(s)).collect();
            if new.len() != 1 {
                return Err(PlabicError::MalformedGraph("a square move must change exactly one face label".into()));
            }
            flips.push((w, new[0]));
            count += 1;
        }
        passes.push(count);
        pass_labels.push(g.face_labels()?.sorted_labels());
    }
    let script = MoveScript { moves: script };
    let square_moves = script.square_moves();
    let target = h.target();
    let labels = g.face_labels()?;
    if labels.find(&target).is_none() {
        return Err(PlabicError::MalformedGraph(format!("chain reaction did not reach {target}")));
    }
    Ok(ChainReaction { script, final_label: target, square_moves, passes, pass_labels, flips, graph: g })
}

pub fn layered_chain_reaction() -> Result<ChainReaction, PlabicError> {
    chain_reaction(&layered_honeycomb())
}

/// `π_I(W) = (|W ∩ T_1|, …, |W ∩ T_4|)` for `T_1 = [1,a]`, `T_2 = [a+1,b]`, `T_3 = [b+1,c]`, `T_4 = [c+1,n]`.
pub fn project_pi(split: (usize, usize, usize), w: &Subset) -> Result<[usize; 4], PlabicError> {
    let (a, b, c) = split;
    let n = w.n();
    if !(1 <= a && a < b && b < c && c < n) {
        return Err(PlabicError::InvalidArgument("need 1 ≤ a < b < c < n".into()));
    }
    Ok(Blocks { lengths: [a, b - a, c - b, n - c] }.project(w))
}

