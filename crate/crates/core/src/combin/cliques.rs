use fixedbitset::FixedBitSet;
use rayon::prelude::*;

/// All maximal cliques of the graph with the given adjacency rows, each sorted
/// increasingly; the list is sorted as well.
///
/// Bron–Kerbosch with pivoting, parallelised over the first branching level
/// (clique `∋ v` with all other members after `v`, excluded set = earlier neighbours).
pub fn maximal_cliques(adj: &[FixedBitSet]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut out: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .flat_map_iter(|v| {
            let mut p = adj[v].clone();
            let mut x = adj[v].clone();
            for u in 0..n {
                if u <= v {
                    p.set(u, false);
                } else {
                    x.set(u, false);
                }
            }
            let mut found = Vec::new();
            let mut r = vec![v];
            bron_kerbosch(adj, &mut r, p, x, &mut found);
            found
        })
        .collect();
    for c in out.iter_mut() {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(adj: &[FixedBitSet], r: &mut Vec<usize>, mut p: FixedBitSet, mut x: FixedBitSet, out: &mut Vec<Vec<usize>>) {
    if p.is_clear() {
        if x.is_clear() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p.ones().chain(x.ones()).max_by_key(|&u| adj[u].intersection(&p).count()).unwrap();
    let cand: Vec<usize> = p.ones().filter(|&u| !adj[pivot].contains(u)).collect();
    for u in cand {
        let mut p2 = p.clone();
        p2.intersect_with(&adj[u]);
        let mut x2 = x.clone();
        x2.intersect_with(&adj[u]);
        r.push(u);
        bron_kerbosch(adj, r, p2, x2, out);
        r.pop();
        p.set(u, false);
        x.insert(u);
    }
}

/// Adjacency rows for a symmetric predicate on `items`.
pub(crate) fn adjacency<T: Sync>(items: &[T], related: impl Fn(&T, &T) -> bool + Sync) -> Vec<FixedBitSet> {
    (0..items.len())
        .into_par_iter()
        .map(|a| {
            let mut row = FixedBitSet::with_capacity(items.len());
            for b in 0..items.len() {
                if a != b && related(&items[a], &items[b]) {
                    row.insert(b);
                }
            }
            row
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(adj: &[FixedBitSet]) -> Vec<Vec<usize>> {
        let n = adj.len();
        let is_clique = |m: u32| (0..n).all(|a| m >> a & 1 == 0 || (0..n).all(|b| a == b || m >> b & 1 == 0 || adj[a].contains(b)));
        let mut out = Vec::new();
        for m in 1u32..1 << n {
            if is_clique(m) && (0..n).all(|c| m >> c & 1 == 1 || !is_clique(m | 1 << c)) {
                out.push((0..n).filter(|&a| m >> a & 1 == 1).collect::<Vec<_>>());
            }
        }
        out.sort();
        out
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let n = rng.gen_range(1..=10);
            let mut adj = vec![FixedBitSet::with_capacity(n); n];
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(0.5) {
                        adj[a].insert(b);
                        adj[b].insert(a);
                    }
                }
            }
            assert_eq!(maximal_cliques(&adj), brute(&adj));
        }
    }
}
