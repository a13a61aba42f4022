use num_bigint::BigUint;
use num_traits::Zero;

use super::cliques::{adjacency, maximal_cliques};
use super::separation::is_sorted;
use crate::exactnum::Rational;
use crate::minors::{minor_index_map, sort_pair, Subset};

/// The hyperplane `x_i + … + x_j = r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntervalHyperplane {
    pub i: usize,
    pub j: usize,
    pub r: usize,
}

fn interval_count(s: &Subset, i: usize, j: usize) -> usize {
    s.count_in(i, j)
}

/// Hyperplanes `H_{i,j,r}` having the simplex `P_S` in one closed half-space and
/// `e_J` strictly in the other.
pub fn separating_hyperplanes(s: &[Subset], j: &Subset) -> Vec<IntervalHyperplane> {
    let n = j.n();
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a..=n {
            let lo = s.iter().map(|x| interval_count(x, a, b)).min().unwrap_or(0);
            let hi = s.iter().map(|x| interval_count(x, a, b)).max().unwrap_or(0);
            let v = interval_count(j, a, b);
            let range = if v > hi { hi..v } else if v < lo { v + 1..lo + 1 } else { 0..0 };
            out.extend(range.map(|r| IntervalHyperplane { i: a, j: b, r }));
        }
    }
    out
}

/// `d(S, J)`: the number of hyperplanes `H_{i,j,r}` separating `P_S` from `e_J`.
pub fn separation_distance(s: &[Subset], j: &Subset) -> usize {
    let n = j.n();
    let mut d = 0;
    for a in 1..=n {
        for b in a..=n {
            let (mut lo, mut hi) = (usize::MAX, 0);
            for x in s {
                let c = interval_count(x, a, b);
                lo = lo.min(c);
                hi = hi.max(c);
            }
            let v = interval_count(j, a, b);
            d += v.saturating_sub(hi) + lo.saturating_sub(v);
        }
    }
    d
}

/// A member `I ∈ S` whose sorting `(I′, J′)` with `J` is strictly closer to `S` on both sides.
pub fn sorting_witness(s: &[Subset], j: &Subset) -> Option<Subset> {
    let d = separation_distance(s, j);
    if d == 0 {
        return None;
    }
    s.iter()
        .find(|i| {
            let (a, b) = sort_pair(i, j);
            separation_distance(s, &a) < d && separation_distance(s, &b) < d
        })
        .copied()
}

/// Closed under sorting of any two members.
pub fn is_sort_closed(s: &[Subset]) -> bool {
    let set: std::collections::HashSet<Subset> = s.iter().copied().collect();
    s.iter().all(|a| {
        s.iter().all(|b| {
            let (x, y) = sort_pair(a, b);
            set.contains(&x) && set.contains(&y)
        })
    })
}

/// Maximal sorted subsets of `S` (maximal by inclusion within `S`).
pub fn maximal_sorted_within(s: &[Subset]) -> Vec<Vec<Subset>> {
    let adj = adjacency(s, is_sorted);
    maximal_cliques(&adj).into_iter().map(|c| c.into_iter().map(|t| s[t]).collect()).collect()
}

/// Number of alcoves in `P_S` for a sort-closed `S`, counted as maximal sorted subsets.
pub fn count_alcoves(s: &[Subset]) -> BigUint {
    if s.is_empty() {
        return BigUint::zero();
    }
    BigUint::from(maximal_sorted_within(s).len())
}

/// Dimension of the polytope with vertices `e_I`, `I ∈ S`.
pub fn affine_dimension(s: &[Subset]) -> usize {
    if s.is_empty() {
        return 0;
    }
    let n = s[0].n();
    let mut rows: Vec<Vec<Rational>> =
        s.iter().map(|x| (1..=n).map(|i| Rational::from_integer((x.contains(i) as i64).into())).collect()).collect();
    let mut rank = 0;
    for c in 0..n {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = &rows[r][c] / &rows[rank][c];
                for t in c..n {
                    let v = &f * &rows[rank][t];
                    rows[r][t] -= v;
                }
            }
        }
        rank += 1;
    }
    // all points lie on x_1 + … + x_n = k, which misses the origin
    rank - 1
}

/// `I(i, j) = ([k] ∖ {k+1−i}) ∪ {j+k}`, the Plücker label of entry `a_ij`.
pub fn entry_label(i: usize, j: usize, k: usize, n: usize) -> Subset {
    minor_index_map(&[i], &[j], k, n - k).expect("entry indices in range")
}

/// `S_{k,n}`: the labels of all matrix entries.
pub fn entry_labels(k: usize, n: usize) -> Vec<Subset> {
    (1..=k).flat_map(|i| (1..=n - k).map(move |j| entry_label(i, j, k, n))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::sorted::{enumerate_maximal_sorted, eulerian};
    use crate::minors::{binom, k_subsets};

    #[test]
    fn distance_zero_iff_member() {
        for (n, k) in [(5, 2), (6, 3), (7, 3)] {
            for s in enumerate_maximal_sorted(n, k).iter().take(20) {
                for j in k_subsets(n, k) {
                    let d = separation_distance(s, &j);
                    assert_eq!(d == 0, s.contains(&j));
                    assert_eq!(d, separating_hyperplanes(s, &j).len());
                }
            }
        }
    }

    #[test]
    fn sorting_strictly_decreases_distance() {
        for (n, k) in [(6, 3), (7, 3), (8, 4)] {
            for s in enumerate_maximal_sorted(n, k).iter().step_by(7).take(10) {
                for j in k_subsets(n, k).filter(|j| !s.contains(j)) {
                    let w = sorting_witness(s, &j).expect("witness exists");
                    let (a, b) = sort_pair(&w, &j);
                    let d = separation_distance(s, &j);
                    assert!(separation_distance(s, &a) < d && separation_distance(s, &b) < d);
                }
            }
        }
    }

    #[test]
    fn alcove_counts() {
        for n in 3..=8 {
            for k in 1..n {
                let all: Vec<Subset> = k_subsets(n, k).collect();
                assert!(is_sort_closed(&all));
                assert_eq!(count_alcoves(&all), eulerian(n - 1, k - 1));
                assert_eq!(affine_dimension(&all), n - 1);
            }
        }
        for (k, n) in [(2, 5), (3, 6), (3, 7), (4, 8)] {
            let s = entry_labels(k, n);
            assert!(is_sort_closed(&s));
            assert_eq!(count_alcoves(&s), BigUint::from(binom(n - 2, k - 1)));
            let d = affine_dimension(&s);
            assert!(maximal_sorted_within(&s).iter().all(|c| c.len() == d + 1));
        }
        let single = [Subset::of(5, &[1, 3])];
        assert!(is_sort_closed(&single));
        assert_eq!(count_alcoves(&single), BigUint::from(1u32));
    }

    #[test]
    fn entry_label_matches_definition() {
        assert_eq!(entry_label(1, 1, 2, 5), Subset::of(5, &[1, 3]));
        assert_eq!(entry_label(2, 3, 3, 6), Subset::of(6, &[1, 3, 6]));
    }
}
