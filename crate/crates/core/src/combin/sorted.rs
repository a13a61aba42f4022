use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::cliques::{adjacency, maximal_cliques};
use super::separation::{is_sorted, is_weakly_separated};
use crate::minors::{k_subsets, Subset};

/// All maximal sorted collections in `C([n], k)`, members in colex order.
pub fn enumerate_maximal_sorted(n: usize, k: usize) -> Vec<Vec<Subset>> {
    let subs: Vec<Subset> = k_subsets(n, k).collect();
    let adj = adjacency(&subs, is_sorted);
    maximal_cliques(&adj).into_iter().map(|c| c.into_iter().map(|t| subs[t]).collect()).collect()
}

/// All maximal weakly separated collections in `C([n], k)`, by clique search.
pub fn enumerate_maximal_ws(n: usize, k: usize) -> Vec<Vec<Subset>> {
    let subs: Vec<Subset> = k_subsets(n, k).collect();
    let adj = adjacency(&subs, is_weakly_separated);
    maximal_cliques(&adj).into_iter().map(|c| c.into_iter().map(|t| subs[t]).collect()).collect()
}

/// Eulerian number `A(n, k)`: permutations of `[n]` with exactly `k` descents.
pub fn eulerian(n: usize, k: usize) -> BigUint {
    let mut row: Vec<BigUint> = vec![BigUint::one()];
    for m in 1..=n {
        let mut next = vec![BigUint::zero(); m];
        for (j, slot) in next.iter_mut().enumerate() {
            let a = if j < row.len() { &row[j] * BigUint::from(j + 1) } else { BigUint::zero() };
            let b = if j >= 1 && j - 1 < row.len() { &row[j - 1] * BigUint::from(m - j) } else { BigUint::zero() };
            *slot = a + b;
        }
        row = next;
    }
    if n == 0 {
        return if k == 0 { BigUint::one() } else { BigUint::zero() };
    }
    row.get(k).cloned().unwrap_or_default()
}

/// Direct count of permutations of `[n]` with `k` descents (small `n` only).
pub fn eulerian_by_descents(n: usize, k: usize) -> u64 {
    fn rec(perm: &mut Vec<usize>, used: &mut [bool], n: usize, k: usize, des: usize) -> u64 {
        if des > k {
            return 0;
        }
        if perm.len() == n {
            return (des == k) as u64;
        }
        let mut total = 0;
        for v in 0..n {
            if !used[v] {
                let d = des + perm.last().is_some_and(|&l| l > v) as usize;
                used[v] = true;
                perm.push(v);
                total += rec(perm, used, n, k, d);
                perm.pop();
                used[v] = false;
            }
        }
        total
    }
    rec(&mut Vec::new(), &mut vec![false; n], n, k, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::separation::is_sorted_collection;

    #[test]
    fn eulerian_values() {
        assert_eq!(eulerian(4, 2), BigUint::from(11u32));
        assert_eq!(eulerian(5, 2), BigUint::from(66u32));
        for n in 1..12 {
            assert_eq!(eulerian(n, 0), BigUint::one());
            assert_eq!(eulerian(n, 1), BigUint::from((1u64 << n) - n as u64 - 1));
        }
        for n in 1..=7 {
            for k in 0..n {
                assert_eq!(eulerian(n, k), BigUint::from(eulerian_by_descents(n, k)));
            }
        }
    }

    #[test]
    fn maximal_sorted_counts() {
        assert_eq!(enumerate_maximal_sorted(5, 3).len(), 11);
        assert_eq!(enumerate_maximal_sorted(6, 3).len(), 66);
        let singles = enumerate_maximal_sorted(6, 1);
        assert_eq!(singles.len(), 1);
        assert_eq!(singles[0].len(), 6);
        assert_eq!(enumerate_maximal_ws(6, 3).len(), 34);
        for n in 2..=7 {
            for k in 1..n {
                let ws = enumerate_maximal_ws(n, k);
                assert!(ws.iter().all(|c| c.len() == k * (n - k) + 1), "n={n} k={k}");
                let all = enumerate_maximal_sorted(n, k);
                assert_eq!(BigUint::from(all.len()), eulerian(n - 1, k - 1), "n={n} k={k}");
                assert!(all.iter().all(|c| c.len() == n && is_sorted_collection(c)));
            }
        }
    }
}
