use super::subset::{range_mask, Subset};

/// `r(I,J;a,b) = | |(I∖J) ∩ [a,b]| − |(J∖I) ∩ [a,b]| |`.
pub fn r_function(i: &Subset, j: &Subset, a: usize, b: usize) -> usize {
    let m = range_mask(a, b);
    let x = (i.mask() & !j.mask() & m).count_ones() as i64;
    let y = (j.mask() & !i.mask() & m).count_ones() as i64;
    (x - y).unsigned_abs() as usize
}

fn same_multiset_union(i: &Subset, j: &Subset, k: &Subset, l: &Subset) -> bool {
    i.mask() | j.mask() == k.mask() | l.mask() && i.mask() & j.mask() == k.mask() & l.mask()
}

/// True iff `Δ_I Δ_J ≥ Δ_K Δ_L` is forced on the totally positive part: equal
/// multiset unions and `r(I,J;a,b) ≤ r(K,L;a,b)` on every interval.
pub fn skandera_dominates(i: &Subset, j: &Subset, k: &Subset, l: &Subset) -> bool {
    if !same_multiset_union(i, j, k, l) {
        return false;
    }
    let n = i.n();
    // only positions in the symmetric difference change r, so it suffices to
    // scan intervals between consecutive difference points
    let diff = i.mask() ^ j.mask();
    let pts: Vec<usize> = (1..=n).filter(|&p| diff >> (p - 1) & 1 == 1).collect();
    for s in 0..pts.len() {
        for t in s..pts.len() {
            if r_function(i, j, pts[s], pts[t]) > r_function(k, l, pts[s], pts[t]) {
                return false;
            }
        }
    }
    true
}

/// Sorts the multiset union and deals its elements alternately into two sets.
pub fn sort_pair(i: &Subset, j: &Subset) -> (Subset, Subset) {
    let n = i.n();
    let mut all: Vec<usize> = i.elems();
    all.extend(j.elems());
    all.sort_unstable();
    let (mut a, mut b) = (0u64, 0u64);
    for (t, e) in all.iter().enumerate() {
        if t % 2 == 0 {
            a |= 1 << (e - 1);
        } else {
            b |= 1 << (e - 1);
        }
    }
    (Subset::from_mask(n, a), Subset::from_mask(n, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minors::k_subsets;

    fn s(n: usize, e: &[usize]) -> Subset {
        Subset::of(n, e)
    }

    #[test]
    fn r_examples() {
        assert_eq!(r_function(&s(6, &[1, 2, 3]), &s(6, &[4, 5, 6]), 1, 3), 3);
        assert_eq!(r_function(&s(6, &[1, 3, 5]), &s(6, &[2, 4, 6]), 1, 1), 1);
    }

    #[test]
    fn dominance_examples() {
        assert!(skandera_dominates(&s(6, &[1, 3, 5]), &s(6, &[2, 4, 6]), &s(6, &[1, 2, 3]), &s(6, &[4, 5, 6])));
        assert!(skandera_dominates(&s(4, &[1, 3]), &s(4, &[2, 4]), &s(4, &[1, 2]), &s(4, &[3, 4])));
        assert!(!skandera_dominates(&s(4, &[1, 2]), &s(4, &[3, 4]), &s(4, &[1, 3]), &s(4, &[2, 4])));
        assert!(!skandera_dominates(&s(4, &[1, 2]), &s(4, &[3, 4]), &s(4, &[1, 2]), &s(4, &[2, 4])));
    }

    #[test]
    fn interval_scan_matches_all_intervals() {
        let n = 6;
        let subs: Vec<Subset> = k_subsets(n, 3).collect();
        for i in &subs {
            for j in &subs {
                for k in &subs {
                    let l = Subset::from_mask(n, (i.mask() | j.mask()) ^ k.mask() | (i.mask() & j.mask()));
                    if l.len() != 3 {
                        continue;
                    }
                    let full = same_multiset_union(i, j, k, &l)
                        && (1..=n).all(|a| (a..=n).all(|b| r_function(i, j, a, b) <= r_function(k, &l, a, b)));
                    assert_eq!(skandera_dominates(i, j, k, &l), full);
                }
            }
        }
    }

    #[test]
    fn sort_pair_examples() {
        assert_eq!(sort_pair(&s(6, &[1, 2, 4]), &s(6, &[3, 5, 6])), (s(6, &[1, 3, 5]), s(6, &[2, 4, 6])));
        assert_eq!(sort_pair(&s(3, &[1, 2]), &s(3, &[2, 3])), (s(3, &[1, 2]), s(3, &[2, 3])));
        let (a, b) = sort_pair(&s(6, &[1, 3, 5]), &s(6, &[2, 4, 6]));
        assert_eq!((a, b), (s(6, &[1, 3, 5]), s(6, &[2, 4, 6])));
    }
}
