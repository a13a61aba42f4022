use crate::minors::{k_subsets, Subset};

/// Signs of the symmetric difference in increasing order: `true` for `I ∖ J`.
fn difference_signs(i: &Subset, j: &Subset) -> Vec<bool> {
    let d = i.mask() ^ j.mask();
    let mut out = Vec::with_capacity(d.count_ones() as usize);
    let mut m = d;
    while m != 0 {
        let t = m.trailing_zeros();
        out.push(i.mask() >> t & 1 == 1);
        m &= m - 1;
    }
    out
}

fn cyclic_changes(s: &[bool]) -> usize {
    (0..s.len()).filter(|&t| s[t] != s[(t + 1) % s.len()]).count()
}

/// `I ∖ J` and `J ∖ I` are separated by a chord of the circle.
pub fn is_weakly_separated(i: &Subset, j: &Subset) -> bool {
    debug_assert_eq!(i.len(), j.len());
    cyclic_changes(&difference_signs(i, j)) <= 2
}

/// `I ∖ J` and `J ∖ I` interlace around the circle.
pub fn is_sorted(i: &Subset, j: &Subset) -> bool {
    debug_assert_eq!(i.len(), j.len());
    let s = difference_signs(i, j);
    cyclic_changes(&s) == s.len()
}

pub fn is_ws_collection(c: &[Subset]) -> bool {
    c.iter().enumerate().all(|(a, x)| c[a + 1..].iter().all(|y| is_weakly_separated(x, y)))
}

pub fn is_sorted_collection(c: &[Subset]) -> bool {
    c.iter().enumerate().all(|(a, x)| c[a + 1..].iter().all(|y| is_sorted(x, y)))
}

/// Pairwise weakly separated with the maximal size `k(n−k)+1`.
pub fn is_maximal_ws(c: &[Subset], n: usize, k: usize) -> bool {
    c.len() == k * (n - k) + 1 && is_ws_collection(c)
}

/// k-subsets of [n] in lexicographic order of their sorted element lists.
pub fn lex_k_subsets(n: usize, k: usize) -> Vec<Subset> {
    let mut v: Vec<Subset> = k_subsets(n, k).collect();
    v.sort_by_cached_key(|s| s.elems());
    v
}

/// Extends a weakly separated collection greedily, scanning candidates in the
/// given order. Scanning every k-subset once yields a maximal collection.
pub fn greedy_ws_completion(start: &[Subset], order: &[Subset]) -> Vec<Subset> {
    let mut out: Vec<Subset> = start.to_vec();
    for c in order {
        if !out.contains(c) && out.iter().all(|x| is_weakly_separated(x, c)) {
            out.push(*c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minors::r_function;

    fn s(n: usize, e: &[usize]) -> Subset {
        Subset::of(n, e)
    }

    #[test]
    fn examples() {
        assert!(is_weakly_separated(&s(4, &[1, 2]), &s(4, &[3, 4])));
        assert!(!is_weakly_separated(&s(4, &[1, 3]), &s(4, &[2, 4])));
        assert!(!is_weakly_separated(&s(8, &[1, 2, 3, 6]), &s(8, &[4, 5, 7, 8])));
        assert!(is_sorted(&s(6, &[1, 3, 5]), &s(6, &[2, 4, 6])));
        assert!(!is_sorted(&s(6, &[1, 2, 4]), &s(6, &[3, 5, 6])));
        assert!(is_sorted(&s(3, &[1, 2]), &s(3, &[1, 3])));
    }

    #[test]
    fn sorted_iff_r_at_most_one() {
        for n in 2..=9 {
            for k in 1..n {
                let subs: Vec<Subset> = k_subsets(n, k).collect();
                for a in &subs {
                    for b in &subs {
                        let by_r = (1..=n).all(|x| (x..=n).all(|y| r_function(a, b, x, y) <= 1));
                        assert_eq!(is_sorted(a, b), by_r, "{a} {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn k2_matches_chords() {
        // for k = 2 weak separation is non-crossing, sortedness is crossing (or sharing a vertex)
        let n = 7;
        for a in k_subsets(n, 2) {
            for b in k_subsets(n, 2) {
                let (x, y) = (a.elems(), b.elems());
                let share = a.mask() & b.mask() != 0;
                let cross = (x[0] < y[0] && y[0] < x[1] && x[1] < y[1]) || (y[0] < x[0] && x[0] < y[1] && y[1] < x[1]);
                assert_eq!(is_weakly_separated(&a, &b), share || !cross);
                assert_eq!(is_sorted(&a, &b), share || cross);
            }
        }
    }

    #[test]
    fn greedy_completion_reaches_maximal_size() {
        for (n, k) in [(5, 2), (6, 3), (8, 4)] {
            let c = greedy_ws_completion(&[], &lex_k_subsets(n, k));
            assert!(is_maximal_ws(&c, n, k), "({n},{k}) size {}", c.len());
        }
    }
}
