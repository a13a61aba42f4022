use super::graph2::{enumerate_maximal_thrackles, enumerate_triangulations, Graph2};

/// Largest number of equal (resp. non-zero) 2×2 minors achievable on the nonnegative
/// Grassmannian `Gr(2, n)`: `3m²`, `m(3m+2)`, `(m+1)(3m+1)` for `n = 3m, 3m+1, 3m+2`.
pub fn nonneg_gr2_max(n: usize) -> u64 {
    let m = (n / 3) as u64;
    match n % 3 {
        0 => 3 * m * m,
        1 => m * (3 * m + 2),
        _ => (m + 1) * (3 * m + 1),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gr2Optimum {
    /// best over triangulations of the block polygon
    pub smallest: u64,
    /// best over maximal thrackles of the block polygon
    pub largest: u64,
}

fn positive_compositions(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if parts == 1 {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for first in 1..=total - (parts - 1) {
        prefix.push(first);
        positive_compositions(total - first, parts - 1, prefix, out);
        prefix.pop();
    }
}

fn weight(g: &Graph2, blocks: &[usize]) -> u64 {
    g.edges.iter().map(|&(a, b)| (blocks[a - 1] * blocks[b - 1]) as u64).sum()
}

/// Columns collapse into `r` parallel classes of sizes `n_1, …, n_r`; the equal minors
/// then come from a triangulation or a thrackle on the `r` classes, weighted by `n_a n_b`.
pub fn nonneg_gr2_optimum(n: usize) -> Gr2Optimum {
    let mut best = Gr2Optimum { smallest: 0, largest: 0 };
    for r in 2..=n {
        let (tri, thr) = if r == 2 {
            let e = vec![Graph2::new(2, [(1, 2)])];
            (e.clone(), e)
        } else {
            (enumerate_triangulations(r), enumerate_maximal_thrackles(r))
        };
        let mut comps = Vec::new();
        positive_compositions(n, r, &mut Vec::new(), &mut comps);
        for c in &comps {
            for g in &tri {
                best.smallest = best.smallest.max(weight(g, c));
            }
            for g in &thr {
                best.largest = best.largest.max(weight(g, c));
            }
        }
    }
    best
}

pub fn nonneg_gr2_bruteforce(n: usize) -> u64 {
    let o = nonneg_gr2_optimum(n);
    o.smallest.max(o.largest)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_values() {
        assert_eq!(nonneg_gr2_max(6), 12);
        assert_eq!(nonneg_gr2_max(7), 16);
        assert_eq!(nonneg_gr2_max(8), 21);
    }

    #[test]
    fn brute_force_agrees() {
        for n in 3..=11 {
            assert_eq!(nonneg_gr2_bruteforce(n), nonneg_gr2_max(n), "n={n}");
        }
    }
}
