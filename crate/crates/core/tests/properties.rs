use std::cmp::Ordering;
use std::collections::BTreeMap;

use eqminors::cluster::{evaluate_plucker, evaluate_plucker_random, mutation_distance, Distance, Seed, DEFAULT_BUDGET};
use eqminors::combin::{classify_pair, greedy_ws_completion, is_sorted, is_weakly_separated, is_ws_collection};
use eqminors::exactnum::{quad_cmp, rat};
use eqminors::minors::{
    extract_arrangement, k_subsets, phi_embed, r_function, random_positive_point, random_tp_matrix, sort_pair, ArrangementMode, MinorTable,
};
use eqminors::plabic::{apply_move_mut, honeycomb, random_move};
use eqminors::{ExactScalar, Interval, LaurentPoly, QuadExt, Rational, Subset};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::sample::subsequence;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rational() -> impl Strategy<Value = Rational> {
    (-10_000i64..=10_000, 1i64..=10_000).prop_map(|(p, q)| rat(p, q))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |x| *x != rat(0, 1))
}

/// `(n, I, J)` with `|I| = |J| = k`.
fn pair(max_n: usize) -> impl Strategy<Value = (usize, Subset, Subset)> {
    (3..=max_n)
        .prop_flat_map(|n| (Just(n), 1..n))
        .prop_flat_map(|(n, k)| {
            let all: Vec<usize> = (1..=n).collect();
            (Just(n), subsequence(all.clone(), k), subsequence(all, k))
        })
        .prop_map(|(n, i, j)| (n, Subset::of(n, &i), Subset::of(n, &j)))
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i32..=3, -3i32..=3, -20i64..=20), 1..5).prop_map(|terms| {
        let vars = ["x", "y"];
        terms.into_iter().fold(LaurentPoly::zero(&vars), |p, (a, b, c)| p.add(&LaurentPoly::monomial(&vars, vec![a, b], rat(c, 1))))
    })
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_collection(n: usize, k: usize, seed: u64) -> Vec<Subset> {
    let mut order: Vec<Subset> = k_subsets(n, k).collect();
    order.shuffle(&mut rng(seed));
    greedy_ws_completion(&[], &order)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rational_round_trips(x in rational(), y in nonzero_rational()) {
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert_eq!(&(&x * &y) / &y, x);
    }

    #[test]
    fn interval_ops_enclose_exact(x in rational(), y in nonzero_rational(), prec in 24u32..400) {
        let (ix, iy) = (Interval::from_rational(&x, prec), Interval::from_rational(&y, prec));
        prop_assert!(ix.add(&iy).contains_rational(&(&x + &y)));
        prop_assert!(ix.sub(&iy).contains_rational(&(&x - &y)));
        prop_assert!(ix.mul(&iy).contains_rational(&(&x * &y)));
        prop_assert!(ix.div(&iy).unwrap().contains_rational(&(&x / &y)));
    }

    #[test]
    fn laurent_exact_div_undoes_mul(p in laurent(), q in laurent()) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!(p.mul(&q).exact_div(&q).unwrap(), p);
    }

    #[test]
    fn quad_cmp_matches_wide_intervals(
        a in rational(), b in rational(), c in rational(), e in rational(),
        d in prop::sample::select(vec![2i64, 3, 5, 8_665_656_785_065]),
    ) {
        let d = BigInt::from(d);
        let x = QuadExt::new(a, b, d.clone()).unwrap();
        let y = QuadExt::new(c, e, d).unwrap();
        let exact = quad_cmp(&x, &y).unwrap();
        let by_interval = Interval::from_quad(&x, 4096).certified_cmp(&Interval::from_quad(&y, 4096));
        match exact {
            Ordering::Equal => prop_assert_eq!(x, y),
            o => prop_assert_eq!(by_interval, Some(o)),
        }
    }

    #[test]
    fn sort_pair_is_sorted_and_idempotent((_n, i, j) in pair(30)) {
        let (a, b) = sort_pair(&i, &j);
        prop_assert!(is_sorted(&a, &b));
        prop_assert_eq!(sort_pair(&a, &b), (a, b));
        prop_assert_eq!(a.mask() | b.mask(), i.mask() | j.mask());
        prop_assert_eq!(a.mask() & b.mask(), i.mask() & j.mask());
    }

    #[test]
    fn sorted_iff_r_at_most_one((n, i, j) in pair(10)) {
        let r_max = (1..=n).flat_map(|a| (a..=n).map(move |b| (a, b))).map(|(a, b)| r_function(&i, &j, a, b)).max().unwrap();
        prop_assert_eq!(is_sorted(&i, &j), r_max <= 1);
    }

    #[test]
    fn classify_pair_is_rotation_and_swap_invariant((n, i, j) in pair(12), s in 0usize..12) {
        let c = classify_pair(&i, &j).class;
        prop_assert_eq!(classify_pair(&j, &i).class, c);
        prop_assert_eq!(classify_pair(&i.rotate(s % n), &j.rotate(s % n)).class, c);
        prop_assert_eq!(is_weakly_separated(&i, &j), is_weakly_separated(&i.rotate(s % n), &j.rotate(s % n)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn three_term_plucker(n in 4usize..=8, seed in any::<u64>()) {
        let m = random_positive_point(2, n, &mut rng(seed));
        let p = |x: usize, y: usize| m.plucker(&Subset::of(n, &[x, y])).unwrap();
        for e in k_subsets(n, 4) {
            let [a, b, c, d] = <[usize; 4]>::try_from(e.elems()).unwrap();
            let lhs = p(a, c).mul(&p(b, d)).unwrap();
            let rhs = p(a, b).mul(&p(c, d)).unwrap().add(&p(a, d).mul(&p(b, c)).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn embedded_tp_matrix_has_no_zero_minors(k in 1usize..=3, m in 1usize..=4, seed in any::<u64>()) {
        let a = random_tp_matrix(k, m, &mut rng(seed));
        let t = MinorTable::compute(&phi_embed(&a)).unwrap();
        let arr = extract_arrangement(&t, ArrangementMode::Full).unwrap();
        prop_assert!(arr.zeros.is_empty());
        prop_assert_eq!(t.all_positive(), Some(true));
    }

    #[test]
    fn random_moves_keep_permutation_and_labels(b1 in 1usize..=3, b2 in 1usize..=3, seed in any::<u64>()) {
        let h = honeycomb(b1, b2).unwrap();
        let mut g = h.graph.clone();
        let pi = g.strand_permutation().unwrap();
        let faces = g.face_labels().unwrap().sorted_labels().len();
        let mut r = rng(seed);
        for _ in 0..50 {
            let Some(m) = random_move(&g, &mut r) else { break };
            apply_move_mut(&mut g, &m).unwrap();
        }
        prop_assert_eq!(g.strand_permutation().unwrap(), pi);
        prop_assert!(g.is_reduced());
        let labels = g.face_labels().unwrap().sorted_labels();
        prop_assert_eq!(labels.len(), faces);
        prop_assert!(is_ws_collection(&labels));
    }

    #[test]
    fn mutation_is_an_involution(nk in prop::sample::select(vec![(5usize, 2usize), (6, 3), (7, 3), (8, 4)]), seed in any::<u64>()) {
        let (n, k) = nk;
        let c = random_collection(n, k, seed);
        let mut r = rng(seed ^ 1);
        let values: BTreeMap<Subset, ExactScalar> = c.iter().map(|s| (*s, ExactScalar::int(rand::Rng::gen_range(&mut r, 1..=9)))).collect();
        let s = Seed::new(n, k, values).unwrap();
        for e in s.applicable() {
            let t = s.mutate(&e).unwrap();
            prop_assert_eq!(t.mutate(&e.inverse()).unwrap(), s.clone());
        }
    }

    #[test]
    fn evaluation_is_path_independent(nk in prop::sample::select(vec![(6usize, 2usize), (6, 3), (8, 4)]), seed in any::<u64>()) {
        let (n, k) = nk;
        let c = random_collection(n, k, seed);
        let mut r = rng(seed);
        let values: BTreeMap<Subset, ExactScalar> =
            c.iter().map(|s| (*s, ExactScalar::Rational(rat(rand::Rng::gen_range(&mut r, 1..=50), rand::Rng::gen_range(&mut r, 1..=7))))).collect();
        let s = Seed::new(n, k, values).unwrap();
        let j = *k_subsets(n, k).collect::<Vec<_>>().choose(&mut r).unwrap();
        let direct = evaluate_plucker(&s, &j, DEFAULT_BUDGET).unwrap().value;
        let walked = evaluate_plucker_random(&s, &j, 10, &mut r, DEFAULT_BUDGET).unwrap().value;
        prop_assert_eq!(direct, walked);
    }
}

#[test]
fn ones_seed_gives_integers_at_least_two() {
    for (n, k) in [(5, 2), (6, 3), (7, 3)] {
        let c = random_collection(n, k, 3);
        let s = Seed::constant(n, k, &c, ExactScalar::one()).unwrap();
        for j in k_subsets(n, k).filter(|j| !c.contains(j)) {
            let v = evaluate_plucker(&s, &j, DEFAULT_BUDGET).unwrap().value;
            let v = v.as_rational().unwrap().clone();
            assert!(v.is_integer() && v >= rat(2, 1), "({n},{k}) {j}: {v}");
        }
    }
}

#[test]
fn distance_zero_iff_weakly_separated() {
    for (n, k) in [(5, 2), (6, 2), (6, 3)] {
        let subsets: Vec<Subset> = k_subsets(n, k).collect();
        for i in &subsets {
            for j in &subsets {
                let d = mutation_distance(i, j, 4, 10_000_000).unwrap().distance;
                assert_eq!(d == Distance::Exact(0), is_weakly_separated(i, j), "({n},{k}) {i} {j}: {d:?}");
            }
        }
    }
}
