//! Randomized property suites, each reproducible from a seed.

use std::collections::BTreeMap;

use eqminors::cluster::{evaluate_plucker_random, Seed, DEFAULT_BUDGET};
use eqminors::combin::{greedy_ws_completion, is_sorted};
use eqminors::exactnum::{format_rational, Interval};
use eqminors::minors::{k_subsets, random_positive_point, sort_pair, MatrixKind};
use eqminors::plabic::{apply_move_mut, plabic_from_collection, random_move, PlabicGraph};
use eqminors::{ExactScalar, PosMatrix, Rational, Subset};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub trials: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl SuiteReport {
    fn new(suite: &'static str) -> Self {
        SuiteReport { suite, trials: 0, failures: 0, first_failure: None }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.trials += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.trials > 0
    }

    pub fn to_json(&self) -> Value {
        json!({"suite": self.suite, "trials": self.trials, "failures": self.failures, "first_failure": self.first_failure})
    }
}

pub const SUITES: [&str; 5] = ["plucker-3term", "sort-pair", "pi-invariance", "mutation-path", "interval-soundness"];

pub fn run_suite(name: &str, trials: usize, seed: u64) -> Option<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Some(match name {
        "plucker-3term" => plucker_three_term(trials, &mut rng),
        "sort-pair" => sort_pair_suite(trials, &mut rng),
        "pi-invariance" => pi_invariance(trials, &mut rng),
        "mutation-path" => mutation_path(trials, &mut rng),
        "interval-soundness" => interval_soundness(trials, &mut rng),
        _ => return None,
    })
}

fn random_subset<R: Rng>(n: usize, k: usize, rng: &mut R) -> Subset {
    let mut v: Vec<usize> = (1..=n).collect();
    v.shuffle(rng);
    Subset::of(n, &v[..k])
}

fn rational(x: &ExactScalar) -> Rational {
    x.as_rational().expect("rational matrix").clone()
}

/// Columns `t_i (1, s_i)` with `s_1 < … < s_n` and `t_i > 0`, so `Δ_ij = t_i t_j (s_j − s_i) > 0`.
fn slope_point<R: Rng>(n: usize, rng: &mut R) -> PosMatrix {
    let mut s = Rational::from_integer(rng.gen_range(-50..=50).into());
    let mut rows = vec![Vec::new(), Vec::new()];
    for _ in 0..n {
        s += Rational::new(rng.gen_range(1..=1000).into(), rng.gen_range(1..=100).into());
        let t = Rational::new(rng.gen_range(1..=1000).into(), rng.gen_range(1..=100).into());
        rows[1].push(&t * &s);
        rows[0].push(t);
    }
    PosMatrix::from_rationals(rows, MatrixKind::GrassmannPoint).expect("two rows of length n")
}

/// `Δ_ac Δ_bd = Δ_ab Δ_cd + Δ_ad Δ_bc` on random points of Gr⁺(2, n).
pub fn plucker_three_term<R: Rng>(trials: usize, rng: &mut R) -> SuiteReport {
    let mut rep = SuiteReport::new("plucker-3term");
    for _ in 0..trials {
        let n = rng.gen_range(4..=9);
        let m = if rep.trials.is_multiple_of(10) { random_positive_point(2, n, rng) } else { slope_point(n, rng) };
        let mut e = random_subset(n, 4, rng).elems();
        e.sort();
        let [a, b, c, d] = [e[0], e[1], e[2], e[3]];
        let p = |x: usize, y: usize| rational(&m.plucker(&Subset::of(n, &[x, y])).expect("2-subset"));
        let lhs = p(a, c) * p(b, d);
        let rhs = p(a, b) * p(c, d) + p(a, d) * p(b, c);
        rep.record(lhs == rhs, || format!("n={n} {a}<{b}<{c}<{d}: {} vs {}", format_rational(&lhs), format_rational(&rhs)));
    }
    rep
}

/// Sorting gives a sorted pair with the same multiset union, is idempotent and symmetric.
pub fn sort_pair_suite<R: Rng>(trials: usize, rng: &mut R) -> SuiteReport {
    let mut rep = SuiteReport::new("sort-pair");
    for _ in 0..trials {
        let n = rng.gen_range(2..=40);
        let k = rng.gen_range(1..n);
        let (i, j) = (random_subset(n, k, rng), random_subset(n, k, rng));
        let (a, b) = sort_pair(&i, &j);
        let ok = a.len() == k
            && b.len() == k
            && is_sorted(&a, &b)
            && a.mask() | b.mask() == i.mask() | j.mask()
            && a.mask() & b.mask() == i.mask() & j.mask()
            && sort_pair(&a, &b) == (a, b)
            && sort_pair(&j, &i) == (a, b);
        rep.record(ok, || format!("{i} {j} -> {a} {b}"));
    }
    rep
}

fn base_graphs<R: Rng>(rng: &mut R) -> Vec<PlabicGraph> {
    let mut out = Vec::new();
    for (n, k) in [(4, 2), (5, 2), (6, 3), (7, 3), (8, 4)] {
        for _ in 0..3 {
            let mut order: Vec<Subset> = k_subsets(n, k).collect();
            order.shuffle(rng);
            let c = greedy_ws_completion(&[], &order);
            out.push(plabic_from_collection(n, k, &c).expect("maximal collections give plabic graphs"));
        }
    }
    out
}

/// The decorated permutation is unchanged by 50 random moves.
pub fn pi_invariance<R: Rng>(trials: usize, rng: &mut R) -> SuiteReport {
    let mut rep = SuiteReport::new("pi-invariance");
    let bases = base_graphs(rng);
    for _ in 0..trials {
        let mut g = bases.choose(rng).expect("nonempty").clone();
        let pi = g.strand_permutation().expect("base graphs trace");
        let mut err = None;
        for _ in 0..50 {
            let Some(m) = random_move(&g, rng) else { break };
            if let Err(e) = apply_move_mut(&mut g, &m) {
                err = Some(format!("{m:?}: {e}"));
                break;
            }
        }
        let after = g.strand_permutation();
        let ok = err.is_none() && after.as_ref().is_ok_and(|p| *p == pi) && g.is_reduced();
        rep.record(ok, || err.unwrap_or_else(|| format!("{:?} became {:?}", pi.pi, after.map(|p| p.pi))));
    }
    rep
}

/// Seeds read off random positive points: a random exchange path to `J` must recover `Δ_J`.
pub fn mutation_path<R: Rng>(trials: usize, rng: &mut R) -> SuiteReport {
    let mut rep = SuiteReport::new("mutation-path");
    let shapes = [(5, 2), (6, 2), (6, 3), (7, 3), (8, 4)];
    for _ in 0..trials {
        let (n, k) = *shapes.choose(rng).expect("nonempty");
        let m = random_positive_point(k, n, rng);
        let mut order: Vec<Subset> = k_subsets(n, k).collect();
        order.shuffle(rng);
        let c = greedy_ws_completion(&[], &order);
        let values: BTreeMap<Subset, ExactScalar> = c.iter().map(|s| (*s, m.plucker(s).expect("k-subset"))).collect();
        let seed = Seed::new(n, k, values).expect("positive values on a maximal collection");
        let j = random_subset(n, k, rng);
        let walk = rng.gen_range(0..=12);
        let got = evaluate_plucker_random(&seed, &j, walk, rng, DEFAULT_BUDGET);
        let want = m.plucker(&j).expect("k-subset");
        let ok = got.as_ref().is_ok_and(|e| e.value == want);
        rep.record(ok, || format!("({n},{k}) {j}: {:?} vs {want}", got.map(|e| e.value.to_string())));
    }
    rep
}

fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    let num: i64 = rng.gen_range(-1_000_000..=1_000_000);
    let den: i64 = rng.gen_range(1..=1_000_000);
    Rational::new(num.into(), den.into())
}

/// Interval operations on enclosures of rationals contain the exact result.
pub fn interval_soundness<R: Rng>(trials: usize, rng: &mut R) -> SuiteReport {
    let mut rep = SuiteReport::new("interval-soundness");
    for _ in 0..trials {
        let prec = rng.gen_range(24..=320);
        let (x, y) = (random_rational(rng), random_rational(rng));
        let (ix, iy) = (Interval::from_rational(&x, prec), Interval::from_rational(&y, prec));
        let op = rng.gen_range(0..6);
        let ok = match op {
            0 => ix.add(&iy).contains_rational(&(&x + &y)),
            1 => ix.sub(&iy).contains_rational(&(&x - &y)),
            2 => ix.mul(&iy).contains_rational(&(&x * &y)),
            3 => y == Rational::from_integer(0.into()) || ix.div(&iy).is_ok_and(|q| q.contains_rational(&(&x / &y))),
            4 => {
                let ax = Interval::from_rational(&num_abs(&x), prec);
                ax.sqrt().is_ok_and(|s| s.mul(&s).contains_rational(&num_abs(&x)))
            }
            _ => {
                let ax = num_abs(&x);
                ax == Rational::from_integer(0.into())
                    || Interval::from_rational(&ax, prec).ln().is_ok_and(|l| l.exp().contains_rational(&ax))
            }
        };
        rep.record(ok, || format!("op {op} on {} and {} at {prec} bits", format_rational(&x), format_rational(&y)));
    }
    rep
}

fn num_abs(x: &Rational) -> Rational {
    if *x < Rational::from_integer(0.into()) {
        -x.clone()
    } else {
        x.clone()
    }
}
