use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};

use super::ConstructError;
use crate::combin::{complete_to_maximal_thrackle, Graph2, ThrackleShape};
use crate::exactnum::{CertifiedOrd, ExactScalar, Interval, Precision, Rational};
use crate::minors::{extract_arrangement, ArrangementMode, MatrixKind, MinorTable, MinorsError, PosMatrix, Subset};

/// A certified `2 × n` interval matrix whose largest minors are the edges of a thrackle.
#[derive(Clone, Debug)]
pub struct ThrackleMatrix {
    pub matrix: PosMatrix,
    /// The common value of the largest minors, `sin(πr/(2r+1))`.
    pub value: Interval,
    pub precision: u32,
    /// Perturbation size used for a non-maximal thrackle.
    pub delta: Option<Rational>,
}

type V2 = [Interval; 2];

fn det2(a: &V2, b: &V2) -> Interval {
    a[0].mul(&b[1]).sub(&a[1].mul(&b[0]))
}

fn scale(v: &V2, s: &Interval) -> V2 {
    [v[0].mul(s), v[1].mul(s)]
}

fn lerp(a: &V2, b: &V2, q: &Interval) -> V2 {
    [a[0].add(&b[0].sub(&a[0]).mul(q)), a[1].add(&b[1].sub(&a[1]).mul(q))]
}

fn frac(p: usize, q: usize, prec: u32) -> Interval {
    Interval::from_rational(&Rational::new(p.into(), q.into()), prec)
}

/// Vertex `u_t` of the regular `2(2r+1)`-gon.
fn polygon_vertex(t: usize, r: usize, prec: u32) -> V2 {
    let angle = Interval::pi(prec).mul(&frac(t, 2 * r + 1, prec));
    [angle.cos(), angle.sin()]
}

fn norm(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Columns for a maximal thrackle: star vertices at polygon vertices `u_1, …, u_{2r+1}`, leaves at
/// equally spaced points of the side spanned by their gap. Leaves in the wrap-around gap with labels
/// below the first star vertex take the antipodes of the points on the last side.
fn positions(shape: &ThrackleShape, n: usize, prec: u32) -> Vec<V2> {
    let (r, star) = (shape.r, &shape.star);
    let m = star.len();
    let u: Vec<V2> = (0..=m + 1).map(|t| polygon_vertex(t, r, prec)).collect();
    let zero = Interval::from_i64(0, prec);
    let mut pos = vec![[zero.clone(), zero]; n + 1];
    for (t, &s) in star.iter().enumerate() {
        pos[s] = u[t + 1].clone();
    }
    for j in 0..m - 1 {
        let gap: Vec<usize> = (star[j] + 1..star[j + 1]).collect();
        for (q, &l) in gap.iter().enumerate() {
            pos[l] = lerp(&u[j + 1], &u[j + 2], &frac(q + 1, gap.len() + 1, prec));
        }
    }
    let after: Vec<usize> = (star[m - 1] + 1..=n).collect();
    let before: Vec<usize> = (1..star[0]).collect();
    let c = after.len() + before.len();
    for (q, &l) in after.iter().chain(before.iter()).enumerate() {
        let p = lerp(&u[m], &u[m + 1], &frac(q + 1, c + 1, prec));
        pos[l] = if q < after.len() { p } else { [p[0].neg(), p[1].neg()] };
    }
    pos
}

fn oriented(pos: &[V2], a: usize, b: usize) -> Interval {
    if a < b {
        det2(&pos[a], &pos[b])
    } else {
        det2(&pos[b], &pos[a])
    }
}

/// Shrinks the minors on `h ∖ g` to first order in `δ` while keeping those on `g` fixed to
/// first order, then restores `g` exactly by rescaling columns.
fn perturb(g: &Graph2, h: &Graph2, shape: &ThrackleShape, pos: &[V2], delta: &Rational, top: &Interval) -> Result<Vec<V2>, NumErr> {
    let prec = top.prec();
    let dropped: BTreeSet<(usize, usize)> = h.edges.difference(&g.edges).copied().collect();
    let d = Interval::from_rational(delta, prec);
    let shrink = Interval::from_i64(1, prec).sub(&d);
    let (r, star) = (shape.r, &shape.star);
    let m = star.len();
    let mut out = pos.to_vec();
    for (t, &i) in star.iter().enumerate() {
        let (a, b) = (star[(t + r) % m], star[(t + r + 1) % m]);
        let (da, db) = (dropped.contains(&norm(i, a)), dropped.contains(&norm(i, b)));
        if da && db {
            out[i] = scale(&pos[i], &shrink);
        } else if da || db {
            let (lost, kept) = if da { (a, b) } else { (b, a) };
            // slide parallel to the kept neighbour, in the direction that shrinks the lost edge
            let dir = &pos[kept];
            let rate = if i < lost { det2(dir, &pos[lost]) } else { det2(&pos[lost], dir) };
            let step = match rate.certified_sign() {
                Some(Ordering::Greater) => d.neg(),
                Some(Ordering::Less) => d.clone(),
                _ => return Err(NumErr::Undecided),
            };
            out[i] = [pos[i][0].add(&dir[0].mul(&step)), pos[i][1].add(&dir[1].mul(&step))];
        }
    }
    for &(l, nb) in &shape.leaves {
        if dropped.contains(&norm(l, nb)) {
            out[l] = scale(&pos[l], &shrink);
        }
    }

    let n = g.n;
    let one = Interval::from_i64(1, prec);
    let mut t: Vec<Option<Interval>> = vec![None; n + 1];
    let ratio = |p: &[V2], a: usize, b: usize| top.div(&oriented(p, a, b)).map_err(|_| NumErr::Undecided);
    let mut is_star = vec![false; n + 1];
    for &s in star {
        is_star[s] = true;
    }
    let star_cycle_in_g = (0..m).all(|j| g.contains(star[j], star[(j + r) % m]));
    for v in 1..=n {
        if t[v].is_some() || g.degree(v) == 0 {
            continue;
        }
        let comp = component(g, v);
        let root = if star_cycle_in_g && comp.contains(&star[0]) {
            let cyc: Vec<usize> = (0..m).map(|j| star[(j * r) % m]).collect();
            let mut sq = one.clone();
            for e in 0..m {
                let rho = ratio(&out, cyc[e], cyc[(e + 1) % m])?;
                sq = if e % 2 == 0 { sq.mul(&rho) } else { sq.div(&rho).map_err(|_| NumErr::Undecided)? };
            }
            t[cyc[0]] = Some(sq.sqrt().map_err(|_| NumErr::Undecided)?);
            cyc[0]
        } else {
            let root = comp.iter().copied().find(|&x| is_star[x]).unwrap_or(comp[0]);
            t[root] = Some(one.clone());
            root
        };
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for y in g.neighbors(x) {
                if t[y].is_none() {
                    let tx = t[x].clone().unwrap();
                    t[y] = Some(ratio(&out, x, y)?.div(&tx).map_err(|_| NumErr::Undecided)?);
                    queue.push_back(y);
                }
            }
        }
    }
    for (v, tv) in t.iter().enumerate().skip(1) {
        if let Some(tv) = tv {
            out[v] = scale(&out[v], tv);
        }
    }
    Ok(out)
}

fn component(g: &Graph2, v: usize) -> Vec<usize> {
    let mut seen = vec![false; g.n + 1];
    let mut out = vec![v];
    seen[v] = true;
    let mut i = 0;
    while i < out.len() {
        for y in g.neighbors(out[i]) {
            if !seen[y] {
                seen[y] = true;
                out.push(y);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

enum NumErr {
    Undecided,
    Mismatch,
}

fn attempt(g: &Graph2, h: &Graph2, shape: &ThrackleShape, delta: Option<&Rational>, prec: u32) -> Result<ThrackleMatrix, NumErr> {
    let n = g.n;
    let r = shape.r;
    let top = polygon_vertex(r, r, prec)[1].clone();
    let mut pos = positions(shape, n, prec);
    if let Some(d) = delta {
        pos = perturb(g, h, shape, &pos, d, &top)?;
    }
    let rows = (0..2).map(|c| pos[1..].iter().map(|v| ExactScalar::Interval(v[c].clone())).collect()).collect();
    let matrix = PosMatrix::new(rows, MatrixKind::GrassmannPoint).map_err(|_| NumErr::Mismatch)?;
    let table = MinorTable::compute(&matrix).map_err(|_| NumErr::Undecided)?;
    let arr = match extract_arrangement(&table, ArrangementMode::Largest) {
        Ok(a) => a,
        Err(MinorsError::Undecided(_)) => return Err(NumErr::Undecided),
        Err(_) => return Err(NumErr::Mismatch),
    };
    if !arr.zeros.is_empty() {
        return Err(NumErr::Mismatch);
    }
    let mut got: Vec<Subset> = arr.largest().to_vec();
    got.sort();
    let mut want = g.subsets();
    want.sort();
    if got != want {
        return Err(NumErr::Mismatch);
    }
    let v = table.get(&want[0]).unwrap();
    match v.certified_cmp(&ExactScalar::Interval(top.clone())) {
        Ok(CertifiedOrd::Equal) => {}
        Ok(CertifiedOrd::Undecided) => return Err(NumErr::Undecided),
        _ => return Err(NumErr::Mismatch),
    }
    Ok(ThrackleMatrix { matrix, value: top, precision: prec, delta: delta.cloned() })
}

fn certify(g: &Graph2, h: &Graph2, shape: &ThrackleShape, delta: Option<&Rational>, precision: Precision) -> Result<ThrackleMatrix, ConstructError> {
    for prec in precision.steps() {
        match attempt(g, h, shape, delta, prec) {
            Ok(m) => return Ok(m),
            Err(NumErr::Undecided) => continue,
            Err(NumErr::Mismatch) => return Err(ConstructError::VerificationFailed("largest class differs from the thrackle".into())),
        }
    }
    Err(ConstructError::PrecisionExhausted)
}

/// Matrix from the regular `2(2r+1)`-gon whose largest minors are exactly the edges of `g`.
///
/// A non-maximal thrackle is handled inside a maximal one containing it: dropped edges are
/// shrunk by `δ = 1/64, 1/128, …` (at most 20 halvings) until certification succeeds.
pub fn thrackle_matrix(g: &Graph2) -> Result<ThrackleMatrix, ConstructError> {
    thrackle_matrix_with(g, Precision::default())
}

/// [`thrackle_matrix`] with an explicit precision schedule.
pub fn thrackle_matrix_with(g: &Graph2, precision: Precision) -> Result<ThrackleMatrix, ConstructError> {
    if g.n < 3 || g.is_empty() || !g.is_thrackle() {
        return Err(ConstructError::NotAThrackle);
    }
    let h = complete_to_maximal_thrackle(g).ok_or(ConstructError::NotAThrackle)?;
    let shape = h.thrackle_shape().ok_or(ConstructError::NotAThrackle)?;
    if h == *g {
        return certify(g, &h, &shape, None, precision);
    }
    let mut delta = Rational::new(1.into(), 64.into());
    for _ in 0..=20 {
        match certify(g, &h, &shape, Some(&delta), precision) {
            Ok(m) => return Ok(m),
            Err(ConstructError::VerificationFailed(_)) | Err(ConstructError::PrecisionExhausted) => {}
            Err(e) => return Err(e),
        }
        delta /= Rational::from_integer(2.into());
    }
    Err(ConstructError::PrecisionExhausted)
}
