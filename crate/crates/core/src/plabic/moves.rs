use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::graph::{twin, Color, PlabicGraph};
use super::PlabicError;
use crate::minors::Subset;

/// One local move. Targets are vertex and edge ids of the graph the move is applied to; ids
/// are allocated deterministically, so a script replays exactly on the same start graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "move")]
pub enum Move {
    /// Square move: flip the colors of the four vertices of a square face.
    #[serde(rename = "M1")]
    M1 { vertices: Vec<usize> },
    /// Contract an edge between two vertices of the same color.
    #[serde(rename = "M2-contract")]
    M2Contract { edge: usize },
    /// Split `vertex`, moving `len` consecutive half-edges starting at rotation index `start`
    /// to a new vertex of the same color.
    #[serde(rename = "M2-split")]
    M2Split { vertex: usize, start: usize, len: usize },
    #[serde(rename = "M3-insert")]
    M3Insert { edge: usize, color: MoveColor },
    #[serde(rename = "M3-remove")]
    M3Remove { vertex: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveColor {
    Black,
    White,
}

impl From<MoveColor> for Color {
    fn from(c: MoveColor) -> Color {
        match c {
            MoveColor::Black => Color::Black,
            MoveColor::White => Color::White,
        }
    }
}

impl Move {
    /// `M1`, `M2` or `M3`.
    pub fn kind(&self) -> &'static str {
        match self {
            Move::M1 { .. } => "M1",
            Move::M2Contract { .. } | Move::M2Split { .. } => "M2",
            Move::M3Insert { .. } | Move::M3Remove { .. } => "M3",
        }
    }
}

/// An ordered list of moves.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveScript {
    pub moves: Vec<Move>,
}

impl MoveScript {
    pub fn square_moves(&self) -> usize {
        self.moves.iter().filter(|m| m.kind() == "M1").count()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("moves serialize")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, PlabicError> {
        serde_json::from_value(v.clone()).map_err(|e| PlabicError::MalformedGraph(e.to_string()))
    }

    pub fn replay(&self, g: &PlabicGraph) -> Result<PlabicGraph, PlabicError> {
        let mut g = g.clone();
        for m in &self.moves {
            apply_move_mut(&mut g, m)?;
        }
        Ok(g)
    }
}

fn mismatch<T>(m: impl Into<String>) -> Result<T, PlabicError> {
    Err(PlabicError::PatternMismatch(m.into()))
}

fn replace_dart(g: &mut PlabicGraph, v: usize, old: usize, new: usize) {
    let p = g.rot[v].iter().position(|&x| x == old).expect("dart at vertex");
    g.rot[v][p] = new;
}

fn live_edge(g: &PlabicGraph, e: usize) -> bool {
    e < g.alive.len() && g.alive[e] && !g.arc[e]
}

fn live_interior(g: &PlabicGraph, v: usize) -> bool {
    v < g.color.len() && g.is_interior(v)
}

pub fn apply_move(g: &PlabicGraph, m: &Move) -> Result<PlabicGraph, PlabicError> {
    let mut out = g.clone();
    apply_move_mut(&mut out, m)?;
    Ok(out)
}

pub fn apply_move_mut(g: &mut PlabicGraph, m: &Move) -> Result<(), PlabicError> {
    match *m {
        Move::M1 { ref vertices } => square(g, vertices),
        Move::M2Contract { edge } => contract(g, edge),
        Move::M2Split { vertex, start, len } => split(g, vertex, start, len).map(|_| ()),
        Move::M3Insert { edge, color } => insert(g, edge, color.into()).map(|_| ()),
        Move::M3Remove { vertex } => remove(g, vertex),
    }
}

/// The face bounded by exactly these four vertices, if any.
fn square_face(g: &PlabicGraph, vs: &[usize]) -> Option<Vec<usize>> {
    let faces = g.faces();
    let mut want = vs.to_vec();
    want.sort_unstable();
    faces.darts.into_iter().enumerate().find_map(|(f, ds)| {
        if f == faces.outer || ds.len() != 4 {
            return None;
        }
        let mut got: Vec<usize> = ds.iter().map(|&h| g.org(h)).collect();
        got.sort_unstable();
        (got == want).then_some(ds)
    })
}

fn is_flippable(g: &PlabicGraph, ds: &[usize]) -> bool {
    ds.len() == 4
        && ds.iter().all(|&h| !g.is_arc(h) && g.is_interior(g.org(h)) && g.degree(g.org(h)) == 3)
        && ds.iter().all(|&h| g.color(g.org(h)) != g.color(g.head(h)))
        && {
            let mut v: Vec<usize> = ds.iter().map(|&h| g.org(h)).collect();
            v.sort_unstable();
            v.dedup();
            v.len() == 4
        }
}

fn square(g: &mut PlabicGraph, vs: &[usize]) -> Result<(), PlabicError> {
    if vs.len() != 4 || !vs.iter().all(|&v| live_interior(g, v)) {
        return mismatch("M1 needs four interior vertices");
    }
    let Some(ds) = square_face(g, vs) else {
        return mismatch("the vertices do not bound a square face");
    };
    if !is_flippable(g, &ds) {
        return mismatch("M1 needs an alternating square of degree-3 vertices");
    }
    for &v in vs {
        g.color[v] = g.color[v].map(Color::flip);
    }
    Ok(())
}

fn contract(g: &mut PlabicGraph, e: usize) -> Result<(), PlabicError> {
    if !live_edge(g, e) {
        return mismatch(format!("no edge {e}"));
    }
    let h = 2 * e;
    let (u, v) = (g.org(h), g.head(h));
    if u == v || !g.is_interior(u) || g.color(u) != g.color(v) {
        return mismatch("M2 contracts an edge between distinct vertices of the same color");
    }
    if g.rot[u].iter().filter(|&&x| g.head(x) == v).count() > 1 {
        return mismatch("parallel edges would become a loop");
    }
    let rv = g.rot[v].clone();
    let p = rv.iter().position(|&x| x == twin(h)).unwrap();
    let moved: Vec<usize> = (1..rv.len()).map(|i| rv[(p + i) % rv.len()]).collect();
    for &x in &moved {
        g.org[x] = u;
    }
    let q = g.rot[u].iter().position(|&x| x == h).unwrap();
    g.rot[u].splice(q..q + 1, moved);
    g.rot[v].clear();
    g.color[v] = None;
    g.alive[e] = false;
    Ok(())
}

/// Returns the new vertex.
fn split(g: &mut PlabicGraph, v: usize, start: usize, len: usize) -> Result<usize, PlabicError> {
    if !live_interior(g, v) {
        return mismatch(format!("no interior vertex {v}"));
    }
    let d = g.rot[v].len();
    if len == 0 || len >= d || start >= d {
        return mismatch("split block must be a proper nonempty part of the rotation");
    }
    let c = g.color(v).unwrap();
    let rv = g.rot[v].clone();
    let block: Vec<usize> = (0..len).map(|i| rv[(start + i) % d]).collect();
    let rest: Vec<usize> = (len..d).map(|i| rv[(start + i) % d]).collect();
    let w = g.new_vertex(c);
    let e = g.new_edge(v, w, false);
    let mut rw = vec![2 * e + 1];
    for &x in &block {
        g.org[x] = w;
        rw.push(x);
    }
    let mut r = rest;
    r.push(2 * e);
    g.rot[v] = r;
    g.rot[w] = rw;
    Ok(w)
}

fn insert(g: &mut PlabicGraph, e: usize, c: Color) -> Result<usize, PlabicError> {
    if !live_edge(g, e) || c == Color::Boundary {
        return mismatch(format!("M3 inserts an interior vertex into a live edge, not {e}"));
    }
    let (d, t) = (2 * e, 2 * e + 1);
    let v = g.head(d);
    let w = g.new_vertex(c);
    let f = g.new_edge(w, v, false);
    // d keeps running u -> w; t now leaves w; v sees the new edge instead of t
    replace_dart(g, v, t, 2 * f + 1);
    g.org[t] = w;
    g.rot[w] = vec![t, 2 * f];
    Ok(w)
}

fn remove(g: &mut PlabicGraph, w: usize) -> Result<(), PlabicError> {
    if !live_interior(g, w) || g.rot[w].len() != 2 {
        return mismatch(format!("M3 removes an interior vertex of degree 2, not {w}"));
    }
    let (x, y) = (g.rot[w][0], g.rot[w][1]);
    let (p, q) = (g.head(x), g.head(y));
    if p == w || q == w || x / 2 == y / 2 {
        return mismatch("vertex carries a loop");
    }
    if !g.is_interior(p) && !g.is_interior(q) {
        return mismatch("removal would join two boundary vertices");
    }
    let f = g.new_edge(p, q, false);
    replace_dart(g, p, twin(x), 2 * f);
    replace_dart(g, q, twin(y), 2 * f + 1);
    g.alive[x / 2] = false;
    g.alive[y / 2] = false;
    g.rot[w].clear();
    g.color[w] = None;
    Ok(())
}

fn find_contractible(g: &PlabicGraph) -> Option<usize> {
    g.edges().find(|&e| {
        let (u, v) = (g.org(2 * e), g.head(2 * e));
        u != v && g.is_interior(u) && g.color(u) == g.color(v) && g.rot[u].iter().filter(|&&x| g.head(x) == v).count() == 1
    })
}

fn find_removable(g: &PlabicGraph) -> Option<usize> {
    g.interior_vertices().find(|&w| {
        if g.rot[w].len() != 2 {
            return false;
        }
        let (x, y) = (g.rot[w][0], g.rot[w][1]);
        let (p, q) = (g.head(x), g.head(y));
        p != w && q != w && x / 2 != y / 2 && (g.is_interior(p) || g.is_interior(q))
    })
}

/// Contracts same-colored edges and removes degree-2 vertices until neither applies.
pub fn normalize(g: &mut PlabicGraph) -> Vec<Move> {
    let mut script = Vec::new();
    loop {
        let m = if let Some(e) = find_contractible(g) {
            Move::M2Contract { edge: e }
        } else if let Some(w) = find_removable(g) {
            Move::M3Remove { vertex: w }
        } else {
            break;
        };
        apply_move_mut(g, &m).expect("normal-form step applies");
        script.push(m);
    }
    script
}

/// The generalized square move at the face labelled `label`: normalize, split vertices of
/// degree above 3 off the face, flip, normalize again.
pub fn square_move_at(g: &mut PlabicGraph, label: &Subset) -> Result<Vec<Move>, PlabicError> {
    let mut script = normalize(g);
    let labels = g.face_labels()?;
    let f = labels.find(label).ok_or_else(|| PlabicError::PatternMismatch(format!("no face labelled {label}")))?;
    let ds = labels.darts[f].clone();
    if !is_square_face(g, &ds) {
        return mismatch(format!("face {label} is not a square"));
    }
    for &d_in in &ds {
        let v = g.head(d_in);
        let deg = g.rot[v].len();
        if deg > 3 {
            let p = g.pos(twin(d_in));
            let m = Move::M2Split { vertex: v, start: (p + 1) % deg, len: deg - 2 };
            apply_move_mut(g, &m)?;
            script.push(m);
        }
    }
    let vertices: Vec<usize> = ds.iter().map(|&h| g.org(h)).collect();
    let m = Move::M1 { vertices };
    apply_move_mut(g, &m)?;
    script.push(m);
    script.extend(normalize(g));
    Ok(script)
}

/// A face of four half-edges between four distinct interior vertices.
pub fn is_square_face(g: &PlabicGraph, ds: &[usize]) -> bool {
    if ds.len() != 4 || ds.iter().any(|&h| g.is_arc(h) || !g.is_interior(g.org(h))) {
        return false;
    }
    let mut v: Vec<usize> = ds.iter().map(|&h| g.org(h)).collect();
    v.sort_unstable();
    v.dedup();
    v.len() == 4 && ds.iter().all(|&h| g.color(g.org(h)) != g.color(g.head(h)))
}

/// A uniformly chosen applicable primitive move, or `None` when nothing applies.
pub fn random_move<R: Rng>(g: &PlabicGraph, rng: &mut R) -> Option<Move> {
    let mut options: Vec<Move> = Vec::new();
    let contractible: Vec<usize> = g
        .edges()
        .filter(|&e| {
            let (u, v) = (g.org(2 * e), g.head(2 * e));
            u != v && g.is_interior(u) && g.color(u) == g.color(v) && g.rot[u].iter().filter(|&&x| g.head(x) == v).count() == 1
        })
        .collect();
    if let Some(&e) = contractible.choose(rng) {
        options.push(Move::M2Contract { edge: e });
    }
    let splittable: Vec<usize> = g.interior_vertices().filter(|&v| g.rot[v].len() >= 4).collect();
    if let Some(&v) = splittable.choose(rng) {
        let d = g.rot[v].len();
        options.push(Move::M2Split { vertex: v, start: rng.gen_range(0..d), len: rng.gen_range(2..=d - 2) });
    }
    let edges: Vec<usize> = g.edges().collect();
    if let Some(&e) = edges.choose(rng) {
        let color = if rng.gen_bool(0.5) { MoveColor::Black } else { MoveColor::White };
        options.push(Move::M3Insert { edge: e, color });
    }
    let removable: Vec<usize> = g
        .interior_vertices()
        .filter(|&w| {
            g.rot[w].len() == 2 && {
                let (x, y) = (g.rot[w][0], g.rot[w][1]);
                let (p, q) = (g.head(x), g.head(y));
                p != w && q != w && x / 2 != y / 2 && (g.is_interior(p) || g.is_interior(q))
            }
        })
        .collect();
    if let Some(&w) = removable.choose(rng) {
        options.push(Move::M3Remove { vertex: w });
    }
    let faces = g.faces();
    let squares: Vec<Vec<usize>> = faces
        .darts
        .iter()
        .enumerate()
        .filter(|&(f, ds)| f != faces.outer && is_flippable(g, ds))
        .map(|(_, ds)| ds.iter().map(|&h| g.org(h)).collect())
        .collect();
    if let Some(vs) = squares.choose(rng) {
        // square moves are rare; offer them twice
        options.push(Move::M1 { vertices: vs.clone() });
        options.push(Move::M1 { vertices: vs.clone() });
    }
    options.choose(rng).cloned()
}
