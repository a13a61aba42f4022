use serde_json::{json, Value};

use super::PlabicError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Black,
    White,
    Boundary,
}

impl Color {
    pub fn as_str(&self) -> &'static str {
        match self {
            Color::Black => "black",
            Color::White => "white",
            Color::Boundary => "boundary",
        }
    }

    pub fn flip(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
            Color::Boundary => Color::Boundary,
        }
    }

    fn parse(s: &str) -> Option<Color> {
        match s {
            "black" => Some(Color::Black),
            "white" => Some(Color::White),
            "boundary" => Some(Color::Boundary),
            _ => None,
        }
    }
}

/// A plabic graph in a disk as a rotation system.
///
/// Half-edges come in pairs `2e, 2e+1`. Every vertex keeps its outgoing half-edges in
/// counterclockwise order. Vertices `0..n` are the boundary vertices `1..n`, placed clockwise;
/// consecutive boundary vertices are joined by arcs of the disk boundary, stored as half-edges
/// flagged `arc`, so that face tracing needs no special cases.
#[derive(Clone, Debug)]
pub struct PlabicGraph {
    pub(crate) n: usize,
    pub(crate) color: Vec<Option<Color>>,
    pub(crate) rot: Vec<Vec<usize>>,
    pub(crate) org: Vec<usize>,
    pub(crate) alive: Vec<bool>,
    pub(crate) arc: Vec<bool>,
}

#[inline]
pub(crate) fn twin(h: usize) -> usize {
    h ^ 1
}

impl PlabicGraph {
    /// `n` boundary vertices joined by disk arcs and nothing else.
    pub fn boundary_only(n: usize) -> Self {
        let mut g = PlabicGraph { n, color: vec![Some(Color::Boundary); n], rot: vec![Vec::new(); n], org: Vec::new(), alive: Vec::new(), arc: Vec::new() };
        // arc i: boundary i -> i+1 (clockwise); its twin runs back
        let arcs: Vec<usize> = (0..n).map(|i| g.new_edge(i, (i + 1) % n, true)).collect();
        for i in 0..n {
            let to_next = 2 * arcs[i];
            let to_prev = twin(2 * arcs[(i + n - 1) % n]);
            g.rot[i] = vec![to_next, to_prev];
        }
        g
    }

    pub(crate) fn new_edge(&mut self, u: usize, v: usize, arc: bool) -> usize {
        let e = self.alive.len();
        self.org.push(u);
        self.org.push(v);
        self.alive.push(true);
        self.arc.push(arc);
        e
    }

    pub(crate) fn new_vertex(&mut self, c: Color) -> usize {
        self.color.push(Some(c));
        self.rot.push(Vec::new());
        self.color.len() - 1
    }

    /// Attaches the interior half-edge of boundary vertex `b` (0-based id).
    pub(crate) fn set_boundary_dart(&mut self, b: usize, h: usize) {
        self.rot[b].truncate(2);
        self.rot[b].push(h);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn color(&self, v: usize) -> Option<Color> {
        self.color.get(v).copied().flatten()
    }

    pub fn is_interior(&self, v: usize) -> bool {
        matches!(self.color(v), Some(Color::Black | Color::White))
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.color.len()).filter(|&v| self.color[v].is_some())
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices().filter(|&v| self.is_interior(v))
    }

    /// Live edges that are not disk arcs.
    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.alive.len()).filter(|&e| self.alive[e] && !self.arc[e])
    }

    pub fn num_edges(&self) -> usize {
        self.edges().count()
    }

    pub fn org(&self, h: usize) -> usize {
        self.org[h]
    }

    pub fn head(&self, h: usize) -> usize {
        self.org[twin(h)]
    }

    pub fn is_arc(&self, h: usize) -> bool {
        self.arc[h / 2]
    }

    /// Number of non-arc edges at `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.rot[v].iter().filter(|&&h| !self.is_arc(h)).count()
    }

    /// Non-arc outgoing half-edges of `v`, counterclockwise.
    pub fn darts_at(&self, v: usize) -> Vec<usize> {
        self.rot[v].iter().copied().filter(|&h| !self.is_arc(h)).collect()
    }

    pub(crate) fn pos(&self, h: usize) -> usize {
        let v = self.org[h];
        self.rot[v].iter().position(|&x| x == h).expect("half-edge in rotation of its origin")
    }

    pub(crate) fn ccw_next(&self, h: usize) -> usize {
        let r = &self.rot[self.org[h]];
        r[(self.pos(h) + 1) % r.len()]
    }

    pub(crate) fn cw_next(&self, h: usize) -> usize {
        let r = &self.rot[self.org[h]];
        r[(self.pos(h) + r.len() - 1) % r.len()]
    }

    /// Next half-edge along the face to the left of `h`.
    pub(crate) fn face_next(&self, h: usize) -> usize {
        self.cw_next(twin(h))
    }

    /// Next half-edge of the strand through `h`: right at black, left at white.
    pub(crate) fn strand_next(&self, h: usize) -> Option<usize> {
        let v = self.head(h);
        match self.color(v)? {
            Color::Black => Some(self.ccw_next(twin(h))),
            Color::White => Some(self.cw_next(twin(h))),
            Color::Boundary => None,
        }
    }

    /// The interior half-edge leaving boundary vertex `i` (1-based).
    pub fn boundary_dart(&self, i: usize) -> Option<usize> {
        self.rot[i - 1].iter().copied().find(|&h| !self.is_arc(h))
    }

    /// Structural sanity: twins, origins, boundary degrees.
    pub fn validate(&self) -> Result<(), PlabicError> {
        let bad = |m: String| Err(PlabicError::MalformedGraph(m));
        for v in self.vertices() {
            for &h in &self.rot[v] {
                if !self.alive[h / 2] || self.org[h] != v {
                    return bad(format!("rotation of vertex {v} holds a stale half-edge {h}"));
                }
            }
            if v < self.n && self.degree(v) > 1 {
                return bad(format!("boundary vertex {} has degree {}", v + 1, self.degree(v)));
            }
            if v >= self.n && self.color(v) == Some(Color::Boundary) {
                return bad(format!("vertex {v} is a boundary vertex off the boundary"));
            }
        }
        for e in 0..self.alive.len() {
            if self.alive[e] {
                for h in [2 * e, 2 * e + 1] {
                    let v = self.org[h];
                    if self.color(v).is_none() || !self.rot[v].contains(&h) {
                        return bad(format!("half-edge {h} is missing from its origin {v}"));
                    }
                }
            }
        }
        Ok(())
    }

    /// JSON dump with compact ids; arcs are implicit.
    pub fn to_json(&self) -> Value {
        let vids: Vec<usize> = self.vertices().collect();
        let vmap = |v: usize| vids.iter().position(|&x| x == v).unwrap();
        let eids: Vec<usize> = self.edges().collect();
        let hmap = |h: usize| 2 * eids.iter().position(|&e| e == h / 2).unwrap() + (h & 1);
        let vertices: Vec<Value> = vids.iter().map(|&v| json!({"id": vmap(v), "color": self.color(v).unwrap().as_str()})).collect();
        let mut halfedges = Vec::new();
        for &e in &eids {
            for h in [2 * e, 2 * e + 1] {
                let ds = self.darts_at(self.org[h]);
                let p = ds.iter().position(|&x| x == h).unwrap();
                let next = ds[(p + 1) % ds.len()];
                halfedges.push(json!({"id": hmap(h), "origin": vmap(self.org[h]), "twin": hmap(twin(h)), "next": hmap(next)}));
            }
        }
        json!({"n": self.n, "vertices": vertices, "halfedges": halfedges, "boundary": (0..self.n).collect::<Vec<_>>()})
    }

    pub fn from_json(v: &Value) -> Result<Self, PlabicError> {
        let bad = |m: &str| PlabicError::MalformedGraph(m.to_string());
        let n = v["n"].as_u64().ok_or_else(|| bad("missing n"))? as usize;
        let verts = v["vertices"].as_array().ok_or_else(|| bad("missing vertices"))?;
        let hes = v["halfedges"].as_array().ok_or_else(|| bad("missing halfedges"))?;
        let mut g = PlabicGraph::boundary_only(n);
        let mut vmap = vec![usize::MAX; verts.len()];
        for x in verts {
            let id = x["id"].as_u64().ok_or_else(|| bad("vertex id"))? as usize;
            let c = x["color"].as_str().and_then(Color::parse).ok_or_else(|| bad("vertex color"))?;
            if id >= verts.len() {
                return Err(bad("vertex id out of range"));
            }
            if id < n {
                if c != Color::Boundary {
                    return Err(bad("the first n vertices must be boundary vertices"));
                }
                vmap[id] = id;
            } else {
                vmap[id] = g.new_vertex(c);
            }
        }
        if hes.len() % 2 == 1 {
            return Err(bad("odd number of half-edges"));
        }
        let field = |x: &Value, k: &str| x[k].as_u64().map(|u| u as usize).ok_or_else(|| bad("half-edge field"));
        let base = g.alive.len();
        let mut origin = vec![usize::MAX; hes.len()];
        let mut next = vec![usize::MAX; hes.len()];
        for x in hes {
            let id = field(x, "id")?;
            if id >= hes.len() || field(x, "twin")? != (id ^ 1) {
                return Err(bad("half-edge ids must pair as 2e, 2e+1"));
            }
            let o = field(x, "origin")?;
            origin[id] = *vmap.get(o).ok_or_else(|| bad("origin out of range"))?;
            next[id] = field(x, "next")?;
        }
        for e in 0..hes.len() / 2 {
            let id = g.new_edge(origin[2 * e], origin[2 * e + 1], false);
            debug_assert_eq!(id, base + e);
        }
        let h = |i: usize| 2 * base + i;
        let mut seen = vec![false; hes.len()];
        for start in 0..hes.len() {
            if seen[start] {
                continue;
            }
            let v = origin[start];
            if g.degree(v) > 0 {
                return Err(bad("rotation at a vertex is not a single cycle"));
            }
            let mut cyc = Vec::new();
            let mut x = start;
            loop {
                if seen[x] || origin[x] != v {
                    return Err(bad("next pointers leave the vertex"));
                }
                seen[x] = true;
                cyc.push(h(x));
                x = *next.get(x).ok_or_else(|| bad("next out of range"))?;
                if x == start {
                    break;
                }
            }
            if v < n {
                if cyc.len() != 1 {
                    return Err(bad("boundary vertex of degree > 1"));
                }
                g.set_boundary_dart(v, cyc[0]);
            } else {
                g.rot[v] = cyc;
            }
        }
        g.validate()?;
        Ok(g)
    }

    /// Id-independent description: a walk from the boundary numbering vertices and half-edges
    /// in order of discovery, each rotation read from the half-edge it was entered by.
    pub fn canonical_form(&self) -> String {
        let mut vnum = vec![usize::MAX; self.color.len()];
        let mut entry = vec![usize::MAX; self.color.len()];
        let mut hnum = vec![usize::MAX; self.org.len()];
        let mut order = Vec::new();
        let mut queue = std::collections::VecDeque::new();
        for b in 0..self.n {
            vnum[b] = b;
            entry[b] = self.boundary_dart(b + 1).unwrap_or(usize::MAX);
            order.push(b);
            queue.push_back(b);
        }
        let (mut nh, mut nv) = (0, self.n);
        let from_entry = |v: usize, entry: usize| -> Vec<usize> {
            let ds = self.darts_at(v);
            let s = ds.iter().position(|&h| h == entry).unwrap_or(0);
            (0..ds.len()).map(|i| ds[(s + i) % ds.len()]).collect()
        };
        while let Some(v) = queue.pop_front() {
            for h in from_entry(v, entry[v]) {
                if hnum[h] == usize::MAX {
                    hnum[h] = nh;
                    hnum[twin(h)] = nh + 1;
                    nh += 2;
                }
                let w = self.head(h);
                if vnum[w] == usize::MAX {
                    vnum[w] = nv;
                    entry[w] = twin(h);
                    nv += 1;
                    order.push(w);
                    queue.push_back(w);
                }
            }
        }
        let mut out = String::new();
        for &v in &order {
            let parts: Vec<String> = from_entry(v, entry[v]).iter().map(|&h| format!("{}>{}", hnum[h], vnum[self.head(h)])).collect();
            out.push_str(&format!("{}:{}[{}];", vnum[v], self.color(v).unwrap().as_str(), parts.join(",")));
        }
        out
    }
}
