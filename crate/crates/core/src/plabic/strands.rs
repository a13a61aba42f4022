use std::collections::HashMap;

use serde_json::{json, Value};

use super::graph::{twin, Color, PlabicGraph};
use super::moves::normalize;
use super::PlabicError;
use crate::minors::Subset;

/// A strand from boundary vertex `start` to boundary vertex `end`, as directed half-edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strand {
    pub start: usize,
    pub end: usize,
    pub darts: Vec<usize>,
}

/// `π(i) = j` when the strand starting at `i` ends at `j`; fixed points carry the color of
/// the leaf they are attached to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecoratedPermutation {
    pub pi: Vec<usize>,
    pub fixed_colors: Vec<Option<Color>>,
}

impl DecoratedPermutation {
    pub fn apply(&self, i: usize) -> usize {
        self.pi[i - 1]
    }

    /// `π(i) = i + k mod n` for all `i`.
    pub fn is_top_cell(&self, k: usize) -> bool {
        let n = self.pi.len();
        (1..=n).all(|i| self.pi[i - 1] == (i - 1 + k) % n + 1)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "pi": self.pi,
            "fixed_colors": self.fixed_colors.iter().map(|c| c.map(|c| c.as_str())).collect::<Vec<_>>(),
        })
    }
}

/// Why a graph fails to be reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    ClosedStrand { length: usize },
    SelfIntersection { strand: usize },
    BadDoubleCrossing { first: usize, second: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::ClosedStrand { length } => write!(f, "closed strand of length {length}"),
            Violation::SelfIntersection { strand } => write!(f, "strand {strand} passes through itself"),
            Violation::BadDoubleCrossing { first, second } => write!(f, "strands {first} and {second} cross twice in the same order"),
        }
    }
}

/// The faces of the embedding, by face tracing. The face outside the disk is excluded.
#[derive(Clone, Debug)]
pub struct Faces {
    pub darts: Vec<Vec<usize>>,
    pub face_of: Vec<usize>,
    pub outer: usize,
}

impl PlabicGraph {
    pub fn faces(&self) -> Faces {
        let mut face_of = vec![usize::MAX; self.org.len()];
        let mut darts: Vec<Vec<usize>> = Vec::new();
        for h in 0..self.org.len() {
            if !self.alive[h / 2] || face_of[h] != usize::MAX {
                continue;
            }
            let id = darts.len();
            let mut cyc = Vec::new();
            let mut x = h;
            while face_of[x] == usize::MAX {
                face_of[x] = id;
                cyc.push(x);
                x = self.face_next(x);
            }
            darts.push(cyc);
        }
        let outer = if self.n > 0 { face_of[self.rot[0][0]] } else { usize::MAX };
        Faces { darts, face_of, outer }
    }

    /// One strand per boundary vertex plus the decorated permutation.
    pub fn trace_strands(&self) -> Result<(Vec<Strand>, DecoratedPermutation), PlabicError> {
        let bound = self.org.len() + 1;
        let mut strands = Vec::with_capacity(self.n);
        for i in 1..=self.n {
            let mut h = self.boundary_dart(i).ok_or_else(|| PlabicError::MalformedGraph(format!("boundary vertex {i} is isolated")))?;
            let mut darts = Vec::new();
            loop {
                darts.push(h);
                if darts.len() > bound {
                    return Err(PlabicError::MalformedGraph(format!("strand from {i} does not terminate")));
                }
                match self.strand_next(h) {
                    Some(next) => h = next,
                    None => break,
                }
            }
            let end = self.head(h) + 1;
            strands.push(Strand { start: i, end, darts });
        }
        let pi: Vec<usize> = strands.iter().map(|s| s.end).collect();
        let fixed_colors = strands
            .iter()
            .map(|s| if s.start == s.end { self.color(self.head(s.darts[0])) } else { None })
            .collect();
        Ok((strands, DecoratedPermutation { pi, fixed_colors }))
    }

    pub fn strand_permutation(&self) -> Result<DecoratedPermutation, PlabicError> {
        Ok(self.trace_strands()?.1)
    }

    /// Checks the three reducedness conditions on the bipartite normal form.
    pub fn check_reduced(&self) -> Result<(), Violation> {
        let mut g = self.clone();
        normalize(&mut g);
        let Ok((strands, _)) = g.trace_strands() else {
            return Err(Violation::ClosedStrand { length: 0 });
        };
        let mut owner = vec![usize::MAX; g.org.len()];
        for (s, st) in strands.iter().enumerate() {
            for &h in &st.darts {
                owner[h] = s;
            }
        }
        for e in g.edges() {
            for h in [2 * e, 2 * e + 1] {
                if owner[h] == usize::MAX {
                    let mut length = 0;
                    let mut x = h;
                    loop {
                        length += 1;
                        x = match g.strand_next(x) {
                            Some(y) => y,
                            None => break,
                        };
                        if x == h || length > g.org.len() {
                            break;
                        }
                    }
                    return Err(Violation::ClosedStrand { length });
                }
            }
        }
        for st in &strands {
            let lollipop = st.darts.len() == 2 && st.start == st.end;
            if lollipop {
                continue;
            }
            let mut seen = std::collections::HashSet::new();
            for &h in &st.darts {
                if !seen.insert(h / 2) {
                    return Err(Violation::SelfIntersection { strand: st.end });
                }
            }
        }
        // crossings sit on edges joining two interior vertices
        let crossing = |h: usize| g.is_interior(g.org(h)) && g.is_interior(g.head(h));
        let seqs: Vec<Vec<usize>> = strands.iter().map(|st| st.darts.iter().filter(|&&h| crossing(h)).map(|&h| h / 2).collect()).collect();
        let mut pairs: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (a, seq) in seqs.iter().enumerate() {
            for &e in seq {
                let b = if owner[2 * e] == a { owner[2 * e + 1] } else { owner[2 * e] };
                if a < b {
                    pairs.entry((a, b)).or_default().push(e);
                }
            }
        }
        let mut keys: Vec<_> = pairs.keys().copied().collect();
        keys.sort();
        for (a, b) in keys {
            let in_a = &pairs[&(a, b)];
            if in_a.len() < 2 {
                continue;
            }
            let mut in_b: Vec<usize> = seqs[b].iter().copied().filter(|e| in_a.contains(e)).collect();
            in_b.reverse();
            if &in_b != in_a {
                return Err(Violation::BadDoubleCrossing { first: strands[a].end, second: strands[b].end });
            }
        }
        Ok(())
    }

    pub fn is_reduced(&self) -> bool {
        self.check_reduced().is_ok()
    }

    /// Labels every face by the strands (named by their end) having it on their left.
    pub fn face_labels(&self) -> Result<FaceLabeling, PlabicError> {
        self.check_reduced().map_err(PlabicError::NotReduced)?;
        let faces = self.faces();
        let (strands, _) = self.trace_strands()?;
        let nf = faces.darts.len();
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); nf];
        for st in &strands {
            let mut blocked = vec![false; self.alive.len()];
            for &h in &st.darts {
                blocked[h / 2] = true;
            }
            let mut left = vec![false; nf];
            let mut stack: Vec<usize> = st.darts.iter().map(|&h| faces.face_of[h]).collect();
            while let Some(f) = stack.pop() {
                if f == faces.outer || left[f] {
                    continue;
                }
                left[f] = true;
                for &h in &faces.darts[f] {
                    if !blocked[h / 2] {
                        stack.push(faces.face_of[twin(h)]);
                    }
                }
            }
            for (f, &l) in left.iter().enumerate() {
                if l {
                    members[f].push(st.end);
                }
            }
        }
        let mut out = FaceLabeling { darts: Vec::new(), labels: Vec::new(), k: 0 };
        for (f, m) in members.into_iter().enumerate() {
            if f == faces.outer {
                continue;
            }
            out.darts.push(faces.darts[f].clone());
            out.labels.push(Subset::of(self.n, &m));
        }
        out.k = out.labels.first().map_or(0, |s| s.len());
        if out.labels.iter().any(|s| s.len() != out.k) {
            return Err(PlabicError::MalformedGraph("face labels have different sizes".into()));
        }
        Ok(out)
    }
}

/// Face labels of a reduced graph, aligned with the faces' half-edge cycles.
#[derive(Clone, Debug)]
pub struct FaceLabeling {
    pub darts: Vec<Vec<usize>>,
    pub labels: Vec<Subset>,
    pub k: usize,
}

impl FaceLabeling {
    pub fn find(&self, label: &Subset) -> Option<usize> {
        self.labels.iter().position(|s| s == label)
    }

    pub fn sorted_labels(&self) -> Vec<Subset> {
        let mut v = self.labels.clone();
        v.sort();
        v
    }
}
