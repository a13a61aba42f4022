use serde_json::{json, Value};

use crate::minors::binom;

/// A monotone path in the grid `G_{k,m}` with vertices `v_{ij}`, `1 ≤ i ≤ k`, `1 ≤ j ≤ m`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridPath {
    pub vertices: Vec<(usize, usize)>,
}

impl GridPath {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!(self.vertices.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>())
    }
}

fn paths(k: usize, m: usize, reversed_cols: bool) -> Vec<GridPath> {
    let mut out = Vec::with_capacity(binom(k + m - 2, k - 1) as usize);
    // choose which of the k+m-2 steps go down a row
    let steps = k + m - 2;
    for mask in 0u64..1 << steps {
        if mask.count_ones() as usize != k - 1 {
            continue;
        }
        let (mut i, mut j) = (1, 1);
        let mut vertices = vec![(1, 1)];
        for t in 0..steps {
            if mask >> t & 1 == 1 {
                i += 1;
            } else {
                j += 1;
            }
            vertices.push((i, j));
        }
        if reversed_cols {
            for v in vertices.iter_mut() {
                v.1 = m + 1 - v.1;
            }
        }
        out.push(GridPath { vertices });
    }
    out.sort();
    out
}

/// Monotone paths `v_{11} → v_{km}`.
pub fn grid_paths(k: usize, m: usize) -> Vec<GridPath> {
    paths(k, m, false)
}

/// Monotone paths `v_{1m} → v_{k1}`.
pub fn transposed_grid_paths(k: usize, m: usize) -> Vec<GridPath> {
    paths(k, m, true)
}
