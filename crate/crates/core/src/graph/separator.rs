use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// A vertex set whose removal increases the number of components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separator {
    pub vertices: Vec<usize>,
    /// Component of `G - S` holding the least vertex outside `S`.
    pub side_a: Vec<usize>,
    /// Every other vertex outside `S`.
    pub side_b: Vec<usize>,
}

impl Separator {
    /// Builds the two sides for `vertices`, or `None` if they do not separate.
    pub fn check(g: &Graph, vertices: &[usize]) -> Option<Separator> {
        let before = g.components().len();
        let comps = g.components_avoiding(vertices);
        if comps.len() <= before {
            return None;
        }
        let mut rest: Vec<usize> = comps[1..].concat();
        rest.sort_unstable();
        Some(Separator {
            vertices: vertices.to_vec(),
            side_a: comps[0].clone(),
            side_b: rest,
        })
    }
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it
/// returns `true`.
pub(crate) fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Smallest separator of size at most `max_size`, if any.
///
/// Subsets are scanned by increasing size in lexicographic order; among the
/// separators of minimum size a clique is returned when one exists.
pub fn find_min_separator(g: &Graph, max_size: usize) -> Result<Option<Separator>, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    // a separator leaves at least two vertices behind
    if g.n() < 3 {
        return Err(GraphError::TooSmall { need: 3, n: g.n() });
    }
    for size in 1..=max_size {
        let mut first: Option<Separator> = None;
        let mut clique: Option<Separator> = None;
        for_each_subset(g.n(), size, |s| {
            if let Some(sep) = Separator::check(g, s) {
                if g.is_clique(s) {
                    clique = Some(sep);
                    return true;
                }
                first.get_or_insert(sep);
            }
            false
        });
        if let Some(sep) = clique.or(first) {
            return Ok(Some(sep));
        }
    }
    Ok(None)
}

/// At least four vertices, connected, and no separator of size at most two.
pub fn is_three_connected(g: &Graph) -> bool {
    g.n() >= 4 && g.is_connected() && matches!(find_min_separator(g, 2), Ok(None))
}
