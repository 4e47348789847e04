//! Connected cubic graphs, one per isomorphism class.
//!
//! Graphs are grown in breadth-first label order: vertex `v` is completed
//! to degree three using later, already-labelled vertices or fresh labels.
//! Every connected cubic graph has such a labelling, so the search is
//! complete; duplicates are removed by canonical form.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::graph::{graph6, iso, Graph};

pub const MAX_GENERATED_N: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerateError {
    #[error("cubic graphs need an even vertex count, got {0}")]
    Odd(usize),
    #[error("n = {0} is outside 4..={MAX_GENERATED_N}")]
    OutOfRange(usize),
}

struct Builder {
    n: usize,
    adj: Vec<Vec<usize>>,
    found: BTreeMap<String, Graph>,
}

impl Builder {
    fn grow(&mut self, v: usize, next: usize) {
        if v == self.n {
            let g = Graph::from_edges(
                self.n,
                &self
                    .adj
                    .iter()
                    .enumerate()
                    .flat_map(|(u, l)| l.iter().filter(move |&&w| w > u).map(move |&w| (u, w)))
                    .collect::<Vec<_>>(),
            )
            .expect("generated edges are valid");
            let canon = iso::canonical_form(&g);
            self.found.entry(graph6::encode(&canon)).or_insert(canon);
            return;
        }
        if v >= next {
            // v was never reached: the graph would be disconnected
            return;
        }
        let need = 3 - self.adj[v].len();
        let candidates: Vec<usize> = (v + 1..next)
            .filter(|&u| self.adj[u].len() < 3 && !self.adj[v].contains(&u))
            .collect();
        for old in 0..=need.min(candidates.len()) {
            let fresh = need - old;
            if next + fresh > self.n {
                continue;
            }
            let targets: Vec<usize> = (next..next + fresh).collect();
            crate::graph::for_each_subset(candidates.len(), old, |pick| {
                let chosen: Vec<usize> = pick
                    .iter()
                    .map(|&i| candidates[i])
                    .chain(targets.iter().copied())
                    .collect();
                for &u in &chosen {
                    self.adj[v].push(u);
                    self.adj[u].push(v);
                }
                self.grow(v + 1, next + fresh);
                for &u in &chosen {
                    self.adj[v].pop();
                    self.adj[u].pop();
                }
                false
            });
        }
    }
}

/// All connected cubic graphs on `n` vertices, in canonical form, sorted by
/// their graph6 words.
pub fn gen_cubic(n: usize) -> Result<Vec<Graph>, GenerateError> {
    if n % 2 == 1 {
        return Err(GenerateError::Odd(n));
    }
    if !(4..=MAX_GENERATED_N).contains(&n) {
        return Err(GenerateError::OutOfRange(n));
    }
    let mut b = Builder {
        n,
        adj: vec![Vec::new(); n],
        found: BTreeMap::new(),
    };
    b.grow(0, 1);
    Ok(b.found.into_values().collect())
}

/// A uniformly paired connected simple cubic graph on `n` vertices, for
/// sizes beyond exhaustive generation. Pairings with loops, multi-edges or
/// several components are redrawn.
pub fn random_cubic<R: Rng>(n: usize, rng: &mut R) -> Result<Graph, GenerateError> {
    if n % 2 == 1 {
        return Err(GenerateError::Odd(n));
    }
    if n < 4 {
        return Err(GenerateError::OutOfRange(n));
    }
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
    loop {
        points.shuffle(rng);
        let edges: Vec<(usize, usize)> = points.chunks(2).map(|e| (e[0], e[1])).collect();
        if let Ok(g) = Graph::from_edges(n, &edges) {
            if g.is_cubic() && g.is_connected() {
                return Ok(g);
            }
        }
    }
}

/// A connected graph on `n` vertices in which every vertex after the first
/// has between one and `d` earlier neighbours, so it is `d`-degenerate.
pub fn random_degenerate<R: Rng>(n: usize, d: usize, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        let want = rng.gen_range(1..=d.min(v).max(1));
        let mut earlier: Vec<usize> = (0..v).collect();
        earlier.shuffle(rng);
        edges.extend(earlier.into_iter().take(want).map(|u| (u, v)));
    }
    Graph::from_edges(n, &edges).expect("edges go to distinct earlier vertices")
}
