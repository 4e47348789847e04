//! Exhaustive ground truth over the space of all proper colourings.
//!
//! Colourings are enumerated, every Kempe change is generated once per
//! chain, and classes are the components of the resulting move relation.

mod pairs;
mod structure;
mod verify;

pub use pairs::{check_solver_pairs, PairSelection};
pub use structure::{structure_report, Route, StructureReport};
pub use verify::{verify_corpus, verify_graph, Summary, Verdict, VerdictRecord};

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::coloring::{
    collect_chain, enumerate_colorings, Coloring, Colour, EngineError, KempeMove, KempeSequence,
};
use crate::graph::{graph6, Graph};

/// Kempe-class statistics for one graph and colour count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub graph6: String,
    pub k: usize,
    pub colorings: usize,
    pub classes: usize,
    /// Descending.
    pub sizes: Vec<usize>,
    /// Least colouring of each class, classes ordered by representative.
    pub representatives: Vec<Coloring>,
}

/// All colourings (lexicographic order) and the class index of each.
#[derive(Clone, Debug)]
pub struct Partition {
    pub colorings: Vec<Coloring>,
    /// Classes are numbered in order of their least colouring.
    pub class_of: Vec<usize>,
}

impl Partition {
    pub fn index_of(&self, c: &Coloring) -> Option<usize> {
        self.colorings.binary_search(c).ok()
    }

    pub fn same_class(&self, a: &Coloring, b: &Coloring) -> Option<bool> {
        Some(self.class_of[self.index_of(a)?] == self.class_of[self.index_of(b)?])
    }
}

/// `f` over `items` on a pool of `jobs` threads (`0`: rayon's default),
/// results in input order.
pub fn par_map<T, R, F>(jobs: usize, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    let run = || items.par_iter().map(&f).collect();
    if jobs == 0 {
        return run();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(run),
        Err(_) => items.iter().map(&f).collect(),
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            // smaller index wins so roots are class minima
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.parent[hi] = lo;
        }
    }
}

/// Every distinct Kempe change available from `c`, one per chain; the
/// anchor is the chain's least vertex. `max_chain` limits chain size
/// (`usize::MAX` for all moves, `1` for single-vertex recolourings).
pub fn kempe_neighbors(g: &Graph, c: &Coloring, max_chain: usize) -> Vec<(KempeMove, Coloring)> {
    let k = c.k as Colour;
    let mut out = Vec::new();
    let mut seen = vec![false; g.n()];
    for a in 1..=k {
        for b in a + 1..=k {
            seen.iter_mut().for_each(|s| *s = false);
            for v in g.vertices() {
                let cv = c.colors[v];
                if seen[v] || (cv != a && cv != b) {
                    continue;
                }
                let chain = collect_chain(g, &c.colors, v, a, b, &mut seen);
                if chain.len() > max_chain {
                    continue;
                }
                let mut next = c.clone();
                next.swap_on(&chain, a, b);
                out.push((KempeMove::new(v, a, b), next));
            }
        }
    }
    out
}

fn partition_with(
    g: &Graph,
    k: usize,
    ceiling: u64,
    max_chain: usize,
) -> Result<Partition, EngineError> {
    let colorings = enumerate_colorings(g, k, ceiling)?;
    let index: HashMap<&[Colour], usize> = colorings
        .iter()
        .enumerate()
        .map(|(i, c)| (c.colors.as_slice(), i))
        .collect();
    let mut uf = UnionFind::new(colorings.len());
    for (i, c) in colorings.iter().enumerate() {
        for (_, next) in kempe_neighbors(g, c, max_chain) {
            let j = index[next.colors.as_slice()];
            uf.union(i, j);
        }
    }
    let mut class_id = HashMap::new();
    let class_of = (0..colorings.len())
        .map(|i| {
            let root = uf.find(i);
            let next = class_id.len();
            *class_id.entry(root).or_insert(next)
        })
        .collect();
    Ok(Partition {
        colorings,
        class_of,
    })
}

fn report(g: &Graph, k: usize, p: &Partition) -> ClassReport {
    let classes = p.class_of.iter().copied().max().map_or(0, |m| m + 1);
    let mut sizes = vec![0; classes];
    let mut representatives: Vec<Option<Coloring>> = vec![None; classes];
    for (i, &cl) in p.class_of.iter().enumerate() {
        sizes[cl] += 1;
        representatives[cl].get_or_insert_with(|| p.colorings[i].clone());
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    ClassReport {
        graph6: graph6::encode(g),
        k,
        colorings: p.colorings.len(),
        classes,
        sizes,
        representatives: representatives.into_iter().flatten().collect(),
    }
}

/// Kempe classes of all proper `k`-colourings of `g`.
pub fn kempe_classes(
    g: &Graph,
    k: usize,
    ceiling: u64,
) -> Result<(ClassReport, Partition), EngineError> {
    let p = partition_with(g, k, ceiling, usize::MAX)?;
    Ok((report(g, k, &p), p))
}

/// Classes under single-vertex recolourings only.
pub fn single_vertex_classes(
    g: &Graph,
    k: usize,
    ceiling: u64,
) -> Result<(ClassReport, Partition), EngineError> {
    let p = partition_with(g, k, ceiling, 1)?;
    Ok((report(g, k, &p), p))
}

/// Shortest Kempe-change sequence from `alpha` to `beta`, or `None` when
/// they lie in different classes. Errors if more than `ceiling` colourings
/// would be visited.
pub fn bfs_path(
    g: &Graph,
    alpha: &Coloring,
    beta: &Coloring,
    ceiling: u64,
) -> Result<Option<KempeSequence>, EngineError> {
    if alpha.k != beta.k {
        return Err(EngineError::KMismatch(alpha.k, beta.k));
    }
    alpha.check_proper(g)?;
    beta.check_proper(g)?;
    if alpha == beta {
        return Ok(Some(KempeSequence::empty(alpha.clone())));
    }
    let mut parent: HashMap<Vec<Colour>, Option<(Vec<Colour>, KempeMove)>> = HashMap::new();
    parent.insert(alpha.colors.clone(), None);
    let mut queue = VecDeque::from([alpha.clone()]);
    while let Some(c) = queue.pop_front() {
        for (m, next) in kempe_neighbors(g, &c, usize::MAX) {
            if parent.contains_key(&next.colors) {
                continue;
            }
            parent.insert(next.colors.clone(), Some((c.colors.clone(), m)));
            if parent.len() as u64 > ceiling {
                return Err(EngineError::CeilingExceeded {
                    estimate: parent.len() as u128,
                    ceiling,
                });
            }
            if next == *beta {
                let mut moves = Vec::new();
                let mut cur = next.colors;
                while let Some(Some((prev, m))) = parent.get(&cur) {
                    moves.push(*m);
                    cur = prev.clone();
                }
                moves.reverse();
                return Ok(Some(KempeSequence {
                    start: alpha.clone(),
                    moves,
                }));
            }
            queue.push_back(next);
        }
    }
    Ok(None)
}
