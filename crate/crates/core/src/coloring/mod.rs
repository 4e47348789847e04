//! Proper colourings, Kempe chains and Kempe changes.
//!
//! Colours are `1..=k`. A Kempe move is named by an anchor vertex and a
//! colour pair; the chain itself is recomputed whenever the move is applied,
//! so a recorded sequence can be checked independently of whoever built it.

mod enumerate;
mod replay;

pub use enumerate::{colouring_bound, enumerate_colorings, DEFAULT_CEILING};
pub use replay::{replay, reverse, validate, ReplayError};

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

pub type Colour = u8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("k = {0} is not a usable colour count")]
    BadK(usize),
    #[error("colour {colour} at vertex {vertex} is outside 1..={k}")]
    ColourOutOfRange {
        vertex: usize,
        colour: Colour,
        k: usize,
    },
    #[error("colouring has {found} entries, graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("edge {0}-{1} is monochromatic")]
    Improper(usize, usize),
    #[error("anchor {anchor} has colour {colour}, not in pair {{{a},{b}}}")]
    AnchorNotInPair {
        anchor: usize,
        colour: Colour,
        a: Colour,
        b: Colour,
    },
    #[error("colour pair {{{0},{1}}} is not two distinct colours")]
    BadPair(Colour, Colour),
    #[error("colourings use different k ({0} vs {1})")]
    KMismatch(usize, usize),
    #[error("up to {estimate} colourings would exceed the ceiling of {ceiling}")]
    CeilingExceeded { estimate: u128, ceiling: u64 },
}

/// A total colouring `vertex -> 1..=k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coloring {
    pub k: usize,
    pub colors: Vec<Colour>,
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Coloring {
    pub fn new(k: usize, colors: Vec<Colour>) -> Result<Self, EngineError> {
        if k == 0 || k > usize::from(Colour::MAX) {
            return Err(EngineError::BadK(k));
        }
        for (vertex, &colour) in colors.iter().enumerate() {
            if colour == 0 || usize::from(colour) > k {
                return Err(EngineError::ColourOutOfRange { vertex, colour, k });
            }
        }
        Ok(Coloring { k, colors })
    }

    /// Range-checked and proper on `g`.
    pub fn proper(g: &Graph, k: usize, colors: Vec<Colour>) -> Result<Self, EngineError> {
        let c = Self::new(k, colors)?;
        c.check_proper(g)?;
        Ok(c)
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn get(&self, v: usize) -> Colour {
        self.colors[v]
    }

    pub fn check_proper(&self, g: &Graph) -> Result<(), EngineError> {
        if self.colors.len() != g.n() {
            return Err(EngineError::LengthMismatch {
                expected: g.n(),
                found: self.colors.len(),
            });
        }
        // Re-validate range in case the value came from deserialisation.
        Coloring::new(self.k, self.colors.clone())?;
        match g
            .edge_list()
            .into_iter()
            .find(|&(u, v)| self.colors[u] == self.colors[v])
        {
            Some((u, v)) => Err(EngineError::Improper(u, v)),
            None => Ok(()),
        }
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.check_proper(g).is_ok()
    }

    /// Restriction to the vertices listed in `vertices` (in that order).
    pub fn restrict(&self, vertices: &[usize]) -> Coloring {
        Coloring {
            k: self.k,
            colors: vertices.iter().map(|&v| self.colors[v]).collect(),
        }
    }

    /// Swaps `a` and `b` on `vertices`.
    pub(crate) fn swap_on(&mut self, vertices: &[usize], a: Colour, b: Colour) {
        for &v in vertices {
            let c = &mut self.colors[v];
            *c = if *c == a { b } else { a };
        }
    }
}

/// Exchange of the `{a, b}`-chain containing `anchor`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KempeMove {
    pub anchor: usize,
    pub a: Colour,
    pub b: Colour,
}

impl KempeMove {
    pub fn new(anchor: usize, a: Colour, b: Colour) -> Self {
        KempeMove { anchor, a, b }
    }
}

/// A start colouring and the moves that transform it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KempeSequence {
    pub start: Coloring,
    pub moves: Vec<KempeMove>,
}

impl KempeSequence {
    pub fn empty(start: Coloring) -> Self {
        KempeSequence {
            start,
            moves: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

fn check_move(c: &Coloring, x: usize, a: Colour, b: Colour) -> Result<(), EngineError> {
    if a == b || a == 0 || b == 0 || usize::from(a.max(b)) > c.k {
        return Err(EngineError::BadPair(a, b));
    }
    let colour = c.colors[x];
    if colour != a && colour != b {
        return Err(EngineError::AnchorNotInPair {
            anchor: x,
            colour,
            a,
            b,
        });
    }
    Ok(())
}

/// Breadth-first chain collection; `seen` must be all `false` on entry and
/// is left marking the chain.
pub(crate) fn collect_chain(
    g: &Graph,
    colors: &[Colour],
    x: usize,
    a: Colour,
    b: Colour,
    seen: &mut [bool],
) -> Vec<usize> {
    let mut chain = vec![x];
    seen[x] = true;
    let mut queue = VecDeque::from([x]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            let cw = colors[w];
            if !seen[w] && (cw == a || cw == b) {
                seen[w] = true;
                chain.push(w);
                queue.push_back(w);
            }
        }
    }
    chain
}

/// Vertex set (sorted) of the `{a, b}`-component containing `x`.
pub fn kempe_chain(
    g: &Graph,
    c: &Coloring,
    x: usize,
    a: Colour,
    b: Colour,
) -> Result<Vec<usize>, EngineError> {
    check_move(c, x, a, b)?;
    let mut seen = vec![false; g.n()];
    let mut chain = collect_chain(g, &c.colors, x, a, b, &mut seen);
    chain.sort_unstable();
    Ok(chain)
}

/// Applies `m` in place and returns the exchanged chain.
pub fn apply_move(g: &Graph, c: &mut Coloring, m: KempeMove) -> Result<Vec<usize>, EngineError> {
    let chain = kempe_chain(g, c, m.anchor, m.a, m.b)?;
    c.swap_on(&chain, m.a, m.b);
    Ok(chain)
}

pub fn kempe_change(g: &Graph, c: &Coloring, m: KempeMove) -> Result<Coloring, EngineError> {
    let mut out = c.clone();
    apply_move(g, &mut out, m)?;
    Ok(out)
}

/// All `{a, b}`-chains, each sorted, ordered by least vertex.
pub fn chains(g: &Graph, c: &Coloring, a: Colour, b: Colour) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for v in g.vertices() {
        let cv = c.colors[v];
        if !seen[v] && (cv == a || cv == b) {
            let mut chain = collect_chain(g, &c.colors, v, a, b, &mut seen);
            chain.sort_unstable();
            out.push(chain);
        }
    }
    out
}

/// Two vertices with a common neighbour, coloured alike by both colourings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchWitness {
    pub x: usize,
    pub y: usize,
    pub common: usize,
}

/// First match found scanning common neighbours `w` in id order, then pairs
/// `x < y` of neighbours of `w`.
pub fn colorings_match(g: &Graph, alpha: &Coloring, beta: &Coloring) -> Option<MatchWitness> {
    for w in g.vertices() {
        let nb = g.neighbors(w);
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if alpha.colors[x] == alpha.colors[y] && beta.colors[x] == beta.colors[y] {
                    return Some(MatchWitness { x, y, common: w });
                }
            }
        }
    }
    None
}

/// Least colouring in the orbit of `c` under permutations of the colours:
/// colours are renamed in order of first appearance.
pub fn canonical_class(c: &Coloring) -> Coloring {
    let mut rename = vec![0 as Colour; c.k + 1];
    let mut next: Colour = 1;
    let colors = c
        .colors
        .iter()
        .map(|&col| {
            let slot = &mut rename[usize::from(col)];
            if *slot == 0 {
                *slot = next;
                next += 1;
            }
            *slot
        })
        .collect();
    Coloring { k: c.k, colors }
}
