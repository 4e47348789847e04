//! Constructive Kempe-change witnesses for 3-colourings of cubic graphs.
//!
//! `solve` dispatches on structure: the prism is answered by search, a graph
//! with a separator of size at most two goes through [`separator_path`], a
//! 3-connected graph with an induced claw through [`claw_path`], and the
//! remaining claw-free graphs through [`net_path`]. Every procedure builds
//! its witness move by move and checks the structure it relies on as it
//! goes; a contradicted expectation surfaces as [`SolveError::Internal`]
//! rather than a silent fallback.

mod claw;
mod cut;
mod degenerate;
mod glue;
mod matching;
mod net;

pub use claw::{claw_path, wset_reduce, Reduction, Repartner};
pub use cut::separator_path;
pub use degenerate::degenerate_path;
pub use glue::{glue_clique_paths, restrict_sequence};
pub use matching::{identify_lift, matching_path};
pub use net::net_path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analyze::bfs_path;
use crate::coloring::{
    apply_move, kempe_chain, replay, reverse, validate, Coloring, Colour, EngineError, KempeMove,
    KempeSequence, ReplayError, DEFAULT_CEILING,
};
use crate::graph::{find_claw, is_three_connected, iso, Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph is not cubic")]
    NotCubic,
    #[error("the constructive solver handles k = 3 only, got {0}")]
    UnsupportedK(usize),
    #[error(transparent)]
    Colouring(#[from] EngineError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("witness failed replay: {0}")]
    Replay(#[from] ReplayError),
    #[error("the prism colourings {0} and {1} lie in different Kempe classes")]
    PrismObstruction(Coloring, Coloring),
    #[error("graph is {d}-degenerate, need at most {}", .k - 1)]
    TooDegenerate { d: usize, k: usize },
    #[error("graph is 3-connected")]
    ThreeConnected,
    #[error("graph is not 3-connected")]
    NotThreeConnected,
    #[error("graph has no induced claw")]
    NoClaw,
    #[error("graph has no induced net")]
    NoNet,
    #[error("colourings do not match")]
    NotMatching,
    #[error("parts do not glue: {0}")]
    BadParts(String),
    #[error("re-partnering returned {0}, which colours no new pair alike")]
    RepartnerContract(Coloring),
    #[error("internal: {0}")]
    Internal(String),
}

pub(crate) fn internal(msg: impl Into<String>) -> SolveError {
    SolveError::Internal(msg.into())
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err($crate::solver::internal(format!($($fmt)+)));
        }
    };
}
pub(crate) use ensure;

/// Every label a trace may contain.
pub const CASE_LABELS: &[&str] = &[
    "dispatch.equal",
    "dispatch.components",
    "dispatch.prism",
    "dispatch.cut",
    "dispatch.claw",
    "dispatch.net",
    "degenerate",
    "glue",
    "restrict",
    "cut.clique",
    "cut.pair",
    "cut.pair.reselect",
    "cut.pair.split",
    "cut.pair.joined",
    "match.degenerate",
    "match.identify",
    "net.alike.direct",
    "net.alike.swap",
    "net.alike.reversed",
    "net.distinct",
    "net.distinct.single",
    "net.distinct.double",
    "claw.match",
    "claw.partner",
    "claw.joined",
    "claw.recolour_leaf",
    "claw.split_chain",
    "claw.no_twins",
    "claw.s_twins",
    "claw.s_twins.leaf_twins",
    "claw.s_twins.split",
    "claw.s_twins.split.direct",
    "claw.s_twins.split.centre_swap",
    "claw.s_twins.split.target_swap",
    "claw.one_twin",
    "claw.one_twin.branching",
    "claw.one_twin.closed",
    "claw.one_twin.closed.branching",
    "claw.one_twin.closed.reroute",
    "claw.one_twin.open",
    "claw.two_twins",
    "claw.two_twins.branching",
    "claw.two_twins.crowded",
    "claw.two_twins.sparse",
];

/// Structure a solver step worked on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Subproblem {
    Component {
        vertices: Vec<usize>,
    },
    Separator {
        vertices: Vec<usize>,
        side_a: Vec<usize>,
        side_b: Vec<usize>,
    },
    Net {
        t: [usize; 3],
        p: [usize; 3],
    },
    Claw {
        center: usize,
        leaves: [usize; 3],
    },
    Identify {
        x: usize,
        y: usize,
    },
}

/// Audit record of a solver run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveTrace {
    pub cases: Vec<String>,
    pub moves: usize,
    pub subproblems: Vec<Subproblem>,
}

impl SolveTrace {
    pub(crate) fn case(&mut self, label: &'static str) {
        debug_assert!(CASE_LABELS.contains(&label), "undocumented label {label}");
        self.cases.push(label.to_string());
    }

    pub(crate) fn sub(&mut self, s: Subproblem) {
        self.subproblems.push(s);
    }

    /// True if every recorded label is documented.
    pub fn labels_documented(&self) -> bool {
        self.cases.iter().all(|c| CASE_LABELS.contains(&c.as_str()))
    }
}

/// A validated witness and the trace that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    pub sequence: KempeSequence,
    pub trace: SolveTrace,
}

/// Moves under construction, applied as they are recorded.
pub(crate) struct Walk<'g> {
    g: &'g Graph,
    start: Coloring,
    cur: Coloring,
    moves: Vec<KempeMove>,
}

impl<'g> Walk<'g> {
    pub(crate) fn new(g: &'g Graph, start: Coloring) -> Self {
        Walk {
            g,
            cur: start.clone(),
            start,
            moves: Vec::new(),
        }
    }

    pub(crate) fn cur(&self) -> &Coloring {
        &self.cur
    }

    pub(crate) fn col(&self, v: usize) -> Colour {
        self.cur.colors[v]
    }

    /// The chain a move would exchange, without applying it.
    pub(crate) fn chain(
        &self,
        anchor: usize,
        a: Colour,
        b: Colour,
    ) -> Result<Vec<usize>, SolveError> {
        kempe_chain(self.g, &self.cur, anchor, a, b)
            .map_err(|e| internal(format!("chain at {anchor} {{{a},{b}}}: {e}")))
    }

    /// Exchanges the `{a, b}`-chain at `anchor` and returns it (sorted).
    pub(crate) fn exchange(
        &mut self,
        anchor: usize,
        a: Colour,
        b: Colour,
    ) -> Result<Vec<usize>, SolveError> {
        let m = KempeMove::new(anchor, a, b);
        let chain = apply_move(self.g, &mut self.cur, m)
            .map_err(|e| internal(format!("move {m:?} on {}: {e}", self.cur)))?;
        self.moves.push(m);
        Ok(chain)
    }

    /// Gives `v` colour `to`, which must be absent from its neighbourhood.
    pub(crate) fn recolour(&mut self, v: usize, to: Colour) -> Result<(), SolveError> {
        let from = self.col(v);
        ensure!(from != to, "recolour of {v} to its own colour {to}");
        ensure!(
            self.g.neighbors(v).iter().all(|&x| self.col(x) != to),
            "vertex {v} cannot take colour {to} in {}",
            self.cur
        );
        self.exchange(v, from, to)?;
        Ok(())
    }

    /// Replays `seq`, which must start at the current colouring.
    pub(crate) fn append(&mut self, seq: &KempeSequence) -> Result<(), SolveError> {
        ensure!(
            seq.start == self.cur,
            "appended sequence starts at {} but walk is at {}",
            seq.start,
            self.cur
        );
        for &m in &seq.moves {
            self.exchange(m.anchor, m.a, m.b)?;
        }
        Ok(())
    }

    pub(crate) fn finish(self) -> KempeSequence {
        KempeSequence {
            start: self.start,
            moves: self.moves,
        }
    }
}

/// `first` followed by `second`, which must start where `first` ends.
pub(crate) fn concat(
    g: &Graph,
    first: KempeSequence,
    second: &KempeSequence,
) -> Result<KempeSequence, SolveError> {
    let mut w = Walk::new(g, first.start.clone());
    w.append(&first)?;
    w.append(second)?;
    Ok(w.finish())
}

/// Walk `a -> a'`, then `mid` from `a'` to `b'`, then `b' -> b` reversed.
pub(crate) fn sandwich(
    g: &Graph,
    from_a: KempeSequence,
    mid: &KempeSequence,
    from_b: &KempeSequence,
) -> Result<KempeSequence, SolveError> {
    let back = reverse(g, from_b)?;
    let first = concat(g, from_a, mid)?;
    concat(g, first, &back)
}

pub(crate) fn check_pair(g: &Graph, alpha: &Coloring, beta: &Coloring) -> Result<(), SolveError> {
    if alpha.k != beta.k {
        return Err(EngineError::KMismatch(alpha.k, beta.k).into());
    }
    alpha.check_proper(g)?;
    beta.check_proper(g)?;
    Ok(())
}

pub(crate) fn check_cubic_pair(
    g: &Graph,
    alpha: &Coloring,
    beta: &Coloring,
) -> Result<(), SolveError> {
    if !g.is_cubic() {
        return Err(SolveError::NotCubic);
    }
    check_pair(g, alpha, beta)?;
    if alpha.k != 3 {
        return Err(SolveError::UnsupportedK(alpha.k));
    }
    Ok(())
}

/// Maps a sequence on an induced subgraph back to the parent graph.
pub(crate) fn lift_anchors(
    seq: &KempeSequence,
    to_parent: &[usize],
    start: Coloring,
) -> KempeSequence {
    KempeSequence {
        start,
        moves: seq
            .moves
            .iter()
            .map(|m| KempeMove::new(to_parent[m.anchor], m.a, m.b))
            .collect(),
    }
}

/// Final gate: the witness must replay properly from `alpha` to `beta`.
pub(crate) fn certify(
    g: &Graph,
    seq: KempeSequence,
    alpha: &Coloring,
    beta: &Coloring,
) -> Result<KempeSequence, SolveError> {
    ensure!(
        seq.start == *alpha,
        "witness starts at {} not {alpha}",
        seq.start
    );
    let end = validate(g, &seq)?;
    ensure!(end == *beta, "witness ends at {end} not {beta}");
    Ok(seq)
}

fn solve_connected(
    tr: &mut SolveTrace,
    g: &Graph,
    alpha: &Coloring,
    beta: &Coloring,
) -> Result<KempeSequence, SolveError> {
    if alpha == beta {
        return Ok(KempeSequence::empty(alpha.clone()));
    }
    if iso::is_prism(g) {
        tr.case("dispatch.prism");
        return bfs_path(g, alpha, beta, DEFAULT_CEILING)?
            .ok_or_else(|| SolveError::PrismObstruction(alpha.clone(), beta.clone()));
    }
    ensure!(!iso::is_k4(g), "K4 has no 3-colourings");
    if !is_three_connected(g) {
        tr.case("dispatch.cut");
        cut::separator_walk(tr, g, alpha, beta)
    } else if find_claw(g).is_some() {
        tr.case("dispatch.claw");
        claw::claw_walk(tr, g, alpha, beta)
    } else {
        tr.case("dispatch.net");
        net::net_walk(tr, g, alpha, beta)
    }
}

/// Kempe-change witness from `alpha` to `beta` for a cubic graph, with
/// the trace of cases used. Disconnected graphs are solved per component.
pub fn solve(g: &Graph, alpha: &Coloring, beta: &Coloring) -> Result<Solution, SolveError> {
    check_cubic_pair(g, alpha, beta)?;
    let mut tr = SolveTrace::default();
    if alpha == beta {
        tr.case("dispatch.equal");
        return Ok(Solution {
            sequence: KempeSequence::empty(alpha.clone()),
            trace: tr,
        });
    }
    let comps = g.components();
    let seq = if comps.len() == 1 {
        solve_connected(&mut tr, g, alpha, beta)?
    } else {
        tr.case("dispatch.components");
        let mut walk = Walk::new(g, alpha.clone());
        for comp in comps {
            let sub = g.induced_subgraph(&comp);
            let a = alpha.restrict(&sub.to_parent);
            let b = beta.restrict(&sub.to_parent);
            if a == b {
                continue;
            }
            tr.sub(Subproblem::Component {
                vertices: comp.clone(),
            });
            let part = solve_connected(&mut tr, &sub.graph, &a, &b)?;
            let lifted = lift_anchors(&part, &sub.to_parent, walk.cur().clone());
            walk.append(&lifted)?;
        }
        walk.finish()
    };
    let sequence = certify(g, seq, alpha, beta)?;
    tr.moves = sequence.len();
    Ok(Solution {
        sequence,
        trace: tr,
    })
}

/// End colouring of a sequence already known to be valid.
pub(crate) fn end_of(g: &Graph, seq: &KempeSequence) -> Result<Coloring, SolveError> {
    Ok(replay(g, seq)?)
}
