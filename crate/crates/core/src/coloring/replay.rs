use thiserror::Error;

use super::{apply_move, Coloring, EngineError, KempeSequence};
use crate::graph::Graph;

/// First problem met while replaying a sequence.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReplayError {
    #[error("start colouring: {0}")]
    Start(EngineError),
    #[error("move {index}: {source}")]
    Move { index: usize, source: EngineError },
}

/// Replays every move, checking the start colouring, each move's anchor
/// colour and properness after each step.
pub fn validate(g: &Graph, seq: &KempeSequence) -> Result<Coloring, ReplayError> {
    seq.start.check_proper(g).map_err(ReplayError::Start)?;
    let mut c = seq.start.clone();
    for (index, &m) in seq.moves.iter().enumerate() {
        apply_move(g, &mut c, m).map_err(|source| ReplayError::Move { index, source })?;
        c.check_proper(g)
            .map_err(|source| ReplayError::Move { index, source })?;
    }
    Ok(c)
}

/// Final colouring of `seq`. Kempe changes preserve properness, so only the
/// start and the move preconditions are checked.
pub fn replay(g: &Graph, seq: &KempeSequence) -> Result<Coloring, ReplayError> {
    seq.start.check_proper(g).map_err(ReplayError::Start)?;
    let mut c = seq.start.clone();
    for (index, &m) in seq.moves.iter().enumerate() {
        apply_move(g, &mut c, m).map_err(|source| ReplayError::Move { index, source })?;
    }
    Ok(c)
}

/// The same moves in reverse order, starting from the end colouring.
///
/// Exchanging a chain leaves its vertex set a chain with the same anchor,
/// so each move undoes itself.
pub fn reverse(g: &Graph, seq: &KempeSequence) -> Result<KempeSequence, ReplayError> {
    let end = replay(g, seq)?;
    Ok(KempeSequence {
        start: end,
        moves: seq.moves.iter().rev().copied().collect(),
    })
}
