//! Combining witnesses of two parts that meet in a clique, and restricting
//! a witness on a supergraph to a spanning subgraph.

use super::{ensure, SolveError, Walk};
use crate::coloring::{apply_move, chains, kempe_chain, Coloring, KempeMove, KempeSequence};
use crate::graph::Graph;

/// Produces a witness between two colourings of a part graph.
pub type Connector<'a> =
    dyn FnMut(&Graph, &Coloring, &Coloring) -> Result<KempeSequence, SolveError> + 'a;

/// Witness on `g` from `alpha` to `beta`, where `g` is covered by the
/// induced parts `part1` and `part2` whose intersection is a clique and
/// which have no edges between their private vertices. `connector` supplies
/// witnesses on the parts (relabelled to their own vertex ids).
///
/// The second part is aligned first. Moves of the first part are then
/// replayed; when one reaches into the clique it also recolours part of
/// the second side, and the remaining chains there are exchanged too so
/// that the second side only ever differs from its target by a global
/// permutation of colours. That permutation fixes the clique's colours and
/// is undone at the end by exchanging whole colour pairs.
pub fn glue_clique_paths(
    g: &Graph,
    part1: &[usize],
    part2: &[usize],
    alpha: &Coloring,
    beta: &Coloring,
    connector: &mut Connector<'_>,
) -> Result<KempeSequence, SolveError> {
    super::check_pair(g, alpha, beta)?;
    let n = g.n();
    let mut side = vec![0u8; n];
    for &v in part1 {
        side[v] |= 1;
    }
    for &v in part2 {
        side[v] |= 2;
    }
    if let Some(v) = side.iter().position(|&s| s == 0) {
        return Err(SolveError::BadParts(format!(
            "vertex {v} is in neither part"
        )));
    }
    let shared: Vec<usize> = (0..n).filter(|&v| side[v] == 3).collect();
    if !g.is_clique(&shared) {
        return Err(SolveError::BadParts(format!(
            "intersection {shared:?} is not a clique"
        )));
    }
    if let Some((u, v)) = g
        .edge_list()
        .into_iter()
        .find(|&(u, v)| side[u] | side[v] == 3 && side[u] != 3 && side[v] != 3)
    {
        return Err(SolveError::BadParts(format!(
            "edge {u}-{v} joins the private sides"
        )));
    }
    if alpha == beta {
        return Ok(KempeSequence::empty(alpha.clone()));
    }

    let sub1 = g.induced_subgraph(part1);
    let sub2 = g.induced_subgraph(part2);
    let mut w = Walk::new(g, alpha.clone());

    let target2 = beta.restrict(part2);
    let w2 = connector(&sub2.graph, &alpha.restrict(part2), &target2)?;
    let mut state2 = w2.start.clone();
    for &m in &w2.moves {
        apply_move(&sub2.graph, &mut state2, m)
            .map_err(|e| super::internal(format!("part witness: {e}")))?;
        w.exchange(part2[m.anchor], m.a, m.b)?;
        ensure!(
            w.cur().restrict(part2) == state2,
            "second part drifted while aligning"
        );
    }
    ensure!(state2 == target2, "second part witness ended at {state2}");

    let target1 = beta.restrict(part1);
    let w1 = connector(&sub1.graph, &w.cur().restrict(part1), &target1)?;
    let mut state1 = w1.start.clone();
    for &m in &w1.moves {
        apply_move(&sub1.graph, &mut state1, m)
            .map_err(|e| super::internal(format!("part witness: {e}")))?;
        let chain = w.exchange(part1[m.anchor], m.a, m.b)?;
        if chain.iter().any(|&v| side[v] == 3) {
            let local = w.cur().restrict(part2);
            for c in chains(&sub2.graph, &local, m.a, m.b) {
                if c.iter().all(|&v| side[part2[v]] == 2) {
                    w.exchange(part2[c[0]], m.a, m.b)?;
                }
            }
        }
        ensure!(
            w.cur().restrict(part1) == state1,
            "first part drifted while replaying"
        );
    }

    // The second side is now a colour permutation of its target.
    for _ in 0..=alpha.k {
        let Some(&v) = part2.iter().find(|&&v| w.col(v) != beta.colors[v]) else {
            break;
        };
        let (a, b) = (w.col(v), beta.colors[v]);
        let local = w.cur().restrict(part2);
        for c in chains(&sub2.graph, &local, a, b) {
            ensure!(
                c.iter().all(|&x| side[part2[x]] == 2),
                "colour pair {{{a},{b}}} reaches the shared clique"
            );
            w.exchange(part2[c[0]], a, b)?;
        }
    }
    ensure!(w.cur() == beta, "glue ended at {} not {beta}", w.cur());
    Ok(w.finish())
}

/// Restriction of a witness on `g_super` to its spanning subgraph `g`: each
/// chain of `g_super` splits into chains of `g`, each exchanged in turn.
pub fn restrict_sequence(
    g: &Graph,
    g_super: &Graph,
    seq: &KempeSequence,
) -> Result<KempeSequence, SolveError> {
    ensure!(g.n() == g_super.n(), "vertex counts differ");
    ensure!(
        g.edge_list()
            .into_iter()
            .all(|(u, v)| g_super.has_edge(u, v)),
        "g is not a subgraph of g_super"
    );
    let mut cur = seq.start.clone();
    let mut moves = Vec::new();
    for &m in &seq.moves {
        let big = apply_move(g_super, &mut cur, m)?;
        // `cur` now has the chain exchanged; split using colours before it.
        let mut before = cur.clone();
        before.swap_on(&big, m.a, m.b);
        let mut covered = vec![false; g.n()];
        for &v in &big {
            if covered[v] {
                continue;
            }
            let part = kempe_chain(g, &before, v, m.a, m.b)?;
            for &x in &part {
                ensure!(
                    big.binary_search(&x).is_ok(),
                    "sub-chain leaves the super-chain"
                );
                covered[x] = true;
            }
            moves.push(KempeMove::new(v, m.a, m.b));
        }
    }
    Ok(KempeSequence {
        start: seq.start.clone(),
        moves,
    })
}
