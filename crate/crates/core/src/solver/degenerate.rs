//! Witnesses on graphs whose degeneracy is below the colour count.
//!
//! Induction on a degeneracy ordering: delete a vertex `v` of degree at most
//! `k - 1`, solve the rest, and replay each move in the full graph. A move
//! whose chain would pull `v` in together with a second chain is preceded by
//! recolouring `v` to a colour outside the move's pair; two of `v`'s
//! neighbours carry the pair's colours then, so such a colour is free.
//! Finally `v` takes its target colour directly.

use super::{check_pair, ensure, SolveError, Walk};
use crate::coloring::{apply_move, Coloring, Colour, KempeMove, KempeSequence};
use crate::graph::{degeneracy, Graph};

/// Witness from `alpha` to `beta` on a graph of degeneracy at most `k - 1`.
pub fn degenerate_path(
    g: &Graph,
    k: usize,
    alpha: &Coloring,
    beta: &Coloring,
) -> Result<KempeSequence, SolveError> {
    check_pair(g, alpha, beta)?;
    ensure!(
        alpha.k == k,
        "colourings use k = {}, asked for {k}",
        alpha.k
    );
    let d = degeneracy(g).d;
    if d + 1 > k {
        return Err(SolveError::TooDegenerate { d, k });
    }
    let moves = walk(g, alpha, beta)?;
    Ok(KempeSequence {
        start: alpha.clone(),
        moves,
    })
}

fn walk(g: &Graph, alpha: &Coloring, beta: &Coloring) -> Result<Vec<KempeMove>, SolveError> {
    if alpha == beta {
        return Ok(Vec::new());
    }
    let v = degeneracy(g).order[0];
    let rest: Vec<usize> = g.vertices().filter(|&u| u != v).collect();
    let sub = g.induced_subgraph(&rest);
    let mut inner = alpha.restrict(&sub.to_parent);
    let inner_moves = walk(&sub.graph, &inner, &beta.restrict(&sub.to_parent))?;

    let mut w = Walk::new(g, alpha.clone());
    let mut in_chain = vec![false; g.n()];
    for m in inner_moves {
        let sub_chain = apply_move(&sub.graph, &mut inner, m)
            .map_err(|e| super::internal(format!("inner move {m:?}: {e}")))?;
        in_chain.iter_mut().for_each(|x| *x = false);
        for &u in &sub_chain {
            in_chain[sub.to_parent[u]] = true;
        }
        let (a, b) = (m.a, m.b);
        let cv = w.col(v);
        if cv == a || cv == b {
            let touching: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&x| w.col(x) == a || w.col(x) == b)
                .collect();
            let meets = touching.iter().any(|&x| in_chain[x]);
            let all_inside = touching.iter().all(|&x| in_chain[x]);
            if meets && !all_inside {
                let used: Vec<Colour> = g.neighbors(v).iter().map(|&x| w.col(x)).collect();
                let free = (1..=alpha.k as Colour)
                    .find(|&c| c != a && c != b && !used.contains(&c))
                    .ok_or_else(|| super::internal(format!("no free colour at {v}")))?;
                w.recolour(v, free)?;
            }
        }
        let chain = w.exchange(sub.to_parent[m.anchor], a, b)?;
        ensure!(
            chain.iter().all(|&x| x == v || in_chain[x])
                && chain.iter().filter(|&&x| x != v).count() == sub_chain.len(),
            "lifted chain {chain:?} differs from the inner chain"
        );
    }
    let target = beta.colors[v];
    if w.col(v) != target {
        w.recolour(v, target)?;
    }
    ensure!(
        w.cur() == beta,
        "degenerate lift ended at {} not {beta}",
        w.cur()
    );
    Ok(w.finish().moves)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analyze::{bfs_path, kempe_classes};
    use crate::coloring::{validate, DEFAULT_CEILING};
    use crate::graph::named;

    #[test]
    fn single_vertex() {
        let g = Graph::empty(1);
        let a = Coloring::new(3, vec![1]).unwrap();
        let b = Coloring::new(3, vec![3]).unwrap();
        let s = degenerate_path(&g, 3, &a, &b).unwrap();
        assert_eq!(s.moves, vec![KempeMove::new(0, 1, 3)]);
    }

    #[test]
    fn path_swap() {
        let g = named::path(3);
        let a = Coloring::new(3, vec![1, 2, 1]).unwrap();
        let b = Coloring::new(3, vec![2, 1, 2]).unwrap();
        let s = degenerate_path(&g, 3, &a, &b).unwrap();
        assert_eq!(validate(&g, &s).unwrap(), b);
        let shortest = bfs_path(&g, &a, &b, DEFAULT_CEILING).unwrap().unwrap();
        assert!(s.len() >= shortest.len());
    }

    #[test]
    fn every_pair_on_small_degenerate_graphs() {
        for g in [
            named::diamond(),
            named::house(),
            named::net(),
            named::cycle(5),
            named::claw(),
        ] {
            let (_, p) = kempe_classes(&g, 3, DEFAULT_CEILING).unwrap();
            for a in &p.colorings {
                for b in &p.colorings {
                    let s = degenerate_path(&g, 3, a, b).unwrap();
                    assert_eq!(validate(&g, &s).unwrap(), *b);
                }
            }
        }
    }

    #[test]
    fn rejects_cubic() {
        let g = named::k33();
        let a = Coloring::new(3, vec![1, 1, 1, 2, 2, 2]).unwrap();
        assert_eq!(
            degenerate_path(&g, 3, &a, &a),
            Err(SolveError::TooDegenerate { d: 3, k: 3 })
        );
    }
}
