//! Matching colourings and witnesses lifted through vertex identification.
//!
//! Two colourings match when some pair of vertices with a common neighbour
//! is coloured alike by both. Identifying that pair in a 3-connected graph
//! of maximum degree `k` leaves a `(k-1)`-degenerate graph, so a witness
//! exists there and lifts back: each exchange becomes one or two exchanges.

use super::{check_pair, degenerate_path, ensure, SolveError, SolveTrace, Subproblem, Walk};
use crate::coloring::{apply_move, colorings_match, Coloring, KempeSequence};
use crate::graph::{degeneracy, Graph};

fn lifted_start(g: &Graph, map: &[usize], start: &Coloring) -> Coloring {
    Coloring {
        k: start.k,
        colors: g.vertices().map(|v| start.colors[map[v]]).collect(),
    }
}

fn identified(
    g: &Graph,
    map: &[usize],
    c: &Coloring,
    n_prime: usize,
) -> Result<Coloring, SolveError> {
    let mut colors = vec![0; n_prime];
    for v in g.vertices() {
        let slot = &mut colors[map[v]];
        ensure!(
            *slot == 0 || *slot == c.colors[v],
            "identified vertices have different colours"
        );
        *slot = c.colors[v];
    }
    Ok(Coloring { k: c.k, colors })
}

/// Lifts `seq`, a witness on the graph obtained from `g` by identifying the
/// non-adjacent vertices `x` and `y`, to a witness on `g`. The lifted start
/// gives `x` and `y` the colour of the merged vertex.
pub fn identify_lift(
    g: &Graph,
    x: usize,
    y: usize,
    seq: &KempeSequence,
) -> Result<KempeSequence, SolveError> {
    let (gp, map) = g.identify_vertices(x, y)?;
    ensure!(
        seq.start.n() == gp.n(),
        "sequence is not on the identified graph"
    );
    let start = lifted_start(g, &map, &seq.start);
    start.check_proper(g)?;
    let z = map[x];
    let mut preimage = vec![usize::MAX; gp.n()];
    for v in g.vertices().rev() {
        preimage[map[v]] = v;
    }
    let mut cur = seq.start.clone();
    let mut w = Walk::new(g, start);
    for &m in &seq.moves {
        let chain = apply_move(&gp, &mut cur, m)?;
        if chain.binary_search(&z).is_err() {
            w.exchange(preimage[m.anchor], m.a, m.b)?;
        } else {
            let first = w.exchange(x, m.a, m.b)?;
            if first.binary_search(&y).is_err() {
                w.exchange(y, m.a, m.b)?;
            }
        }
        ensure!(
            g.vertices().all(|v| w.col(v) == cur.colors[map[v]]),
            "lift diverged from the identified walk"
        );
    }
    Ok(w.finish())
}

/// Witness between matching colourings of a 3-connected graph whose
/// maximum degree is at most the number of colours.
pub fn matching_path(
    g: &Graph,
    alpha: &Coloring,
    beta: &Coloring,
) -> Result<KempeSequence, SolveError> {
    check_pair(g, alpha, beta)?;
    let mut tr = SolveTrace::default();
    matching_walk(&mut tr, g, alpha, beta)
}

pub(crate) fn matching_walk(
    tr: &mut SolveTrace,
    g: &Graph,
    alpha: &Coloring,
    beta: &Coloring,
) -> Result<KempeSequence, SolveError> {
    if alpha == beta {
        return Ok(KempeSequence::empty(alpha.clone()));
    }
    let k = alpha.k;
    if degeneracy(g).d < k {
        tr.case("match.degenerate");
        tr.case("degenerate");
        return degenerate_path(g, k, alpha, beta);
    }
    let m = colorings_match(g, alpha, beta).ok_or(SolveError::NotMatching)?;
    tr.case("match.identify");
    tr.case("degenerate");
    tr.sub(Subproblem::Identify { x: m.x, y: m.y });
    let (gp, map) = g.identify_vertices(m.x, m.y)?;
    let d = degeneracy(&gp).d;
    ensure!(d < k, "identified graph is {d}-degenerate");
    let a = identified(g, &map, alpha, gp.n())?;
    let b = identified(g, &map, beta, gp.n())?;
    let inner = degenerate_path(&gp, k, &a, &b)?;
    identify_lift(g, m.x, m.y, &inner)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analyze::kempe_classes;
    use crate::coloring::{validate, KempeMove, DEFAULT_CEILING};
    use crate::graph::named;

    #[test]
    fn empty_sequence_lifts_to_empty() {
        let g = named::cycle(4);
        let s = KempeSequence::empty(Coloring::new(3, vec![1, 2, 3]).unwrap());
        let l = identify_lift(&g, 0, 2, &s).unwrap();
        assert!(l.is_empty());
        assert_eq!(l.start.colors, vec![1, 2, 1, 3]);
    }

    #[test]
    fn c4_to_p3_lift_doubles() {
        // identifying 0 and 2 in C4 gives P3 with the merged vertex in the middle
        let g = named::cycle(4);
        let (gp, map) = g.identify_vertices(0, 2).unwrap();
        assert_eq!(gp.edge_list(), vec![(0, 1), (0, 2)]);
        assert_eq!(map, vec![0, 1, 0, 2]);
        let start = Coloring::new(3, vec![1, 2, 2]).unwrap();
        // the merged vertex alone is a chain; in C4 it is two chains
        let s = KempeSequence {
            start,
            moves: vec![KempeMove::new(0, 1, 3)],
        };
        let l = identify_lift(&g, 0, 2, &s).unwrap();
        assert_eq!(
            l.moves,
            vec![KempeMove::new(0, 1, 3), KempeMove::new(2, 1, 3)]
        );
        assert_eq!(validate(&g, &l).unwrap().colors, vec![3, 2, 3, 2]);
        // a chain through a neighbour keeps x and y together: one move
        let s = KempeSequence {
            start: s.start,
            moves: vec![KempeMove::new(1, 1, 2)],
        };
        assert_eq!(identify_lift(&g, 0, 2, &s).unwrap().len(), 1);
    }

    #[test]
    fn k33_matching_pairs() {
        let g = named::k33();
        let (_, p) = kempe_classes(&g, 3, DEFAULT_CEILING).unwrap();
        for a in &p.colorings {
            for b in &p.colorings {
                if colorings_match(&g, a, b).is_some() {
                    let s = matching_path(&g, a, b).unwrap();
                    assert_eq!(validate(&g, &s).unwrap(), *b);
                }
            }
        }
    }
}
