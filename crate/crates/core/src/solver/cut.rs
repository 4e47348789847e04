//! Cubic graphs with a separator of at most two vertices.
//!
//! A clique separator splits the graph into two 2-degenerate parts that are
//! glued directly. Otherwise the separator is a non-adjacent pair `{x, y}`,
//! oriented so that `x` has one neighbour `x1` on side A and `y` has one
//! neighbour `y1` on side B. Colourings with `x` and `y` alike are first
//! split by at most two exchanges; colourings with them different are
//! connected in the graph plus the edge `xy`, where both parts are again
//! 2-degenerate, and the witness is restricted back.

use super::{
    certify, check_cubic_pair, degenerate_path, ensure, glue_clique_paths, restrict_sequence,
    sandwich, Solution, SolveError, SolveTrace, Subproblem, Walk,
};
use crate::coloring::{Coloring, Colour, KempeSequence};
use crate::graph::{find_min_separator, Graph};

/// Witness for a connected cubic graph that is not 3-connected.
pub fn separator_path(
    g: &Graph,
    alpha: &Coloring,
    beta: &Coloring,
) -> Result<Solution, SolveError> {
    check_cubic_pair(g, alpha, beta)?;
    let mut trace = SolveTrace::default();
    let seq = separator_walk(&mut trace, g, alpha, beta)?;
    let sequence = certify(g, seq, alpha, beta)?;
    trace.moves = sequence.len();
    Ok(Solution { sequence, trace })
}

fn connector(h: &Graph, a: &Coloring, b: &Coloring) -> Result<KempeSequence, SolveError> {
    degenerate_path(h, a.k, a, b)
}

fn union(a: &[usize], s: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = a.iter().chain(s).copied().collect();
    v.sort_unstable();
    v
}

fn count_in(g: &Graph, v: usize, side: &[usize]) -> usize {
    g.neighbors(v)
        .iter()
        .filter(|w| side.binary_search(w).is_ok())
        .count()
}

/// `(x, y)` with one neighbour of `x` and two of `y` in `a`.
fn orient(g: &Graph, p: usize, q: usize, a: &[usize]) -> Option<(usize, usize)> {
    match (count_in(g, p, a), count_in(g, q, a)) {
        (1, 2) => Some((p, q)),
        (2, 1) => Some((q, p)),
        _ => None,
    }
}

struct PairCut {
    x: usize,
    y: usize,
    x1: usize,
    y1: usize,
    a: Vec<usize>,
    b: Vec<usize>,
}

fn pair_cut(
    tr: &mut SolveTrace,
    g: &Graph,
    s: [usize; 2],
    a: Vec<usize>,
    b: Vec<usize>,
) -> Result<PairCut, SolveError> {
    let (s, a, b) = if let Some((x, y)) = orient(g, s[0], s[1], &a) {
        ([x, y], a, b)
    } else {
        // Equal counts: make them both one on A, then move the separator
        // from x to its neighbour on A.
        tr.case("cut.pair.reselect");
        let (a, b) = if count_in(g, s[0], &a) == 1 {
            (a, b)
        } else {
            (b, a)
        };
        let (x, y) = (s[0], s[1]);
        ensure!(
            count_in(g, x, &a) == 1 && count_in(g, y, &a) == 1,
            "separator counts do not balance"
        );
        let x1 = *g
            .neighbors(x)
            .iter()
            .find(|w| a.binary_search(w).is_ok())
            .expect("counted above");
        ensure!(
            !g.has_edge(x1, y),
            "reselected separator {{{x1},{y}}} is a clique"
        );
        let a2: Vec<usize> = a.iter().copied().filter(|&v| v != x1).collect();
        let b2 = union(&b, &[x]);
        ensure!(!a2.is_empty(), "reselected side is empty");
        ensure!(
            a2.iter()
                .all(|&u| g.neighbors(u).iter().all(|w| b2.binary_search(w).is_err())),
            "reselected separator {{{x1},{y}}} does not separate"
        );
        let (x, y) = orient(g, x1, y, &a2)
            .ok_or_else(|| super::internal("reselected separator is still balanced"))?;
        ([x, y], a2, b2)
    };
    let [x, y] = s;
    let x1 = *g
        .neighbors(x)
        .iter()
        .find(|w| a.binary_search(w).is_ok())
        .expect("oriented");
    let y1 = *g
        .neighbors(y)
        .iter()
        .find(|w| b.binary_search(w).is_ok())
        .expect("oriented");
    ensure!(
        count_in(g, y, &b) == 1,
        "y has {} neighbours on B",
        count_in(g, y, &b)
    );
    Ok(PairCut { x, y, x1, y1, a, b })
}

/// At most two exchanges giving `x` and `y` different colours.
fn split(
    tr: &mut SolveTrace,
    g: &Graph,
    pc: &PairCut,
    c: &Coloring,
) -> Result<KempeSequence, SolveError> {
    let mut w = Walk::new(g, c.clone());
    if c.colors[pc.x] == c.colors[pc.y] {
        tr.case("cut.pair.split");
        let one = c.colors[pc.x];
        let two = c.colors[pc.y1];
        let three: Colour = 6 - one - two;
        if w.col(pc.x1) == three {
            let chain = w.exchange(pc.x1, two, three)?;
            ensure!(
                [pc.x, pc.y, pc.y1]
                    .iter()
                    .all(|v| chain.binary_search(v).is_err()),
                "first split exchange reached the separator"
            );
        }
        ensure!(w.col(pc.x1) == two, "x1 should now share the colour of y1");
        let chain = w.exchange(pc.x, one, three)?;
        ensure!(
            chain.binary_search(&pc.y).is_err(),
            "split exchange reached y"
        );
    }
    Ok(w.finish())
}

pub(crate) fn separator_walk(
    tr: &mut SolveTrace,
    g: &Graph,
    alpha: &Coloring,
    beta: &Coloring,
) -> Result<KempeSequence, SolveError> {
    let sep = find_min_separator(g, 2)?.ok_or(SolveError::ThreeConnected)?;
    tr.sub(Subproblem::Separator {
        vertices: sep.vertices.clone(),
        side_a: sep.side_a.clone(),
        side_b: sep.side_b.clone(),
    });
    if alpha == beta {
        return Ok(KempeSequence::empty(alpha.clone()));
    }
    if g.is_clique(&sep.vertices) {
        tr.case("cut.clique");
        tr.case("glue");
        tr.case("degenerate");
        let p1 = union(&sep.side_a, &sep.vertices);
        let p2 = union(&sep.side_b, &sep.vertices);
        return glue_clique_paths(g, &p1, &p2, alpha, beta, &mut connector);
    }
    tr.case("cut.pair");
    let s = [sep.vertices[0], sep.vertices[1]];
    let (mut a, mut b) = (sep.side_a, sep.side_b);
    a.sort_unstable();
    b.sort_unstable();
    let pc = pair_cut(tr, g, s, a, b)?;
    let to_a = split(tr, g, &pc, alpha)?;
    let to_b = split(tr, g, &pc, beta)?;
    let a2 = super::end_of(g, &to_a)?;
    let b2 = super::end_of(g, &to_b)?;

    tr.case("cut.pair.joined");
    tr.case("glue");
    tr.case("degenerate");
    tr.case("restrict");
    let ge = g.with_edge(pc.x, pc.y)?;
    let p1 = union(&pc.a, &[pc.x, pc.y]);
    let p2 = union(&pc.b, &[pc.x, pc.y]);
    let joined = glue_clique_paths(&ge, &p1, &p2, &a2, &b2, &mut connector)?;
    let mid = restrict_sequence(g, &ge, &joined)?;
    sandwich(g, to_a, &mid, &to_b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analyze::kempe_classes;
    use crate::coloring::{validate, DEFAULT_CEILING};
    use crate::graph::named;

    #[test]
    fn two_diamonds_all_pairs() {
        let g = named::two_diamonds();
        let (_, p) = kempe_classes(&g, 3, DEFAULT_CEILING).unwrap();
        for a in &p.colorings {
            for b in &p.colorings {
                let s = separator_path(&g, a, b).unwrap_or_else(|e| panic!("{a} -> {b}: {e}"));
                assert_eq!(validate(&g, &s.sequence).unwrap(), *b);
            }
        }
    }

    #[test]
    fn split_uses_at_most_two_moves() {
        let g = named::two_diamonds();
        let (_, p) = kempe_classes(&g, 3, DEFAULT_CEILING).unwrap();
        let sep = find_min_separator(&g, 2).unwrap().unwrap();
        let mut tr = SolveTrace::default();
        let pc = pair_cut(
            &mut tr,
            &g,
            [sep.vertices[0], sep.vertices[1]],
            sep.side_a,
            sep.side_b,
        )
        .unwrap();
        for c in &p.colorings {
            let s = split(&mut tr, &g, &pc, c).unwrap();
            let end = validate(&g, &s).unwrap();
            assert_ne!(end.colors[pc.x], end.colors[pc.y]);
            if c.colors[pc.x] != c.colors[pc.y] {
                assert!(s.is_empty());
            } else {
                let expect = if c.colors[pc.x1] == c.colors[pc.y1] {
                    1
                } else {
                    2
                };
                assert_eq!(s.len(), expect);
            }
        }
    }

    #[test]
    fn refuses_three_connected() {
        let g = named::k33();
        let a = Coloring::new(3, vec![1, 1, 1, 2, 2, 2]).unwrap();
        let b = Coloring::new(3, vec![2, 2, 2, 1, 1, 1]).unwrap();
        assert_eq!(separator_path(&g, &a, &b), Err(SolveError::ThreeConnected));
    }
}
