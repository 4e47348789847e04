//! 3-connected cubic graphs with an induced claw.
//!
//! Every colouring gives two of the three leaves of a claw the same colour,
//! since they share the centre. Two colourings that agree on which leaves
//! are alike match, so the work is re-partnering: walking from a colouring
//! to one where a different pair of leaves is alike. [`wset_reduce`] turns
//! any re-partnering procedure into a matching pair of endpoints.

use std::collections::{HashSet, VecDeque};

use super::matching::matching_walk;
use super::{
    certify, check_cubic_pair, end_of, ensure, internal, sandwich, Solution, SolveError,
    SolveTrace, Subproblem, Walk,
};
use crate::coloring::{apply_move, colorings_match, Coloring, Colour, KempeMove, KempeSequence};
use crate::graph::{find_claw, is_three_connected, ClawEmbedding, Graph};

/// Outcome of one re-partnering step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Repartner {
    /// Ends at a colouring that colours alike a pair the start did not.
    Partner(KempeSequence),
    /// Ends at the requested target itself.
    Joined(KempeSequence),
}

/// Walks from each endpoint to a pair of colourings that colour alike a
/// common pair of the chosen three vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub from_alpha: KempeSequence,
    pub from_beta: KempeSequence,
}

type Pairs = [bool; 3];

fn pairs(w: [usize; 3], c: &Coloring) -> Pairs {
    let k = |i: usize| c.colors[w[i]];
    [k(0) == k(1), k(0) == k(2), k(1) == k(2)]
}

fn share(a: Pairs, b: Pairs) -> bool {
    (0..3).any(|i| a[i] && b[i])
}

fn fresh(old: Pairs, new: Pairs) -> bool {
    (0..3).any(|i| new[i] && !old[i])
}

fn end_from(g: &Graph, seq: &KempeSequence, start: &Coloring) -> Result<Coloring, SolveError> {
    ensure!(
        seq.start == *start,
        "re-partnering started at {} not {start}",
        seq.start
    );
    end_of(g, seq)
}

/// Reduces `alpha` and `beta` to colourings sharing an alike pair of `w`.
///
/// `repartner(c, target)` must walk from `c` either to a colouring that
/// colours alike a pair of `w` that `c` does not, or to `target` itself.
/// At most two calls are made.
pub fn wset_reduce(
    g: &Graph,
    w: [usize; 3],
    alpha: &Coloring,
    beta: &Coloring,
    repartner: &mut dyn FnMut(&Coloring, &Coloring) -> Result<Repartner, SolveError>,
) -> Result<Reduction, SolveError> {
    let stay = |c: &Coloring| KempeSequence::empty(c.clone());
    let (pa, pb) = (pairs(w, alpha), pairs(w, beta));
    if !pa.contains(&true) || !pb.contains(&true) {
        return Err(SolveError::BadParts(format!("{w:?} has no alike pair")));
    }
    if share(pa, pb) {
        return Ok(Reduction {
            from_alpha: stay(alpha),
            from_beta: stay(beta),
        });
    }
    let a1 = match repartner(alpha, beta)? {
        Repartner::Joined(s) => {
            ensure!(
                end_from(g, &s, alpha)? == *beta,
                "joined walk missed its target"
            );
            return Ok(Reduction {
                from_alpha: s,
                from_beta: stay(beta),
            });
        }
        Repartner::Partner(s) => s,
    };
    let ea = end_from(g, &a1, alpha)?;
    let p1 = pairs(w, &ea);
    if !fresh(pa, p1) {
        return Err(SolveError::RepartnerContract(ea));
    }
    if share(p1, pb) {
        return Ok(Reduction {
            from_alpha: a1,
            from_beta: stay(beta),
        });
    }
    match repartner(beta, alpha)? {
        Repartner::Joined(s) => {
            ensure!(
                end_from(g, &s, beta)? == *alpha,
                "joined walk missed its target"
            );
            Ok(Reduction {
                from_alpha: stay(alpha),
                from_beta: s,
            })
        }
        Repartner::Partner(s) => {
            let eb = end_from(g, &s, beta)?;
            let pb1 = pairs(w, &eb);
            if !fresh(pb, pb1) {
                return Err(SolveError::RepartnerContract(eb));
            }
            if share(pb1, pa) {
                Ok(Reduction {
                    from_alpha: stay(alpha),
                    from_beta: s,
                })
            } else if share(pb1, p1) {
                Ok(Reduction {
                    from_alpha: a1,
                    from_beta: s,
                })
            } else {
                Err(internal("three re-partnered colourings share no pair"))
            }
        }
    }
}

/// Witness for a 3-connected cubic graph with an induced claw.
pub fn claw_path(g: &Graph, alpha: &Coloring, beta: &Coloring) -> Result<Solution, SolveError> {
    check_cubic_pair(g, alpha, beta)?;
    if !is_three_connected(g) {
        return Err(SolveError::NotThreeConnected);
    }
    let mut trace = SolveTrace::default();
    let seq = claw_walk(&mut trace, g, alpha, beta)?;
    let sequence = certify(g, seq, alpha, beta)?;
    trace.moves = sequence.len();
    Ok(Solution { sequence, trace })
}

pub(crate) fn claw_walk(
    tr: &mut SolveTrace,
    g: &Graph,
    alpha: &Coloring,
    beta: &Coloring,
) -> Result<KempeSequence, SolveError> {
    let claw = find_claw(g).ok_or(SolveError::NoClaw)?;
    tr.sub(Subproblem::Claw {
        center: claw.center,
        leaves: claw.leaves,
    });
    if alpha == beta {
        return Ok(KempeSequence::empty(alpha.clone()));
    }
    let red = {
        let mut rep = |c: &Coloring, target: &Coloring| {
            let r = claw_repartner(tr, g, &claw, c, target)?;
            tr.case(match r {
                Repartner::Partner(_) => "claw.partner",
                Repartner::Joined(_) => "claw.joined",
            });
            Ok(r)
        };
        wset_reduce(g, claw.leaves, alpha, beta, &mut rep)?
    };
    let a = end_of(g, &red.from_alpha)?;
    let b = end_of(g, &red.from_beta)?;
    tr.case("claw.match");
    let mid = matching_walk(tr, g, &a, &b)?;
    sandwich(g, red.from_alpha, &mid, &red.from_beta)
}

fn has(set: &[usize], v: usize) -> bool {
    set.binary_search(&v).is_ok()
}

fn deg_in(g: &Graph, set: &[usize], v: usize) -> usize {
    g.neighbors(v).iter().filter(|&&x| has(set, x)).count()
}

fn sorted<const N: usize>(mut a: [usize; N]) -> Vec<usize> {
    a.sort_unstable();
    a.to_vec()
}

/// Breadth-first order of `set` from `src`, moving only inside `set`.
fn bfs_in(g: &Graph, set: &[usize], src: usize) -> Vec<usize> {
    let mut seen = HashSet::from([src]);
    let mut order = vec![src];
    let mut queue = VecDeque::from([src]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if has(set, y) && seen.insert(y) {
                order.push(y);
                queue.push_back(y);
            }
        }
    }
    order
}

/// The vertex of degree three in `set` nearest to `src`.
fn closest_branch(g: &Graph, set: &[usize], src: usize) -> Option<usize> {
    bfs_in(g, set, src)
        .into_iter()
        .find(|&x| deg_in(g, set, x) == 3)
}

/// Neighbours of a leaf other than the centre.
fn others(g: &Graph, x: usize, centre: usize) -> [usize; 2] {
    let o: Vec<usize> = g
        .neighbors(x)
        .iter()
        .copied()
        .filter(|&y| y != centre)
        .collect();
    [o[0], o[1]]
}

/// The shared colour of the two outer neighbours of `x`, if they agree.
fn twin(g: &Graph, walk: &Walk<'_>, x: usize, centre: usize) -> Option<Colour> {
    let [a, b] = others(g, x, centre);
    (walk.col(a) == walk.col(b)).then(|| walk.col(a))
}

fn uniform(g: &Graph, walk: &Walk<'_>, x: usize) -> bool {
    let n = g.neighbors(x);
    n.iter().all(|&y| walk.col(y) == walk.col(n[0]))
}

/// Walks from `c0`, whose alike leaves are a single pair, until the third
/// leaf joins one of them, or straight to `target` when the third leaf's
/// outer neighbours are alike and the leaves' are not.
fn claw_repartner(
    tr: &mut SolveTrace,
    g: &Graph,
    claw: &ClawEmbedding,
    c0: &Coloring,
    target: &Coloring,
) -> Result<Repartner, SolveError> {
    let w = claw.center;
    let [l0, l1, l2] = claw.leaves;
    let k = |v: usize| c0.colors[v];
    let (u0, v0, s) = if k(l0) == k(l1) {
        (l0, l1, l2)
    } else if k(l0) == k(l2) {
        (l0, l2, l1)
    } else {
        (l1, l2, l0)
    };
    ensure!(
        k(u0) == k(v0) && k(s) != k(u0),
        "leaves of {c0} are not a single alike pair"
    );
    let mut walk = Walk::new(g, c0.clone());
    let mut seen = HashSet::new();
    loop {
        ensure!(
            seen.insert(walk.cur().colors.clone()),
            "re-partnering revisited {}",
            walk.cur()
        );
        let (u, v) = (u0, v0);
        if walk.col(s) == walk.col(u) || walk.col(s) == walk.col(v) {
            return Ok(Repartner::Partner(walk.finish()));
        }
        let (one, two, three) = (walk.col(u), walk.col(s), walk.col(w));

        if let Some(x) = [u, v, s].into_iter().find(|&x| uniform(g, &walk, x)) {
            tr.case("claw.recolour_leaf");
            walk.recolour(x, 6 - walk.col(x) - three)?;
            continue;
        }
        let f = walk.chain(s, one, two)?;
        if !has(&f, u) || !has(&f, v) {
            tr.case("claw.split_chain");
            walk.exchange(s, one, two)?;
            continue;
        }
        match (
            twin(g, &walk, u, w),
            twin(g, &walk, v, w),
            twin(g, &walk, s, w),
        ) {
            (None, None, None) => {
                tr.case("claw.no_twins");
                let x = closest_branch(g, &f, u)
                    .ok_or_else(|| internal("chain at s has no branch vertex"))?;
                walk.recolour(x, three)?;
                ensure!(
                    !has(&walk.chain(s, one, two)?, u),
                    "u still on the chain at s"
                );
                walk.exchange(s, one, two)?;
            }
            (tu, tv, Some(sc)) => {
                tr.case("claw.s_twins");
                ensure!(sc == one, "outer neighbours of s have colour {sc}");
                if let Some((a, ta)) = [(u, tu), (v, tv)].into_iter().find(|p| p.1.is_some()) {
                    tr.case("claw.s_twins.leaf_twins");
                    ensure!(ta == Some(two), "leaf twins have colour {ta:?}");
                    let h = walk.exchange(s, two, three)?;
                    ensure!(
                        h == sorted([s, w]),
                        "chain {h:?} at s is more than s and the centre"
                    );
                    walk.recolour(a, three)?;
                } else {
                    tr.case("claw.s_twins.split");
                    return toward_target(tr, g, walk, [u, v, s], w, target).map(Repartner::Joined);
                }
            }
            (Some(_), None, None) | (None, Some(_), None) => {
                tr.case("claw.one_twin");
                let (u, v) = if twin(g, &walk, u, w).is_some() {
                    (u, v)
                } else {
                    (v, u)
                };
                one_twin(tr, g, &mut walk, [u, v, s], w, &f)?;
            }
            (Some(_), Some(_), None) => {
                tr.case("claw.two_twins");
                two_twins(tr, g, &mut walk, [u, v, s], w)?;
            }
        }
    }
}

/// The third leaf's outer neighbours are alike and neither alike leaf's
/// are: reach `target` through a match, possibly after one exchange on
/// either side.
fn toward_target(
    tr: &mut SolveTrace,
    g: &Graph,
    mut walk: Walk<'_>,
    [u, v, s]: [usize; 3],
    w: usize,
    target: &Coloring,
) -> Result<KempeSequence, SolveError> {
    let c = walk.cur().clone();
    if colorings_match(g, &c, target).is_some() {
        tr.case("claw.s_twins.split.direct");
        walk.append(&matching_walk(tr, g, &c, target)?)?;
        return Ok(walk.finish());
    }
    let (two, three) = (c.colors[s], c.colors[w]);
    let first_two = |x: usize| others(g, x, w).into_iter().find(|&y| c.colors[y] == two);
    let (u1, v1) = (
        first_two(u).ok_or_else(|| internal("u has no neighbour coloured like s"))?,
        first_two(v).ok_or_else(|| internal("v has no neighbour coloured like s"))?,
    );
    let tw = target.colors[w];
    if tw == target.colors[u1] || tw == target.colors[v1] {
        tr.case("claw.s_twins.split.centre_swap");
        let h = walk.exchange(s, two, three)?;
        ensure!(
            h == sorted([s, w]),
            "chain {h:?} at s is more than s and the centre"
        );
        let cur = walk.cur().clone();
        ensure!(
            colorings_match(g, &cur, target).is_some(),
            "centre swap did not produce a match"
        );
        walk.append(&matching_walk(tr, g, &cur, target)?)?;
        return Ok(walk.finish());
    }
    tr.case("claw.s_twins.split.target_swap");
    let ts = target.colors[s];
    let ustar = [u, v]
        .into_iter()
        .find(|&x| target.colors[x] != ts)
        .ok_or_else(|| internal("target colours all leaves alike"))?;
    let (a, b) = (tw, target.colors[ustar]);
    let mut near = target.clone();
    let ch = apply_move(g, &mut near, KempeMove::new(w, a, b))?;
    ensure!(
        ch == sorted([ustar, w]),
        "target chain {ch:?} at the centre is not two vertices"
    );
    ensure!(
        colorings_match(g, &c, &near).is_some(),
        "target swap did not produce a match"
    );
    walk.append(&matching_walk(tr, g, &c, &near)?)?;
    walk.exchange(w, a, b)?;
    ensure!(walk.cur() == target, "target swap missed the target");
    Ok(walk.finish())
}

/// Only `u` has alike outer neighbours, coloured like `s`.
fn one_twin(
    tr: &mut SolveTrace,
    g: &Graph,
    walk: &mut Walk<'_>,
    [u, v, s]: [usize; 3],
    w: usize,
    f: &[usize],
) -> Result<(), SolveError> {
    let (one, two, three) = (walk.col(u), walk.col(s), walk.col(w));
    ensure!(
        twin(g, walk, u, w) == Some(two),
        "twins of u are not coloured like s"
    );
    let [sa, sb] = others(g, s, w);
    let (s1, s2) = if walk.col(sa) == one {
        (sa, sb)
    } else {
        (sb, sa)
    };
    ensure!(
        walk.col(s1) == one && walk.col(s2) == three,
        "outer neighbours of s are not split"
    );

    if let Some(x) = closest_branch(g, f, s) {
        tr.case("claw.one_twin.branching");
        walk.recolour(x, three)?;
        ensure!(
            !has(&walk.chain(s, one, two)?, v),
            "v still on the chain at s"
        );
        walk.exchange(s, one, two)?;
        return Ok(());
    }
    let g13 = walk.chain(s2, one, three)?;
    let closed = has(&g13, s1)
        && g13.iter().all(|&x| deg_in(g, &g13, x) <= 2)
        && deg_in(g, &g13, s1) == 1
        && deg_in(g, &g13, s2) == 1;
    if closed {
        tr.case("claw.one_twin.closed");
        ensure!(
            !has(&g13, u),
            "u lies on the path between the outer neighbours of s"
        );
        let t = g
            .neighbors(s1)
            .iter()
            .copied()
            .find(|&x| x != s && has(f, x))
            .ok_or_else(|| internal("s1 ends the chain at s"))?;
        walk.exchange(s2, one, three)?;
        let fv = walk.chain(v, one, two)?;
        if !has(&fv, s) {
            walk.exchange(v, one, two)?;
            return Ok(());
        }
        if let Some(x) = closest_branch(g, &fv, s) {
            tr.case("claw.one_twin.closed.branching");
            walk.recolour(x, three)?;
            ensure!(
                !has(&walk.chain(s, one, two)?, v),
                "v still on the chain at s"
            );
            walk.exchange(s, one, two)?;
            return Ok(());
        }
        tr.case("claw.one_twin.closed.reroute");
        ensure!(
            f.iter().all(|&x| x == s1 || has(&fv, x)),
            "new chain at s lost part of the old one"
        );
        let h = walk.exchange(w, two, three)?;
        ensure!(
            h == sorted([w, s, s1, t]),
            "chain {h:?} at the centre is not four vertices"
        );
        if !others(g, u, w).contains(&t) {
            walk.recolour(u, three)?;
        }
        return Ok(());
    }
    tr.case("claw.one_twin.open");
    if !has(&g13, s1) {
        walk.exchange(s2, one, three)?;
        return Ok(());
    }
    ensure!(deg_in(g, &g13, s1) == 1, "s1 is inside the chain at s2");
    if deg_in(g, &g13, s2) == 2 {
        let h = walk.exchange(s, two, three)?;
        ensure!(
            h == sorted([w, s, s2]),
            "chain {h:?} at s is not three vertices"
        );
        walk.recolour(u, three)?;
        return Ok(());
    }
    ensure!(deg_in(g, &g13, s2) == 1, "s2 branches in its own chain");
    let x =
        closest_branch(g, &g13, s2).ok_or_else(|| internal("chain at s2 has no branch vertex"))?;
    walk.recolour(x, two)?;
    ensure!(
        !has(&walk.chain(s2, one, three)?, s1),
        "s1 still on the chain at s2"
    );
    walk.exchange(s2, one, three)?;
    Ok(())
}

/// Both `u` and `v` have alike outer neighbours, coloured like `s`.
fn two_twins(
    tr: &mut SolveTrace,
    g: &Graph,
    walk: &mut Walk<'_>,
    [u, v, s]: [usize; 3],
    w: usize,
) -> Result<(), SolveError> {
    let (one, two, three) = (walk.col(u), walk.col(s), walk.col(w));
    ensure!(
        twin(g, walk, u, w) == Some(two) && twin(g, walk, v, w) == Some(two),
        "leaf twins are not coloured like s"
    );
    let h = walk.chain(s, two, three)?;
    if let Some(x) = closest_branch(g, &h, s) {
        tr.case("claw.two_twins.branching");
        walk.recolour(x, one)?;
        return Ok(());
    }
    let mut outer: Vec<usize> = others(g, u, w).into_iter().chain(others(g, v, w)).collect();
    outer.sort_unstable();
    outer.dedup();
    // An outer neighbour on the chain whose neighbours other than the
    // leaves are all coloured like the centre: an inner vertex of the
    // chain, or one shared by both leaves.
    let crowded = bfs_in(g, &h, s).into_iter().find(|&x| {
        outer.contains(&x)
            && g.neighbors(x)
                .iter()
                .all(|&y| y == u || y == v || walk.col(y) == three)
    });
    if let Some(z) = crowded {
        tr.case("claw.two_twins.crowded");
        let e = walk.exchange(w, one, three)?;
        ensure!(
            e == sorted([w, u, v]),
            "chain {e:?} at the centre is not the claw"
        );
        walk.recolour(z, one)?;
        return Ok(());
    }
    tr.case("claw.two_twins.sparse");
    let a = [u, v]
        .into_iter()
        .find(|&a| others(g, a, w).iter().all(|&x| !has(&h, x)))
        .ok_or_else(|| internal("both leaves touch the chain at s"))?;
    let [a1, a2] = others(g, a, w);
    let e = walk.exchange(a1, two, three)?;
    ensure!(
        !has(&e, w),
        "chain at an outer neighbour reached the centre"
    );
    if walk.col(a2) == two {
        let e = walk.exchange(a2, two, three)?;
        ensure!(
            !has(&e, w),
            "chain at an outer neighbour reached the centre"
        );
    }
    walk.recolour(a, two)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analyze::kempe_classes;
    use crate::coloring::{validate, DEFAULT_CEILING};
    use crate::generate::gen_cubic;
    use crate::graph::named;

    fn all_pairs(g: &Graph) {
        let (_, p) = kempe_classes(g, 3, DEFAULT_CEILING).unwrap();
        for a in &p.colorings {
            for b in &p.colorings {
                let s = claw_path(g, a, b).unwrap_or_else(|e| panic!("{a} -> {b}: {e}"));
                assert_eq!(validate(g, &s.sequence).unwrap(), *b);
                assert!(s.trace.labels_documented());
            }
        }
    }

    #[test]
    fn k33_all_pairs() {
        all_pairs(&named::k33());
    }

    #[test]
    fn three_connected_with_claw_up_to_eight() {
        let mut count = 0;
        for n in [6, 8] {
            for g in gen_cubic(n).unwrap() {
                if is_three_connected(&g) && find_claw(&g).is_some() {
                    all_pairs(&g);
                    count += 1;
                }
            }
        }
        assert!(count >= 3);
    }

    #[test]
    fn reduce_with_shared_pair_is_idle() {
        let g = named::k33();
        let a = Coloring::new(3, vec![1, 1, 1, 2, 2, 2]).unwrap();
        let b = Coloring::new(3, vec![1, 1, 2, 3, 3, 3]).unwrap();
        let mut never =
            |_: &Coloring, _: &Coloring| -> Result<Repartner, SolveError> { panic!("called") };
        let r = wset_reduce(&g, [0, 1, 2], &a, &b, &mut never).unwrap();
        assert!(r.from_alpha.is_empty() && r.from_beta.is_empty());
    }

    #[test]
    fn reduce_rejects_a_stuck_repartner() {
        let g = named::k33();
        let a = Coloring::new(3, vec![1, 1, 2, 3, 3, 3]).unwrap();
        let b = Coloring::new(3, vec![1, 2, 2, 3, 3, 3]).unwrap();
        let mut stuck =
            |c: &Coloring, _: &Coloring| Ok(Repartner::Partner(KempeSequence::empty(c.clone())));
        let r = wset_reduce(&g, [0, 1, 2], &a, &b, &mut stuck);
        assert_eq!(r, Err(SolveError::RepartnerContract(a)));
    }

    /// Pairs where the third leaf's outer neighbours are alike, the other
    /// leaves' are not, and no vertex pair with a common neighbour is alike
    /// in both, so one side has to move before the match. Found by search
    /// over random 16-vertex cubic graphs.
    #[test]
    fn unmatched_target_branches() {
        let cases = [
            (
                "O?`?pO`W??qOOA@?a_K@O",
                [1, 2, 3, 1, 2, 3, 3, 1, 2, 1, 2, 2, 3, 1, 2, 3],
                [1, 2, 3, 3, 3, 3, 1, 2, 1, 1, 3, 2, 1, 2, 1, 2],
                "claw.s_twins.split.centre_swap",
            ),
            (
                "O@q@GO?SH_?GOa?WOC_GI",
                [1, 2, 1, 2, 3, 3, 2, 1, 3, 1, 3, 3, 1, 2, 2, 1],
                [1, 2, 2, 1, 3, 2, 3, 2, 2, 3, 3, 1, 1, 1, 3, 3],
                "claw.s_twins.split.target_swap",
            ),
        ];
        for (g6, c, t, label) in cases {
            let g = crate::graph::graph6::parse(g6).unwrap();
            let c = Coloring::new(3, c.to_vec()).unwrap();
            let t = Coloring::new(3, t.to_vec()).unwrap();
            assert!(colorings_match(&g, &c, &t).is_none());
            let claw = find_claw(&g).unwrap();
            let k = |v: usize| c.colors[v];
            let [l0, l1, l2] = claw.leaves;
            let (u, v, s) = if k(l0) == k(l1) {
                (l0, l1, l2)
            } else if k(l0) == k(l2) {
                (l0, l2, l1)
            } else {
                (l1, l2, l0)
            };
            let mut tr = SolveTrace::default();
            let seq = toward_target(
                &mut tr,
                &g,
                Walk::new(&g, c.clone()),
                [u, v, s],
                claw.center,
                &t,
            )
            .unwrap();
            assert_eq!(tr.cases[0], label);
            assert_eq!(validate(&g, &seq).unwrap(), t);
            let full = claw_path(&g, &c, &t).unwrap();
            assert_eq!(validate(&g, &full.sequence).unwrap(), t);
        }
    }
}
