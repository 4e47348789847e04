//! 3-connected claw-free cubic graphs other than K4 and the prism.
//!
//! Such a graph contains an induced net: a triangle `t` with a pendant
//! `p[i]` on each `t[i]`. Once two pendants share a colour, at most one
//! exchange on the two-vertex chain inside the triangle makes the colourings
//! match through a triangle vertex. When all pendants differ, Kempe chains
//! are paths, and at most two exchanges make two pendants alike.

use super::matching::matching_walk;
use super::{
    certify, check_cubic_pair, ensure, sandwich, Solution, SolveError, SolveTrace, Subproblem, Walk,
};
use crate::coloring::{colorings_match, reverse, Coloring, KempeSequence};
use crate::graph::{find_net, is_three_connected, Graph, NetEmbedding};

/// Witness for a 3-connected claw-free cubic graph other than K4 and the
/// prism.
pub fn net_path(g: &Graph, alpha: &Coloring, beta: &Coloring) -> Result<Solution, SolveError> {
    check_cubic_pair(g, alpha, beta)?;
    if !is_three_connected(g) {
        return Err(SolveError::NotThreeConnected);
    }
    let mut trace = SolveTrace::default();
    let seq = net_walk(&mut trace, g, alpha, beta)?;
    let sequence = certify(g, seq, alpha, beta)?;
    trace.moves = sequence.len();
    Ok(Solution { sequence, trace })
}

fn alike_pendants(net: &NetEmbedding, c: &Coloring) -> Option<(usize, usize)> {
    let p = |i: usize| c.colors[net.p[i]];
    [(0, 1), (0, 2), (1, 2)]
        .into_iter()
        .find(|&(i, j)| p(i) == p(j))
}

/// `c` has two pendants alike: witness to `d` through one match.
fn alike_walk(
    tr: &mut SolveTrace,
    g: &Graph,
    net: &NetEmbedding,
    c: &Coloring,
    d: &Coloring,
) -> Result<KempeSequence, SolveError> {
    let (i, j) = alike_pendants(net, c).ok_or_else(|| super::internal("no alike pendants"))?;
    let k = 3 - i - j;
    let (t, p) = (net.t, net.p);
    ensure!(
        c.colors[t[k]] == c.colors[p[i]],
        "third triangle vertex should repeat the pendant colour"
    );
    // x carries the colour of the third pendant
    let (x, y) = if c.colors[t[i]] == c.colors[p[k]] {
        (t[i], t[j])
    } else {
        (t[j], t[i])
    };
    ensure!(
        c.colors[x] == c.colors[p[k]],
        "third pendant colour is not on the triangle"
    );
    let mut w = Walk::new(g, c.clone());
    if d.colors[p[k]] == d.colors[x] {
        tr.case("net.alike.direct");
    } else {
        tr.case("net.alike.swap");
        ensure!(
            d.colors[p[k]] == d.colors[y],
            "target pendant colour is not on the triangle"
        );
        let mut pair = [x, y];
        pair.sort_unstable();
        let chain = w.exchange(x, c.colors[x], c.colors[y])?;
        ensure!(
            chain == pair,
            "triangle chain {chain:?} is not two vertices"
        );
    }
    let m = colorings_match(g, w.cur(), d);
    ensure!(m.is_some(), "expected a match through the triangle");
    let tail = matching_walk(tr, g, w.cur(), d)?;
    w.append(&tail)?;
    Ok(w.finish())
}

/// At most two exchanges making two pendants alike.
fn distinct_walk(
    tr: &mut SolveTrace,
    g: &Graph,
    net: &NetEmbedding,
    c: &Coloring,
) -> Result<KempeSequence, SolveError> {
    let order = if c.colors[net.p[0]] == c.colors[net.t[1]] {
        [0, 1, 2]
    } else {
        [0, 2, 1]
    };
    let [x, y, z] = order.map(|i| net.t[i]);
    let [xp, yp, zp] = order.map(|i| net.p[i]);
    let (one, two, three) = (c.colors[x], c.colors[y], c.colors[z]);
    ensure!(
        c.colors[xp] == two && c.colors[yp] == three && c.colors[zp] == one,
        "pendant colours are not a rotation of the triangle's"
    );
    let mut w = Walk::new(g, c.clone());
    let p12 = w.chain(xp, one, two)?;
    if p12.binary_search(&zp).is_err() {
        tr.case("net.distinct.single");
        w.exchange(xp, one, two)?;
        return Ok(w.finish());
    }
    let p23 = w.chain(xp, two, three)?;
    if p23.binary_search(&yp).is_err() {
        tr.case("net.distinct.single");
        w.exchange(xp, two, three)?;
        return Ok(w.finish());
    }
    let p13 = w.chain(yp, one, three)?;
    if p13.binary_search(&zp).is_err() {
        tr.case("net.distinct.single");
        w.exchange(yp, one, three)?;
        return Ok(w.finish());
    }
    tr.case("net.distinct.double");
    let xpp: Vec<usize> = g
        .neighbors(xp)
        .iter()
        .copied()
        .filter(|&v| v != x && c.colors[v] == one)
        .collect();
    ensure!(
        xpp.len() == 1,
        "x' should have one further neighbour on its (1,2)-path"
    );
    w.exchange(xp, one, two)?;
    let mut expect: Vec<usize> = p23
        .iter()
        .copied()
        .chain(xpp)
        .filter(|&v| v != xp && v != y && v != z)
        .collect();
    expect.sort_unstable();
    let q23 = w.exchange(yp, two, three)?;
    ensure!(
        q23 == expect,
        "second path {q23:?} differs from expected {expect:?}"
    );
    ensure!(
        w.col(yp) == w.col(zp),
        "pendants y' and z' should now be alike"
    );
    Ok(w.finish())
}

pub(crate) fn net_walk(
    tr: &mut SolveTrace,
    g: &Graph,
    alpha: &Coloring,
    beta: &Coloring,
) -> Result<KempeSequence, SolveError> {
    let net = find_net(g).ok_or(SolveError::NoNet)?;
    tr.sub(Subproblem::Net { t: net.t, p: net.p });
    if alpha == beta {
        return Ok(KempeSequence::empty(alpha.clone()));
    }
    if alike_pendants(&net, alpha).is_some() {
        return alike_walk(tr, g, &net, alpha, beta);
    }
    if alike_pendants(&net, beta).is_some() {
        tr.case("net.alike.reversed");
        let back = alike_walk(tr, g, &net, beta, alpha)?;
        return Ok(reverse(g, &back)?);
    }
    tr.case("net.distinct");
    let to_alike = distinct_walk(tr, g, &net, alpha)?;
    let a2 = super::end_of(g, &to_alike)?;
    let rest = alike_walk(tr, g, &net, &a2, beta)?;
    sandwich(g, to_alike, &rest, &KempeSequence::empty(beta.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analyze::kempe_classes;
    use crate::coloring::{validate, DEFAULT_CEILING};
    use crate::graph::{find_claw, named};

    #[test]
    fn truncated_k4_all_pairs() {
        let g = named::truncate(&named::complete(4));
        assert!(is_three_connected(&g) && find_claw(&g).is_none());
        let (_, p) = kempe_classes(&g, 3, DEFAULT_CEILING).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for a in &p.colorings {
            for b in &p.colorings {
                let s = net_path(&g, a, b).unwrap_or_else(|e| panic!("{a} -> {b}: {e}"));
                assert_eq!(validate(&g, &s.sequence).unwrap(), *b);
                seen.extend(s.trace.cases);
            }
        }
        assert!(seen.contains("net.distinct.double"), "{seen:?}");
    }

    #[test]
    fn truncated_prism_sampled_pairs() {
        let g = named::truncate(&named::prism());
        let (_, p) = kempe_classes(&g, 3, DEFAULT_CEILING).unwrap();
        let step = (p.colorings.len() / 40).max(1);
        for a in p.colorings.iter().step_by(step) {
            for b in p.colorings.iter().step_by(step + 1) {
                let s = net_path(&g, a, b).unwrap_or_else(|e| panic!("{a} -> {b}: {e}"));
                assert_eq!(validate(&g, &s.sequence).unwrap(), *b);
            }
        }
    }
}
