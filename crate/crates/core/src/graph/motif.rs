//! Induced claw, net, house and diamond detection.
//!
//! Every search walks candidate tuples in lexicographic order and returns
//! the first induced copy, so results are reproducible.

use serde::{Deserialize, Serialize};

use super::Graph;

/// Induced `K_{1,3}`: `center` adjacent to three pairwise non-adjacent leaves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClawEmbedding {
    pub center: usize,
    /// `[s, u, v]`, increasing.
    pub leaves: [usize; 3],
}

/// Induced net: triangle `t` with pendant `p[i]` attached to `t[i]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetEmbedding {
    pub t: [usize; 3],
    pub p: [usize; 3],
}

/// Induced `K_4 - e`: `spine` is the edge shared by both triangles,
/// `tips` the two non-adjacent vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiamondEmbedding {
    pub spine: [usize; 2],
    pub tips: [usize; 2],
}

/// Induced house: apex `x` on triangle `x y z`, square `y z s w` with
/// edges `y-w`, `w-s`, `s-z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HouseEmbedding {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub w: usize,
    pub s: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Motif {
    House,
    Diamond,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MotifEmbedding {
    House(HouseEmbedding),
    Diamond(DiamondEmbedding),
}

pub fn find_claw(g: &Graph) -> Option<ClawEmbedding> {
    for w in g.vertices() {
        let nb = g.neighbors(w);
        for (i, &s) in nb.iter().enumerate() {
            for (j, &u) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(s, u) {
                    continue;
                }
                for &v in &nb[j + 1..] {
                    if !g.has_edge(s, v) && !g.has_edge(u, v) {
                        return Some(ClawEmbedding {
                            center: w,
                            leaves: [s, u, v],
                        });
                    }
                }
            }
        }
    }
    None
}

fn is_induced_net(g: &Graph, t: [usize; 3], p: [usize; 3]) -> bool {
    let all = [t[0], t[1], t[2], p[0], p[1], p[2]];
    let mut sorted = all;
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    for i in 0..3 {
        for j in 0..3 {
            // pendant i touches only its own triangle vertex
            if g.has_edge(p[i], t[j]) != (i == j) {
                return false;
            }
            if i < j && (g.has_edge(p[i], p[j]) || !g.has_edge(t[i], t[j])) {
                return false;
            }
        }
    }
    true
}

/// Takes a triangle and one outside neighbour of each of its vertices.
///
/// In a 3-connected claw-free cubic graph other than `K_4` and the prism
/// the first triangle already yields an induced net; for other inputs every
/// triangle and pendant choice is tried before giving up.
pub fn find_net(g: &Graph) -> Option<NetEmbedding> {
    for t in g.triangles() {
        let outside = |v: usize| -> Vec<usize> {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|w| !t.contains(w))
                .collect()
        };
        let (o0, o1, o2) = (outside(t[0]), outside(t[1]), outside(t[2]));
        for &a in &o0 {
            for &b in &o1 {
                for &c in &o2 {
                    if is_induced_net(g, t, [a, b, c]) {
                        return Some(NetEmbedding { t, p: [a, b, c] });
                    }
                }
            }
        }
    }
    None
}

fn find_diamond(g: &Graph) -> Option<DiamondEmbedding> {
    for a in g.vertices() {
        for &b in g.neighbors(a).iter().filter(|&&b| b > a) {
            let common: Vec<usize> = g
                .neighbors(a)
                .iter()
                .copied()
                .filter(|&c| g.has_edge(b, c))
                .collect();
            for (i, &c) in common.iter().enumerate() {
                for &d in &common[i + 1..] {
                    if !g.has_edge(c, d) {
                        return Some(DiamondEmbedding {
                            spine: [a, b],
                            tips: [c, d],
                        });
                    }
                }
            }
        }
    }
    None
}

fn find_house(g: &Graph) -> Option<HouseEmbedding> {
    for x in g.vertices() {
        let nx = g.neighbors(x);
        for (i, &y) in nx.iter().enumerate() {
            for &z in &nx[i + 1..] {
                if !g.has_edge(y, z) {
                    continue;
                }
                let tri = [x, y, z];
                for &w in g.neighbors(y) {
                    if tri.contains(&w) || g.has_edge(w, x) || g.has_edge(w, z) {
                        continue;
                    }
                    for &s in g.neighbors(z) {
                        if tri.contains(&s) || s == w || g.has_edge(s, x) || g.has_edge(s, y) {
                            continue;
                        }
                        if g.has_edge(w, s) {
                            return Some(HouseEmbedding { x, y, z, w, s });
                        }
                    }
                }
            }
        }
    }
    None
}

pub fn find_induced_motif(g: &Graph, motif: Motif) -> Option<MotifEmbedding> {
    match motif {
        Motif::House => find_house(g).map(MotifEmbedding::House),
        Motif::Diamond => find_diamond(g).map(MotifEmbedding::Diamond),
    }
}

#[cfg(test)]
pub(crate) mod oracle {
    //! Exhaustive subset scans, independent of the structured searches.
    use crate::graph::iso::isomorphic_brute_force;
    use crate::graph::separator::for_each_subset;
    use crate::graph::Graph;

    pub fn has_induced(g: &Graph, pattern: &Graph) -> bool {
        let mut found = false;
        for_each_subset(g.n(), pattern.n(), |s| {
            let sub = g.induced_subgraph(s).graph;
            found =
                sub.edge_count() == pattern.edge_count() && isomorphic_brute_force(&sub, pattern);
            found
        });
        found
    }
}

#[cfg(test)]
mod tests {
    use super::oracle::has_induced;
    use super::*;
    use crate::graph::named;

    #[test]
    fn claw_cases() {
        assert_eq!(
            find_claw(&named::claw()),
            Some(ClawEmbedding {
                center: 0,
                leaves: [1, 2, 3]
            })
        );
        assert_eq!(find_claw(&named::prism()), None);
        assert!(!has_induced(&named::prism(), &named::claw()));
        let c = find_claw(&named::k33()).unwrap();
        assert_eq!(c.center, 0);
        assert_eq!(c.leaves, [3, 4, 5]);
        assert!(has_induced(&named::k33(), &named::claw()));
    }

    #[test]
    fn net_cases() {
        assert_eq!(
            find_net(&named::net()),
            Some(NetEmbedding {
                t: [0, 1, 2],
                p: [3, 4, 5]
            })
        );
        assert_eq!(find_net(&named::complete(4)), None);
        assert_eq!(find_net(&named::prism()), None);
        assert_eq!(find_net(&named::k33()), None);
    }

    #[test]
    fn diamond_and_house_cases() {
        assert!(matches!(
            find_induced_motif(&named::diamond(), Motif::Diamond),
            Some(MotifEmbedding::Diamond(DiamondEmbedding {
                spine: [0, 1],
                tips: [2, 3]
            }))
        ));
        assert_eq!(
            find_induced_motif(&named::complete(4), Motif::Diamond),
            None
        );
        assert_eq!(find_induced_motif(&named::prism(), Motif::Diamond), None);
        assert!(!has_induced(&named::prism(), &named::diamond()));
        // The prism does contain an induced house (a triangle plus a square).
        assert!(has_induced(&named::prism(), &named::house()));
        assert!(find_induced_motif(&named::prism(), Motif::House).is_some());
        let h = find_induced_motif(&named::house(), Motif::House);
        assert_eq!(
            h,
            Some(MotifEmbedding::House(HouseEmbedding {
                x: 0,
                y: 1,
                z: 2,
                w: 3,
                s: 4
            }))
        );
    }

    #[test]
    fn searches_agree_with_oracle_on_named_graphs() {
        let graphs = [
            named::petersen(),
            named::two_diamonds(),
            named::cube(),
            named::house(),
            named::net(),
            named::complete(5),
            named::cycle(5),
        ];
        for g in &graphs {
            assert_eq!(find_claw(g).is_some(), has_induced(g, &named::claw()));
            assert_eq!(
                find_induced_motif(g, Motif::Diamond).is_some(),
                has_induced(g, &named::diamond())
            );
            assert_eq!(
                find_induced_motif(g, Motif::House).is_some(),
                has_induced(g, &named::house())
            );
            if let Some(net) = find_net(g) {
                let sub = g.induced_subgraph(&[
                    net.t[0], net.t[1], net.t[2], net.p[0], net.p[1], net.p[2],
                ]);
                assert!(crate::graph::iso::isomorphic_brute_force(
                    &sub.graph,
                    &named::net()
                ));
            } else {
                assert!(!has_induced(g, &named::net()));
            }
        }
    }
}
