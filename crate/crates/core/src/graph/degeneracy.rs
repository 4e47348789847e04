use serde::{Deserialize, Serialize};

use super::Graph;

/// Minimum-degree elimination order and the degeneracy it certifies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyOrdering {
    pub d: usize,
    /// `order[0]` is eliminated first.
    pub order: Vec<usize>,
}

impl DegeneracyOrdering {
    /// Largest number of later neighbours over the order.
    pub fn width(&self, g: &Graph) -> usize {
        let mut pos = vec![0; g.n()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        self.order
            .iter()
            .map(|&v| g.neighbors(v).iter().filter(|&&w| pos[w] > pos[v]).count())
            .max()
            .unwrap_or(0)
    }
}

/// Repeatedly removes a minimum-degree vertex (least id on ties).
pub fn degeneracy(g: &Graph) -> DegeneracyOrdering {
    let n = g.n();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut gone = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut d = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !gone[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("a vertex remains");
        d = d.max(deg[v]);
        gone[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !gone[w] {
                deg[w] -= 1;
            }
        }
    }
    DegeneracyOrdering { d, order }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    /// max over induced subgraphs of the minimum degree
    fn brute_force(g: &Graph) -> usize {
        let n = g.n();
        assert!(n <= 16);
        (1u32..1 << n)
            .map(|mask| {
                (0..n)
                    .filter(|&v| mask >> v & 1 == 1)
                    .map(|v| {
                        g.neighbors(v)
                            .iter()
                            .filter(|&&w| mask >> w & 1 == 1)
                            .count()
                    })
                    .min()
                    .unwrap()
            })
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn known_values() {
        assert_eq!(degeneracy(&named::path(5)).d, 1);
        assert_eq!(degeneracy(&named::prism()).d, 3);
        assert_eq!(brute_force(&named::prism()), 3);
        let diamond = degeneracy(&named::diamond());
        assert_eq!(diamond.d, 2);
        assert_eq!(diamond.width(&named::diamond()), 2);
        assert_eq!(degeneracy(&Graph::empty(0)).d, 0);
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        for g in [
            named::petersen(),
            named::house(),
            named::net(),
            named::claw(),
            named::complete(5),
            named::cycle(7),
        ] {
            let ord = degeneracy(&g);
            assert_eq!(ord.d, brute_force(&g));
            assert_eq!(ord.width(&g), ord.d);
        }
    }
}
