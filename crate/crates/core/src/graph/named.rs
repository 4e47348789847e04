//! Small named graphs used throughout tests, examples and the solver.

use super::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("named graph edges are valid")
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    build(n, &edges)
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    build(n, &edges)
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    build(n, &edges)
}

/// The 3-prism: triangle 0-1-2, triangle 3-4-5, spokes `i - i+3`.
pub fn prism() -> Graph {
    build(
        6,
        &[
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
}

/// `K_{3,3}` with sides `{0,1,2}` and `{3,4,5}`.
pub fn k33() -> Graph {
    let edges: Vec<_> = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
    build(6, &edges)
}

/// `K_{1,3}`: centre 0, leaves 1, 2, 3.
pub fn claw() -> Graph {
    build(4, &[(0, 1), (0, 2), (0, 3)])
}

/// `K_4` minus the edge `2-3`; spine `0-1`.
pub fn diamond() -> Graph {
    build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
}

/// Apex 0 on triangle 0-1-2, square 1-2-4-3 (edges 1-3, 3-4, 4-2).
pub fn house() -> Graph {
    build(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (3, 4), (4, 2)])
}

/// Triangle 0-1-2 with pendants 3, 4, 5 attached to 0, 1, 2.
pub fn net() -> Graph {
    build(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
}

/// Outer 5-cycle 0..5, inner pentagram 5..10, spokes `i - i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    build(10, &edges)
}

/// Two diamonds (`0..4` and `4..8`, spines `0-1` and `4-5`) joined tip to
/// tip by `2-6` and `3-7`. Cubic, connected, not 3-connected.
pub fn two_diamonds() -> Graph {
    build(
        8,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (4, 5),
            (4, 6),
            (4, 7),
            (5, 6),
            (5, 7),
            (2, 6),
            (3, 7),
        ],
    )
}

/// Cube graph `Q_3`: vertex `i` adjacent to `i ^ 1`, `i ^ 2`, `i ^ 4`.
pub fn cube() -> Graph {
    let edges: Vec<_> = (0..8usize)
        .flat_map(|i| [1usize, 2, 4].into_iter().map(move |b| (i, i ^ b)))
        .filter(|&(u, v)| u < v)
        .collect();
    build(8, &edges)
}

/// Replaces every vertex of a cubic graph by a triangle. Vertex `v` becomes
/// `3v`, `3v+1`, `3v+2`, one per incident edge in neighbour order. The
/// result is cubic and claw-free.
pub fn truncate(g: &Graph) -> Graph {
    assert!(g.is_cubic(), "truncation needs a cubic graph");
    let slot = |v: usize, w: usize| {
        3 * v
            + g.neighbors(v)
                .iter()
                .position(|&x| x == w)
                .expect("adjacent")
    };
    let mut edges = Vec::new();
    for v in g.vertices() {
        edges.extend([
            (3 * v, 3 * v + 1),
            (3 * v + 1, 3 * v + 2),
            (3 * v, 3 * v + 2),
        ]);
    }
    for (u, v) in g.edge_list() {
        edges.push((slot(u, v), slot(v, u)));
    }
    build(3 * g.n(), &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_named_graphs() {
        for g in [
            complete(4),
            prism(),
            k33(),
            petersen(),
            two_diamonds(),
            cube(),
        ] {
            assert!(g.is_cubic(), "{g:?}");
            assert!(g.is_connected());
        }
    }

    #[test]
    fn edge_counts() {
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(house().edge_count(), 6);
        assert_eq!(net().edge_count(), 6);
        assert_eq!(petersen().edge_count(), 15);
    }

    #[test]
    fn truncated_k4() {
        let t = truncate(&complete(4));
        assert_eq!(t.n(), 12);
        assert!(t.is_cubic() && t.is_connected());
        assert!(crate::graph::find_claw(&t).is_none());
    }
}
