//! Isomorphism helpers for small graphs.
//!
//! `isomorphic_brute_force` is a plain backtracking search and serves as the
//! reference; `canonical_form` uses individualisation and colour refinement
//! and is what corpus deduplication relies on.

use super::{named, Graph};

/// Backtracking search for an isomorphism `a -> b`.
pub fn isomorphic_brute_force(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = a.vertices().map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = b.vertices().map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let n = a.n();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(a, b, 0, &mut map, &mut used)
}

fn extend(a: &Graph, b: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if v == a.n() {
        return true;
    }
    for t in b.vertices() {
        if used[t] || a.degree(v) != b.degree(t) {
            continue;
        }
        let consistent = (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], t));
        if !consistent {
            continue;
        }
        map[v] = t;
        used[t] = true;
        if extend(a, b, v + 1, map, used) {
            return true;
        }
        used[t] = false;
    }
    map[v] = usize::MAX;
    false
}

pub fn is_k4(g: &Graph) -> bool {
    g.n() == 4 && g.edge_count() == 6
}

pub fn is_prism(g: &Graph) -> bool {
    g.n() == 6 && g.is_cubic() && isomorphic_brute_force(g, &named::prism())
}

type Cells = Vec<Vec<usize>>;

/// Splits cells by neighbour counts into other cells until stable.
fn refine(g: &Graph, mut cells: Cells) -> Cells {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    'outer: loop {
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        for splitter in 0..cells.len() {
            for target in 0..cells.len() {
                if cells[target].len() < 2 {
                    continue;
                }
                let count = |v: usize| {
                    g.neighbors(v)
                        .iter()
                        .filter(|&&w| cell_of[w] == splitter)
                        .count()
                };
                let mut keyed: Vec<(usize, usize)> =
                    cells[target].iter().map(|&v| (count(v), v)).collect();
                if keyed.iter().all(|&(c, _)| c == keyed[0].0) {
                    continue;
                }
                keyed.sort_unstable();
                let mut pieces: Cells = Vec::new();
                let mut last = usize::MAX;
                for (c, v) in keyed {
                    if c != last {
                        pieces.push(Vec::new());
                        last = c;
                    }
                    pieces.last_mut().expect("piece exists").push(v);
                }
                cells.splice(target..=target, pieces);
                continue 'outer;
            }
        }
        return cells;
    }
}

fn certificate(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let mut out = vec![0u64; (n * n.saturating_sub(1) / 2).div_ceil(64).max(1)];
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                out[bit / 64] |= 1 << (63 - bit % 64);
            }
            bit += 1;
        }
    }
    out
}

fn search(g: &Graph, cells: Cells, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let cells = refine(g, cells);
    let Some(pos) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().flatten().collect();
        let cert = certificate(g, &order);
        if best.as_ref().is_none_or(|(b, _)| cert < *b) {
            *best = Some((cert, order));
        }
        return;
    };
    for &v in &cells[pos] {
        let mut next = cells.clone();
        let rest: Vec<usize> = cells[pos].iter().copied().filter(|&w| w != v).collect();
        next.splice(pos..=pos, [vec![v], rest]);
        search(g, next, best);
    }
}

/// Canonical labelling: `order[i]` is the vertex placed at position `i`.
///
/// Two graphs are isomorphic iff they relabel to the same graph.
pub fn canonical_order(g: &Graph) -> Vec<usize> {
    if g.n() == 0 {
        return Vec::new();
    }
    let mut best = None;
    search(g, vec![g.vertices().collect()], &mut best);
    best.expect("search reaches a leaf").1
}

/// Graph relabelled by `canonical_order`.
pub fn canonical_form(g: &Graph) -> Graph {
    let order = canonical_order(g);
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let edges: Vec<_> = g
        .edge_list()
        .into_iter()
        .map(|(u, v)| (pos[u], pos[v]))
        .collect();
    Graph::from_edges(g.n(), &edges).expect("relabelled edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let edges: Vec<_> = g
            .edge_list()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::from_edges(g.n(), &edges).unwrap()
    }

    #[test]
    fn prism_and_k33_differ() {
        assert!(!isomorphic_brute_force(&named::prism(), &named::k33()));
        assert!(is_prism(&named::prism()));
        assert!(!is_prism(&named::k33()));
        assert!(is_k4(&named::complete(4)));
        assert_ne!(
            canonical_form(&named::prism()),
            canonical_form(&named::k33())
        );
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let perm = [3, 7, 1, 0, 9, 2, 8, 5, 4, 6];
        for g in [named::petersen(), named::cycle(10)] {
            let h = relabel(&g, &perm);
            assert!(isomorphic_brute_force(&g, &h));
            assert_eq!(canonical_form(&g), canonical_form(&h));
        }
        let perm8 = [5, 2, 7, 0, 1, 6, 3, 4];
        for g in [named::cube(), named::two_diamonds()] {
            assert_eq!(canonical_form(&g), canonical_form(&relabel(&g, &perm8)));
        }
        assert_ne!(
            canonical_form(&named::cube()),
            canonical_form(&named::two_diamonds())
        );
    }

    #[test]
    fn relabelled_prism_is_recognised() {
        let h = relabel(&named::prism(), &[4, 0, 5, 2, 1, 3]);
        assert!(is_prism(&h));
    }
}
