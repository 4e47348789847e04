use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use kempe::analyze::{bfs_path, kempe_classes};
use kempe::coloring::{
    enumerate_colorings, kempe_chain, kempe_change, replay, reverse, validate, Colour,
    DEFAULT_CEILING,
};
use kempe::generate::{random_cubic, random_degenerate};
use kempe::graph::{graph6, iso, Graph};
use kempe::solver::{degenerate_path, identify_lift, restrict_sequence, solve, SolveError};
use kempe::{Coloring, KempeMove, KempeSequence};

/// A colouring first, then only edges it keeps proper.
fn coloured_graph(max_n: usize) -> impl Strategy<Value = (Graph, Coloring)> {
    (3..=max_n)
        .prop_flat_map(|n| {
            (
                prop::collection::vec(1..=3u8, n),
                prop::collection::vec(any::<bool>(), n * n),
            )
        })
        .prop_map(|(colors, bits)| {
            let n = colors.len();
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if colors[u] != colors[v] && bits[u * n + v] {
                        edges.push((u, v));
                    }
                }
            }
            (
                Graph::from_edges(n, &edges).unwrap(),
                Coloring::new(3, colors).unwrap(),
            )
        })
}

/// A move valid from `c`: anchor `v`, its own colour and one other.
fn move_at(c: &Coloring, v: usize, other: u8) -> KempeMove {
    let a = c.get(v);
    let b = [1, 2, 3]
        .into_iter()
        .filter(|&x| x != a)
        .nth(usize::from(other % 2))
        .unwrap();
    KempeMove::new(v, a, b)
}

fn random_walk(g: &Graph, start: &Coloring, steps: &[(usize, u8)]) -> KempeSequence {
    let mut cur = start.clone();
    let mut moves = Vec::new();
    for &(v, o) in steps {
        let m = move_at(&cur, v % g.n(), o);
        cur = kempe_change(g, &cur, m).unwrap();
        moves.push(m);
    }
    KempeSequence {
        start: start.clone(),
        moves,
    }
}

fn steps() -> impl Strategy<Value = Vec<(usize, u8)>> {
    prop::collection::vec((0..64usize, any::<u8>()), 0..12)
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<_> = g
        .edge_list()
        .into_iter()
        .map(|(u, v)| (perm[u], perm[v]))
        .collect();
    Graph::from_edges(g.n(), &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn kempe_change_is_a_proper_involution((g, c) in coloured_graph(10), v in 0..10usize, o in any::<u8>()) {
        let m = move_at(&c, v % g.n(), o);
        let once = kempe_change(&g, &c, m).unwrap();
        prop_assert!(once.is_proper(&g));
        prop_assert_eq!(kempe_change(&g, &once, m).unwrap(), c.clone());
        // the chain is a component of the two colour classes
        let chain = kempe_chain(&g, &c, m.anchor, m.a, m.b).unwrap();
        for &x in &chain {
            for &y in g.neighbors(x) {
                let cy: Colour = c.get(y);
                prop_assert!(!(cy == m.a || cy == m.b) || chain.contains(&y));
            }
        }
    }

    #[test]
    fn reverse_replays_back((g, c) in coloured_graph(9), s in steps()) {
        let seq = random_walk(&g, &c, &s);
        let end = validate(&g, &seq).unwrap();
        let back = reverse(&g, &seq).unwrap();
        prop_assert_eq!(&back.start, &end);
        prop_assert_eq!(replay(&g, &back).unwrap(), c);
    }

    #[test]
    fn restriction_reaches_the_same_colouring((g, c) in coloured_graph(9), drop in prop::collection::vec(any::<bool>(), 64), s in steps()) {
        let kept: Vec<_> = g.edge_list().into_iter().enumerate().filter(|(i, _)| !drop[i % 64]).map(|(_, e)| e).collect();
        let sub = Graph::from_edges(g.n(), &kept).unwrap();
        let seq = random_walk(&g, &c, &s);
        let r = restrict_sequence(&sub, &g, &seq).unwrap();
        prop_assert_eq!(validate(&sub, &r).unwrap(), validate(&g, &seq).unwrap());
        prop_assert!(r.len() >= seq.len());
    }

    #[test]
    fn identification_lifts_within_twice((g, c) in coloured_graph(9), s in steps()) {
        // any non-adjacent pair sharing a colour
        let pair = (0..g.n()).flat_map(|x| (x + 1..g.n()).map(move |y| (x, y)))
            .find(|&(x, y)| !g.has_edge(x, y) && c.get(x) == c.get(y));
        prop_assume!(pair.is_some());
        let (x, y) = pair.unwrap();
        let (small, map) = g.identify_vertices(x, y).unwrap();
        let mut colors = vec![0; small.n()];
        for v in g.vertices() {
            colors[map[v]] = c.get(v);
        }
        let inner = random_walk(&small, &Coloring::new(3, colors).unwrap(), &s);
        let lifted = identify_lift(&g, x, y, &inner).unwrap();
        prop_assert!(lifted.len() <= 2 * inner.len());
        prop_assert_eq!(&lifted.start, &c);
        let end = validate(&small, &inner).unwrap();
        let got = validate(&g, &lifted).unwrap();
        prop_assert!(g.vertices().all(|v| got.get(v) == end.get(map[v])));
    }

    #[test]
    fn degenerate_graphs_connect(seed in any::<u64>(), n in 2..=10usize, i in any::<usize>(), j in any::<usize>()) {
        let g = random_degenerate(n, 2, &mut ChaCha8Rng::seed_from_u64(seed));
        let all = enumerate_colorings(&g, 3, DEFAULT_CEILING).unwrap();
        let (a, b) = (&all[i % all.len()], &all[j % all.len()]);
        let seq = degenerate_path(&g, 3, a, b).unwrap();
        prop_assert_eq!(&validate(&g, &seq).unwrap(), b);
    }

    #[test]
    fn canonical_form_ignores_labels((g, _) in coloured_graph(9), perm in Just((0..9).collect::<Vec<usize>>()).prop_shuffle()) {
        let perm: Vec<usize> = perm.into_iter().filter(|&p| p < g.n()).collect();
        let h = relabel(&g, &perm);
        prop_assert_eq!(iso::canonical_form(&g), iso::canonical_form(&h));
        prop_assert_eq!(graph6::parse(&graph6::encode(&h)).unwrap(), h);
    }

    #[test]
    fn graph6_round_trips_past_the_short_header(n in 60..70usize, bits in prop::collection::vec(any::<bool>(), 70 * 70)) {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| bits[u * 70 + v]).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        prop_assert_eq!(graph6::parse(&graph6::encode(&g)).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn solver_witnesses_random_cubic_pairs(seed in any::<u64>(), half in 3..=7usize, i in any::<usize>(), j in any::<usize>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_cubic(2 * half, &mut rng).unwrap();
        let all = enumerate_colorings(&g, 3, DEFAULT_CEILING).unwrap();
        prop_assume!(!all.is_empty());
        let (a, b) = (&all[i % all.len()], &all[j % all.len()]);
        match solve(&g, a, b) {
            Ok(sol) => {
                prop_assert_eq!(&validate(&g, &sol.sequence).unwrap(), b);
                prop_assert!(sol.trace.labels_documented());
            }
            Err(SolveError::PrismObstruction(..)) => {
                prop_assert!(iso::is_prism(&g));
                let (_, p) = kempe_classes(&g, 3, DEFAULT_CEILING).unwrap();
                prop_assert_eq!(p.same_class(a, b), Some(false));
            }
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn solver_agrees_with_search_on_reachability(seed in any::<u64>(), i in any::<usize>(), j in any::<usize>()) {
        let g = random_cubic(8, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let all = enumerate_colorings(&g, 3, DEFAULT_CEILING).unwrap();
        prop_assume!(!all.is_empty());
        let (a, b) = (&all[i % all.len()], &all[j % all.len()]);
        let reachable = bfs_path(&g, a, b, DEFAULT_CEILING).unwrap().is_some();
        prop_assert_eq!(solve(&g, a, b).is_ok(), reachable);
    }
}
