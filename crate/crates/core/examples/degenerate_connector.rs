//! Sparse graphs need no search: on a graph of degeneracy at most two, any
//! two 3-colourings are joined by peeling off a low-degree vertex,
//! solving the rest and repairing the peeled vertex. Two such graphs
//! sharing a clique glue together.

use kempe::coloring::{enumerate_colorings, validate, DEFAULT_CEILING};
use kempe::generate::random_degenerate;
use kempe::graph::{degeneracy, Graph};
use kempe::solver::{degenerate_path, glue_clique_paths};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let g = random_degenerate(9, 2, &mut rng);
    println!(
        "{} vertices, {} edges, degeneracy {}",
        g.n(),
        g.edge_count(),
        degeneracy(&g).d
    );
    let all = enumerate_colorings(&g, 3, DEFAULT_CEILING)?;
    let (alpha, beta) = (&all[0], &all[all.len() - 1]);
    let seq = degenerate_path(&g, 3, alpha, beta)?;
    assert_eq!(&validate(&g, &seq)?, beta);
    println!("{alpha} -> {beta} in {} changes", seq.len());

    // Two 4-cycles with a chord, sharing the edge 2-3.
    let h = Graph::from_edges(
        6,
        &[
            (0, 1),
            (0, 2),
            (1, 3),
            (2, 3),
            (1, 2),
            (2, 4),
            (3, 5),
            (4, 5),
            (3, 4),
        ],
    )?;
    let all = enumerate_colorings(&h, 3, DEFAULT_CEILING)?;
    let (alpha, beta) = (&all[0], &all[all.len() - 1]);
    let mut connector = |sub: &Graph, a: &_, b: &_| degenerate_path(sub, 3, a, b);
    let seq = glue_clique_paths(
        &h,
        &[0, 1, 2, 3],
        &[2, 3, 4, 5],
        alpha,
        beta,
        &mut connector,
    )?;
    assert_eq!(&validate(&h, &seq)?, beta);
    println!("glued: {alpha} -> {beta} in {} changes", seq.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
