//! Constructive witness between two 3-colourings of the Petersen graph,
//! with the trace of cases the solver went through.

use kempe::coloring::{enumerate_colorings, validate, DEFAULT_CEILING};
use kempe::graph::named;
use kempe::solver::solve;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let g = named::petersen();
    let all = enumerate_colorings(&g, 3, DEFAULT_CEILING)?;
    let (alpha, beta) = (&all[0], &all[all.len() - 1]);
    let sol = solve(&g, alpha, beta)?;
    println!("alpha {alpha}");
    println!("beta  {beta}");
    for (i, m) in sol.sequence.moves.iter().enumerate() {
        println!("  {i:>2}: swap {}/{} at vertex {}", m.a, m.b, m.anchor);
    }
    println!("cases: {}", sol.trace.cases.join(", "));

    // The witness stands on its own: replaying it needs only the graph.
    assert_eq!(&validate(&g, &sol.sequence)?, beta);
    println!("{}", serde_json::to_string(&sol.sequence)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
