//! Identifying two non-adjacent vertices that both colourings colour alike
//! shrinks the graph; a witness on the smaller graph lifts back with at
//! most two changes per step.

use kempe::analyze::bfs_path;
use kempe::coloring::{colorings_match, enumerate_colorings, validate, DEFAULT_CEILING};
use kempe::graph::named;
use kempe::solver::{identify_lift, matching_path};
use kempe::Coloring;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let g = named::cube();
    let all = enumerate_colorings(&g, 3, DEFAULT_CEILING)?;
    let mut best: Option<(usize, usize, String)> = None;
    let mut pairs = 0;
    for alpha in &all {
        for beta in all.iter().step_by(3) {
            let Some(m) = colorings_match(&g, alpha, beta) else {
                continue;
            };
            let seq = matching_path(&g, alpha, beta)?;
            assert_eq!(&validate(&g, &seq)?, beta);

            // The same lift by hand, from a shortest witness on the smaller graph.
            let (small, map) = g.identify_vertices(m.x, m.y)?;
            let project = |c: &Coloring| {
                let mut colors = vec![0; small.n()];
                for v in g.vertices() {
                    colors[map[v]] = c.colors[v];
                }
                Coloring::new(3, colors)
            };
            let inner = bfs_path(&small, &project(alpha)?, &project(beta)?, DEFAULT_CEILING)?
                .ok_or("no witness on the identified graph")?;
            let lifted = identify_lift(&g, m.x, m.y, &inner)?;
            assert!(lifted.len() <= 2 * inner.len());
            assert_eq!(&validate(&g, &lifted)?, beta);
            pairs += 1;
            let gain = lifted.len() - inner.len();
            if best.as_ref().is_none_or(|b| gain > b.1 - b.0) {
                best = Some((
                    inner.len(),
                    lifted.len(),
                    format!("{alpha} -> {beta} via {} ~ {}", m.x, m.y),
                ));
            }
        }
    }
    let (short, long, what) = best.ok_or("no matching pairs")?;
    println!("{pairs} matching pairs lifted");
    println!("largest growth: {what}, {short} changes become {long}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
