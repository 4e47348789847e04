use super::{Coloring, Colour, EngineError};
use crate::graph::Graph;

/// Default cap on the number of colourings a caller may materialise.
pub const DEFAULT_CEILING: u64 = 2_000_000;

/// Upper bound on the number of proper `k`-colourings: in each component a
/// spanning tree leaves `k` choices for the root and `k - 1` per other vertex.
pub fn colouring_bound(g: &Graph, k: usize) -> u128 {
    let k = k as u128;
    g.components().iter().fold(1u128, |acc, comp| {
        let per = (1..comp.len()).fold(k, |x, _| x.saturating_mul(k.saturating_sub(1)));
        acc.saturating_mul(per)
    })
}

/// Every proper `k`-colouring, in lexicographic order.
pub fn enumerate_colorings(
    g: &Graph,
    k: usize,
    ceiling: u64,
) -> Result<Vec<Coloring>, EngineError> {
    if k == 0 || k > usize::from(Colour::MAX) {
        return Err(EngineError::BadK(k));
    }
    let estimate = colouring_bound(g, k);
    if estimate > u128::from(ceiling) {
        return Err(EngineError::CeilingExceeded { estimate, ceiling });
    }
    let n = g.n();
    let mut out = Vec::new();
    let mut colors = vec![0 as Colour; n];
    fill(g, k as Colour, 0, &mut colors, &mut out);
    Ok(out
        .into_iter()
        .map(|colors| Coloring { k, colors })
        .collect())
}

fn fill(g: &Graph, k: Colour, v: usize, colors: &mut [Colour], out: &mut Vec<Vec<Colour>>) {
    if v == colors.len() {
        out.push(colors.to_vec());
        return;
    }
    for c in 1..=k {
        // only earlier neighbours are coloured
        if g.neighbors(v)
            .iter()
            .take_while(|&&w| w < v)
            .all(|&w| colors[w] != c)
        {
            colors[v] = c;
            fill(g, k, v + 1, colors, out);
        }
    }
    colors[v] = 0;
}
