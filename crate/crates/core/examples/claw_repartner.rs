//! 3-connected cubic graphs with an induced claw: the solver recolours
//! until two leaves of the claw are coloured alike by both colourings,
//! then finishes with the identification lift.

use kempe::coloring::{enumerate_colorings, validate, DEFAULT_CEILING};
use kempe::graph::{find_claw, named};
use kempe::solver::claw_path;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let g = named::petersen();
    let claw = find_claw(&g).ok_or("no claw")?;
    println!("claw centre {} leaves {:?}", claw.center, claw.leaves);
    let all = enumerate_colorings(&g, 3, DEFAULT_CEILING)?;
    let mut longest = 0;
    for (i, alpha) in all.iter().enumerate().step_by(7) {
        let beta = &all[(i * 31 + 5) % all.len()];
        let sol = claw_path(&g, alpha, beta)?;
        assert_eq!(&validate(&g, &sol.sequence)?, beta);
        longest = longest.max(sol.sequence.len());
        if i == 0 {
            println!("{alpha} -> {beta}: {}", sol.trace.cases.join(" > "));
        }
    }
    println!(
        "{} colourings, longest sampled witness {longest}",
        all.len()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
