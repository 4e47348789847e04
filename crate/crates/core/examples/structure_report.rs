//! The structural facts the solver dispatches on, as JSON.

use kempe::analyze::structure_report;
use kempe::graph::named;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let truncated = named::truncate(&named::complete(4));
    let graphs = [
        ("K4", named::complete(4)),
        ("prism", named::prism()),
        ("K33", named::k33()),
        ("two diamonds", named::two_diamonds()),
        ("truncated K4", truncated),
    ];
    for (name, g) in &graphs {
        let r = structure_report(g);
        println!(
            "{name:<13} route {:<10} degeneracy {} 3-connected {:<5} claw {:<5} net {}",
            serde_json::to_string(&r.route)?,
            r.degeneracy,
            r.three_connected,
            r.claw.is_some(),
            r.net.is_some()
        );
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&structure_report(&graphs[3].1))?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
