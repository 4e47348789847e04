//! Claw-free 3-connected cubic graphs other than K4 and the prism contain
//! an induced net. The truncated K4 is the smallest.

use kempe::analyze::kempe_classes;
use kempe::coloring::{validate, DEFAULT_CEILING};
use kempe::graph::{find_claw, find_net, named};
use kempe::solver::net_path;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let g = named::truncate(&named::complete(4));
    assert!(find_claw(&g).is_none());
    let net = find_net(&g).ok_or("no net")?;
    println!("net: triangle {:?} pendants {:?}", net.t, net.p);

    let (report, p) = kempe_classes(&g, 3, DEFAULT_CEILING)?;
    println!("{} colourings, {} class", report.colorings, report.classes);
    let mut seen = std::collections::BTreeMap::new();
    for alpha in p.colorings.iter().step_by(5) {
        for beta in p.colorings.iter().step_by(9) {
            let sol = net_path(&g, alpha, beta)?;
            assert_eq!(&validate(&g, &sol.sequence)?, beta);
            for c in sol.trace.cases {
                *seen.entry(c).or_insert(0usize) += 1;
            }
        }
    }
    for (case, count) in seen {
        println!("  {case:<22} {count}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
