//! The triangular prism is the one connected cubic graph, besides K4, whose
//! 3-colourings split into more than one Kempe class.

use kempe::analyze::{bfs_path, kempe_classes};
use kempe::coloring::DEFAULT_CEILING;
use kempe::graph::named;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let g = named::prism();
    let (report, partition) = kempe_classes(&g, 3, DEFAULT_CEILING)?;
    println!(
        "{} colourings in {} classes, sizes {:?}",
        report.colorings, report.classes, report.sizes
    );
    for (i, rep) in report.representatives.iter().enumerate() {
        println!("  class {i}: {rep}");
    }

    let first = &partition.colorings[0];
    let other = partition
        .colorings
        .iter()
        .zip(&partition.class_of)
        .find(|(c, &cls)| cls == partition.class_of[0] && *c != first)
        .map(|(c, _)| c)
        .ok_or("class of one colouring")?;
    let path = bfs_path(&g, first, other, DEFAULT_CEILING)?.ok_or("same class but no path")?;
    println!("{first} -> {other}: {} Kempe changes", path.len());

    let across = &report.representatives[1];
    assert!(bfs_path(&g, first, across, DEFAULT_CEILING)?.is_none());
    println!("{first} -> {across}: unreachable");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
