//! Reading and writing graphs: graph6 strings and plain edge lists.

use kempe::graph::{edgelist, graph6, iso, named};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for (name, g) in [
        ("K4", named::complete(4)),
        ("prism", named::prism()),
        ("Petersen", named::petersen()),
    ] {
        let text = graph6::encode(&g);
        let back = graph6::parse(&text)?;
        assert_eq!(back, g);
        println!("{name:<9} {text}");
    }

    let cube =
        edgelist::parse("8 12\n0 1\n1 2\n2 3\n3 0\n4 5\n5 6\n6 7\n7 4\n0 4\n1 5\n2 6\n3 7\n")?;
    assert!(iso::isomorphic_brute_force(&cube, &named::cube()));
    println!("cube      {}", graph6::encode(&cube));
    print!("{}", edgelist::write(&named::complete(4)));

    // Canonical forms agree exactly when the graphs are isomorphic.
    let relabelled = graph6::parse(&graph6::encode(&iso::canonical_form(&cube)))?;
    assert_eq!(
        iso::canonical_form(&relabelled),
        iso::canonical_form(&named::cube())
    );

    match graph6::parse("C~~") {
        Ok(_) => println!("unexpected"),
        Err(e) => println!("rejected C~~: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
