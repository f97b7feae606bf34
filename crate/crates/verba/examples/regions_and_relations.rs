//! Region extraction and the region-calculus subset behind the spatial
//! prepositions.
//!
//! Run with: cargo run --example regions_and_relations

use verba::geom::Shape;
use verba::region::{check_preposition, classify, extract_regions, Preposition, Region};

fn square(x: f64, y: f64, side: f64) -> Shape {
    Shape::from_coords(&[
        ((x, y), (x + side, y)),
        ((x + side, y), (x + side, y + side)),
        ((x + side, y + side), (x, y + side)),
        ((x, y + side), (x, y)),
    ])
    .unwrap()
}

fn main() {
    // Closed cycles become regions; open shapes have none.
    let two = square(0.0, 0.0, 1.0).sum(&square(3.0, 0.0, 2.0));
    let regions = extract_regions(&two);
    println!("two disjoint squares -> {} regions", regions.len());
    for r in &regions {
        println!("  region with area {}", r.area());
    }
    let open = Shape::from_coords(&[((0.0, 0.0), (1.0, 1.0))]).unwrap();
    println!("open segment -> {} regions\n", extract_regions(&open).len());

    // A 2x2 grid decomposes into its four minimal cells.
    let grid = Shape::from_coords(&[
        ((0.0, 0.0), (2.0, 0.0)),
        ((0.0, 1.0), (2.0, 1.0)),
        ((0.0, 2.0), (2.0, 2.0)),
        ((0.0, 0.0), (0.0, 2.0)),
        ((1.0, 0.0), (1.0, 2.0)),
        ((2.0, 0.0), (2.0, 2.0)),
    ])
    .unwrap();
    println!("2x2 grid -> {} minimal cells\n", extract_regions(&grid).len());

    // The classifier assigns exactly one of the eight relations.
    let outer = Region::rect(0.0, 0.0, 4.0, 4.0).unwrap();
    let cases = [
        ("strictly inside", Region::rect(1.0, 1.0, 2.0, 2.0).unwrap()),
        ("corner-anchored inside", Region::rect(0.0, 0.0, 2.0, 2.0).unwrap()),
        ("sharing one edge outside", Region::rect(4.0, 0.0, 6.0, 4.0).unwrap()),
        ("overlapping", Region::rect(3.0, 3.0, 6.0, 6.0).unwrap()),
        ("far away", Region::rect(7.0, 7.0, 8.0, 8.0).unwrap()),
        ("equal", Region::rect(0.0, 0.0, 4.0, 4.0).unwrap()),
    ];
    for (name, r) in &cases {
        println!(
            "{name:26} -> {} / swapped {}",
            classify(r, &outer),
            classify(&outer, r)
        );
    }

    // Spatial locators denote relation sets: at = {TPP, NTPP},
    // on = {EC, TPP}, in = {EC, TPP, NTPP}.
    println!();
    let inner = Region::rect(1.0, 1.0, 2.0, 2.0).unwrap();
    let beside = Region::rect(4.0, 0.0, 6.0, 4.0).unwrap();
    for prep in [Preposition::At, Preposition::On, Preposition::In] {
        println!(
            "inner {} outer?  {:5}   beside {} outer?  {}",
            prep.word(),
            check_preposition(prep, &inner, &outer),
            prep.word(),
            check_preposition(prep, &beside, &outer),
        );
    }
}
