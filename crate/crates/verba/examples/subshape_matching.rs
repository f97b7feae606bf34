//! Similarity-transform search: every embedding of a pattern shape into a
//! target, including emergent squares that were never drawn as units.
//!
//! Run with: cargo run --example subshape_matching

use verba::geom::{find_matches, MatchOptions, Shape};

fn unit_square() -> Shape {
    Shape::from_coords(&[
        ((0.0, 0.0), (1.0, 0.0)),
        ((1.0, 0.0), (1.0, 1.0)),
        ((1.0, 1.0), (0.0, 1.0)),
        ((0.0, 1.0), (0.0, 0.0)),
    ])
    .unwrap()
}

// A 2x2 grid drawn as six maximal segments. The four cells and the outer
// square are all emergent: none of their edges exists as a drawn unit.
fn grid() -> Shape {
    Shape::from_coords(&[
        ((0.0, 0.0), (2.0, 0.0)),
        ((0.0, 1.0), (2.0, 1.0)),
        ((0.0, 2.0), (2.0, 2.0)),
        ((0.0, 0.0), (0.0, 2.0)),
        ((1.0, 0.0), (1.0, 2.0)),
        ((2.0, 0.0), (2.0, 2.0)),
    ])
    .unwrap()
}

fn main() {
    let pattern = unit_square();
    let target = grid();

    let matches = find_matches(&pattern, &target, MatchOptions::default()).unwrap();
    println!(
        "unit square into a 2x2 grid: {} matches (4 cells + the emergent \
         outer square, times the square's 8 symmetries)",
        matches.len()
    );
    for (i, t) in matches.iter().enumerate().take(6) {
        let [a, b, c, d, tx, ty] = t.coefficients();
        println!(
            "  match {i}: scale {:.2}{} linear [{a:5.2} {b:5.2}; {c:5.2} {d:5.2}] \
             translation ({tx:.2}, {ty:.2})",
            t.scale_factor(),
            if t.is_reflecting() { ", reflected," } else { "," },
        );
    }
    println!("  ...");

    let direct_only = find_matches(
        &pattern,
        &target,
        MatchOptions {
            allow_reflection: false,
        },
    )
    .unwrap();
    println!("without reflections: {} matches", direct_only.len());

    // A registration mark gates where the rule may apply.
    let marked_pattern = unit_square().with_label(1.0, 1.0, "dot").unwrap();
    let marked_target = grid().with_label(1.0, 1.0, "dot").unwrap();
    let gated = find_matches(&marked_pattern, &marked_target, MatchOptions::default()).unwrap();
    println!(
        "labelled square into grid with one dot at its center: {} matches \
         (the dot must land on a dot)",
        gated.len()
    );

    // Fewer than two carrier crossings leaves the transform family
    // underdetermined, so such patterns are rejected.
    let bare_line = Shape::from_coords(&[((0.0, 0.0), (1.0, 0.0))]).unwrap();
    match find_matches(&bare_line, &target, MatchOptions::default()) {
        Err(e) => println!("single segment as pattern: {e}"),
        Ok(_) => unreachable!(),
    }
}
