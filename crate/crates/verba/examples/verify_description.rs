//! Checking described spatial relations against actual geometry.
//!
//! Run with: cargo run --example verify_description

use verba::engine::verify_sentence;
use verba::geom::Shape;
use verba::grammar::Grammar;

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
    let grammar = Grammar::builtin();
    let outer = square(0.0, 0.0, 4.0);
    let inner = square(1.0, 1.0, 1.0);
    let beside = square(4.0, 0.0, 2.0);
    let far = square(9.0, 9.0, 1.0);
    let open = Shape::from_coords(&[((0.0, 0.0), (2.0, 2.0))]).unwrap();

    let cases: [(&str, &Shape, &Shape); 7] = [
        ("shape2 is in shape1", &outer, &inner),
        ("shape2 is at shape1", &outer, &inner),
        ("shape2 is on shape1", &outer, &beside),
        ("shape2 is in shape1", &outer, &far),
        // Attribute-qualified claims check the whole bound shapes and are
        // marked coarse.
        ("the bottom edge of shape2 is in shape1", &outer, &inner),
        // Actions assert no relation; open shapes have no regions.
        ("add shape1 to shape2", &outer, &inner),
        ("shape2 is in shape1", &outer, &open),
    ];
    for (sentence, shape1, shape2) in cases {
        let verdict = verify_sentence(&grammar, sentence, shape1, shape2).unwrap();
        println!("{sentence:45} -> {}", verdict.summary());
    }
}
