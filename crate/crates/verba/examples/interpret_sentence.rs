//! Compositional interpretation: sentences to spatial-semantic structures.
//!
//! Run with: cargo run --example interpret_sentence

use verba::grammar::{parse, tokenize, Grammar};
use verba::semantics::interpret;

fn main() {
    let grammar = Grammar::builtin();
    let sentences = [
        // Declarative, from-above: a spatial relation with trajector,
        // landmark, locator, and its region denotation.
        "shape1 is at shape2",
        // Constructive: an action with trajector and landmark.
        "add shape1 to shape2",
        // Verb-initial with a preposition still yields a spatial relation.
        "draw shape1 on shape2",
        // Geometric attributes and directions nest inside the entities.
        "the upper left corner of shape2 is at the midpoint of the right edge of shape1",
        "subtract <shape2> from <shape1>.",
    ];
    for sentence in sentences {
        let tokens = tokenize(sentence).unwrap();
        let trees = parse(&grammar, &tokens).unwrap();
        let meaning = interpret(&grammar, &trees[0]).unwrap();
        println!("> {sentence}");
        println!("  canonical : {}", meaning.serialize());
        println!("  positional: {}", meaning.paper_style());
        println!(
            "  json      : {}\n",
            serde_json::to_string(&meaning.to_json()).unwrap()
        );
    }
}
