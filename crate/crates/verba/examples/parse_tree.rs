//! Tokenizing and parsing description sentences over the 24-word lexicon.
//!
//! Run with: cargo run --example parse_tree

use verba::grammar::{lexicon, parse, render_tree, tokenize, Grammar};

fn main() {
    println!("lexicon ({} terms): {}\n", lexicon().len(), lexicon().join(" "));

    let grammar = Grammar::builtin();
    let sentences = [
        "shape1 is at shape2",
        "add <shape2> to <shape1>.",
        "the upper left corner of shape2 is at the midpoint of the right edge of shape1",
    ];
    for sentence in sentences {
        println!("> {sentence}");
        let tokens = tokenize(sentence).unwrap();
        let trees = parse(&grammar, &tokens).unwrap();
        println!("{} parse(s); the prioritized first:\n", trees.len());
        println!("{}\n", render_tree(&trees[0]));
    }

    // Errors carry positions: unknown words and stalled parses.
    for bad in ["the blue square", "shape1 at"] {
        let outcome = tokenize(bad).and_then(|t| parse(&grammar, &t).map(|_| ()));
        println!("> {bad}\n  {}\n", outcome.unwrap_err());
    }
}
