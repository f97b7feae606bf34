//! Converting between the two description styles: constructive sentences
//! start with an action verb; from-above sentences assert how things are.
//!
//! Run with: cargo run --example convert_style

use verba::grammar::Grammar;
use verba::semantics::{convert_style, Style};

fn main() {
    let grammar = Grammar::builtin();
    let pairs = [
        ("shape1 is at shape2", Style::Constructive),
        ("draw shape1 at shape2", Style::FromAbove),
        ("the bottom edge of shape2 is on the top edge of shape1", Style::Constructive),
        // Converting into the style a sentence is already in is a no-op.
        ("shape1 is at shape2", Style::FromAbove),
    ];
    for (sentence, target) in pairs {
        let converted = convert_style(&grammar, sentence, target).unwrap();
        println!("{sentence:55} --[{}]--> {converted}", target.name());
    }

    // The conversion is an involution on from-above sentences.
    let original = "the midpoint of the right edge of shape1 is at shape2";
    let there = convert_style(&grammar, original, Style::Constructive).unwrap();
    let back = convert_style(&grammar, &there, Style::FromAbove).unwrap();
    println!("\nround trip: {original}\n        ->  {there}\n        ->  {back}");
    assert_eq!(back, original);

    // Pure actions have no spatial relation for a from-above sentence to
    // assert.
    let err = convert_style(&grammar, "add shape1 to shape2", Style::FromAbove).unwrap_err();
    println!("\nadd shape1 to shape2 --[from-above]--> error: {err}");
}
