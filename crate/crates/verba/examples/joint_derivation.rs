//! A joint derivation: a shape rule and its verbal rule applied in
//! parallel, step by step, with every description verified against the
//! geometry it talks about. Writes an HTML report with inline shape images.
//!
//! Run with: cargo run --example joint_derivation

use verba::engine::{derive, RulePair, ShapeRule, Strategy, VerbalRule};
use verba::geom::{MatchOptions, Shape};
use verba::grammar::Grammar;
use verba::render::write_report;

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

    // The rule: a unit square whose corner carries the registration mark
    // grows a half-scale square at that corner; the mark moves outward.
    // Matching is scale-free, so each application attaches an ever smaller
    // square to the previous one.
    let lhs = square(0.0, 0.0, 1.0).with_label(1.0, 1.0, "dot").unwrap();
    let rhs = square(0.0, 0.0, 1.0)
        .sum(&square(1.0, 1.0, 0.5))
        .with_label(1.5, 1.5, "dot")
        .unwrap();
    let pair = RulePair::new(
        &grammar,
        ShapeRule::new("grow-corner", lhs, rhs).unwrap(),
        VerbalRule {
            constructive: "add <shape2> to <shape1>.".into(),
            from_above: vec!["<shape2> is on <shape1>.".into()],
        },
    )
    .unwrap();

    let initial = square(0.0, 0.0, 1.0)
        .sum(&square(1.0, 1.0, 0.5))
        .with_label(1.5, 1.5, "dot")
        .unwrap();

    let derivation = derive(
        &grammar,
        &[pair],
        &initial,
        Strategy::First,
        4,
        MatchOptions::default(),
    )
    .unwrap();

    println!(
        "{} steps; terminated: {}\n",
        derivation.steps.len(),
        derivation.termination.name()
    );
    for step in &derivation.steps {
        println!(
            "step {} (rule {}, scale {:.3}):",
            step.index,
            step.rule,
            step.transform.scale_factor()
        );
        for d in &step.descriptions {
            println!("  [{:12}] {}", d.style.name(), d.text);
            println!("                 {}", d.semantics.serialize());
            println!("                 verification: {}", d.verification.summary());
        }
        println!();
    }

    let out = std::env::temp_dir().join("verba-derivation-report");
    write_report(&out, &derivation).unwrap();
    println!("report written to {}", out.display());
}
