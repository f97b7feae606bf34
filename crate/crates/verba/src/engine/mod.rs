//! Paired shape and verbal rules, derivations, and description
//! verification.
//!
//! A rule pair applies its shape rule `a -> b` and its verbal rule in
//! parallel: a match `t` rewrites the arrangement `S` to `(S - t(a)) +
//! t(b)`, the references bind as `<shape1> = S' - t(b)` and `<shape2> =
//! t(b)`, the verbal templates instantiate into sentences, and every
//! asserted spatial relation is checked against the bound geometry through
//! the region calculus.

mod derivation;
mod rules;
mod verify;

pub use derivation::{
    applicable, apply_rule, derive, step, Derivation, DerivationStep, DescriptionStyle,
    ScriptChoice, StepDescription, Strategy, Termination,
};
pub use rules::{load_rules, rules_to_json_string, RulePair, ShapeRule, VerbalRule};
pub use verify::{verify_sentence, verify_structure, Verification, VerificationStatus};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("rule {0:?}: left-hand shape is not matchable: {1}")]
    BadRuleLhs(String, crate::geom::GeomError),
    #[error("rule {rule:?}: template {template:?} is invalid: {problem}")]
    BadTemplate {
        rule: String,
        template: String,
        problem: String,
    },
    #[error("duplicate rule name {0:?}")]
    DuplicateRule(String),
    #[error("transform is no longer applicable to the current shape")]
    StaleTransform,
    #[error("rewrite invariant violated at step {0}")]
    BrokenInvariant(usize),
    #[error("script names unknown rule {0:?}")]
    UnknownRule(String),
    #[error("script match index {index} out of range for rule {rule:?} ({available} matches)")]
    BadMatchIndex {
        rule: String,
        index: usize,
        available: usize,
    },
}
