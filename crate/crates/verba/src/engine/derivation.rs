use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::json;

use crate::geom::{find_matches, round9, GeomError, MatchOptions, Shape, Transform};
use crate::grammar::{parse, tokenize, Grammar};
use crate::semantics::{interpret, SemStructure};

use super::verify::verify_structure;
use super::{EngineError, RulePair, ShapeRule, Verification};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DescriptionStyle {
    Constructive,
    FromAbove,
}

impl DescriptionStyle {
    pub fn name(&self) -> &'static str {
        match self {
            DescriptionStyle::Constructive => "constructive",
            DescriptionStyle::FromAbove => "from-above",
        }
    }
}

/// One emitted description with its interpretation and verification.
#[derive(Debug, Clone)]
pub struct StepDescription {
    pub style: DescriptionStyle,
    pub text: String,
    pub semantics: SemStructure,
    pub verification: Verification,
}

/// One rule application: the rewrite, the reference binding, and the
/// descriptions it emitted.
#[derive(Debug, Clone)]
pub struct DerivationStep {
    pub index: usize,
    pub rule: String,
    pub transform: Transform,
    pub shape_before: Shape,
    pub shape_after: Shape,
    /// `<shape1>`: the arrangement after the step minus the rule's placed
    /// right-hand side.
    pub shape1: Shape,
    /// `<shape2>`: the placed right-hand side `t(b)`.
    pub shape2: Shape,
    pub descriptions: Vec<StepDescription>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    NoMatch,
    NoLabel,
    MaxSteps,
}

impl Termination {
    pub fn name(&self) -> &'static str {
        match self {
            Termination::NoMatch => "no-match",
            Termination::NoLabel => "no-label",
            Termination::MaxSteps => "max-steps",
        }
    }
}

/// An ordered trace of rule applications from an initial shape.
#[derive(Debug, Clone)]
pub struct Derivation {
    pub initial: Shape,
    pub steps: Vec<DerivationStep>,
    pub termination: Termination,
}

/// A scripted rule choice: rule name plus index into its match list.
#[derive(Debug, Clone, Deserialize)]
pub struct ScriptChoice {
    pub rule: String,
    #[serde(rename = "match")]
    pub match_index: usize,
}

/// How `derive` picks among applicable (rule, transform) pairs.
#[derive(Debug, Clone)]
pub enum Strategy {
    /// First rule in order, first transform in canonical order.
    First,
    /// Uniform seeded choice over all applicable pairs.
    Random(u64),
    /// A scripted list of choices, standing in for interactive selection.
    Script(Vec<ScriptChoice>),
}

/// Every transform making the rule applicable to `s`, in deterministic
/// order.
pub fn applicable(
    rule: &ShapeRule,
    s: &Shape,
    opts: MatchOptions,
) -> Result<Vec<Transform>, GeomError> {
    find_matches(rule.lhs(), s, opts)
}

/// `(S - t(a)) + t(b)`, guarded against stale transforms.
pub fn apply_rule(rule: &ShapeRule, s: &Shape, t: &Transform) -> Result<Shape, EngineError> {
    let lhs_image = rule.lhs().transform(t);
    if !lhs_image.subshape_of(s) {
        return Err(EngineError::StaleTransform);
    }
    Ok(s.difference(&lhs_image).sum(&rule.rhs().transform(t)))
}

/// Executes one joint rule application: rewrites the shape, binds the
/// references, instantiates and interprets every template, and verifies
/// each asserted relation. The rewrite identity and the binding partition
/// are rechecked by recomputation.
pub fn step(
    grammar: &Grammar,
    pair: &RulePair,
    s: &Shape,
    t: &Transform,
    index: usize,
) -> Result<DerivationStep, crate::Error> {
    let rule = pair.shape_rule();
    let shape_after = apply_rule(rule, s, t)?;

    let recomputed = s
        .difference(&rule.lhs().transform(t))
        .sum(&rule.rhs().transform(t));
    if !shape_after.equal(&recomputed) {
        return Err(EngineError::BrokenInvariant(index).into());
    }
    let shape2 = rule.rhs().transform(t);
    let shape1 = shape_after.difference(&shape2);
    if !shape1.sum(&shape2).equal(&shape_after) {
        return Err(EngineError::BrokenInvariant(index).into());
    }

    let mut descriptions = Vec::new();
    let verbal = pair.verbal_rule();
    let mut templates = vec![(DescriptionStyle::Constructive, verbal.constructive.clone())];
    for fa in &verbal.from_above {
        templates.push((DescriptionStyle::FromAbove, fa.clone()));
    }
    for (style, text) in templates {
        // Templates were validated at rule load; failure here is a bug.
        let tokens = tokenize(&text)?;
        let trees = parse(grammar, &tokens)?;
        let semantics = interpret(grammar, &trees[0])?;
        let verification = verify_structure(&semantics, &shape1, &shape2);
        descriptions.push(StepDescription {
            style,
            text,
            semantics,
            verification,
        });
    }

    Ok(DerivationStep {
        index,
        rule: rule.name().to_string(),
        transform: *t,
        shape_before: s.clone(),
        shape_after,
        shape1,
        shape2,
        descriptions,
    })
}

/// Runs a derivation: rule applications continue until no rule applies, no
/// registration label remains, or the step budget is spent. The same
/// strategy and seed reproduce the same trace exactly.
pub fn derive(
    grammar: &Grammar,
    pairs: &[RulePair],
    initial: &Shape,
    strategy: Strategy,
    max_steps: usize,
    opts: MatchOptions,
) -> Result<Derivation, crate::Error> {
    let mut rng = match &strategy {
        Strategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(*seed)),
        _ => None,
    };
    let mut script = match &strategy {
        Strategy::Script(choices) => Some(choices.iter()),
        _ => None,
    };

    let mut current = initial.clone();
    let mut steps: Vec<DerivationStep> = Vec::new();
    let termination = loop {
        if steps.len() >= max_steps {
            break Termination::MaxSteps;
        }
        if current.labels().is_empty() {
            break Termination::NoLabel;
        }
        let choice: Option<(usize, Transform)> = match (&strategy, &mut rng, &mut script) {
            (Strategy::First, _, _) => {
                let mut found = None;
                for (i, pair) in pairs.iter().enumerate() {
                    let matches = applicable(pair.shape_rule(), &current, opts)?;
                    if let Some(t) = matches.into_iter().next() {
                        found = Some((i, t));
                        break;
                    }
                }
                found
            }
            (Strategy::Random(_), Some(rng), _) => {
                let mut all: Vec<(usize, Transform)> = Vec::new();
                for (i, pair) in pairs.iter().enumerate() {
                    for t in applicable(pair.shape_rule(), &current, opts)? {
                        all.push((i, t));
                    }
                }
                if all.is_empty() {
                    None
                } else {
                    let pick = rng.gen_range(0..all.len());
                    Some(all.swap_remove(pick))
                }
            }
            (Strategy::Script(_), _, Some(script)) => match script.next() {
                None => break Termination::MaxSteps,
                Some(choice) => {
                    let (i, pair) = pairs
                        .iter()
                        .enumerate()
                        .find(|(_, p)| p.name() == choice.rule)
                        .ok_or_else(|| EngineError::UnknownRule(choice.rule.clone()))?;
                    let matches = applicable(pair.shape_rule(), &current, opts)?;
                    if choice.match_index >= matches.len() {
                        return Err(EngineError::BadMatchIndex {
                            rule: choice.rule.clone(),
                            index: choice.match_index,
                            available: matches.len(),
                        }
                        .into());
                    }
                    Some((i, matches[choice.match_index]))
                }
            },
            _ => unreachable!("strategy state matches the strategy"),
        };
        let Some((rule_index, t)) = choice else {
            break Termination::NoMatch;
        };
        let next = step(grammar, &pairs[rule_index], &current, &t, steps.len() + 1)?;
        current = next.shape_after.clone();
        steps.push(next);
    };

    Ok(Derivation {
        initial: initial.clone(),
        steps,
        termination,
    })
}

impl Derivation {
    /// The serialized trace: initial shape, termination reason, and one
    /// record per step (rule, six transform coefficients, shapes, bindings,
    /// descriptions with semantics and verification).
    pub fn trace_json(&self) -> serde_json::Value {
        let steps: Vec<serde_json::Value> = self
            .steps
            .iter()
            .map(|s| {
                let coeffs: Vec<f64> =
                    s.transform.coefficients().iter().map(|&c| round9(c)).collect();
                let descriptions: Vec<serde_json::Value> = s
                    .descriptions
                    .iter()
                    .map(|d| {
                        let verification = match (&d.verification.relation, &d.verification.note) {
                            (Some(rel), _) => json!({
                                "status": d.verification.status.name(),
                                "relation": rel.name(),
                                "coarse": d.verification.coarse,
                            }),
                            (None, note) => json!({
                                "status": d.verification.status.name(),
                                "note": note.clone().unwrap_or_default(),
                            }),
                        };
                        json!({
                            "style": d.style.name(),
                            "text": d.text,
                            "semantics": d.semantics.serialize(),
                            "verification": verification,
                        })
                    })
                    .collect();
                json!({
                    "step": s.index,
                    "rule": s.rule,
                    "transform": coeffs,
                    "shape_before": serde_json::to_value(s.shape_before.to_doc()).unwrap(),
                    "shape_after": serde_json::to_value(s.shape_after.to_doc()).unwrap(),
                    "shape1": serde_json::to_value(s.shape1.to_doc()).unwrap(),
                    "shape2": serde_json::to_value(s.shape2.to_doc()).unwrap(),
                    "descriptions": descriptions,
                })
            })
            .collect();
        json!({
            "initial": serde_json::to_value(self.initial.to_doc()).unwrap(),
            "termination": self.termination.name(),
            "steps": steps,
        })
    }

    pub fn trace_string(&self) -> String {
        serde_json::to_string_pretty(&self.trace_json()).expect("trace serializes")
    }
}
