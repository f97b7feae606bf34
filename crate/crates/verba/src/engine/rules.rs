use serde::{Deserialize, Serialize};

use crate::geom::{distinguished_points, Shape, ShapeDoc};
use crate::grammar::{parse, tokenize, Grammar};
use crate::semantics::interpret;

use super::EngineError;

/// A shape rule `a -> b`.
#[derive(Debug, Clone)]
pub struct ShapeRule {
    name: String,
    lhs: Shape,
    rhs: Shape,
}

impl ShapeRule {
    /// Rejects left-hand shapes the matcher cannot pin down (fewer than two
    /// distinguished points admits an infinite transform family).
    pub fn new(name: impl Into<String>, lhs: Shape, rhs: Shape) -> Result<ShapeRule, EngineError> {
        let name = name.into();
        if distinguished_points(&lhs).len() < 2 {
            return Err(EngineError::BadRuleLhs(
                name,
                crate::geom::GeomError::UnderdeterminedMatch,
            ));
        }
        Ok(ShapeRule { name, lhs, rhs })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn lhs(&self) -> &Shape {
        &self.lhs
    }

    pub fn rhs(&self) -> &Shape {
        &self.rhs
    }
}

/// The verbal side of a rule pair: one constructive template and any number
/// of from-above templates, all referencing `<shape1>` / `<shape2>`.
#[derive(Debug, Clone)]
pub struct VerbalRule {
    pub constructive: String,
    pub from_above: Vec<String>,
}

/// A shape rule bundled with the verbal rule describing its action.
#[derive(Debug, Clone)]
pub struct RulePair {
    shape: ShapeRule,
    verbal: VerbalRule,
}

impl RulePair {
    /// Validates every template at load time: each must tokenize, parse,
    /// and interpret. Step execution can then instantiate them blindly.
    pub fn new(
        grammar: &Grammar,
        shape: ShapeRule,
        verbal: VerbalRule,
    ) -> Result<RulePair, EngineError> {
        let mut templates = vec![verbal.constructive.clone()];
        templates.extend(verbal.from_above.iter().cloned());
        for template in templates {
            let check = tokenize(&template)
                .map_err(crate::Error::from)
                .and_then(|tokens| Ok(parse(grammar, &tokens)?))
                .and_then(|trees| Ok(interpret(grammar, &trees[0])?));
            if let Err(err) = check {
                return Err(EngineError::BadTemplate {
                    rule: shape.name().to_string(),
                    template,
                    problem: err.to_string(),
                });
            }
        }
        Ok(RulePair { shape, verbal })
    }

    pub fn name(&self) -> &str {
        self.shape.name()
    }

    pub fn shape_rule(&self) -> &ShapeRule {
        &self.shape
    }

    pub fn verbal_rule(&self) -> &VerbalRule {
        &self.verbal
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct RuleDoc {
    name: String,
    lhs: ShapeDoc,
    rhs: ShapeDoc,
    verbal: VerbalDoc,
}

#[derive(Debug, Serialize, Deserialize)]
struct VerbalDoc {
    constructive: String,
    #[serde(default)]
    from_above: Vec<String>,
}

/// Loads a rule set from its JSON array form, validating geometry,
/// templates, and name uniqueness.
pub fn load_rules(grammar: &Grammar, json: &str) -> Result<Vec<RulePair>, crate::Error> {
    let docs: Vec<RuleDoc> = serde_json::from_str(json)?;
    let mut pairs: Vec<RulePair> = Vec::with_capacity(docs.len());
    for doc in docs {
        if pairs.iter().any(|p| p.name() == doc.name) {
            return Err(EngineError::DuplicateRule(doc.name).into());
        }
        let lhs = Shape::from_doc(&doc.lhs)?;
        let rhs = Shape::from_doc(&doc.rhs)?;
        let shape = ShapeRule::new(doc.name, lhs, rhs)?;
        let verbal = VerbalRule {
            constructive: doc.verbal.constructive,
            from_above: doc.verbal.from_above,
        };
        pairs.push(RulePair::new(grammar, shape, verbal)?);
    }
    Ok(pairs)
}

/// Serializes a rule set back to the JSON array form, canonical shapes
/// included.
pub fn rules_to_json_string(pairs: &[RulePair]) -> String {
    let docs: Vec<RuleDoc> = pairs
        .iter()
        .map(|p| RuleDoc {
            name: p.name().to_string(),
            lhs: p.shape_rule().lhs().to_doc(),
            rhs: p.shape_rule().rhs().to_doc(),
            verbal: VerbalDoc {
                constructive: p.verbal_rule().constructive.clone(),
                from_above: p.verbal_rule().from_above.clone(),
            },
        })
        .collect();
    serde_json::to_string_pretty(&docs).expect("rule docs serialize")
}
