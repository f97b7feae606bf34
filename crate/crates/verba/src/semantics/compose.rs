use crate::grammar::{Grammar, ParseTree, SemTag};

use super::{region_for, Category, SemError, SemStructure, Slot};

/// Composes the meaning of a complete Start-rooted parse tree bottom-up and
/// returns the finished structure (validated against its template).
pub fn interpret(grammar: &Grammar, tree: &ParseTree) -> Result<SemStructure, SemError> {
    match eval(grammar, tree)? {
        SemValue::Complete(s) => {
            s.validate()?;
            Ok(s)
        }
        _ => Err(SemError::Unsaturated),
    }
}

// A composition value in flight: either a finished structure or one of the
// pending (curried) forms a rule may still saturate.
enum SemValue {
    Complete(SemStructure),
    Vacuous,
    Dir(String),
    Comp(String),
    AttrSel(String),
    BinaryVerb(String),
    Prop(PropBuilder),
    Prep {
        relation: String,
        region: String,
        args: Vec<Arg>,
    },
}

// A saturated argument with its surface position, kept for the
// sentence-level slot normalization.
struct Arg {
    value: SemStructure,
    pos: usize,
}

enum PropBuilder {
    Direction {
        direction: String,
        attribute: String,
        comparative: Option<String>,
    },
    Attribute {
        select: String,
        direction: String,
        attribute: String,
    },
}

impl PropBuilder {
    fn finish(self, shape: SemStructure) -> SemStructure {
        match self {
            PropBuilder::Direction {
                direction,
                attribute,
                comparative,
            } => {
                let mut s = SemStructure::new(Category::Direction)
                    .with_word(Slot::Direction, direction)
                    .with_word(Slot::Attribute, attribute)
                    .with_structure(Slot::Shape, shape);
                if let Some(c) = comparative {
                    s = s.with_word(Slot::Comparative, c);
                }
                s
            }
            PropBuilder::Attribute {
                select,
                direction,
                attribute,
            } => SemStructure::new(Category::Attribute)
                .with_word(Slot::Select, select)
                .with_word(Slot::Direction, direction)
                .with_word(Slot::Attribute, attribute)
                .with_structure(Slot::Shape, shape),
        }
    }
}

fn mismatch(what: &str) -> SemError {
    SemError::Compose(format!("unexpected child values for {what}"))
}

fn eval(grammar: &Grammar, tree: &ParseTree) -> Result<SemValue, SemError> {
    match tree {
        ParseTree::Leaf { rule, word, .. } => lexical(grammar.rules()[*rule].tag, word),
        ParseTree::Node { rule, children, .. } => {
            let tag = grammar.rules()[*rule].tag;
            match tag {
                SemTag::Identity => eval(grammar, &children[0]),
                SemTag::Second => eval(grammar, &children[1]),
                SemTag::ProcessSentence => {
                    let inner = eval(grammar, &children[0])?;
                    finish_sentence(inner)
                }
                SemTag::Constructive => {
                    let verb = match eval(grammar, &children[0])? {
                        SemValue::BinaryVerb(v) => v,
                        _ => return Err(mismatch("constructive verb")),
                    };
                    let trajector = complete(eval(grammar, &children[1])?)?;
                    let landmark = complete(eval(grammar, &children[2])?)?;
                    // "V X to/from/with Y": the moved entity X is the
                    // trajector, Y the landmark.
                    Ok(SemValue::Complete(
                        SemStructure::new(Category::Action)
                            .with_word(Slot::Action, verb)
                            .with_word(Slot::Tense, "present")
                            .with_structure(Slot::Trajector, trajector)
                            .with_structure(Slot::Landmark, landmark),
                    ))
                }
                SemTag::ApplyNpToVp
                | SemTag::ApplyVactToNpp
                | SemTag::ApplyNpToPp
                | SemTag::ApplyVerbToPp
                | SemTag::ApplyPrep => {
                    // One child carries the (possibly partial) preposition
                    // meaning; the other saturates its next argument.
                    let mut prep: Option<SemValue> = None;
                    let mut arg: Option<Arg> = None;
                    for child in children {
                        let pos = child.start();
                        match eval(grammar, child)? {
                            v @ SemValue::Prep { .. } => prep = Some(v),
                            SemValue::Complete(s) => arg = Some(Arg { value: s, pos }),
                            SemValue::Vacuous => {}
                            _ => return Err(mismatch("prepositional composition")),
                        }
                    }
                    match (prep, arg) {
                        (
                            Some(SemValue::Prep {
                                relation,
                                region,
                                mut args,
                            }),
                            Some(a),
                        ) => {
                            args.push(a);
                            Ok(SemValue::Prep {
                                relation,
                                region,
                                args,
                            })
                        }
                        _ => Err(mismatch("prepositional composition")),
                    }
                }
                SemTag::ApplyShapeToProp => {
                    let builder = match eval(grammar, &children[0])? {
                        SemValue::Prop(b) => b,
                        _ => return Err(mismatch("property application")),
                    };
                    let shape = complete(eval(grammar, &children[2])?)?;
                    Ok(SemValue::Complete(builder.finish(shape)))
                }
                SemTag::ApplyAttrToDir => {
                    let direction = match eval(grammar, &children[0])? {
                        SemValue::Dir(d) => d,
                        _ => return Err(mismatch("direction property")),
                    };
                    let attribute = attribute_word(eval(grammar, &children[1])?)?;
                    Ok(SemValue::Prop(PropBuilder::Direction {
                        direction,
                        attribute,
                        comparative: None,
                    }))
                }
                SemTag::ApplyComp => {
                    let comparative = match eval(grammar, &children[0])? {
                        SemValue::Comp(c) => c,
                        _ => return Err(mismatch("comparative property")),
                    };
                    let direction = direction_word(eval(grammar, &children[1])?)?;
                    let attribute = attribute_word(eval(grammar, &children[2])?)?;
                    Ok(SemValue::Prop(PropBuilder::Direction {
                        direction,
                        attribute,
                        comparative: Some(comparative),
                    }))
                }
                SemTag::ApplyAttrSel => {
                    let select = match eval(grammar, &children[0])? {
                        SemValue::AttrSel(s) => s,
                        _ => return Err(mismatch("attribute selection")),
                    };
                    let direction = direction_word(eval(grammar, &children[3])?)?;
                    let attribute = attribute_word(eval(grammar, &children[4])?)?;
                    Ok(SemValue::Prop(PropBuilder::Attribute {
                        select,
                        direction,
                        attribute,
                    }))
                }
                _ => Err(SemError::Compose(format!(
                    "lexical tag {tag:?} on an internal node"
                ))),
            }
        }
    }
}

fn lexical(tag: SemTag, word: &str) -> Result<SemValue, SemError> {
    Ok(match tag {
        SemTag::Dir => SemValue::Dir(word.to_string()),
        SemTag::DirPlain => SemValue::Complete(
            SemStructure::new(Category::Direction).with_word(Slot::Attribute, word),
        ),
        SemTag::AttrPlain => SemValue::Complete(
            SemStructure::new(Category::Attribute).with_word(Slot::Attribute, word),
        ),
        SemTag::AttrSelect => SemValue::AttrSel(word.to_string()),
        SemTag::Comp => SemValue::Comp(word.to_string()),
        SemTag::ExistVerb | SemTag::ActionVerb => SemValue::Complete(
            SemStructure::new(Category::Action)
                .with_word(Slot::Action, word)
                .with_word(Slot::Tense, "present"),
        ),
        SemTag::ActionBinary => SemValue::BinaryVerb(word.to_string()),
        SemTag::SpAt | SemTag::SpOn | SemTag::SpIn => SemValue::Prep {
            relation: word.to_string(),
            region: region_for(word)
                .ok_or_else(|| SemError::Compose(format!("no region for {word:?}")))?
                .to_string(),
            args: Vec::new(),
        },
        SemTag::Shape => SemValue::Complete(SemStructure::shape_ref(word)),
        SemTag::Vacuous => SemValue::Vacuous,
        other => {
            return Err(SemError::Compose(format!(
                "syntactic tag {other:?} on a lexical leaf"
            )))
        }
    })
}

fn complete(v: SemValue) -> Result<SemStructure, SemError> {
    match v {
        SemValue::Complete(s) => Ok(s),
        _ => Err(mismatch("saturated argument")),
    }
}

fn attribute_word(v: SemValue) -> Result<String, SemError> {
    match v {
        SemValue::Complete(s)
            if s.category() == Category::Attribute && s.word(Slot::Attribute).is_some() =>
        {
            Ok(s.word(Slot::Attribute).unwrap().to_string())
        }
        _ => Err(mismatch("plain attribute")),
    }
}

fn direction_word(v: SemValue) -> Result<String, SemError> {
    match v {
        SemValue::Complete(s)
            if s.category() == Category::Direction && s.word(Slot::Attribute).is_some() =>
        {
            Ok(s.word(Slot::Attribute).unwrap().to_string())
        }
        _ => Err(mismatch("plain direction")),
    }
}

/// Sentence-level normalization. A finished ACTION passes through. A
/// saturated preposition has gathered three values whose slots the literal
/// curried application would scramble for verb-initial sentences; they are
/// reassigned by category — the ACTION fills `action`, the two entities
/// fill `trajector` and `landmark` in surface order.
fn finish_sentence(v: SemValue) -> Result<SemValue, SemError> {
    match v {
        SemValue::Complete(s) if s.category() == Category::Action => Ok(SemValue::Complete(s)),
        SemValue::Prep {
            relation,
            region,
            args,
        } => {
            if args.len() != 3 {
                return Err(SemError::Unsaturated);
            }
            let (mut actions, mut entities): (Vec<Arg>, Vec<Arg>) = (Vec::new(), Vec::new());
            for a in args {
                if a.value.category() == Category::Action {
                    actions.push(a);
                } else {
                    entities.push(a);
                }
            }
            if actions.len() != 1 || entities.len() != 2 {
                return Err(SemError::Compose(
                    "sentence needs one verb meaning and two entities".into(),
                ));
            }
            entities.sort_by_key(|a| a.pos);
            let mut it = entities.into_iter();
            let trajector = it.next().unwrap().value;
            let landmark = it.next().unwrap().value;
            Ok(SemValue::Complete(
                SemStructure::new(Category::SpatialRelation)
                    .with_word(Slot::Relation, relation)
                    .with_word(Slot::Region, region)
                    .with_structure(Slot::Action, actions.pop().unwrap().value)
                    .with_structure(Slot::Trajector, trajector)
                    .with_structure(Slot::Landmark, landmark),
            ))
        }
        _ => Err(SemError::Unsaturated),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::{parse, tokenize};

    fn interpret_first(sentence: &str) -> SemStructure {
        let g = Grammar::builtin();
        let trees = parse(&g, &tokenize(sentence).unwrap()).unwrap();
        interpret(&g, &trees[0]).unwrap()
    }

    fn action_is() -> SemStructure {
        SemStructure::new(Category::Action)
            .with_word(Slot::Action, "is")
            .with_word(Slot::Tense, "present")
    }

    #[test]
    fn simple_at_sentence() {
        let s = interpret_first("shape1 is at shape2");
        let expected = SemStructure::new(Category::SpatialRelation)
            .with_word(Slot::Relation, "at")
            .with_word(Slot::Region, "ttp-nttp")
            .with_structure(Slot::Action, action_is())
            .with_structure(Slot::Trajector, SemStructure::shape_ref("shape1"))
            .with_structure(Slot::Landmark, SemStructure::shape_ref("shape2"));
        assert_eq!(s, expected);
    }

    #[test]
    fn add_sentence_is_an_action() {
        let s = interpret_first("add shape1 to shape2");
        let expected = SemStructure::new(Category::Action)
            .with_word(Slot::Action, "add")
            .with_word(Slot::Tense, "present")
            .with_structure(Slot::Trajector, SemStructure::shape_ref("shape1"))
            .with_structure(Slot::Landmark, SemStructure::shape_ref("shape2"));
        assert_eq!(s, expected);
    }

    #[test]
    fn verb_initial_preposition_sentence_normalizes_slots() {
        let s = interpret_first("draw shape1 at shape2");
        assert_eq!(s.category(), Category::SpatialRelation);
        assert_eq!(s.word(Slot::Relation), Some("at"));
        assert_eq!(
            s.structure(Slot::Action).unwrap().word(Slot::Action),
            Some("draw")
        );
        assert_eq!(
            s.structure(Slot::Trajector).unwrap().word(Slot::Shape),
            Some("shape1")
        );
        assert_eq!(
            s.structure(Slot::Landmark).unwrap().word(Slot::Shape),
            Some("shape2")
        );
    }

    #[test]
    fn complex_sentence_builds_nested_properties() {
        let s = interpret_first(
            "the upper left corner of shape2 is at the midpoint of the right edge of shape1",
        );
        let trajector = SemStructure::new(Category::Direction)
            .with_word(Slot::Comparative, "upper")
            .with_word(Slot::Direction, "left")
            .with_word(Slot::Attribute, "corner")
            .with_structure(Slot::Shape, SemStructure::shape_ref("shape2"));
        let landmark = SemStructure::new(Category::Attribute)
            .with_word(Slot::Select, "midpoint")
            .with_word(Slot::Direction, "right")
            .with_word(Slot::Attribute, "edge")
            .with_structure(Slot::Shape, SemStructure::shape_ref("shape1"));
        let expected = SemStructure::new(Category::SpatialRelation)
            .with_word(Slot::Relation, "at")
            .with_word(Slot::Region, "ttp-nttp")
            .with_structure(Slot::Action, action_is())
            .with_structure(Slot::Trajector, trajector)
            .with_structure(Slot::Landmark, landmark);
        assert_eq!(s, expected);
    }

    #[test]
    fn subtract_and_replace_bind_first_np_as_trajector() {
        let s = interpret_first("subtract <shape2> from <shape1>");
        assert_eq!(
            s.structure(Slot::Trajector).unwrap().word(Slot::Shape),
            Some("shape2")
        );
        assert_eq!(
            s.structure(Slot::Landmark).unwrap().word(Slot::Shape),
            Some("shape1")
        );
        let s = interpret_first("replace <shape1> with <shape2>");
        assert_eq!(s.word(Slot::Action), Some("replace"));
    }

    #[test]
    fn region_tracks_the_preposition() {
        for (prep, code) in [("at", "ttp-nttp"), ("on", "ec-ttp"), ("in", "ec-ttp-nttp")] {
            let s = interpret_first(&format!("shape1 is {prep} shape2"));
            assert_eq!(s.word(Slot::Region), Some(code));
        }
    }

    #[test]
    fn unsaturated_roots_are_rejected() {
        use crate::grammar::{ParseTree, Symbol};
        let g = Grammar::builtin();
        // A lone preposition leaf is a pending meaning still awaiting its
        // three arguments.
        let sp_rule = g
            .rules()
            .iter()
            .position(|r| matches!(r.rhs.as_slice(), [Symbol::Terminal(w)] if w == "at"))
            .unwrap();
        let leaf = ParseTree::Leaf {
            label: "SP".into(),
            rule: sp_rule,
            word: "at".into(),
            index: 0,
            referenced: false,
        };
        assert_eq!(interpret(&g, &leaf), Err(SemError::Unsaturated));
    }
}
