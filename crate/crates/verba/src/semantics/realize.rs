use crate::grammar::{parse, tokenize, Grammar};

use super::{compose::interpret, Category, SemError, SemStructure, Slot};

/// The two description styles: constructive sentences start with an action
/// verb; from-above sentences assert how things are with `is`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Constructive,
    FromAbove,
}

impl Style {
    pub fn name(&self) -> &'static str {
        match self {
            Style::Constructive => "constructive",
            Style::FromAbove => "from-above",
        }
    }

    pub fn from_name(name: &str) -> Option<Style> {
        match name {
            "constructive" => Some(Style::Constructive),
            "from-above" | "from_above" => Some(Style::FromAbove),
            _ => None,
        }
    }
}

fn unrealizable(s: &SemStructure, problem: &str) -> SemError {
    SemError::Unrealizable {
        category: s.category().name().to_string(),
        problem: problem.to_string(),
    }
}

/// Renders a structure as a sentence in the requested style.
///
/// A spatial relation keeps its preposition in both styles; converting to
/// constructive swaps the existential verb for the structure's action verb
/// (`draw` when the action is `is`), and converting to from-above restores
/// `is`. A plain ACTION realizes only constructively — there is no spatial
/// relation for a from-above sentence to assert.
pub fn realize(s: &SemStructure, style: Style) -> Result<String, SemError> {
    match s.category() {
        Category::SpatialRelation => {
            let trajector = s
                .structure(Slot::Trajector)
                .ok_or_else(|| unrealizable(s, "missing trajector"))?;
            let landmark = s
                .structure(Slot::Landmark)
                .ok_or_else(|| unrealizable(s, "missing landmark"))?;
            let relation = s
                .word(Slot::Relation)
                .ok_or_else(|| unrealizable(s, "missing relation"))?;
            let t = realize_np(trajector)?;
            let l = realize_np(landmark)?;
            match style {
                Style::FromAbove => Ok(format!("{t} is {relation} {l}")),
                Style::Constructive => {
                    let verb = match s.structure(Slot::Action).and_then(|a| a.word(Slot::Action)) {
                        Some("is") | None => "draw",
                        Some(v) => v,
                    };
                    Ok(format!("{verb} {t} {relation} {l}"))
                }
            }
        }
        Category::Action => {
            let trajector = s
                .structure(Slot::Trajector)
                .ok_or_else(|| unrealizable(s, "missing trajector"))?;
            let landmark = s
                .structure(Slot::Landmark)
                .ok_or_else(|| unrealizable(s, "missing landmark"))?;
            if style == Style::FromAbove {
                return Err(unrealizable(s, "no spatial relation to assert"));
            }
            let verb = s
                .word(Slot::Action)
                .ok_or_else(|| unrealizable(s, "missing verb"))?;
            let linker = match verb {
                "subtract" => "from",
                "replace" => "with",
                "add" | "draw" => "to",
                other => return Err(unrealizable(s, &format!("verb {other:?} takes no object"))),
            };
            Ok(format!(
                "{verb} {} {linker} {}",
                realize_np(trajector)?,
                realize_np(landmark)?
            ))
        }
        _ => Err(unrealizable(s, "only sentences realize")),
    }
}

fn realize_np(s: &SemStructure) -> Result<String, SemError> {
    match s.category() {
        Category::Shape => s
            .word(Slot::Shape)
            .map(str::to_string)
            .ok_or_else(|| unrealizable(s, "missing shape word")),
        Category::Direction => {
            let shape = s
                .structure(Slot::Shape)
                .ok_or_else(|| unrealizable(s, "missing shape"))?;
            let direction = s
                .word(Slot::Direction)
                .ok_or_else(|| unrealizable(s, "missing direction"))?;
            let attribute = s
                .word(Slot::Attribute)
                .ok_or_else(|| unrealizable(s, "missing attribute"))?;
            let inner = realize_np(shape)?;
            match s.word(Slot::Comparative) {
                Some(c) => Ok(format!("the {c} {direction} {attribute} of {inner}")),
                None => Ok(format!("the {direction} {attribute} of {inner}")),
            }
        }
        Category::Attribute => {
            let shape = s
                .structure(Slot::Shape)
                .ok_or_else(|| unrealizable(s, "missing shape"))?;
            let select = s
                .word(Slot::Select)
                .ok_or_else(|| unrealizable(s, "missing selector"))?;
            let direction = s
                .word(Slot::Direction)
                .ok_or_else(|| unrealizable(s, "missing direction"))?;
            let attribute = s
                .word(Slot::Attribute)
                .ok_or_else(|| unrealizable(s, "missing attribute"))?;
            Ok(format!(
                "the {select} of the {direction} {attribute} of {}",
                realize_np(shape)?
            ))
        }
        _ => Err(unrealizable(s, "not an entity")),
    }
}

/// Parses a sentence, interprets it, and realizes the structure in the
/// target style. Converting a sentence already in the target style leaves
/// it unchanged (for sentences in canonical surface form).
pub fn convert_style(
    grammar: &Grammar,
    sentence: &str,
    target: Style,
) -> Result<String, crate::Error> {
    let tokens = tokenize(sentence)?;
    let trees = parse(grammar, &tokens)?;
    let meaning = interpret(grammar, &trees[0])?;
    Ok(realize(&meaning, target)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g() -> Grammar {
        Grammar::builtin()
    }

    #[test]
    fn simple_conversions() {
        assert_eq!(
            convert_style(&g(), "shape1 is at shape2", Style::Constructive).unwrap(),
            "draw shape1 at shape2"
        );
        assert_eq!(
            convert_style(&g(), "draw shape1 at shape2", Style::FromAbove).unwrap(),
            "shape1 is at shape2"
        );
        assert_eq!(
            convert_style(&g(), "shape1 is at shape2", Style::FromAbove).unwrap(),
            "shape1 is at shape2"
        );
    }

    #[test]
    fn action_sentences_stay_constructive() {
        assert_eq!(
            convert_style(&g(), "add shape1 to shape2", Style::Constructive).unwrap(),
            "add shape1 to shape2"
        );
        assert!(convert_style(&g(), "add shape1 to shape2", Style::FromAbove).is_err());
    }

    #[test]
    fn property_phrases_realize_with_canonical_determiners() {
        let s = "the bottom edge of shape2 is on the midpoint of the top edge of shape1";
        assert_eq!(
            convert_style(&g(), s, Style::Constructive).unwrap(),
            "draw the bottom edge of shape2 on the midpoint of the top edge of shape1"
        );
        assert_eq!(convert_style(&g(), s, Style::FromAbove).unwrap(), s);
    }

    #[test]
    fn structures_without_participants_do_not_realize() {
        use crate::semantics::Category;
        let bare_is = crate::semantics::SemStructure::new(Category::Action)
            .with_word(Slot::Action, "is")
            .with_word(Slot::Tense, "present");
        assert!(realize(&bare_is, Style::Constructive).is_err());
        let shape = crate::semantics::SemStructure::shape_ref("shape1");
        assert!(realize(&shape, Style::FromAbove).is_err());
    }

    #[test]
    fn realization_reparses_to_the_same_structure_up_to_the_verb() {
        let grammar = g();
        let sentence = "the upper left corner of shape2 is at shape1";
        let tokens = tokenize(sentence).unwrap();
        let trees = parse(&grammar, &tokens).unwrap();
        let meaning = interpret(&grammar, &trees[0]).unwrap();
        let constructive = realize(&meaning, Style::Constructive).unwrap();
        let back = interpret(
            &grammar,
            &parse(&grammar, &tokenize(&constructive).unwrap()).unwrap()[0],
        )
        .unwrap();
        assert_eq!(
            back.structure(Slot::Trajector),
            meaning.structure(Slot::Trajector)
        );
        assert_eq!(
            back.structure(Slot::Landmark),
            meaning.structure(Slot::Landmark)
        );
        assert_eq!(back.word(Slot::Relation), meaning.word(Slot::Relation));
        assert_eq!(
            back.structure(Slot::Action).unwrap().word(Slot::Action),
            Some("draw")
        );
    }
}
