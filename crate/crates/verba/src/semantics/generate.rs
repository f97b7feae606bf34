//! Canonical sentence enumeration, used by the property suites and by
//! anyone who wants the realizable fragment of the description language.

use super::{realize, region_for, Category, SemStructure, Slot, Style};

const SHAPES: [&str; 2] = ["shape1", "shape2"];
const DIRECTIONS: [&str; 4] = ["right", "left", "top", "bottom"];
const ATTRIBUTES: [&str; 3] = ["edge", "corner", "midpoint"];
const COMPARATIVES: [&str; 4] = ["top", "bottom", "upper", "lower"];
const PREPOSITIONS: [&str; 3] = ["at", "on", "in"];

/// Every canonical entity structure the grammar can talk about: bare shape
/// references, directed attributes (`the bottom edge of shape1`),
/// comparative forms (`the upper left corner of shape2`), and selected
/// attributes (`the midpoint of the right edge of shape1`).
pub fn entity_structures() -> Vec<SemStructure> {
    let mut out = Vec::new();
    for shape in SHAPES {
        out.push(SemStructure::shape_ref(shape));
    }
    for shape in SHAPES {
        for dir in DIRECTIONS {
            for attr in ATTRIBUTES {
                out.push(
                    SemStructure::new(Category::Direction)
                        .with_word(Slot::Direction, dir)
                        .with_word(Slot::Attribute, attr)
                        .with_structure(Slot::Shape, SemStructure::shape_ref(shape)),
                );
            }
        }
    }
    for shape in SHAPES {
        for comp in COMPARATIVES {
            for dir in DIRECTIONS {
                for attr in ATTRIBUTES {
                    out.push(
                        SemStructure::new(Category::Direction)
                            .with_word(Slot::Comparative, comp)
                            .with_word(Slot::Direction, dir)
                            .with_word(Slot::Attribute, attr)
                            .with_structure(Slot::Shape, SemStructure::shape_ref(shape)),
                    );
                }
            }
        }
    }
    for shape in SHAPES {
        for sel in ATTRIBUTES {
            for dir in DIRECTIONS {
                for attr in ATTRIBUTES {
                    out.push(
                        SemStructure::new(Category::Attribute)
                            .with_word(Slot::Select, sel)
                            .with_word(Slot::Direction, dir)
                            .with_word(Slot::Attribute, attr)
                            .with_structure(Slot::Shape, SemStructure::shape_ref(shape)),
                    );
                }
            }
        }
    }
    out
}

/// Every canonical from-above sentence of at most `max_tokens` tokens,
/// paired with the structure it interprets to.
pub fn from_above_inventory(max_tokens: usize) -> Vec<(String, SemStructure)> {
    let entities = entity_structures();
    let mut out = Vec::new();
    for trajector in &entities {
        for landmark in &entities {
            for prep in PREPOSITIONS {
                let expected = SemStructure::new(Category::SpatialRelation)
                    .with_word(Slot::Relation, prep)
                    .with_word(Slot::Region, region_for(prep).unwrap())
                    .with_structure(
                        Slot::Action,
                        SemStructure::new(Category::Action)
                            .with_word(Slot::Action, "is")
                            .with_word(Slot::Tense, "present"),
                    )
                    .with_structure(Slot::Trajector, trajector.clone())
                    .with_structure(Slot::Landmark, landmark.clone());
                let sentence =
                    realize(&expected, Style::FromAbove).expect("canonical forms realize");
                if sentence.split_whitespace().count() <= max_tokens {
                    out.push((sentence, expected));
                }
            }
        }
    }
    out
}
