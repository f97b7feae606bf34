use crate::geom::Shape;
use crate::grammar::{parse, tokenize, Grammar};
use crate::region::{classify_union, extract_regions, Preposition, RegionRelation};
use crate::semantics::{interpret, Category, SemStructure, Slot};

/// Outcome of checking one sentence against bound geometry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerificationStatus {
    Verified,
    Refuted,
    Unverifiable,
}

impl VerificationStatus {
    pub fn name(&self) -> &'static str {
        match self {
            VerificationStatus::Verified => "verified",
            VerificationStatus::Refuted => "refuted",
            VerificationStatus::Unverifiable => "unverifiable",
        }
    }
}

/// A verification result: the status, the classified relation when one was
/// computed, whether the check was coarse (the sentence qualified a shape by
/// an attribute, but the relation was checked between the whole bound
/// shapes), and a note for unverifiable cases.
#[derive(Debug, Clone)]
pub struct Verification {
    pub status: VerificationStatus,
    pub relation: Option<RegionRelation>,
    pub coarse: bool,
    pub note: Option<String>,
}

impl Verification {
    fn unverifiable(note: &str) -> Verification {
        Verification {
            status: VerificationStatus::Unverifiable,
            relation: None,
            coarse: false,
            note: Some(note.to_string()),
        }
    }

    /// One-line summary, e.g. `verified (EC)` or `verified (NTPP, coarse)`.
    pub fn summary(&self) -> String {
        let mut out = self.status.name().to_string();
        match (&self.relation, self.coarse) {
            (Some(rel), false) => out.push_str(&format!(" ({rel})")),
            (Some(rel), true) => out.push_str(&format!(" ({rel}, coarse)")),
            (None, _) => {}
        }
        if let Some(note) = &self.note {
            out.push_str(&format!(": {note}"));
        }
        out
    }
}

/// Parses and interprets a sentence, then verifies it against the bound
/// shapes.
pub fn verify_sentence(
    grammar: &Grammar,
    sentence: &str,
    shape1: &Shape,
    shape2: &Shape,
) -> Result<Verification, crate::Error> {
    let tokens = tokenize(sentence)?;
    let trees = parse(grammar, &tokens)?;
    let meaning = interpret(grammar, &trees[0])?;
    Ok(verify_structure(&meaning, shape1, shape2))
}

/// Verifies an interpreted structure. Only spatial relations are checkable;
/// plain actions carry no asserted relation. Attribute-qualified
/// participants (edges, corners, midpoints) are checked at the whole-shape
/// level and marked coarse.
pub fn verify_structure(meaning: &SemStructure, shape1: &Shape, shape2: &Shape) -> Verification {
    if meaning.category() != Category::SpatialRelation {
        return Verification::unverifiable("no spatial relation asserted");
    }
    let resolve = |slot: Slot| -> Option<(&Shape, bool)> {
        let entity = meaning.structure(slot)?;
        let (shape_ref, coarse) = match entity.category() {
            Category::Shape => (entity, false),
            _ => (entity.structure(Slot::Shape)?, true),
        };
        match shape_ref.word(Slot::Shape)? {
            "shape1" => Some((shape1, coarse)),
            "shape2" => Some((shape2, coarse)),
            _ => None,
        }
    };
    let Some((t_shape, t_coarse)) = resolve(Slot::Trajector) else {
        return Verification::unverifiable("unresolved trajector reference");
    };
    let Some((l_shape, l_coarse)) = resolve(Slot::Landmark) else {
        return Verification::unverifiable("unresolved landmark reference");
    };
    let trajector_regions = extract_regions(t_shape);
    if trajector_regions.is_empty() {
        return Verification::unverifiable("trajector has no closed region");
    }
    let landmark_regions = extract_regions(l_shape);
    if landmark_regions.is_empty() {
        return Verification::unverifiable("landmark has no closed region");
    }
    let relation_word = meaning.word(Slot::Relation).unwrap_or("");
    let Ok(prep) = Preposition::from_word(relation_word) else {
        return Verification::unverifiable("relation has no region-calculus mapping");
    };
    let relation = classify_union(&trajector_regions, &landmark_regions);
    let status = if prep.relations().contains(&relation) {
        VerificationStatus::Verified
    } else {
        VerificationStatus::Refuted
    };
    Verification {
        status,
        relation: Some(relation),
        coarse: t_coarse || l_coarse,
        note: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square(x: f64, y: f64, side: f64) -> Shape {
        Shape::from_coords(&[
            ((x, y), (x + side, y)),
            ((x + side, y), (x + side, y + side)),
            ((x + side, y + side), (x, y + side)),
            ((x, y + side), (x, y)),
        ])
        .unwrap()
    }

    #[test]
    fn nested_squares_verify_in() {
        let g = Grammar::builtin();
        let outer = square(0.0, 0.0, 4.0);
        let inner = square(1.0, 1.0, 1.0);
        let v = verify_sentence(&g, "shape2 is in shape1", &outer, &inner).unwrap();
        assert_eq!(v.status, VerificationStatus::Verified);
        assert_eq!(v.relation, Some(RegionRelation::Ntpp));
        assert!(!v.coarse);
    }

    #[test]
    fn edge_adjacent_squares_verify_on() {
        let g = Grammar::builtin();
        let left = square(0.0, 0.0, 1.0);
        let right = square(1.0, 0.0, 1.0);
        let v = verify_sentence(&g, "shape2 is on shape1", &left, &right).unwrap();
        assert_eq!(v.status, VerificationStatus::Verified);
        assert_eq!(v.relation, Some(RegionRelation::Ec));
    }

    #[test]
    fn disjoint_squares_refute_at() {
        let g = Grammar::builtin();
        let a = square(0.0, 0.0, 1.0);
        let b = square(3.0, 0.0, 1.0);
        let v = verify_sentence(&g, "shape1 is at shape2", &a, &b).unwrap();
        assert_eq!(v.status, VerificationStatus::Refuted);
        assert_eq!(v.relation, Some(RegionRelation::Dc));
    }

    #[test]
    fn actions_are_unverifiable() {
        let g = Grammar::builtin();
        let a = square(0.0, 0.0, 1.0);
        let v = verify_sentence(&g, "add <shape2> to <shape1>.", &a, &a).unwrap();
        assert_eq!(v.status, VerificationStatus::Unverifiable);
        assert!(v.note.as_deref().unwrap_or("").contains("no spatial relation"));
    }

    #[test]
    fn open_shapes_are_unverifiable() {
        let g = Grammar::builtin();
        let square = square(0.0, 0.0, 1.0);
        let open = Shape::from_coords(&[((0.0, 0.0), (1.0, 1.0))]).unwrap();
        let v = verify_sentence(&g, "shape2 is in shape1", &square, &open).unwrap();
        assert_eq!(v.status, VerificationStatus::Unverifiable);
    }

    #[test]
    fn attribute_claims_are_coarse() {
        let g = Grammar::builtin();
        let outer = square(0.0, 0.0, 4.0);
        let inner = square(1.0, 1.0, 1.0);
        let v = verify_sentence(
            &g,
            "the bottom edge of shape2 is in shape1",
            &outer,
            &inner,
        )
        .unwrap();
        assert_eq!(v.status, VerificationStatus::Verified);
        assert!(v.coarse);
    }
}
