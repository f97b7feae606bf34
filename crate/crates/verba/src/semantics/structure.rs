use std::collections::BTreeMap;
use std::fmt;

use super::{region_for, SemError};

/// Category of a semantic structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Category {
    Shape,
    Attribute,
    Direction,
    Action,
    SpatialRelation,
}

impl Category {
    pub fn name(&self) -> &'static str {
        match self {
            Category::Shape => "SHAPE",
            Category::Attribute => "ATTRIBUTE",
            Category::Direction => "DIRECTION",
            Category::Action => "ACTION",
            Category::SpatialRelation => "SPATIAL_RELATION",
        }
    }

    fn from_name(name: &str) -> Option<Category> {
        Some(match name {
            "SHAPE" => Category::Shape,
            "ATTRIBUTE" => Category::Attribute,
            "DIRECTION" => Category::Direction,
            "ACTION" => Category::Action,
            "SPATIAL_RELATION" => Category::SpatialRelation,
            _ => return None,
        })
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Slot names, in canonical serialization order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Slot {
    Relation,
    Region,
    Action,
    Trajector,
    Landmark,
    Select,
    Shape,
    Attribute,
    Direction,
    Comparative,
    Tense,
}

impl Slot {
    pub fn name(&self) -> &'static str {
        match self {
            Slot::Relation => "relation",
            Slot::Region => "region",
            Slot::Action => "action",
            Slot::Trajector => "trajector",
            Slot::Landmark => "landmark",
            Slot::Select => "select",
            Slot::Shape => "shape",
            Slot::Attribute => "attribute",
            Slot::Direction => "direction",
            Slot::Comparative => "comparative",
            Slot::Tense => "tense",
        }
    }

    fn from_name(name: &str) -> Option<Slot> {
        Some(match name {
            "relation" => Slot::Relation,
            "region" => Slot::Region,
            "action" => Slot::Action,
            "trajector" => Slot::Trajector,
            "landmark" => Slot::Landmark,
            "select" => Slot::Select,
            "shape" => Slot::Shape,
            "attribute" => Slot::Attribute,
            "direction" => Slot::Direction,
            "comparative" => Slot::Comparative,
            "tense" => Slot::Tense,
        _ => return None,
        })
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A slot value: a lexical word or a nested structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SlotValue {
    Word(String),
    Structure(Box<SemStructure>),
}

/// A typed attribute-value structure produced by semantic composition.
/// Equality is slot-set equality, independent of construction order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemStructure {
    category: Category,
    slots: BTreeMap<Slot, SlotValue>,
}

const DIRECTION_WORDS: [&str; 4] = ["right", "left", "top", "bottom"];
const ATTRIBUTE_WORDS: [&str; 3] = ["edge", "corner", "midpoint"];
const COMPARATIVE_WORDS: [&str; 4] = ["top", "bottom", "upper", "lower"];
const ACTION_WORDS: [&str; 5] = ["is", "draw", "add", "subtract", "replace"];

impl SemStructure {
    pub fn new(category: Category) -> SemStructure {
        SemStructure {
            category,
            slots: BTreeMap::new(),
        }
    }

    pub fn with_word(mut self, slot: Slot, word: impl Into<String>) -> SemStructure {
        self.slots.insert(slot, SlotValue::Word(word.into()));
        self
    }

    pub fn with_structure(mut self, slot: Slot, s: SemStructure) -> SemStructure {
        self.slots.insert(slot, SlotValue::Structure(Box::new(s)));
        self
    }

    /// `SHAPE[shape=...]` for a shape reference word.
    pub fn shape_ref(word: impl Into<String>) -> SemStructure {
        SemStructure::new(Category::Shape).with_word(Slot::Shape, word)
    }

    pub fn category(&self) -> Category {
        self.category
    }

    pub fn word(&self, slot: Slot) -> Option<&str> {
        match self.slots.get(&slot) {
            Some(SlotValue::Word(w)) => Some(w),
            _ => None,
        }
    }

    pub fn structure(&self, slot: Slot) -> Option<&SemStructure> {
        match self.slots.get(&slot) {
            Some(SlotValue::Structure(s)) => Some(s),
            _ => None,
        }
    }

    pub fn get(&self, slot: Slot) -> Option<&SlotValue> {
        self.slots.get(&slot)
    }

    pub fn slots(&self) -> impl Iterator<Item = (Slot, &SlotValue)> {
        self.slots.iter().map(|(k, v)| (*k, v))
    }

    /// Canonical text: `CATEGORY[slot=value, ...]` with slots in fixed
    /// order and nested structures serialized recursively.
    pub fn serialize(&self) -> String {
        let parts: Vec<String> = self
            .slots
            .iter()
            .map(|(slot, value)| match value {
                SlotValue::Word(w) => format!("{}={}", slot.name(), w),
                SlotValue::Structure(s) => format!("{}={}", slot.name(), s.serialize()),
            })
            .collect();
        format!("{}[{}]", self.category.name(), parts.join(", "))
    }

    /// Parses the canonical text form back into a structure.
    pub fn deserialize(text: &str) -> Result<SemStructure, SemError> {
        let mut p = Reader {
            bytes: text.as_bytes(),
            pos: 0,
        };
        let s = p.structure()?;
        p.skip_ws();
        if p.pos != p.bytes.len() {
            return Err(SemError::Deserialize(p.pos));
        }
        Ok(s)
    }

    /// The positional bracket rendering (the `--paper-style` output):
    /// values in template order, words single-quoted, nested structures
    /// double-quoted.
    pub fn paper_style(&self) -> String {
        positional_form(self)
    }

    /// JSON mirror: `{"category": ..., "attributes": {...}}`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut attrs = serde_json::Map::new();
        for (slot, value) in &self.slots {
            let v = match value {
                SlotValue::Word(w) => serde_json::Value::String(w.clone()),
                SlotValue::Structure(s) => s.to_json(),
            };
            attrs.insert(slot.name().to_string(), v);
        }
        serde_json::json!({
            "category": self.category.name(),
            "attributes": serde_json::Value::Object(attrs),
        })
    }

    /// Checks the per-category template invariants, recursively.
    pub fn validate(&self) -> Result<(), SemError> {
        let fail = |problem: String| {
            Err(SemError::Invalid {
                category: self.category.name().to_string(),
                problem,
            })
        };
        let word_in = |slot: Slot, allowed: &[&str]| -> Result<(), SemError> {
            match self.word(slot) {
                Some(w) if allowed.contains(&w) => Ok(()),
                Some(w) => fail(format!("{} has unexpected value {w:?}", slot.name())),
                None => Ok(()),
            }
        };
        let allowed_slots = |allowed: &[Slot]| -> Result<(), SemError> {
            for slot in self.slots.keys() {
                if !allowed.contains(slot) {
                    return fail(format!("slot {} does not belong here", slot.name()));
                }
            }
            Ok(())
        };
        match self.category {
            Category::Shape => {
                allowed_slots(&[Slot::Shape])?;
                match self.word(Slot::Shape) {
                    Some("shape1") | Some("shape2") => Ok(()),
                    _ => fail("needs shape=shape1|shape2".into()),
                }
            }
            Category::Attribute => {
                allowed_slots(&[Slot::Attribute, Slot::Select, Slot::Shape, Slot::Direction])?;
                if self.word(Slot::Attribute).is_none() {
                    return fail("needs an attribute word".into());
                }
                word_in(Slot::Attribute, &ATTRIBUTE_WORDS)?;
                word_in(Slot::Select, &ATTRIBUTE_WORDS)?;
                word_in(Slot::Direction, &DIRECTION_WORDS)?;
                if let Some(s) = self.structure(Slot::Shape) {
                    s.validate()?;
                }
                Ok(())
            }
            Category::Direction => {
                allowed_slots(&[
                    Slot::Direction,
                    Slot::Attribute,
                    Slot::Shape,
                    Slot::Comparative,
                ])?;
                if self.word(Slot::Direction).is_none() && self.word(Slot::Attribute).is_none() {
                    return fail("needs a direction and/or attribute word".into());
                }
                word_in(Slot::Direction, &DIRECTION_WORDS)?;
                word_in(Slot::Attribute, &ATTRIBUTE_WORDS)?;
                word_in(Slot::Comparative, &COMPARATIVE_WORDS)?;
                if let Some(s) = self.structure(Slot::Shape) {
                    s.validate()?;
                }
                Ok(())
            }
            Category::Action => {
                allowed_slots(&[Slot::Action, Slot::Tense, Slot::Trajector, Slot::Landmark])?;
                if self.word(Slot::Action).is_none() {
                    return fail("needs an action verb".into());
                }
                word_in(Slot::Action, &ACTION_WORDS)?;
                if self.word(Slot::Tense) != Some("present") {
                    return fail("tense must be present".into());
                }
                for slot in [Slot::Trajector, Slot::Landmark] {
                    if let Some(s) = self.structure(slot) {
                        s.validate()?;
                    }
                }
                Ok(())
            }
            Category::SpatialRelation => {
                allowed_slots(&[
                    Slot::Relation,
                    Slot::Region,
                    Slot::Action,
                    Slot::Trajector,
                    Slot::Landmark,
                ])?;
                let relation = match self.word(Slot::Relation) {
                    Some(w) => w,
                    None => return fail("needs a relation word".into()),
                };
                match region_for(relation) {
                    None => return fail(format!("unknown relation {relation:?}")),
                    Some(code) => {
                        if self.word(Slot::Region) != Some(code) {
                            return fail(format!("region must be {code:?} for {relation:?}"));
                        }
                    }
                }
                for slot in [Slot::Trajector, Slot::Landmark, Slot::Action] {
                    match self.structure(slot) {
                        Some(s) => s.validate()?,
                        None => return fail(format!("missing {}", slot.name())),
                    }
                }
                if self.structure(Slot::Action).unwrap().category() != Category::Action {
                    return fail("action slot must hold an ACTION".into());
                }
                Ok(())
            }
        }
    }
}

fn quote_word(w: &str) -> String {
    format!("'{w}'")
}

fn quote_struct(s: &SemStructure) -> String {
    format!("\"{}\"", positional_form(s))
}

fn positional_form(s: &SemStructure) -> String {
    let word = |slot: Slot| s.word(slot).unwrap_or("");
    let nested = |slot: Slot| s.structure(slot).map(quote_struct);
    match s.category() {
        Category::Shape => format!("SHAPE[{}]", quote_word(word(Slot::Shape))),
        Category::Action => {
            let verb = quote_word(word(Slot::Action));
            match (nested(Slot::Trajector), nested(Slot::Landmark)) {
                (Some(t), Some(l)) => format!("ACTION[{verb}, {t}, {l}]"),
                _ => format!("ACTION[{verb}, {}]", quote_word(word(Slot::Tense))),
            }
        }
        Category::Attribute => {
            // Plain attribute: single value. Full attribute: the parts in
            // template order (attribute, direction, shape).
            if s.word(Slot::Shape).is_none() && s.structure(Slot::Shape).is_none() {
                format!("ATTRIBUTE[{}]", quote_word(word(Slot::Attribute)))
            } else {
                let mut parts = vec![format!(
                    "\"ATTRIBUTE[{}]\"",
                    quote_word(word(Slot::Attribute))
                )];
                if s.word(Slot::Direction).is_some() {
                    parts.push(format!(
                        "\"DIRECTION[{}]\"",
                        quote_word(word(Slot::Direction))
                    ));
                }
                if let Some(sh) = nested(Slot::Shape) {
                    parts.push(sh);
                }
                format!("ATTRIBUTE[{}]", parts.join(", "))
            }
        }
        Category::Direction => {
            if s.word(Slot::Shape).is_none() && s.structure(Slot::Shape).is_none() {
                let w = s
                    .word(Slot::Direction)
                    .or_else(|| s.word(Slot::Attribute))
                    .unwrap_or("");
                format!("DIRECTION[{}]", quote_word(w))
            } else {
                let mut parts = vec![format!(
                    "\"ATTRIBUTE[{}]\"",
                    quote_word(word(Slot::Attribute))
                )];
                if let Some(c) = s.word(Slot::Comparative) {
                    parts.push(quote_word(c));
                }
                if s.word(Slot::Direction).is_some() {
                    parts.push(format!(
                        "\"DIRECTION[{}]\"",
                        quote_word(word(Slot::Direction))
                    ));
                }
                if let Some(sh) = nested(Slot::Shape) {
                    parts.push(sh);
                }
                format!("DIRECTION[{}]", parts.join(", "))
            }
        }
        Category::SpatialRelation => {
            let t = nested(Slot::Trajector).unwrap_or_default();
            let l = nested(Slot::Landmark).unwrap_or_default();
            let a = nested(Slot::Action).unwrap_or_default();
            format!(
                "SPATIAL_RELATION[{}, {t}, {}, {l}, {a}]",
                quote_word(word(Slot::Relation)),
                quote_word(word(Slot::Region)),
            )
        }
    }
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn ident(&mut self, pred: fn(u8) -> bool) -> &'a str {
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(|&b| pred(b)) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.bytes[start..self.pos]).unwrap_or("")
    }

    fn expect(&mut self, b: u8) -> Result<(), SemError> {
        if self.bytes.get(self.pos) == Some(&b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(SemError::Deserialize(self.pos))
        }
    }

    fn structure(&mut self) -> Result<SemStructure, SemError> {
        self.skip_ws();
        let name = self.ident(|b| b.is_ascii_uppercase() || b == b'_');
        let category = Category::from_name(name).ok_or(SemError::Deserialize(self.pos))?;
        self.expect(b'[')?;
        let mut s = SemStructure::new(category);
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&b']') {
            self.pos += 1;
            return Ok(s);
        }
        loop {
            self.skip_ws();
            let slot_name = self.ident(|b| b.is_ascii_lowercase());
            let slot = Slot::from_name(slot_name).ok_or(SemError::Deserialize(self.pos))?;
            self.expect(b'=')?;
            self.skip_ws();
            if self
                .bytes
                .get(self.pos)
                .is_some_and(|b| b.is_ascii_uppercase())
            {
                let nested = self.structure()?;
                s = s.with_structure(slot, nested);
            } else {
                let word = self.ident(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || b == b'-');
                if word.is_empty() {
                    return Err(SemError::Deserialize(self.pos));
                }
                s = s.with_word(slot, word);
            }
            self.skip_ws();
            match self.bytes.get(self.pos) {
                Some(b',') => {
                    self.pos += 1;
                }
                Some(b']') => {
                    self.pos += 1;
                    return Ok(s);
                }
                _ => return Err(SemError::Deserialize(self.pos)),
            }
        }
    }
}
