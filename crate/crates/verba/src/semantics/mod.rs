//! Spatial-semantic structures and the rule-to-rule composition that builds
//! them from parse trees.
//!
//! Meanings compose bottom-up: each grammar rule's semantic tag names a
//! composition procedure, mirroring the curried forms the preposition
//! carries (`at` awaits a landmark, then an action, then a trajector). The
//! sentence-level normalization step reassigns the collected values by
//! category — the ACTION meaning fills the `action` slot and entity
//! meanings fill `trajector` / `landmark` in surface order — which keeps
//! verb-initial sentences type-sound.
//!
//! A [`SemStructure`] is a typed attribute-value matrix over the categories
//! `SHAPE`, `ATTRIBUTE`, `DIRECTION`, `ACTION`, and `SPATIAL_RELATION`.
//! Spatial locators pin their `region` slot: `at` denotes `ttp-nttp`, `on`
//! denotes `ec-ttp`, `in` denotes `ec-ttp-nttp`.

mod compose;
mod generate;
mod realize;
mod structure;

pub use compose::interpret;
pub use generate::{entity_structures, from_above_inventory};
pub use realize::{convert_style, realize, Style};
pub use structure::{Category, SemStructure, Slot, SlotValue};

use thiserror::Error;

/// Region strings denoted by the three spatial locators. The doubled-t
/// spelling of `ttp` follows the source tables these strings come from.
pub const REGION_AT: &str = "ttp-nttp";
pub const REGION_ON: &str = "ec-ttp";
pub const REGION_IN: &str = "ec-ttp-nttp";

/// The region string a spatial locator always carries.
pub fn region_for(relation: &str) -> Option<&'static str> {
    match relation {
        "at" => Some(REGION_AT),
        "on" => Some(REGION_ON),
        "in" => Some(REGION_IN),
        _ => None,
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum SemError {
    #[error("composition produced an unsaturated value at the root")]
    Unsaturated,
    #[error("composition error: {0}")]
    Compose(String),
    #[error("{category} structure violates its template: {problem}")]
    Invalid { category: String, problem: String },
    #[error("cannot realize {category} structure: {problem}")]
    Unrealizable { category: String, problem: String },
    #[error("malformed structure text near byte {0}")]
    Deserialize(usize),
}
