//! Computing with shapes and with language about shapes.
//!
//! `verba` pairs a line-segment shape algebra with a small natural-language
//! pipeline. Shape rules `a -> b` rewrite arrangements of segments; verbal
//! rules describe each rewrite in a 24-word English fragment; a chart parser
//! and a compositional interpreter turn those sentences into spatial-semantic
//! structures; and a region calculus checks the asserted spatial relations
//! (`at`, `on`, `in`) against the actual geometry.
//!
//! The pieces, bottom up:
//!
//! * [`geom`] — shapes as maximal line segments with labelled points:
//!   sum / product / difference, the subshape test, and similarity-transform
//!   search (`find_matches`).
//! * [`region`] — planar regions extracted from closed shapes, classified by
//!   an RCC8 relation, and preposition checks against the region calculus.
//! * [`grammar`] — tokenizer and all-parses chart parser over the built-in
//!   context-free grammar and lexicon.
//! * [`semantics`] — rule-to-rule composition producing `SHAPE` / `ATTRIBUTE`
//!   / `DIRECTION` / `ACTION` / `SPATIAL_RELATION` structures, plus
//!   realization back to sentences and description-style conversion.
//! * [`engine`] — paired shape and verbal rules, derivations with bound
//!   `<shape1>` / `<shape2>` references, and geometric verification of the
//!   emitted descriptions.
//! * [`render`] — SVG rendering of shapes and HTML derivation reports.
//!
//! Each major capability has a runnable example under `examples/`; the
//! `verba` binary exposes the same operations as subcommands.

pub mod engine;
pub mod geom;
pub mod grammar;
pub mod region;
pub mod render;
pub mod semantics;

mod error;

pub use error::Error;
