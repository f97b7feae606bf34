/// The 24 lexical terms of the description language, in their citation
/// order. Shape references (`<shape1>`, `<shape2>`) reuse the `shape1` /
/// `shape2` entries with a reference flag on the token.
pub const LEXICON: [&str; 24] = [
    "right", "left", "top", "bottom", "upper", "lower", "edge", "corner", "midpoint", "shape1",
    "shape2", "is", "draw", "add", "subtract", "replace", "at", "on", "in", "to", "from", "with",
    "of", "the",
];

/// The lexicon in a stable order.
pub fn lexicon() -> &'static [&'static str] {
    &LEXICON
}
