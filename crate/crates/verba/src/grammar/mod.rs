//! Tokenizer, context-free grammar, and all-parses chart parser for the
//! description language.
//!
//! The built-in grammar covers a 24-word lexicon plus the shape references
//! `<shape1>` / `<shape2>`. The lexicon is heavily category-ambiguous
//! (`add` is both an action verb and the head of the `add ... to ...`
//! pattern; `top` and `bottom` are directions and comparatives), so parsing
//! is a dynamic-programming chart that returns every complete parse in a
//! fixed priority order: the argument-bearing constructive patterns first,
//! then verb-initial sentences, then declarative ones.

mod lexicon;
mod parse;
mod rules;
mod token;
mod tree;

pub use lexicon::{lexicon, LEXICON};
pub use parse::parse;
pub use rules::{Grammar, GrammarRule, SemTag, Symbol, BUILTIN_GRAMMAR};
pub use token::{detokenize, tokenize, Token};
pub use tree::{render_tree, ParseTree};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ParseError {
    #[error("unknown word {word:?} at position {position}")]
    Lexical { word: String, position: usize },
    #[error("syntax error: no complete parse; parsing stalled at token position {position}")]
    Syntax { position: usize },
    #[error("cannot parse an empty sentence")]
    Empty,
}

#[derive(Debug, Error, PartialEq)]
pub enum GrammarError {
    #[error("grammar line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("unknown semantic tag {tag:?} on grammar line {line}")]
    UnknownTag { tag: String, line: usize },
    #[error("grammar line {line}: a rule must be all nonterminals or a single quoted word")]
    MixedRule { line: usize },
    #[error("nonterminal {0:?} is used but has no rules")]
    MissingRules(String),
    #[error("grammar is left-recursive through {0:?}")]
    LeftRecursive(String),
    #[error("grammar has no rules")]
    EmptyGrammar,
}
