use std::collections::HashMap;

use super::GrammarError;

/// The built-in grammar, in the declarative rule-file format: one rule per
/// line, `LHS -> RHS... @semantic-tag`, quoted single words for lexical
/// entries. Rule order is priority order for ambiguous parses. The words of
/// all lexical entries must come from the 24-word lexicon.
pub const BUILTIN_GRAMMAR: &str = r#"
# sentences: constructive patterns first, then verb-initial, then declarative
Start -> S @process_sentence
S -> ADD NP NPP1 @constructive
S -> DRAW NP NPP1 @constructive
S -> SUBTRACT NP NPP1 @constructive
S -> REPLACE NP NPP1 @constructive
S -> VACT NPP @apply_vact_to_npp
S -> NP VP @apply_np_to_vp

# noun phrases
NP -> SHAPE @identity
NP -> DET NP @second
NP -> PROP OF SHAPE @apply_shape_to_prop
NPP -> NP PP @apply_np_to_pp
NPP1 -> TO NP @second
NPP1 -> FROM NP @second
NPP1 -> WITH NP @second

# shape properties
PROP -> DIR ATTR_ @apply_attr_to_dir
PROP -> COMP DIR_ ATTR_ @apply_comp
PROP -> ATTR OF DET DIR_ ATTR_ @apply_attr_sel

# verb and preposition phrases
VP -> EXIST_VERB PP @apply_verb_to_pp
VACT -> ACTION_VERB @identity
PP -> SP NP @apply_prep

# lexicon
DIR -> 'right' @dir
DIR -> 'left' @dir
DIR -> 'top' @dir
DIR -> 'bottom' @dir
DIR_ -> 'right' @dir_plain
DIR_ -> 'left' @dir_plain
DIR_ -> 'top' @dir_plain
DIR_ -> 'bottom' @dir_plain
ATTR_ -> 'edge' @attr_plain
ATTR_ -> 'corner' @attr_plain
ATTR_ -> 'midpoint' @attr_plain
ATTR -> 'edge' @attr_select
ATTR -> 'corner' @attr_select
ATTR -> 'midpoint' @attr_select
COMP -> 'top' @comp
COMP -> 'bottom' @comp
COMP -> 'upper' @comp
COMP -> 'lower' @comp
EXIST_VERB -> 'is' @exist_verb
ACTION_VERB -> 'draw' @action_verb
ACTION_VERB -> 'add' @action_verb
ACTION_VERB -> 'subtract' @action_verb
ACTION_VERB -> 'replace' @action_verb
ADD -> 'add' @action_binary
DRAW -> 'draw' @action_binary
SUBTRACT -> 'subtract' @action_binary
REPLACE -> 'replace' @action_binary
SP -> 'at' @sp_at
SP -> 'on' @sp_on
SP -> 'in' @sp_in
SHAPE -> 'shape1' @shape
SHAPE -> 'shape2' @shape
TO -> 'to' @vacuous
FROM -> 'from' @vacuous
WITH -> 'with' @vacuous
OF -> 'of' @vacuous
DET -> 'the' @vacuous
"#;

/// Identifier linking a rule to its composition procedure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemTag {
    ProcessSentence,
    Constructive,
    ApplyVactToNpp,
    ApplyNpToVp,
    Identity,
    Second,
    ApplyShapeToProp,
    ApplyNpToPp,
    ApplyAttrToDir,
    ApplyComp,
    ApplyAttrSel,
    ApplyVerbToPp,
    ApplyPrep,
    Dir,
    DirPlain,
    AttrPlain,
    AttrSelect,
    Comp,
    ExistVerb,
    ActionVerb,
    ActionBinary,
    SpAt,
    SpOn,
    SpIn,
    Shape,
    Vacuous,
}

impl SemTag {
    fn from_name(name: &str) -> Option<SemTag> {
        Some(match name {
            "process_sentence" => SemTag::ProcessSentence,
            "constructive" => SemTag::Constructive,
            "apply_vact_to_npp" => SemTag::ApplyVactToNpp,
            "apply_np_to_vp" => SemTag::ApplyNpToVp,
            "identity" => SemTag::Identity,
            "second" => SemTag::Second,
            "apply_shape_to_prop" => SemTag::ApplyShapeToProp,
            "apply_np_to_pp" => SemTag::ApplyNpToPp,
            "apply_attr_to_dir" => SemTag::ApplyAttrToDir,
            "apply_comp" => SemTag::ApplyComp,
            "apply_attr_sel" => SemTag::ApplyAttrSel,
            "apply_verb_to_pp" => SemTag::ApplyVerbToPp,
            "apply_prep" => SemTag::ApplyPrep,
            "dir" => SemTag::Dir,
            "dir_plain" => SemTag::DirPlain,
            "attr_plain" => SemTag::AttrPlain,
            "attr_select" => SemTag::AttrSelect,
            "comp" => SemTag::Comp,
            "exist_verb" => SemTag::ExistVerb,
            "action_verb" => SemTag::ActionVerb,
            "action_binary" => SemTag::ActionBinary,
            "sp_at" => SemTag::SpAt,
            "sp_on" => SemTag::SpOn,
            "sp_in" => SemTag::SpIn,
            "shape" => SemTag::Shape,
            "vacuous" => SemTag::Vacuous,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Symbol {
    Nonterminal(String),
    Terminal(String),
}

#[derive(Debug, Clone)]
pub struct GrammarRule {
    pub lhs: String,
    pub rhs: Vec<Symbol>,
    pub tag: SemTag,
}

impl GrammarRule {
    /// A lexical rule rewrites to exactly one quoted word.
    pub fn is_lexical(&self) -> bool {
        matches!(self.rhs.as_slice(), [Symbol::Terminal(_)])
    }
}

/// An immutable grammar: rules in priority order plus lookup tables.
#[derive(Debug, Clone)]
pub struct Grammar {
    rules: Vec<GrammarRule>,
    start: String,
    by_lhs: HashMap<String, Vec<usize>>,
}

impl Grammar {
    /// The built-in grammar. Panics only if the embedded table is broken,
    /// which the test suite pins down.
    pub fn builtin() -> Grammar {
        Grammar::from_text(BUILTIN_GRAMMAR).expect("built-in grammar is well-formed")
    }

    /// Reads a grammar from a declarative rule file. The words of lexical
    /// entries must come from the built-in lexicon, which the tokenizer
    /// enforces.
    pub fn from_file(path: impl AsRef<std::path::Path>) -> Result<Grammar, crate::Error> {
        let text = std::fs::read_to_string(path)?;
        Ok(Grammar::from_text(&text)?)
    }

    /// Loads a grammar from the declarative rule-file format. The first
    /// rule's left-hand side is the start symbol.
    pub fn from_text(text: &str) -> Result<Grammar, GrammarError> {
        let mut rules: Vec<GrammarRule> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (lhs, rest) = content.split_once("->").ok_or_else(|| {
                GrammarError::Malformed {
                    line,
                    msg: "missing '->'".into(),
                }
            })?;
            let lhs = lhs.trim();
            if lhs.is_empty() {
                return Err(GrammarError::Malformed {
                    line,
                    msg: "empty left-hand side".into(),
                });
            }
            let (body, tag_name) = rest.rsplit_once('@').ok_or_else(|| {
                GrammarError::Malformed {
                    line,
                    msg: "missing '@semantic-tag'".into(),
                }
            })?;
            let tag = SemTag::from_name(tag_name.trim()).ok_or_else(|| GrammarError::UnknownTag {
                tag: tag_name.trim().to_string(),
                line,
            })?;
            let mut rhs = Vec::new();
            for sym in body.split_whitespace() {
                match sym.strip_prefix('\'').and_then(|s| s.strip_suffix('\'')) {
                    Some(word) if !word.is_empty() => rhs.push(Symbol::Terminal(word.to_string())),
                    Some(_) => {
                        return Err(GrammarError::Malformed {
                            line,
                            msg: "empty quoted word".into(),
                        })
                    }
                    None => rhs.push(Symbol::Nonterminal(sym.to_string())),
                }
            }
            if rhs.is_empty() {
                return Err(GrammarError::Malformed {
                    line,
                    msg: "empty right-hand side".into(),
                });
            }
            let terminal_count = rhs
                .iter()
                .filter(|s| matches!(s, Symbol::Terminal(_)))
                .count();
            if terminal_count > 0 && !(terminal_count == 1 && rhs.len() == 1) {
                return Err(GrammarError::MixedRule { line });
            }
            rules.push(GrammarRule {
                lhs: lhs.to_string(),
                rhs,
                tag,
            });
        }
        if rules.is_empty() {
            return Err(GrammarError::EmptyGrammar);
        }

        let start = rules[0].lhs.clone();
        let mut by_lhs: HashMap<String, Vec<usize>> = HashMap::new();
        for (i, rule) in rules.iter().enumerate() {
            by_lhs.entry(rule.lhs.clone()).or_default().push(i);
        }
        for rule in &rules {
            for sym in &rule.rhs {
                if let Symbol::Nonterminal(nt) = sym {
                    if !by_lhs.contains_key(nt) {
                        return Err(GrammarError::MissingRules(nt.clone()));
                    }
                }
            }
        }

        let g = Grammar {
            rules,
            start,
            by_lhs,
        };
        g.check_left_recursion()?;
        Ok(g)
    }

    // With no epsilon rules, the parser terminates iff no nonterminal can
    // reach itself through leftmost expansion.
    fn check_left_recursion(&self) -> Result<(), GrammarError> {
        for nt in self.by_lhs.keys() {
            let mut seen = vec![nt.clone()];
            let mut frontier = vec![nt.clone()];
            while let Some(current) = frontier.pop() {
                for &ri in &self.by_lhs[&current] {
                    if let Some(Symbol::Nonterminal(first)) = self.rules[ri].rhs.first() {
                        if first == nt {
                            return Err(GrammarError::LeftRecursive(nt.clone()));
                        }
                        if !seen.contains(first) {
                            seen.push(first.clone());
                            frontier.push(first.clone());
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn rules(&self) -> &[GrammarRule] {
        &self.rules
    }

    pub fn start(&self) -> &str {
        &self.start
    }

    pub fn rules_for(&self, nt: &str) -> &[usize] {
        self.by_lhs.get(nt).map(Vec::as_slice).unwrap_or(&[])
    }

    /// All words accepted by lexical rules.
    pub fn vocabulary(&self) -> Vec<&str> {
        let mut words: Vec<&str> = self
            .rules
            .iter()
            .filter_map(|r| match r.rhs.as_slice() {
                [Symbol::Terminal(w)] => Some(w.as_str()),
                _ => None,
            })
            .collect();
        words.sort_unstable();
        words.dedup();
        words
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_grammar_loads() {
        let g = Grammar::builtin();
        assert_eq!(g.start(), "Start");
        assert!(g.rules().len() > 20);
    }

    #[test]
    fn builtin_vocabulary_is_exactly_the_lexicon() {
        let g = Grammar::builtin();
        let mut expected: Vec<&str> = super::super::lexicon().to_vec();
        expected.sort_unstable();
        assert_eq!(g.vocabulary(), expected);
    }

    #[test]
    fn constructive_rules_outrank_vact_which_outranks_np_vp() {
        let g = Grammar::builtin();
        let pos = |needle: &[&str]| {
            g.rules()
                .iter()
                .position(|r| {
                    r.lhs == "S"
                        && r.rhs.len() == needle.len()
                        && r.rhs
                            .iter()
                            .zip(needle)
                            .all(|(s, n)| matches!(s, Symbol::Nonterminal(x) if x == n))
                })
                .unwrap()
        };
        let add = pos(&["ADD", "NP", "NPP1"]);
        let vact = pos(&["VACT", "NPP"]);
        let np_vp = pos(&["NP", "VP"]);
        assert!(add < vact && vact < np_vp);
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(matches!(
            Grammar::from_text("S NP VP @identity"),
            Err(GrammarError::Malformed { .. })
        ));
        assert!(matches!(
            Grammar::from_text("S -> NP VP @nope"),
            Err(GrammarError::UnknownTag { .. })
        ));
        assert!(matches!(
            Grammar::from_text("S -> NP 'is' @identity\nNP -> 'shape1' @shape"),
            Err(GrammarError::MixedRule { .. })
        ));
        assert!(matches!(
            Grammar::from_text("S -> NP @identity"),
            Err(GrammarError::MissingRules(_))
        ));
    }

    #[test]
    fn rejects_left_recursion() {
        let text = "S -> S X @identity\nS -> 'is' @exist_verb\nX -> 'at' @sp_at";
        assert!(matches!(
            Grammar::from_text(text),
            Err(GrammarError::LeftRecursive(_))
        ));
    }
}
