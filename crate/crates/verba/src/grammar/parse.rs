use std::collections::HashMap;
use std::rc::Rc;

use super::{Grammar, ParseError, ParseTree, Symbol, Token};

/// All complete parses of the token sequence, in priority order: rules are
/// tried in declaration order and, on ties, earlier constituents prefer
/// longer spans (leftmost-longest). With no complete parse the error carries
/// the furthest token position any derivation reached.
pub fn parse(grammar: &Grammar, tokens: &[Token]) -> Result<Vec<ParseTree>, ParseError> {
    if tokens.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut chart = Chart {
        grammar,
        tokens,
        memo: HashMap::new(),
        furthest: 0,
    };
    let mut parses: Vec<ParseTree> = chart
        .derive(grammar.start(), 0)
        .iter()
        .filter(|(end, _)| *end == tokens.len())
        .map(|(_, t)| t.clone())
        .collect();
    if parses.is_empty() {
        return Err(ParseError::Syntax {
            position: chart.furthest + 1,
        });
    }
    parses.sort_by_cached_key(priority_key);
    Ok(parses)
}

// Parses of one nonterminal from one start position, with end positions.
type Derivations = Rc<Vec<(usize, ParseTree)>>;

struct Chart<'a> {
    grammar: &'a Grammar,
    tokens: &'a [Token],
    memo: HashMap<(String, usize), Derivations>,
    furthest: usize,
}

impl<'a> Chart<'a> {
    /// Every parse of `nt` starting at token `at`, with its end position.
    fn derive(&mut self, nt: &str, at: usize) -> Derivations {
        let key = (nt.to_string(), at);
        if let Some(hit) = self.memo.get(&key) {
            return Rc::clone(hit);
        }
        let mut results: Vec<(usize, ParseTree)> = Vec::new();
        for &ri in self.grammar.rules_for(nt) {
            let rule = &self.grammar.rules()[ri];
            match rule.rhs.as_slice() {
                [Symbol::Terminal(word)] => {
                    if let Some(tok) = self.tokens.get(at) {
                        if tok.surface == *word {
                            self.furthest = self.furthest.max(at + 1);
                            results.push((
                                at + 1,
                                ParseTree::Leaf {
                                    label: nt.to_string(),
                                    rule: ri,
                                    word: word.clone(),
                                    index: at,
                                    referenced: tok.referenced,
                                },
                            ));
                        }
                    }
                }
                rhs => {
                    // Fold the RHS over all partial matches.
                    let mut states: Vec<(usize, Vec<ParseTree>)> = vec![(at, Vec::new())];
                    for sym in rhs {
                        let Symbol::Nonterminal(child) = sym else {
                            unreachable!("mixed rules are rejected at load");
                        };
                        let mut next = Vec::new();
                        for (pos, children) in &states {
                            for (end, tree) in self.derive(child, *pos).iter() {
                                self.furthest = self.furthest.max(*end);
                                let mut grown = children.clone();
                                grown.push(tree.clone());
                                next.push((*end, grown));
                            }
                        }
                        states = next;
                        if states.is_empty() {
                            break;
                        }
                    }
                    for (end, children) in states {
                        results.push((
                            end,
                            ParseTree::Node {
                                label: nt.to_string(),
                                rule: ri,
                                children,
                            },
                        ));
                    }
                }
            }
        }
        let rc = Rc::new(results);
        self.memo.insert(key, Rc::clone(&rc));
        rc
    }
}

// Preorder (rule-index, inverted-span) encoding; lexicographic comparison
// realizes "earlier rules first, leftmost-longest on ties".
fn priority_key(tree: &ParseTree) -> Vec<(u32, u32)> {
    fn walk(t: &ParseTree, out: &mut Vec<(u32, u32)>) {
        match t {
            ParseTree::Node { rule, children, .. } => {
                out.push((*rule as u32, u32::MAX - t.leaf_count() as u32));
                for c in children {
                    walk(c, out);
                }
            }
            ParseTree::Leaf { rule, .. } => out.push((*rule as u32, u32::MAX - 1)),
        }
    }
    let mut out = Vec::new();
    walk(tree, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::tokenize;

    fn parses(sentence: &str) -> Vec<ParseTree> {
        let g = Grammar::builtin();
        parse(&g, &tokenize(sentence).unwrap()).unwrap()
    }

    #[test]
    fn simple_declarative_sentence() {
        let trees = parses("shape1 is at shape2");
        assert_eq!(trees.len(), 1);
        let words = trees[0].words();
        assert_eq!(words, ["shape1", "is", "at", "shape2"]);
    }

    #[test]
    fn constructive_add_sentence() {
        let trees = parses("add shape1 to shape2");
        assert_eq!(trees.len(), 1);
        // The ADD pattern, not VACT: NPP1 only accepts to/from/with.
        let ParseTree::Node { children, .. } = &trees[0] else {
            panic!("expected Start node")
        };
        let ParseTree::Node { children, .. } = &children[0] else {
            panic!("expected S node")
        };
        assert_eq!(children[0].label(), "ADD");
    }

    #[test]
    fn vact_route_for_preposition_constructives() {
        let trees = parses("draw shape1 at shape2");
        assert_eq!(trees.len(), 1);
        let ParseTree::Node { children, .. } = &trees[0] else {
            panic!("expected Start node")
        };
        let ParseTree::Node { children, .. } = &children[0] else {
            panic!("expected S node")
        };
        assert_eq!(children[0].label(), "VACT");
    }

    #[test]
    fn complex_property_sentence_parses_uniquely() {
        let trees =
            parses("the upper left corner of shape2 is at the midpoint of the right edge of shape1");
        assert_eq!(trees.len(), 1);
    }

    #[test]
    fn syntax_error_reports_furthest_progress() {
        let g = Grammar::builtin();
        let err = parse(&g, &tokenize("shape1 at").unwrap()).unwrap_err();
        assert_eq!(err, ParseError::Syntax { position: 2 });
        let err = parse(&g, &tokenize("add shape1").unwrap()).unwrap_err();
        assert_eq!(err, ParseError::Syntax { position: 3 });
    }

    #[test]
    fn empty_input_is_rejected() {
        let g = Grammar::builtin();
        assert_eq!(parse(&g, &[]), Err(ParseError::Empty));
    }

    #[test]
    fn parsing_is_deterministic() {
        let a = parses("the bottom edge of shape2 is at the midpoint of the top edge of shape1");
        let b = parses("the bottom edge of shape2 is at the midpoint of the top edge of shape1");
        assert_eq!(a, b);
    }
}
