/// A parse tree. Internal nodes instantiate grammar rules; leaves are
/// lexical-rule applications whose words concatenate to the token sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseTree {
    Node {
        label: String,
        rule: usize,
        children: Vec<ParseTree>,
    },
    Leaf {
        label: String,
        rule: usize,
        word: String,
        index: usize,
        referenced: bool,
    },
}

impl ParseTree {
    pub fn label(&self) -> &str {
        match self {
            ParseTree::Node { label, .. } | ParseTree::Leaf { label, .. } => label,
        }
    }

    /// Index of the first token covered.
    pub fn start(&self) -> usize {
        match self {
            ParseTree::Node { children, .. } => children[0].start(),
            ParseTree::Leaf { index, .. } => *index,
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            ParseTree::Node { children, .. } => children.iter().map(ParseTree::leaf_count).sum(),
            ParseTree::Leaf { .. } => 1,
        }
    }

    /// The covered words, left to right.
    pub fn words(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_words(&mut out);
        out
    }

    fn collect_words<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            ParseTree::Node { children, .. } => {
                for c in children {
                    c.collect_words(out);
                }
            }
            ParseTree::Leaf { word, .. } => out.push(word),
        }
    }
}

const WIDTH: usize = 72;

// The printed trees decorate NP with fixed features; nothing else carries
// any. This is cosmetic, not a feature system.
fn features(label: &str) -> &'static str {
    if label == "NP" {
        "[-pro, -wh]"
    } else {
        "[]"
    }
}

fn inline(t: &ParseTree) -> String {
    match t {
        ParseTree::Leaf { label, word, .. } => format!("({}{} {})", label, features(label), word),
        ParseTree::Node {
            label, children, ..
        } => {
            let kids: Vec<String> = children.iter().map(inline).collect();
            format!("({}{} {})", label, features(label), kids.join(" "))
        }
    }
}

fn render_at(t: &ParseTree, indent: usize) -> String {
    let flat = inline(t);
    if indent + flat.len() <= WIDTH {
        return flat;
    }
    match t {
        ParseTree::Leaf { .. } => flat,
        ParseTree::Node {
            label, children, ..
        } => {
            let mut out = format!("({}{}", label, features(label));
            for child in children {
                out.push('\n');
                out.push_str(&" ".repeat(indent + 2));
                out.push_str(&render_at(child, indent + 2));
            }
            out.push(')');
            out
        }
    }
}

/// Parenthesized tree text: one node per line once a node no longer fits,
/// two-space indentation, closing parentheses gathered on the last line.
pub fn render_tree(t: &ParseTree) -> String {
    render_at(t, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::{parse, tokenize, Grammar};

    fn first_parse(sentence: &str) -> ParseTree {
        let g = Grammar::builtin();
        parse(&g, &tokenize(sentence).unwrap())
            .unwrap()
            .remove(0)
    }

    #[test]
    fn renders_the_simple_sentence_tree() {
        let expected = "(Start[]\n  (S[]\n    (NP[-pro, -wh] (SHAPE[] shape1))\n    (VP[]\n      \
                        (EXIST_VERB[] is)\n      (PP[] (SP[] at) (NP[-pro, -wh] (SHAPE[] \
                        shape2))))))";
        assert_eq!(render_tree(&first_parse("shape1 is at shape2")), expected);
    }

    #[test]
    fn single_shape_leaf_renders_inline() {
        let leaf = ParseTree::Leaf {
            label: "SHAPE".into(),
            rule: 0,
            word: "shape1".into(),
            index: 0,
            referenced: false,
        };
        assert_eq!(render_tree(&leaf), "(SHAPE[] shape1)");
    }

    #[test]
    fn reparsing_the_source_sentence_reproduces_the_tree() {
        for s in [
            "shape1 is at shape2",
            "add shape1 to shape2",
            "the bottom edge of shape2 is at the midpoint of the top edge of shape1",
        ] {
            let a = first_parse(s);
            let b = first_parse(s);
            assert_eq!(a, b);
            let _ = render_tree(&a);
        }
    }
}
