use super::{lexicon, ParseError};

/// One sentence token. `position` is 1-based; `referenced` records whether
/// the word came in angle-bracket shape-reference form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub position: usize,
    pub referenced: bool,
}

/// Lowercases, strips one sentence-final period, and maps both `shape1` and
/// `<shape1>` onto shape tokens. Any word outside the lexicon is a lexical
/// error carrying the word and its position.
pub fn tokenize(sentence: &str) -> Result<Vec<Token>, ParseError> {
    let lowered = sentence.trim().to_lowercase();
    let body = lowered.strip_suffix('.').unwrap_or(&lowered);

    let mut tokens = Vec::new();
    for (i, raw) in body.split_whitespace().enumerate() {
        let position = i + 1;
        let (word, referenced) = match raw.strip_prefix('<').and_then(|w| w.strip_suffix('>')) {
            Some(inner) => (inner, true),
            None => (raw, false),
        };
        if referenced && word != "shape1" && word != "shape2" {
            return Err(ParseError::Lexical {
                word: raw.to_string(),
                position,
            });
        }
        if !lexicon().contains(&word) {
            return Err(ParseError::Lexical {
                word: word.to_string(),
                position,
            });
        }
        tokens.push(Token {
            surface: word.to_string(),
            position,
            referenced,
        });
    }
    Ok(tokens)
}

/// Inverse of [`tokenize`] on token lists: referenced tokens render in
/// angle-bracket form.
pub fn detokenize(tokens: &[Token]) -> String {
    tokens
        .iter()
        .map(|t| {
            if t.referenced {
                format!("<{}>", t.surface)
            } else {
                t.surface.clone()
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}
