//! Whitespace + punctuation + contraction tokenizer.

use crate::error::{Error, Result};

const CLITICS: &[&str] = &["'s", "'re", "'ve", "'ll", "'d", "'m"];

fn is_punct_char(c: char) -> bool {
    matches!(c, '.' | ',' | '!' | '?' | ';' | ':' | '"' | '(' | ')' | '[' | ']' | '{' | '}' | '\'')
}

/// Split a caption into surface tokens.
///
/// Contractions split ("isn't" -> "is", "n't"; "man's" -> "man", "'s"),
/// punctuation becomes separate tokens, case is preserved.
pub fn tokenize(text: &str) -> Result<Vec<String>> {
    if text.trim().is_empty() {
        return Err(Error::EmptyCaption);
    }
    let mut out = Vec::new();
    for word in text.split_whitespace() {
        split_word(word, &mut out);
    }
    Ok(out)
}

fn split_word(word: &str, out: &mut Vec<String>) {
    // peel leading punctuation
    let mut rest = word;
    while let Some(c) = rest.chars().next() {
        // a leading apostrophe glued to a clitic stays with it ("'s")
        if is_punct_char(c) && !(c == '\'' && is_clitic(rest)) {
            out.push(c.to_string());
            rest = &rest[c.len_utf8()..];
        } else {
            break;
        }
    }
    // peel trailing punctuation, remembering it for after the core
    let mut tail = Vec::new();
    while let Some(c) = rest.chars().last() {
        if is_punct_char(c) && !ends_with_contraction(rest) {
            tail.push(c.to_string());
            rest = &rest[..rest.len() - c.len_utf8()];
        } else {
            break;
        }
    }
    if !rest.is_empty() {
        split_core(rest, out);
    }
    out.extend(tail.into_iter().rev());
}

fn is_clitic(s: &str) -> bool {
    let lower = s.to_lowercase();
    lower == "n't" || CLITICS.contains(&lower.as_str())
}

fn ends_with_contraction(s: &str) -> bool {
    let lower = s.to_lowercase();
    lower.ends_with("n't") || CLITICS.iter().any(|c| lower.ends_with(c))
}

fn split_core(core: &str, out: &mut Vec<String>) {
    let lower = core.to_lowercase();
    if lower == "n't" || CLITICS.contains(&lower.as_str()) {
        out.push(core.to_string());
        return;
    }
    if lower.ends_with("n't") && core.len() > 3 {
        let cut = core.len() - 3;
        out.push(core[..cut].to_string());
        out.push(core[cut..].to_string());
        return;
    }
    for clitic in CLITICS {
        if lower.ends_with(clitic) && core.len() > clitic.len() {
            let cut = core.len() - clitic.len();
            out.push(core[..cut].to_string());
            out.push(core[cut..].to_string());
            return;
        }
    }
    out.push(core.to_string());
}

/// Join tokens back into surface text. Clitics, "n't", and closing
/// punctuation attach to the preceding token, so detokenize-then-tokenize
/// is the identity on tokenizer output.
pub fn detokenize(tokens: &[&str]) -> String {
    let mut text = String::new();
    for (i, tok) in tokens.iter().enumerate() {
        let attach = tok.starts_with('\'')
            || tok.to_lowercase() == "n't"
            || matches!(*tok, "." | "," | "!" | "?" | ";" | ":" | ")" | "]" | "}");
        let after_open = i > 0 && matches!(tokens[i - 1], "(" | "[" | "{");
        if i > 0 && !attach && !after_open {
            text.push(' ');
        }
        text.push_str(tok);
    }
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contraction_split() {
        assert_eq!(tokenize("a man isn't running").unwrap(), ["a", "man", "is", "n't", "running"]);
    }

    #[test]
    fn whitespace_split() {
        assert_eq!(
            tokenize("kids sitting on the floor").unwrap(),
            ["kids", "sitting", "on", "the", "floor"]
        );
    }

    #[test]
    fn empty_caption_is_an_error() {
        assert!(matches!(tokenize(""), Err(Error::EmptyCaption)));
        assert!(matches!(tokenize("   \t "), Err(Error::EmptyCaption)));
    }

    #[test]
    fn punctuation_and_possessives() {
        assert_eq!(tokenize("each others' hair.").unwrap(), ["each", "others", "'", "hair", "."]);
        assert_eq!(tokenize("the man's dog").unwrap(), ["the", "man", "'s", "dog"]);
    }

    #[test]
    fn detokenize_restores_contractions() {
        assert_eq!(detokenize(&["a", "man", "is", "n't", "running"]), "a man isn't running");
        assert_eq!(detokenize(&["each", "others", "'", "hair", "."]), "each others' hair.");
    }

    #[test]
    fn detokenize_then_tokenize_is_identity() {
        for text in [
            "a man isn't running",
            "kids sitting on the floor .",
            "the man 's dog , barking !",
        ] {
            let toks = tokenize(text).unwrap();
            let joined = detokenize(&toks.iter().map(|s| s.as_str()).collect::<Vec<_>>());
            assert_eq!(tokenize(&joined).unwrap(), toks);
        }
    }
}
