//! Lexicon + suffix POS tagger, plus the pre-tagged pass-through backend.

use super::{Tag, TaggedCaption, Token};
use crate::error::{Error, Result};
use std::collections::{HashMap, HashSet};
use std::io::BufRead;
use std::path::Path;
use std::sync::OnceLock;

const LEXICON_TSV: &str = include_str!("data/lexicon.tsv");

/// Deterministic tagger: lexicon lookup, then suffix heuristics
/// (-ing -> VBG, -ed -> VBD, -s after a known verb lemma -> VBZ),
/// numbers -> CD, punctuation -> its PTB punctuation tag, fallback NN.
pub struct Tagger {
    lexicon: HashMap<String, Tag>,
    verb_lemmas: HashSet<String>,
}

impl Tagger {
    /// The built-in ~5k-word lexicon shipped with the crate.
    pub fn builtin() -> &'static Tagger {
        static BUILTIN: OnceLock<Tagger> = OnceLock::new();
        BUILTIN.get_or_init(|| Tagger::from_tsv_str(LEXICON_TSV).expect("embedded lexicon parses"))
    }

    /// Load a lexicon from an external `surface<TAB>tag` TSV file.
    pub fn from_lexicon_file(path: &Path) -> Result<Tagger> {
        Tagger::from_tsv_str(&std::fs::read_to_string(path)?)
    }

    fn from_tsv_str(tsv: &str) -> Result<Tagger> {
        let mut lexicon = HashMap::new();
        for (lineno, line) in tsv.lines().enumerate() {
            let line = line.trim_end();
            if line.is_empty() {
                continue;
            }
            let (surface, tag) = line.split_once('\t').ok_or(Error::Format {
                format: "lexicon",
                line: lineno + 1,
                msg: "expected surface<TAB>tag".into(),
            })?;
            lexicon.insert(surface.to_lowercase(), Tag::parse(tag.trim())?);
        }
        let verb_lemmas = lexicon
            .iter()
            .filter(|(_, t)| t.as_str() == "VB")
            .map(|(w, _)| w.clone())
            .collect();
        Ok(Tagger { lexicon, verb_lemmas })
    }

    pub fn is_known_verb_lemma(&self, lemma: &str) -> bool {
        self.verb_lemmas.contains(&lemma.to_lowercase())
    }

    pub fn verb_lemmas(&self) -> &HashSet<String> {
        &self.verb_lemmas
    }

    /// Tag one token. Never fails: unknown words fall back to NN.
    pub fn tag_word(&self, surface: &str) -> Tag {
        let lower = surface.to_lowercase();
        if let Some(tag) = self.lexicon.get(&lower) {
            return *tag;
        }
        if let Some(tag) = punct_tag(surface) {
            return tag;
        }
        if lower.chars().all(|c| c.is_ascii_digit() || c == '.' || c == ',')
            && lower.chars().any(|c| c.is_ascii_digit())
        {
            return Tag::parse("CD").unwrap();
        }
        if lower.ends_with("ing") && lower.len() > 4 {
            return Tag::parse("VBG").unwrap();
        }
        if lower.ends_with("ed") && lower.len() > 3 {
            return Tag::parse("VBD").unwrap();
        }
        if lower.ends_with('s') && !lower.ends_with("ss") && lower.len() > 2 {
            for stem in s_stems(&lower) {
                if self.verb_lemmas.contains(&stem) {
                    return Tag::parse("VBZ").unwrap();
                }
            }
        }
        Tag::parse("NN").unwrap()
    }

    /// Tag a token sequence into a [`TaggedCaption`].
    pub fn tag(
        &self,
        caption_id: impl Into<String>,
        video_id: impl Into<String>,
        tokens: &[String],
    ) -> TaggedCaption {
        let toks = tokens
            .iter()
            .enumerate()
            .map(|(i, s)| Token::new(s.clone(), self.tag_word(s), i))
            .collect();
        TaggedCaption::new(caption_id, video_id, toks)
    }
}

fn s_stems(lower: &str) -> Vec<String> {
    let mut v = Vec::new();
    if let Some(stem) = lower.strip_suffix("ies") {
        v.push(format!("{stem}y"));
    }
    if let Some(stem) = lower.strip_suffix("es") {
        v.push(stem.to_string());
    }
    if let Some(stem) = lower.strip_suffix('s') {
        v.push(stem.to_string());
    }
    v
}

fn punct_tag(surface: &str) -> Option<Tag> {
    let t = match surface {
        "." | "!" | "?" => ".",
        "," => ",",
        ";" | ":" | "--" | "-" => ":",
        "(" | "[" | "{" => "(",
        ")" | "]" | "}" => ")",
        "'" => "POS",
        "\"" => "''",
        "`" | "``" => "``",
        _ => return None,
    };
    Some(Tag::parse(t).unwrap())
}

/// Read pre-tagged captions: `caption_id<TAB>index<TAB>surface<TAB>tag`,
/// one token per line, blank line between captions. Tags pass through
/// verbatim; the video id is left empty (join it from a captions file).
pub fn read_pretagged(path: &Path) -> Result<Vec<TaggedCaption>> {
    let file = std::fs::File::open(path)?;
    parse_pretagged(std::io::BufReader::new(file).lines())
}

/// As [`read_pretagged`], from an in-memory string.
pub fn read_pretagged_str(data: &str) -> Result<Vec<TaggedCaption>> {
    parse_pretagged(data.lines().map(|l| Ok(l.to_string())))
}

fn parse_pretagged(lines: impl Iterator<Item = std::io::Result<String>>) -> Result<Vec<TaggedCaption>> {
    let mut captions = Vec::new();
    let mut current: Option<(String, Vec<Token>)> = None;
    let mut flush = |cur: &mut Option<(String, Vec<Token>)>, out: &mut Vec<TaggedCaption>| {
        if let Some((id, tokens)) = cur.take() {
            out.push(TaggedCaption::new(id, "", tokens));
        }
    };
    for (lineno, line) in lines.enumerate() {
        let line = line?;
        let line = line.trim_end();
        if line.is_empty() {
            flush(&mut current, &mut captions);
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 4 {
            return Err(Error::Format {
                format: "pretagged",
                line: lineno + 1,
                msg: format!("expected 4 tab-separated fields, got {}", fields.len()),
            });
        }
        let (cid, idx, surface, tag) = (fields[0], fields[1], fields[2], fields[3]);
        let idx: usize = idx.parse().map_err(|_| Error::Format {
            format: "pretagged",
            line: lineno + 1,
            msg: format!("bad token index '{idx}'"),
        })?;
        let token = Token::new(surface, Tag::parse(tag)?, idx);
        match &mut current {
            Some((id, tokens)) if id == cid => {
                if idx != tokens.len() {
                    return Err(Error::Format {
                        format: "pretagged",
                        line: lineno + 1,
                        msg: format!("token index {idx} not contiguous (expected {})", tokens.len()),
                    });
                }
                tokens.push(token);
            }
            Some(_) => {
                flush(&mut current, &mut captions);
                current = Some((cid.to_string(), vec![token]));
            }
            None => current = Some((cid.to_string(), vec![token])),
        }
    }
    flush(&mut current, &mut captions);
    Ok(captions)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tags_of(words: &[&str]) -> Vec<&'static str> {
        words.iter().map(|w| Tagger::builtin().tag_word(w).as_str()).collect()
    }

    #[test]
    fn common_words_tag_unambiguously() {
        assert_eq!(tags_of(&["a", "man", "is", "running"]), ["DT", "NN", "VBZ", "VBG"]);
    }

    #[test]
    fn unknown_word_falls_back_to_nn() {
        assert_eq!(tags_of(&["xqzt"]), ["NN"]);
    }

    #[test]
    fn suffix_rules_cover_unknown_inflections() {
        // not in the lexicon, caught by suffix heuristics
        assert_eq!(Tagger::builtin().tag_word("zorbing").as_str(), "VBG");
        assert_eq!(Tagger::builtin().tag_word("zorbed").as_str(), "VBD");
        // -s after a known verb lemma
        assert_eq!(Tagger::builtin().tag_word("jumps").as_str(), "VBZ");
    }

    #[test]
    fn pretagged_rows_pass_through_verbatim() {
        let data = "c1\t0\tthey\tPRP\nc1\t1\tmet\tVBD\n\nc2\t0\thello\tUH\n";
        let caps = read_pretagged_str(data).unwrap();
        assert_eq!(caps.len(), 2);
        assert_eq!(caps[0].tokens[1].surface, "met");
        assert_eq!(caps[0].tokens[1].tag.as_str(), "VBD");
        assert_eq!(caps[1].caption_id, "c2");
    }

    #[test]
    fn pretagged_rejects_gapped_indices() {
        let data = "c1\t0\ta\tDT\nc1\t2\tman\tNN\n";
        assert!(read_pretagged_str(data).is_err());
    }
}
