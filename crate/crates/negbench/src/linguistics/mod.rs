//! Tokenization, POS tagging, cascaded chunk parsing, subject/VP extraction,
//! verb inflection, and negation-cue detection.
//!
//! Everything here is rule-based and deterministic: a lexicon + suffix tagger
//! (or externally pre-tagged input), a tag-pattern chunk cascade, and an
//! inflector backed by an irregular-verb table. All functions are pure; the
//! lexicons are loaded once and shared read-only.

mod chunk;
mod cues;
mod inflect;
mod tagger;
mod tokenize;

pub use chunk::{extract_subject_vp_pairs, ChunkGrammar, ChunkTree, Node, SubjectVPPair};
pub use cues::{detect_negation_cues, CueLexicon};
pub use inflect::{Inflector, Person, Target, Tense};
pub use tagger::{read_pretagged, read_pretagged_str, Tagger};
pub use tokenize::{detokenize, tokenize};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The closed Penn-Treebank-style tag set accepted by the toolkit.
pub const TAG_SET: &[&str] = &[
    "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD", "NN", "NNS", "NNP",
    "NNPS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR", "RBS", "RP", "SYM", "TO", "UH", "VB",
    "VBD", "VBG", "VBN", "VBP", "VBZ", "WDT", "WP", "WP$", "WRB",
    // punctuation tags
    "#", "$", "''", "(", ")", ",", ".", ":", "``",
];

/// A validated POS tag. Cheap to copy; the string is interned in [`TAG_SET`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Tag(&'static str);

impl Tag {
    pub fn parse(s: &str) -> Result<Tag> {
        TAG_SET
            .iter()
            .find(|t| **t == s)
            .map(|t| Tag(t))
            .ok_or_else(|| Error::UnknownTag(s.to_string()))
    }

    pub fn as_str(&self) -> &'static str {
        self.0
    }

    /// Any VB* tag.
    pub fn is_verb(&self) -> bool {
        self.0.starts_with("VB")
    }

    /// VBZ / VBD / VBP: a finite lexical verb form.
    pub fn is_finite_verb(&self) -> bool {
        matches!(self.0, "VBZ" | "VBD" | "VBP")
    }

    pub fn is_noun(&self) -> bool {
        self.0.starts_with("NN")
    }

    pub fn is_punct(&self) -> bool {
        !self.0.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

impl serde::Serialize for Tag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.0)
    }
}

impl<'de> serde::Deserialize<'de> for Tag {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Tag, D::Error> {
        let s = String::deserialize(d)?;
        Tag::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// A single token of a caption: surface form, tag, and 0-based position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    pub tag: Tag,
    pub index: usize,
}

/// Auxiliary-verb surfaces. The PTB tag set has no AUX tag; a token is
/// treated as AUX when its surface is in this set and its tag is verbal
/// (VB* or MD).
pub const AUX_SURFACES: &[&str] = &[
    "is", "are", "was", "were", "am", "be", "been", "being", "do", "does", "did", "has", "have",
    "had", "can", "could", "will", "would", "shall", "should", "may", "might", "must",
];

impl Token {
    pub fn new(surface: impl Into<String>, tag: Tag, index: usize) -> Token {
        Token { surface: surface.into(), tag, index }
    }

    pub fn is_aux(&self) -> bool {
        (self.tag.is_verb() || self.tag.as_str() == "MD")
            && AUX_SURFACES.contains(&self.surface.to_lowercase().as_str())
    }
}

/// A tokenized, tagged caption. Token indices are contiguous from 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaggedCaption {
    pub caption_id: String,
    pub video_id: String,
    pub tokens: Vec<Token>,
}

impl TaggedCaption {
    pub fn new(
        caption_id: impl Into<String>,
        video_id: impl Into<String>,
        tokens: Vec<Token>,
    ) -> TaggedCaption {
        let tc = TaggedCaption {
            caption_id: caption_id.into(),
            video_id: video_id.into(),
            tokens,
        };
        debug_assert!(tc.tokens.iter().enumerate().all(|(i, t)| t.index == i));
        tc
    }

    pub fn surfaces(&self) -> Vec<&str> {
        self.tokens.iter().map(|t| t.surface.as_str()).collect()
    }

    /// The detokenized surface text.
    pub fn text(&self) -> String {
        detokenize(&self.surfaces())
    }
}
