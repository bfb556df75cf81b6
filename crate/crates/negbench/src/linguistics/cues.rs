//! Negation-cue detection over tagged captions.

use super::{TaggedCaption, Token};
use std::collections::BTreeSet;

/// Lowercased surfaces counted as negation cues. The default set follows
/// common English negators; it is configurable for parity experiments.
#[derive(Debug, Clone)]
pub struct CueLexicon {
    cues: BTreeSet<String>,
}

impl Default for CueLexicon {
    fn default() -> Self {
        CueLexicon::new(["no", "not", "n't", "never", "without", "none", "nobody", "nothing"])
    }
}

impl CueLexicon {
    pub fn new<I, S>(cues: I) -> CueLexicon
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        CueLexicon { cues: cues.into_iter().map(|s| s.into().to_lowercase()).collect() }
    }

    pub fn contains(&self, surface: &str) -> bool {
        self.cues.contains(&surface.to_lowercase())
    }
}

/// All tokens whose lowercased surface is in the cue lexicon.
pub fn detect_negation_cues<'a>(tc: &'a TaggedCaption, lexicon: &CueLexicon) -> Vec<&'a Token> {
    tc.tokens.iter().filter(|t| lexicon.contains(&t.surface)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linguistics::{tokenize, Tagger};

    fn tagged(text: &str) -> TaggedCaption {
        Tagger::builtin().tag("c", "v", &tokenize(text).unwrap())
    }

    #[test]
    fn finds_without() {
        let tc = tagged("a boy running without dress");
        let cues: Vec<&str> =
            detect_negation_cues(&tc, &CueLexicon::default()).iter().map(|t| t.surface.as_str()).collect();
        assert_eq!(cues, ["without"]);
    }

    #[test]
    fn clean_caption_has_no_cues() {
        let tc = tagged("a man is playing guitar");
        assert!(detect_negation_cues(&tc, &CueLexicon::default()).is_empty());
    }

    #[test]
    fn contraction_cue() {
        let tc = tagged("he isn't running");
        let cues: Vec<&str> =
            detect_negation_cues(&tc, &CueLexicon::default()).iter().map(|t| t.surface.as_str()).collect();
        assert_eq!(cues, ["n't"]);
    }
}
