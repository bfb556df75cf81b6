//! Rule-based verb inflection with an irregular-verb exception table.

use super::tagger::Tagger;
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::path::Path;
use std::sync::OnceLock;

const IRREGULAR_TSV: &str = include_str!("data/irregular_verbs.tsv");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tense {
    Present,
    Past,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Person {
    ThirdSingular,
    Other,
}

/// Inflection target for [`Inflector::inflect`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Base,
    ThirdSingular,
    Gerund,
    Past,
    /// "met" -> "did not meet", "finds" -> "does not find".
    DoSupportNegation(Tense, Person),
}

#[derive(Debug, Clone)]
struct IrregularForms {
    past: String,
    third_sg: String,
    gerund: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FormKind {
    Past,
    ThirdSg,
    Gerund,
}

pub struct Inflector {
    irregular: HashMap<String, IrregularForms>,
    /// inflected form -> (lemma, which slot it came from)
    by_form: HashMap<String, (String, FormKind)>,
}

impl Inflector {
    pub fn builtin() -> &'static Inflector {
        static BUILTIN: OnceLock<Inflector> = OnceLock::new();
        BUILTIN
            .get_or_init(|| Inflector::from_tsv_str(IRREGULAR_TSV).expect("embedded table parses"))
    }

    /// Load an irregular table from `lemma<TAB>past<TAB>3sg<TAB>gerund` TSV.
    pub fn from_table_file(path: &Path) -> Result<Inflector> {
        Inflector::from_tsv_str(&std::fs::read_to_string(path)?)
    }

    fn from_tsv_str(tsv: &str) -> Result<Inflector> {
        let mut irregular = HashMap::new();
        let mut by_form = HashMap::new();
        for (lineno, line) in tsv.lines().enumerate() {
            let line = line.trim_end();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 4 {
                return Err(Error::Format {
                    format: "irregular-verbs",
                    line: lineno + 1,
                    msg: "expected lemma<TAB>past<TAB>3sg<TAB>gerund".into(),
                });
            }
            let lemma = fields[0].to_lowercase();
            let forms = IrregularForms {
                past: fields[1].to_lowercase(),
                third_sg: fields[2].to_lowercase(),
                gerund: fields[3].to_lowercase(),
            };
            for (form, kind) in [
                (&forms.past, FormKind::Past),
                (&forms.third_sg, FormKind::ThirdSg),
                (&forms.gerund, FormKind::Gerund),
            ] {
                by_form.entry(form.clone()).or_insert_with(|| (lemma.clone(), kind));
            }
            irregular.insert(lemma, forms);
        }
        Ok(Inflector { irregular, by_form })
    }

    pub fn is_irregular(&self, lemma: &str) -> bool {
        self.irregular.contains_key(&lemma.to_lowercase())
    }

    /// Reduce any verb form to its base lemma. Total and deterministic:
    /// irregular forms via the table, regular suffixes via rules with
    /// candidates validated against the known verb-lemma list.
    pub fn lemma(&self, form: &str) -> String {
        let lower = form.to_lowercase();
        if self.irregular.contains_key(&lower) {
            return lower;
        }
        if let Some((lemma, _)) = self.by_form.get(&lower) {
            return lemma.clone();
        }
        let known = |w: &str| Tagger::builtin().is_known_verb_lemma(w);
        if let Some(stem) = lower.strip_suffix("ies").filter(|s| !s.is_empty()) {
            return format!("{stem}y");
        }
        if let Some(stem) = lower.strip_suffix("ied").filter(|s| !s.is_empty()) {
            return format!("{stem}y");
        }
        if let Some(stem) = lower.strip_suffix("ing").filter(|s| s.len() >= 2) {
            return de_stem(stem, known);
        }
        if let Some(stem) = lower.strip_suffix("ed").filter(|s| s.len() >= 2) {
            return de_stem(stem, known);
        }
        if lower.ends_with("es") && lower.len() > 3 {
            let stem = &lower[..lower.len() - 2];
            if stem.ends_with('s')
                || stem.ends_with('x')
                || stem.ends_with('z')
                || stem.ends_with("ch")
                || stem.ends_with("sh")
                || stem.ends_with('o')
            {
                return stem.to_string();
            }
        }
        if lower.ends_with('s') && !lower.ends_with("ss") && lower.len() > 2 {
            return lower[..lower.len() - 1].to_string();
        }
        lower
    }

    pub fn inflect(&self, verb: &str, target: Target) -> String {
        let lemma = self.lemma(verb);
        match target {
            Target::Base => lemma,
            Target::ThirdSingular => self.third_singular(&lemma),
            Target::Gerund => self.gerund(&lemma),
            Target::Past => self.past(&lemma),
            Target::DoSupportNegation(tense, person) => {
                let aux = match (tense, person) {
                    (Tense::Past, _) => "did",
                    (Tense::Present, Person::ThirdSingular) => "does",
                    (Tense::Present, Person::Other) => "do",
                };
                format!("{aux} not {lemma}")
            }
        }
    }

    pub fn third_singular(&self, lemma: &str) -> String {
        if let Some(f) = self.irregular.get(lemma) {
            return f.third_sg.clone();
        }
        if lemma.ends_with('s')
            || lemma.ends_with('x')
            || lemma.ends_with('z')
            || lemma.ends_with("ch")
            || lemma.ends_with("sh")
            || lemma.ends_with('o')
        {
            return format!("{lemma}es");
        }
        if let Some(stem) = strip_consonant_y(lemma) {
            return format!("{stem}ies");
        }
        format!("{lemma}s")
    }

    pub fn gerund(&self, lemma: &str) -> String {
        if let Some(f) = self.irregular.get(lemma) {
            return f.gerund.clone();
        }
        if let Some(stem) = lemma.strip_suffix("ie") {
            return format!("{stem}ying");
        }
        if lemma.ends_with('e') && !lemma.ends_with("ee") && lemma.len() > 2 {
            return format!("{}ing", &lemma[..lemma.len() - 1]);
        }
        if doubles_final_consonant(lemma) {
            return format!("{lemma}{}ing", lemma.chars().last().unwrap());
        }
        format!("{lemma}ing")
    }

    pub fn past(&self, lemma: &str) -> String {
        if let Some(f) = self.irregular.get(lemma) {
            return f.past.clone();
        }
        if lemma.ends_with('e') {
            return format!("{lemma}d");
        }
        if let Some(stem) = strip_consonant_y(lemma) {
            return format!("{stem}ied");
        }
        if doubles_final_consonant(lemma) {
            return format!("{lemma}{}ed", lemma.chars().last().unwrap());
        }
        format!("{lemma}ed")
    }

    /// Past form for denegation. `None` when the verb is neither in the
    /// irregular table nor a known regular lemma, so the caller can skip
    /// the caption rather than emit an ungrammatical form.
    pub fn trusted_past(&self, lemma: &str) -> Option<String> {
        if self.irregular.contains_key(lemma) || Tagger::builtin().is_known_verb_lemma(lemma) {
            Some(self.past(lemma))
        } else {
            None
        }
    }
}

fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u')
}

fn strip_consonant_y(word: &str) -> Option<&str> {
    let stem = word.strip_suffix('y')?;
    let last = stem.chars().last()?;
    (!is_vowel(last)).then_some(stem)
}

/// CVC-final short verbs double the last consonant ("run" -> "running").
fn doubles_final_consonant(lemma: &str) -> bool {
    let chars: Vec<char> = lemma.chars().collect();
    let n = chars.len();
    n >= 3
        && n <= 5
        && !is_vowel(chars[n - 1])
        && !matches!(chars[n - 1], 'w' | 'x' | 'y')
        && is_vowel(chars[n - 2])
        && !is_vowel(chars[n - 3])
}

/// Undo -ing/-ed stripping: restore a dropped "e" or undo consonant
/// doubling, preferring candidates that are known verb lemmas.
fn de_stem(stem: &str, known: impl Fn(&str) -> bool) -> String {
    if known(stem) {
        return stem.to_string();
    }
    let chars: Vec<char> = stem.chars().collect();
    let n = chars.len();
    // doubled consonant: "runn" -> "run"
    if n >= 2 && chars[n - 1] == chars[n - 2] && !is_vowel(chars[n - 1]) {
        let undoubled = &stem[..stem.len() - 1];
        if known(undoubled) {
            return undoubled.to_string();
        }
    }
    // dropped e: "tak" -> "take"
    let with_e = format!("{stem}e");
    if known(&with_e) {
        return with_e;
    }
    // fall back to the bare stem, undoubling obvious doubles
    if n >= 2 && chars[n - 1] == chars[n - 2] && !is_vowel(chars[n - 1]) && !matches!(chars[n-1], 'l' | 's') {
        return stem[..stem.len() - 1].to_string();
    }
    stem.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inf() -> &'static Inflector {
        Inflector::builtin()
    }

    #[test]
    fn do_support_examples() {
        assert_eq!(
            inf().inflect("met", Target::DoSupportNegation(Tense::Past, Person::Other)),
            "did not meet"
        );
        assert_eq!(
            inf().inflect("finds", Target::DoSupportNegation(Tense::Present, Person::ThirdSingular)),
            "does not find"
        );
        assert_eq!(
            inf().inflect("play", Target::DoSupportNegation(Tense::Present, Person::Other)),
            "do not play"
        );
    }

    #[test]
    fn regular_gerund() {
        assert_eq!(inf().inflect("play", Target::Gerund), "playing");
        assert_eq!(inf().inflect("dance", Target::Gerund), "dancing");
        assert_eq!(inf().inflect("jog", Target::Gerund), "jogging");
    }

    #[test]
    fn lemmatizes_known_and_regular_forms() {
        assert_eq!(inf().lemma("met"), "meet");
        assert_eq!(inf().lemma("taking"), "take");
        assert_eq!(inf().lemma("running"), "run");
        assert_eq!(inf().lemma("drives"), "drive");
        assert_eq!(inf().lemma("watches"), "watch");
        assert_eq!(inf().lemma("carried"), "carry");
        assert_eq!(inf().lemma("selfie"), "selfie");
    }

    #[test]
    fn third_singular_rules() {
        assert_eq!(inf().third_singular("watch"), "watches");
        assert_eq!(inf().third_singular("carry"), "carries");
        assert_eq!(inf().third_singular("play"), "plays");
        assert_eq!(inf().third_singular("do"), "does");
    }

    #[test]
    fn trusted_past_skips_unknown_verbs() {
        assert_eq!(inf().trusted_past("meet").as_deref(), Some("met"));
        assert_eq!(inf().trusted_past("play").as_deref(), Some("played"));
        assert_eq!(inf().trusted_past("flombulate"), None);
    }
}
