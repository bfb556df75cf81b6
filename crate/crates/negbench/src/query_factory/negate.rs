//! Single-site negation insertion and its inverse (cue removal).

use crate::error::{Error, Result};
use crate::linguistics::{
    detect_negation_cues, detokenize, CueLexicon, Inflector, Person, TaggedCaption, Target, Tense,
    Token,
};
use rand::Rng;

/// A negatable site in a caption.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NegationSite {
    /// An auxiliary verb; negated by contraction ("is" -> "isn't").
    Aux(usize),
    /// A finite lexical verb (VBZ/VBD/VBP); negated by do-support.
    FiniteVerb(usize),
    /// A VBG; negated by inserting "not" before it.
    Gerund(usize),
    /// The preposition "with"; replaced by "without".
    With(usize),
}

impl NegationSite {
    pub fn index(&self) -> usize {
        match *self {
            NegationSite::Aux(i)
            | NegationSite::FiniteVerb(i)
            | NegationSite::Gerund(i)
            | NegationSite::With(i) => i,
        }
    }
}

/// The result of negating one site.
#[derive(Debug, Clone)]
pub struct NegatedCaption {
    pub text: String,
    pub tokens: Vec<String>,
    /// Token index of the chosen site in the original caption.
    pub site_index: usize,
}

/// All negatable sites of a caption, in token order.
pub fn negation_sites(tc: &TaggedCaption) -> Vec<NegationSite> {
    let mut sites = Vec::new();
    for (i, tok) in tc.tokens.iter().enumerate() {
        if tok.is_aux() {
            sites.push(NegationSite::Aux(i));
        } else if tok.tag.is_finite_verb() {
            sites.push(NegationSite::FiniteVerb(i));
        } else if tok.tag.as_str() == "VBG" {
            sites.push(NegationSite::Gerund(i));
        } else if tok.tag.as_str() == "IN" && tok.surface.eq_ignore_ascii_case("with") {
            sites.push(NegationSite::With(i));
        }
    }
    sites
}

/// Negate the caption at one uniformly chosen site.
///
/// Precondition: the caption has no negation cues already (callers route
/// cue-bearing captions through [`denegate_caption`] instead).
pub fn negate_caption(tc: &TaggedCaption, rng: &mut impl Rng) -> Result<NegatedCaption> {
    let sites = negation_sites(tc);
    if sites.is_empty() {
        return Err(Error::NoNegatableSite);
    }
    let site = sites[rng.gen_range(0..sites.len())];
    negate_at(tc, site)
}

/// Negate the caption at a specific site.
pub fn negate_at(tc: &TaggedCaption, site: NegationSite) -> Result<NegatedCaption> {
    let idx = site.index();
    let tok = tc.tokens.get(idx).ok_or(Error::NoNegatableSite)?;
    let mut tokens: Vec<String> = tc.tokens.iter().map(|t| t.surface.clone()).collect();
    match site {
        NegationSite::Aux(_) => {
            tokens.splice(idx..=idx, contract_negation(&tok.surface));
        }
        NegationSite::Gerund(_) => {
            tokens.insert(idx, "not".to_string());
        }
        NegationSite::FiniteVerb(_) => {
            let (tense, person) = match tok.tag.as_str() {
                "VBD" => (Tense::Past, Person::Other),
                "VBZ" => (Tense::Present, Person::ThirdSingular),
                _ => (Tense::Present, Person::Other),
            };
            let negated = Inflector::builtin()
                .inflect(&tok.surface, Target::DoSupportNegation(tense, person));
            let replacement = match_case_first(&negated, &tok.surface);
            tokens.splice(idx..=idx, replacement.split(' ').map(str::to_string));
        }
        NegationSite::With(_) => {
            tokens[idx] = match_case_first("without", &tok.surface);
        }
    }
    let text = detokenize(&tokens.iter().map(|s| s.as_str()).collect::<Vec<_>>());
    Ok(NegatedCaption { text, tokens, site_index: idx })
}

/// Contracted negation for an auxiliary. Auxiliaries without a standard
/// contraction get a separate "not".
fn contract_negation(aux: &str) -> Vec<String> {
    let contracted = match aux.to_lowercase().as_str() {
        "is" => "isn't",
        "are" => "aren't",
        "was" => "wasn't",
        "were" => "weren't",
        "do" => "don't",
        "does" => "doesn't",
        "did" => "didn't",
        "has" => "hasn't",
        "have" => "haven't",
        "had" => "hadn't",
        "can" => "can't",
        "could" => "couldn't",
        "will" => "won't",
        "would" => "wouldn't",
        "should" => "shouldn't",
        "must" => "mustn't",
        _ => return vec![aux.to_string(), "not".to_string()],
    };
    vec![match_case_first(contracted, aux)]
}

fn match_case_first(replacement: &str, original: &str) -> String {
    if original.chars().next().is_some_and(|c| c.is_uppercase()) {
        let mut chars = replacement.chars();
        match chars.next() {
            Some(first) => first.to_uppercase().collect::<String>() + chars.as_str(),
            None => String::new(),
        }
    } else {
        replacement.to_string()
    }
}

/// Remove every negation cue, producing the affirmed caption.
///
/// "without" becomes "with"; "n't"/"not"/"never" are dropped, reversing
/// do-support where a do-form precedes the cue ("does not find" ->
/// "finds"). Determiner/pronoun cues (no/none/nobody/nothing) have no safe
/// rewrite and fail with [`Error::UnresolvableCue`].
pub fn denegate_caption(tc: &TaggedCaption, cues: &CueLexicon) -> Result<String> {
    if detect_negation_cues(tc, cues).is_empty() {
        return Err(Error::NoCue(tc.caption_id.clone()));
    }
    let inflector = Inflector::builtin();
    let mut out: Vec<String> = Vec::with_capacity(tc.tokens.len());
    let mut skip_until = 0;
    for (i, tok) in tc.tokens.iter().enumerate() {
        if i < skip_until {
            continue;
        }
        let lower = tok.surface.to_lowercase();
        if !cues.contains(&lower) {
            out.push(tok.surface.clone());
            continue;
        }
        match lower.as_str() {
            "without" => out.push(match_case_first("with", &tok.surface)),
            "n't" | "not" | "never" => {
                let prev = out.last().map(|s| s.to_lowercase());
                let next = tc.tokens.get(i + 1);
                match (prev.as_deref(), next) {
                    (Some(do_form @ ("do" | "does" | "did")), Some(verb))
                        if verb.tag.is_verb() && !verb.is_aux() =>
                    {
                        let restored = restore_do_support(inflector, do_form, &verb.surface)?;
                        let prev_surface = out.pop().unwrap();
                        out.push(match_case_first(&restored, &prev_surface));
                        skip_until = i + 2;
                    }
                    // plain removal: "is n't running" -> "is running"
                    _ => {}
                }
            }
            cue @ ("no" | "none" | "nobody" | "nothing") => {
                return Err(Error::UnresolvableCue {
                    cue: cue.to_string(),
                    reason: "determiner/pronoun negation has no safe affirmative rewrite".into(),
                });
            }
            other => {
                return Err(Error::UnresolvableCue {
                    cue: other.to_string(),
                    reason: "no rewrite rule for this cue".into(),
                });
            }
        }
    }
    Ok(detokenize(&out.iter().map(|s| s.as_str()).collect::<Vec<_>>()))
}

fn restore_do_support(inflector: &Inflector, do_form: &str, verb: &str) -> Result<String> {
    let lemma = inflector.lemma(verb);
    Ok(match do_form {
        "did" => inflector.trusted_past(&lemma).ok_or_else(|| Error::UnresolvableCue {
            cue: "not".into(),
            reason: format!("past form of '{lemma}' is not known; refusing to guess"),
        })?,
        "does" => inflector.third_singular(&lemma),
        _ => lemma,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linguistics::{tokenize, Tagger};

    fn tagged(text: &str) -> TaggedCaption {
        Tagger::builtin().tag("c", "v", &tokenize(text).unwrap())
    }

    fn site_for(tc: &TaggedCaption, surface: &str) -> NegationSite {
        negation_sites(tc)
            .into_iter()
            .find(|s| tc.tokens[s.index()].surface.eq_ignore_ascii_case(surface))
            .unwrap_or_else(|| panic!("no site for '{surface}'"))
    }

    #[test]
    fn do_support_on_past_verb() {
        let tc = tagged("Some guys are driving a car and met an accident in a road");
        let out = negate_at(&tc, site_for(&tc, "met")).unwrap();
        assert_eq!(out.text, "Some guys are driving a car and did not meet an accident in a road");
    }

    #[test]
    fn aux_contraction() {
        let tc = tagged("A man is running around and playing a guitar");
        let out = negate_at(&tc, site_for(&tc, "is")).unwrap();
        assert_eq!(out.text, "A man isn't running around and playing a guitar");
    }

    #[test]
    fn with_becomes_without() {
        let tc = tagged("A live concert with a woman as the lead singer");
        let out = negate_at(&tc, site_for(&tc, "with")).unwrap();
        assert_eq!(out.text, "A live concert without a woman as the lead singer");
    }

    #[test]
    fn no_site_is_an_error() {
        let tc = tagged("the tall tree");
        let mut rng = crate::prng::rng_from_u64(1);
        assert!(matches!(negate_caption(&tc, &mut rng), Err(Error::NoNegatableSite)));
    }

    #[test]
    fn single_site_negation_changes_one_region() {
        let tc = tagged("a man is playing a guitar and a woman sings");
        for site in negation_sites(&tc) {
            let out = negate_at(&tc, site).unwrap();
            let orig: Vec<&str> = tc.tokens.iter().map(|t| t.surface.as_str()).collect();
            let new: Vec<&str> = out.tokens.iter().map(|s| s.as_str()).collect();
            // common prefix + common suffix must cover all but one region
            let p = orig.iter().zip(&new).take_while(|(a, b)| a == *b).count();
            let s = orig
                .iter()
                .rev()
                .zip(new.iter().rev())
                .take_while(|(a, b)| a == *b)
                .count();
            assert!(p + s >= orig.len().min(new.len()).saturating_sub(3));
            assert_ne!(orig, new);
        }
    }

    #[test]
    fn denegate_without() {
        let tc = tagged("a boy running is running without dress");
        let out = denegate_caption(&tc, &CueLexicon::default()).unwrap();
        assert_eq!(out, "a boy running is running with dress");
    }

    #[test]
    fn denegate_do_support() {
        let tc = tagged("a man does not find the dog");
        let out = denegate_caption(&tc, &CueLexicon::default()).unwrap();
        assert_eq!(out, "a man finds the dog");

        let tc = tagged("a man did not meet the dog");
        let out = denegate_caption(&tc, &CueLexicon::default()).unwrap();
        assert_eq!(out, "a man met the dog");
    }

    #[test]
    fn denegate_contraction() {
        let tc = tagged("a man isn't running");
        let out = denegate_caption(&tc, &CueLexicon::default()).unwrap();
        assert_eq!(out, "a man is running");
    }

    #[test]
    fn nobody_is_unresolvable() {
        let tc = tagged("nobody is dancing");
        assert!(matches!(
            denegate_caption(&tc, &CueLexicon::default()),
            Err(Error::UnresolvableCue { .. })
        ));
    }

    #[test]
    fn involution_on_aux_and_with_sites() {
        for text in ["a man is playing a guitar", "a concert with a woman"] {
            let tc = tagged(text);
            let site = negation_sites(&tc)[0];
            let negated = negate_at(&tc, site).unwrap();
            let back = denegate_caption(&tagged(&negated.text), &CueLexicon::default()).unwrap();
            assert_eq!(back, text);
        }
    }
}
