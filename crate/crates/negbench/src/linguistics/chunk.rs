//! Cascaded tag-pattern chunk parsing and subject/VP extraction.
//!
//! A grammar is an ordered list of `(label, pattern)` rules. Each rule is
//! applied as one pass over the top-level node sequence: matches are found
//! leftmost, greedily (longest at each start), non-overlapping, and the
//! matched nodes are wrapped into a chunk with the rule's label. Chunks
//! formed by earlier rules appear as atomic units matchable by their label.
//! The whole cascade repeats `loop_count` times, which lets mutually
//! recursive rules (VP / CLAUSE) build one extra level of nesting per pass.
//!
//! The pattern language is exactly what the built-in grammar needs:
//! a sequence of `<ALT|ALT|..>` elements, optionally starred, where each
//! alternative is a tag/label or a `XX.*` prefix wildcard.

use super::{Tag, TaggedCaption, Token};
use crate::error::{Error, Result};

/// The built-in grammar's chunk labels.
pub const BUILTIN_LABELS: &[&str] = &["NP", "PP", "VP", "CLAUSE"];

#[derive(Debug, Clone, PartialEq, Eq)]
enum Alt {
    Exact(String),
    Prefix(String),
}

impl Alt {
    fn matches(&self, symbol: &str) -> bool {
        match self {
            Alt::Exact(s) => s == symbol,
            Alt::Prefix(p) => symbol.starts_with(p.as_str()),
        }
    }
}

#[derive(Debug, Clone)]
struct PatElem {
    alts: Vec<Alt>,
    star: bool,
}

#[derive(Debug, Clone)]
struct TagPattern {
    elems: Vec<PatElem>,
}

impl TagPattern {
    fn parse(src: &str) -> Result<TagPattern> {
        let mut elems = Vec::new();
        let mut rest = src.trim();
        while !rest.is_empty() {
            let Some(stripped) = rest.strip_prefix('<') else {
                return Err(Error::BadGrammar(format!("expected '<' in pattern '{src}'")));
            };
            let Some(close) = stripped.find('>') else {
                return Err(Error::BadGrammar(format!("unclosed '<' in pattern '{src}'")));
            };
            let body = &stripped[..close];
            let alts = body
                .split('|')
                .map(|alt| {
                    let alt = alt.trim();
                    if alt.is_empty() {
                        return Err(Error::BadGrammar(format!("empty alternative in '{src}'")));
                    }
                    Ok(match alt.strip_suffix(".*") {
                        Some(prefix) => Alt::Prefix(prefix.to_string()),
                        None => Alt::Exact(alt.to_string()),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rest = &stripped[close + 1..];
            let star = rest.starts_with('*');
            if star {
                rest = &rest[1..];
            }
            rest = rest.trim_start();
            elems.push(PatElem { alts, star });
        }
        if elems.is_empty() {
            return Err(Error::BadGrammar(format!("empty pattern '{src}'")));
        }
        Ok(TagPattern { elems })
    }

    /// Greedy match with backtracking; returns the end position of the
    /// longest match starting at `start`, or `None`. Zero-width matches
    /// count as no match.
    fn match_at(&self, symbols: &[&str], start: usize) -> Option<usize> {
        fn go(elems: &[PatElem], symbols: &[&str], pos: usize) -> Option<usize> {
            let Some(elem) = elems.first() else {
                return Some(pos);
            };
            let matches_one =
                |p: usize| p < symbols.len() && elem.alts.iter().any(|a| a.matches(symbols[p]));
            if elem.star {
                let mut max_take = 0;
                while matches_one(pos + max_take) {
                    max_take += 1;
                }
                for take in (0..=max_take).rev() {
                    if let Some(end) = go(&elems[1..], symbols, pos + take) {
                        return Some(end);
                    }
                }
                None
            } else if matches_one(pos) {
                go(&elems[1..], symbols, pos + 1)
            } else {
                None
            }
        }
        match go(&self.elems, symbols, start) {
            Some(end) if end > start => Some(end),
            _ => None,
        }
    }
}

/// An ordered cascade of chunk rules plus a loop count.
#[derive(Debug, Clone)]
pub struct ChunkGrammar {
    rules: Vec<(String, TagPattern)>,
    loop_count: usize,
}

impl ChunkGrammar {
    /// Build a grammar from `(label, pattern)` pairs. Every alternative in
    /// every pattern must name a known tag, a tag prefix, or one of the
    /// grammar's own labels.
    pub fn new<L: AsRef<str>, P: AsRef<str>>(
        rules: &[(L, P)],
        loop_count: usize,
    ) -> Result<ChunkGrammar> {
        if loop_count == 0 {
            return Err(Error::BadGrammar("loop_count must be positive".into()));
        }
        let labels: Vec<String> = rules.iter().map(|(l, _)| l.as_ref().to_string()).collect();
        let parsed = rules
            .iter()
            .map(|(l, p)| Ok((l.as_ref().to_string(), TagPattern::parse(p.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        for (label, pattern) in &parsed {
            for elem in &pattern.elems {
                for alt in &elem.alts {
                    let ok = match alt {
                        Alt::Exact(s) => {
                            labels.contains(s) || super::TAG_SET.contains(&s.as_str())
                        }
                        Alt::Prefix(p) => super::TAG_SET.iter().any(|t| t.starts_with(p.as_str())),
                    };
                    if !ok {
                        return Err(Error::BadGrammar(format!(
                            "rule {label}: unknown tag or label in pattern"
                        )));
                    }
                }
            }
        }
        Ok(ChunkGrammar { rules: parsed, loop_count })
    }

    /// The paper's NP / PP / VP / CLAUSE cascade, two passes.
    pub fn builtin() -> ChunkGrammar {
        ChunkGrammar::new(
            &[
                ("NP", "<DT|JJ|NN.*>*<NN.*>"),
                ("PP", "<IN|RP><NP>"),
                ("VP", "<VB.*><NP|PP|CLAUSE>*"),
                ("CLAUSE", "<NP><VP>"),
            ],
            2,
        )
        .expect("builtin grammar is valid")
    }

    pub fn labels(&self) -> Vec<&str> {
        self.rules.iter().map(|(l, _)| l.as_str()).collect()
    }

    pub fn loop_count(&self) -> usize {
        self.loop_count
    }

    pub fn with_loop_count(mut self, loop_count: usize) -> ChunkGrammar {
        self.loop_count = loop_count.max(1);
        self
    }
}

/// A node of a chunk tree: a token leaf or a labeled chunk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    Leaf(Token),
    Chunk { label: String, children: Vec<Node> },
}

impl Node {
    fn symbol(&self) -> &str {
        match self {
            Node::Leaf(t) => t.tag.as_str(),
            Node::Chunk { label, .. } => label,
        }
    }

    pub fn leaves(&self) -> Vec<&Token> {
        match self {
            Node::Leaf(t) => vec![t],
            Node::Chunk { children, .. } => children.iter().flat_map(Node::leaves).collect(),
        }
    }

    /// Leaf token index range, half-open.
    pub fn span(&self) -> (usize, usize) {
        let leaves = self.leaves();
        (leaves[0].index, leaves[leaves.len() - 1].index + 1)
    }
}

/// The parse result: a sequence of top-level nodes whose leaves, read
/// left-to-right, reproduce the input tokens exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChunkTree {
    pub nodes: Vec<Node>,
}

impl ChunkTree {
    pub fn leaves(&self) -> Vec<&Token> {
        self.nodes.iter().flat_map(Node::leaves).collect()
    }

    /// All chunks with the given label, depth-first pre-order.
    pub fn chunks_labeled(&self, label: &str) -> Vec<&Node> {
        fn walk<'a>(node: &'a Node, label: &str, out: &mut Vec<&'a Node>) {
            if let Node::Chunk { label: l, children } = node {
                if l == label {
                    out.push(node);
                }
                for child in children {
                    walk(child, label, out);
                }
            }
        }
        let mut out = Vec::new();
        for node in &self.nodes {
            walk(node, label, &mut out);
        }
        out
    }

    pub fn count_labeled(&self, label: &str) -> usize {
        self.chunks_labeled(label).len()
    }
}

/// Apply the grammar cascade to a tagged caption.
///
/// Worst case (nothing matches) the result is a flat sequence of leaves;
/// parsing never fails.
pub fn chunk_parse(tc: &TaggedCaption, grammar: &ChunkGrammar) -> ChunkTree {
    let mut nodes: Vec<Node> = tc.tokens.iter().cloned().map(Node::Leaf).collect();
    for _ in 0..grammar.loop_count {
        for (label, pattern) in &grammar.rules {
            nodes = apply_rule(nodes, label, pattern);
        }
    }
    ChunkTree { nodes }
}

fn apply_rule(nodes: Vec<Node>, label: &str, pattern: &TagPattern) -> Vec<Node> {
    let symbols: Vec<&str> = nodes.iter().map(Node::symbol).collect();
    let mut spans = Vec::new();
    let mut i = 0;
    while i < symbols.len() {
        match pattern.match_at(&symbols, i) {
            Some(end) => {
                spans.push((i, end));
                i = end;
            }
            None => i += 1,
        }
    }
    if spans.is_empty() {
        return nodes;
    }
    let mut out = Vec::with_capacity(nodes.len());
    let mut iter = nodes.into_iter().enumerate().peekable();
    for (start, end) in spans {
        while iter.peek().is_some_and(|(i, _)| *i < start) {
            out.push(iter.next().unwrap().1);
        }
        let mut children = Vec::with_capacity(end - start);
        while iter.peek().is_some_and(|(i, _)| *i < end) {
            children.push(iter.next().unwrap().1);
        }
        out.push(Node::Chunk { label: label.to_string(), children });
    }
    out.extend(iter.map(|(_, n)| n));
    out
}

/// A (subject, verb phrase) pair extracted from a parse tree.
/// Spans are half-open token index ranges into the owning caption.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubjectVPPair {
    pub subject: (usize, usize),
    pub vp: (usize, usize),
    pub vp_head_verb: Token,
}

impl SubjectVPPair {
    pub fn subject_tokens<'a>(&self, tc: &'a TaggedCaption) -> &'a [Token] {
        &tc.tokens[self.subject.0..self.subject.1]
    }

    pub fn vp_tokens<'a>(&self, tc: &'a TaggedCaption) -> &'a [Token] {
        &tc.tokens[self.vp.0..self.vp.1]
    }

    pub fn subject_text(&self, tc: &TaggedCaption) -> String {
        super::detokenize(
            &self.subject_tokens(tc).iter().map(|t| t.surface.as_str()).collect::<Vec<_>>(),
        )
    }

    pub fn vp_text(&self, tc: &TaggedCaption) -> String {
        super::detokenize(
            &self.vp_tokens(tc).iter().map(|t| t.surface.as_str()).collect::<Vec<_>>(),
        )
    }
}

/// Extract one pair per contentful VP chunk.
///
/// Bare auxiliaries stranded as single-token VPs ("is" in "a man is taking
/// selfie") carry no content and are skipped. The subject is resolved by
/// walking left among the VP's siblings and then up the ancestor chain:
/// the nearest preceding NP wins; a preceding CLAUSE contributes its own
/// leading NP. VPs with no resolvable subject are skipped.
pub fn extract_subject_vp_pairs(tree: &ChunkTree) -> Vec<SubjectVPPair> {
    let mut paths = Vec::new();
    collect_vp_paths(&tree.nodes, &mut Vec::new(), &mut paths);
    let mut pairs = Vec::new();
    for path in paths {
        let vp = node_at(&tree.nodes, &path);
        if is_bare_aux_vp(vp) {
            continue;
        }
        let Some(subject_span) = find_subject(&tree.nodes, &path) else {
            continue;
        };
        let head = vp
            .leaves()
            .into_iter()
            .find(|t| t.tag.is_verb())
            .cloned()
            .expect("VP chunk contains a verb by grammar construction");
        pairs.push(SubjectVPPair { subject: subject_span, vp: vp.span(), vp_head_verb: head });
    }
    pairs
}

fn collect_vp_paths(nodes: &[Node], prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    for (i, node) in nodes.iter().enumerate() {
        if let Node::Chunk { label, children } = node {
            prefix.push(i);
            if label == "VP" {
                out.push(prefix.clone());
            }
            collect_vp_paths(children, prefix, out);
            prefix.pop();
        }
    }
}

fn node_at<'a>(nodes: &'a [Node], path: &[usize]) -> &'a Node {
    let mut node = &nodes[path[0]];
    for &i in &path[1..] {
        match node {
            Node::Chunk { children, .. } => node = &children[i],
            Node::Leaf(_) => unreachable!("path descends through chunks"),
        }
    }
    node
}

fn children_at<'a>(nodes: &'a [Node], path: &[usize]) -> &'a [Node] {
    if path.is_empty() {
        nodes
    } else {
        match node_at(nodes, path) {
            Node::Chunk { children, .. } => children,
            Node::Leaf(_) => unreachable!("path descends through chunks"),
        }
    }
}

fn is_bare_aux_vp(node: &Node) -> bool {
    match node {
        Node::Chunk { children, .. } if children.len() == 1 => match &children[0] {
            Node::Leaf(t) => t.is_aux(),
            Node::Chunk { .. } => false,
        },
        _ => false,
    }
}

fn leading_np(node: &Node) -> Option<(usize, usize)> {
    if let Node::Chunk { children, .. } = node {
        for child in children {
            if let Node::Chunk { label, .. } = child {
                if label == "NP" {
                    return Some(child.span());
                }
            }
        }
    }
    None
}

fn find_subject(roots: &[Node], vp_path: &[usize]) -> Option<(usize, usize)> {
    let mut path = vp_path.to_vec();
    loop {
        let idx = *path.last().unwrap();
        let parent_path = &path[..path.len() - 1];
        let siblings = children_at(roots, parent_path);
        for sib in siblings[..idx].iter().rev() {
            if let Node::Chunk { label, .. } = sib {
                if label == "NP" {
                    return Some(sib.span());
                }
                if label == "CLAUSE" {
                    if let Some(span) = leading_np(sib) {
                        return Some(span);
                    }
                }
            }
        }
        if path.len() == 1 {
            return None;
        }
        path.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linguistics::{tokenize, Tagger};

    fn tagged(text: &str) -> TaggedCaption {
        Tagger::builtin().tag("c", "v", &tokenize(text).unwrap())
    }

    fn parse(text: &str) -> ChunkTree {
        chunk_parse(&tagged(text), &ChunkGrammar::builtin())
    }

    fn top_labels(tree: &ChunkTree) -> Vec<String> {
        tree.nodes.iter().map(|n| n.symbol().to_string()).collect()
    }

    #[test]
    fn dt_nn_forms_np() {
        let tree = parse("a man");
        assert_eq!(top_labels(&tree), ["NP"]);
        assert_eq!(tree.nodes[0].span(), (0, 2));
    }

    #[test]
    fn pp_contains_np() {
        let tree = parse("on the floor");
        assert_eq!(top_labels(&tree), ["PP"]);
        let Node::Chunk { children, .. } = &tree.nodes[0] else { panic!() };
        assert_eq!(children.len(), 2);
        assert!(matches!(&children[1], Node::Chunk { label, .. } if label == "NP"));
    }

    #[test]
    fn vp_contains_pp() {
        // hand-traced cascade on [VBG IN DT NN]: NP(the floor), PP(on NP),
        // then VP(sitting PP)
        let tree = parse("sitting on the floor");
        assert_eq!(top_labels(&tree), ["VP"]);
        let Node::Chunk { children, .. } = &tree.nodes[0] else { panic!() };
        assert_eq!(children.len(), 2);
        assert!(matches!(&children[0], Node::Leaf(t) if t.tag.as_str() == "VBG"));
        assert!(matches!(&children[1], Node::Chunk { label, .. } if label == "PP"));
    }

    #[test]
    fn clause_wraps_np_vp() {
        let tree = parse("a man takes selfie");
        assert_eq!(top_labels(&tree), ["CLAUSE"]);
    }

    #[test]
    fn leaves_are_preserved() {
        let tc = tagged("a man is sitting on the floor and a dog is eating food");
        let tree = chunk_parse(&tc, &ChunkGrammar::builtin());
        let leaves: Vec<&Token> = tree.leaves();
        assert_eq!(leaves.len(), tc.tokens.len());
        for (leaf, tok) in leaves.iter().zip(&tc.tokens) {
            assert_eq!(*leaf, tok);
        }
    }

    #[test]
    fn subject_vp_simple() {
        let tc = tagged("a man takes selfie");
        let tree = chunk_parse(&tc, &ChunkGrammar::builtin());
        let pairs = extract_subject_vp_pairs(&tree);
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].subject_text(&tc), "a man");
        assert_eq!(pairs[0].vp_text(&tc), "takes selfie");
        assert_eq!(pairs[0].vp_head_verb.surface, "takes");
    }

    #[test]
    fn no_subject_no_pair() {
        let tc = tagged("raining heavily");
        let tree = chunk_parse(&tc, &ChunkGrammar::builtin());
        assert!(extract_subject_vp_pairs(&tree).is_empty());
    }

    #[test]
    fn coordinated_vps_share_subject() {
        let tc = tagged("a man is taking selfie and driving");
        let tree = chunk_parse(&tc, &ChunkGrammar::builtin());
        let pairs = extract_subject_vp_pairs(&tree);
        assert_eq!(pairs.len(), 2);
        assert!(pairs.iter().all(|p| p.subject_text(&tc) == "a man"));
        let vps: Vec<String> = pairs.iter().map(|p| p.vp_text(&tc)).collect();
        assert_eq!(vps, ["taking selfie", "driving"]);
    }

    #[test]
    fn spans_do_not_overlap() {
        let tc = tagged("a man is taking selfie and driving a car");
        let tree = chunk_parse(&tc, &ChunkGrammar::builtin());
        for p in extract_subject_vp_pairs(&tree) {
            assert!(p.subject.1 <= p.vp.0 || p.vp.1 <= p.subject.0);
            assert!(p.vp_head_verb.index >= p.vp.0 && p.vp_head_verb.index < p.vp.1);
        }
    }

    #[test]
    fn grammar_rejects_unknown_symbols() {
        assert!(ChunkGrammar::new(&[("NP", "<XYZ>")], 1).is_err());
        assert!(ChunkGrammar::new(&[("NP", "<DT|NN>")], 0).is_err());
    }
}
