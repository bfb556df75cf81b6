//! Negated and composed query construction, caption indexing, and dataset
//! re-purposing.

mod compose;
mod index;
mod negate;
mod repurpose;

pub use compose::{
    compose_query, composed_subqueries, pronoun_for_subject, ComposedTriplet, Pronoun,
    TEMPLATES_PER_SET,
};
pub use index::{build_caption_index, CaptionIndex, CaptionRecord, Stopwords};
pub use negate::{denegate_caption, negate_at, negate_caption, negation_sites, NegatedCaption, NegationSite};
pub use repurpose::{repurpose_dataset, read_captions_file, read_split_file, RepurposeConfig, RepurposeOutput, RepurposeStats, Split};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::io::{BufRead, Write};
use std::path::Path;

/// What a query is, relative to the source captions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QueryKind {
    Original,
    Negated,
    Composed,
}

impl std::fmt::Display for QueryKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            QueryKind::Original => "original",
            QueryKind::Negated => "negated",
            QueryKind::Composed => "composed",
        })
    }
}

/// A benchmark query with provenance and known relevance.
///
/// - negated queries link back to their origin and carry the origin's video
///   as a known negative;
/// - composed queries carry their positive/negative subquery clauses and a
///   non-empty mined relevant set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Query {
    pub qid: String,
    pub kind: QueryKind,
    pub text: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub origin_qid: Option<String>,
    #[serde(default)]
    pub relevant_ids: BTreeSet<String>,
    #[serde(default)]
    pub known_negative_ids: BTreeSet<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pos_subquery: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neg_subquery: Option<String>,
    /// Seed of the PRNG stream that produced this query.
    pub seed_trace: u64,
}

impl Query {
    /// Check the per-kind invariants.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: &str| {
            Err(Error::BadConfig(format!("query '{}' invalid: {msg}", self.qid)))
        };
        match self.kind {
            QueryKind::Original => {
                if self.relevant_ids.is_empty() {
                    return fail("original query needs a non-empty relevant set");
                }
            }
            QueryKind::Negated => {
                if self.origin_qid.is_none() {
                    return fail("negated query needs origin_qid");
                }
                if self.known_negative_ids.is_empty() {
                    return fail("negated query needs the origin video as known negative");
                }
            }
            QueryKind::Composed => {
                if self.pos_subquery.is_none() || self.neg_subquery.is_none() {
                    return fail("composed query needs pos and neg subqueries");
                }
                if self.relevant_ids.is_empty() {
                    return fail("composed query needs a non-empty relevant set");
                }
            }
        }
        Ok(())
    }
}

/// Write queries as JSONL, one object per line.
pub fn write_queries(path: &Path, queries: &[Query]) -> Result<()> {
    let mut file = std::io::BufWriter::new(std::fs::File::create(path)?);
    for q in queries {
        serde_json::to_writer(&mut file, q)?;
        file.write_all(b"\n")?;
    }
    file.flush()?;
    Ok(())
}

/// Read a JSONL query file.
pub fn read_queries(path: &Path) -> Result<Vec<Query>> {
    let file = std::io::BufReader::new(std::fs::File::open(path)?);
    let mut queries = Vec::new();
    for line in file.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        queries.push(serde_json::from_str(&line)?);
    }
    Ok(queries)
}
