//! negbench: negation benchmarks for cross-modal retrieval, at desk scale.
//!
//! The crate re-purposes caption-paired video (or image) collections into
//! negation benchmarks — negated and composed natural-language queries with
//! known relevant/irrelevant items — and evaluates and trains retrieval
//! models for negation awareness over precomputed embedding features.
//!
//! Five subsystems, each usable on its own:
//!
//! - [`linguistics`]: tokenization, POS tagging, cascaded chunk parsing,
//!   subject/VP extraction, verb inflection, negation-cue detection.
//! - [`query_factory`]: negated and composed query construction, caption
//!   indexing, and dataset re-purposing.
//! - [`retrieval`]: feature stores, frame pooling, cosine ranking, and the
//!   boolean-operation re-ranking baseline.
//! - [`metrics`]: R@N, mean inverted rank, and the Δ negation-sensitivity
//!   metrics.
//! - [`neglearn`]: a linear dual encoder trained with triplet ranking plus
//!   the SNL / BCL / BNL auxiliary losses, analytic gradients, RMSProp, and
//!   a synthetic benchmark generator.
//!
//! The `negbench` binary wires these into a reproducible pipeline
//! (`repurpose`, `rank`, `boolean-rank`, `eval`, `train`, `sweep`, `synth`);
//! see the `examples/` directory for library-level walkthroughs.

pub mod error;
pub mod linguistics;
pub mod prng;

pub use error::{Error, Result};
