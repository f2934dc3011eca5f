//! Gold-standard benchmarks for the semantics of source-code identifiers,
//! and tools to evaluate semantic representations against them.
//!
//! - [`model`]: shared data types and file formats.
//! - [`pipeline`]: survey ratings to cleaned benchmarks.
//! - [`strdist`]: Levenshtein and Needleman-Wunsch similarity.
//! - [`embeddings`]: word vectors, subwords, and a CBOW/skip-gram trainer.
//! - [`corpus`]: identifier mining over JavaScript sources.
//! - [`evaluator`]: rank correlation of representations with gold scores.
//! - [`ensemble`]: SVR combination of representations, evaluated leave-one-out.
//! - [`survey`]: survey sessions and their event logs.

pub mod corpus;
pub mod embeddings;
pub mod ensemble;
pub mod error;
pub mod evaluator;
pub mod model;
pub mod pipeline;
pub mod strdist;
pub mod survey;

pub use error::{Error, Result};
pub use model::{
    Benchmark, Choice, CodeContext, DirectRating, GoldScore, Identifier, IdentifierPair,
    IndirectRating, Likert, PairId, Task, Variant,
};
