//! Detection of machine-generated review-image pairs from handcrafted,
//! interpretable features.
//!
//! The library covers the full pipeline:
//!
//! - [`corpus`] — CSV manifest ingestion and deterministic train/val/test splits
//! - [`textfeat`] — readability and complexity attributes of review text
//! - [`lm`] — document perplexity from an n-gram model or imported log-probs
//! - [`imgfeat`] — HSV color attributes of review images
//! - [`composition`] — saliency-based figure-ground and composition attributes
//! - [`ml`] — standardization, logistic regression, random forests, metrics,
//!   model persistence
//! - [`analysis`] — per-class summary statistics, one-way ANOVA, Monte-Carlo
//!   Shapley attribution
//! - [`costmodel`] — generation cost calculator
//! - [`cli`] — the `revdet` command-line frontend
//!
//! Class convention throughout: label 0 = authentic, label 1 = generated.

pub mod analysis;
pub mod cli;
pub mod composition;
pub mod corpus;
pub mod costmodel;
pub mod error;
pub mod imgfeat;
pub mod lm;
pub mod ml;
pub mod textfeat;

pub use error::{Error, Result};

/// Tool version embedded in artifact headers.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
