//! Stratified labelings of abstract argumentation frameworks, System Z
//! ranking functions and the bridge between them, ordinal-semantics
//! property checks, and enforcement by attack edits.
//!
//! With the default `parallel` feature, corpus sweeps, world tables and
//! enforcement search run on rayon; without it everything is sequential
//! and produces identical results.

pub mod af;
pub mod enforce;
mod error;
pub mod fixtures;
pub mod formats;
pub mod ordsem;
pub mod par;
pub mod propo;
pub mod stratified;
pub mod systemz;

pub use af::{grounded, labelings, ArgumentationFramework, Label, Labeling, Semantics};
pub use enforce::{attack_distance, characteristic, conjecture_scan, Characteristic, Edit, EnforcementResult};
pub use error::{Error, Result};
pub use ordsem::{check_property, CheckOptions, Property, PropertyReport};
pub use propo::{Conditional, Formula, Signature, World};
pub use stratified::{grounded_stratified, stratified_labelings, Rank, StratifiedLabeling, DEFAULT_BUDGET};
pub use systemz::{bridge_check, induced_af, kappa_z, KnowledgeBase};
