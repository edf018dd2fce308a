//! Arnoux-Rauzy words with prescribed differences of abelianized factors.
//!
//! The crate is organized bottom-up:
//!
//! - [`word`], [`abelian`], [`matrix`], [`substitution`]: letters, finite words,
//!   Parikh vectors, the three Arnoux-Rauzy substitutions and their incidence
//!   matrices, all with arbitrary-precision integers.
//! - [`directive`], [`standard`], [`frequency`], [`far`]: directive sequences,
//!   standard word prefixes, letter-frequency estimates and the subtractive
//!   Arnoux-Rauzy continued fraction map.
//! - [`graph`]: the difference graph on `Z^3` whose edges replace one
//!   coordinate by the coordinate sum plus a small offset, with a constructive
//!   path to every vertex.
//! - [`witness`]: lifting graph paths to pairs of factors, conjugating targets
//!   through directive prefixes and assembling the directive of a word whose
//!   factor differences cover `Z^3`.
//! - [`geometry`]: broken lines, Rauzy fractal point clouds, discrepancy,
//!   imbalance and plane-distance probes.
//! - [`independence`]: the spread statistic of column vectors pushed through
//!   incidence matrices.
//!
//! Row vectors act on the right of matrices everywhere except in
//! [`independence`], which uses the column convention and says so.

pub mod abelian;
pub mod directive;
mod error;
pub mod export;
pub mod far;
pub mod frequency;
pub mod geometry;
pub mod graph;
pub mod independence;
pub mod matrix;
mod serde_big;
pub mod standard;
pub mod substitution;
pub mod witness;
pub mod word;

pub use abelian::AbelianVector;
pub use directive::Directive;
pub use error::{Error, Result};
pub use far::{far_expand, FarExpansion, FarHalt};
pub use frequency::{frequency_estimate, FrequencyVector};
pub use graph::{accessibility_path, anchor_path, apply_edge, simulate, transform_path, Edge, Path, SymmetryTransform};
pub use matrix::{incidence_of, IncidenceMatrix};
pub use standard::standard_prefix;
pub use substitution::{apply_substitution, Substitution};
pub use word::{abelianize, find_factor, Letter, Word};
