//! Factor pairs with prescribed abelian difference.
//!
//! A path of the difference graph lifts to two factors of an explicit
//! Arnoux-Rauzy composition ([`lift`]); conjugating a target by a directive
//! prefix moves the problem past that prefix ([`conjugate`]); chaining both
//! along an enumeration of `Z^3` ([`enumerate`]) gives the directive of a word
//! realizing every difference ([`winfty`]).

pub mod conjugate;
pub mod enumerate;
pub mod lift;
pub mod winfty;

pub use conjugate::conjugate_target;
pub use enumerate::{enumerate_z3, Z3Enumeration};
pub use lift::{lift_path_to_factors, lifted_directive, FactorRecord, Mode, WitnessPair, DEFAULT_CAP};
pub use winfty::{build_winfty_directive, shell_targets, StageRecord, WinftyOptions, WinftyReport};
